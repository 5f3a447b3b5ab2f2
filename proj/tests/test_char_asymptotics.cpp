#include <doctest.h>

#include "dix/char_asymptotics.hpp"
#include "dix/fixtures.hpp"
#include "support.hpp"

using namespace dix;
using namespace dix::testing;
using fixtures::sl2_weight;
using fixtures::SL2Module;

namespace {

std::vector<Weight> all_roots(const RootDatum& d) {
  std::vector<Weight> out;
  for (const auto& r : d.positive_roots()) out.push_back(r.vec);
  return out;
}

Weight random_regular_direction(std::mt19937& rng, const RootDatum& d) {
  while (true) {
    Weight y(random_point(rng, d.rank()));
    try {
      require_regular_direction(y, d);
      return y;
    } catch (const Error&) {
    }
  }
}

}  // namespace

TEST_CASE("character_series examples") {
  auto sl = fixtures::sl2_datum();
  auto dplus = fixtures::sl2_family(SL2Module::DPlus);
  const Weight y{1, -1};
  for (long n = 1; n <= 4; ++n) {
    auto s = character_series(dplus, sl2_weight(n), y, 6, sl);
    CHECK(s.pole_order == 1);
    // e^{nt} / ((e^t - e^{-t}) / t)
    TruncatedSeries denom = (TruncatedSeries::exp(1, 7) - TruncatedSeries::exp(-1, 7)).shift_down(1);
    CHECK(s.body == TruncatedSeries::exp(n, 6) / denom);
    CHECK(s.body[0] == make_rational(1, 2));
  }
  auto zero = character_series(fixtures::sl2_family(SL2Module::P), sl2_weight(3), y, 4, sl);
  CHECK(zero.body.is_zero());

  auto su21 = build_root_datum(GroupId::su(2, 1));
  auto hol = discrete_series_family(su21.rho_g(), su21);
  auto s = character_series(hol, su21.rho_g(), Weight{2, 0, -2}, 4, su21);
  CHECK(s.pole_order == 2);
  CHECK_THROWS_AS(character_series(hol, su21.rho_g(), Weight{1, 1, 0}, 4, su21), Error);
}

TEST_CASE("leading_limit examples") {
  auto sl = fixtures::sl2_datum();
  auto dplus = fixtures::sl2_family(SL2Module::DPlus);
  const Weight y{1, -1};
  auto r1 = leading_limit(dplus, sl2_weight(3), y, 1, sl);
  CHECK(r1.value == make_rational(1, 2));
  CHECK(r1.expected == make_rational(1, 2));
  CHECK(r1.match);
  auto r2 = leading_limit(dplus, sl2_weight(3), y, 2, sl);
  CHECK(r2.value == 0);
  CHECK(r2.match);
  auto rf = leading_limit(fixtures::sl2_family(SL2Module::F), sl2_weight(3), y, 1, sl);
  CHECK(rf.value == 0);
  CHECK(rf.match);
  auto under = leading_limit(dplus, sl2_weight(3), y, 0, sl);
  CHECK(under.status == LimitStatus::DUnderflow);
}

TEST_CASE("spin character equals d_g / d_k") {
  for (const auto& g : small_groups(4)) {
    auto d = build_root_datum(g);
    const int pole = static_cast<int>(d.num_noncompact_positive());
    Weight y = d.rho_g();
    for (std::size_t k = 0; k < y.size(); ++k) y[k] += make_rational(static_cast<long>(k * k), 7);
    require_regular_direction(y, d);
    auto spin = spin_character_series(spin_weights(d), y, 12);
    const int rest = 12 - pole;
    if (rest < 0) continue;
    auto ratio = weyl_denominator_reduced(all_roots(d), y, rest) /
                 weyl_denominator_reduced(d.compact_positive_roots(), y, rest);
    CHECK_MESSAGE(spin.shift_down(pole) == ratio, g.name());
  }
}

TEST_CASE("limits match the root ratio on fixture families") {
  std::mt19937 rng(51);
  for (const auto& fx : fixtures::fixture_families(3)) {
    auto d = build_root_datum(parse_group(fx.group));
    const int pole = static_cast<int>(d.num_noncompact_positive());
    for (int trial = 0; trial < 20; ++trial) {
      Weight y = random_regular_direction(rng, d);
      Weight lambda = fx.family.base;
      std::uniform_int_distribution<int> c(-5, 5);
      for (auto& x : lambda.c) x += c(rng);
      for (int d_off = 0; d_off <= 2; ++d_off) {
        auto r = leading_limit(fx.family, lambda, y, pole + d_off, d);
        CHECK_MESSAGE(r.match, fx.group << " " << fx.label);
        if (d_off > 0) CHECK(r.value == 0);
      }
    }
  }
}
