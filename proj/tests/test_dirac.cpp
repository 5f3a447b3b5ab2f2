#include <doctest.h>

#include <set>

#include "dix/dirac.hpp"
#include "dix/fixtures.hpp"
#include "dix/su_n1.hpp"
#include "dix/weyl_action.hpp"
#include "support.hpp"

using namespace dix;
using namespace dix::testing;
using fixtures::sl2_weight;
using fixtures::SL2Module;

namespace {

VirtualKModule E(long n) { return tilde_E(sl2_weight(n), fixtures::sl2_datum()); }

// One discrete series family per chamber of the compact dominant cone.
std::vector<IndexFamily> all_chamber_families(const RootDatum& d) {
  std::set<Weight> reps;
  for (const auto& w : weyl_elements(d, WhichGroup::G)) {
    reps.insert(dominant_conjugate(w.apply(d.rho_g()), d.compact_positive_roots()).weight);
  }
  std::vector<IndexFamily> out;
  for (const auto& r : reps) out.push_back(discrete_series_family(r, d));
  return out;
}

}  // namespace

TEST_CASE("spin_weights examples") {
  auto sl = fixtures::sl2_datum();
  auto s = spin_weights(sl);
  CHECK(s.plus == WeightMultiset{{sl2_weight(1), 1}});
  CHECK(s.minus == WeightMultiset{{sl2_weight(-1), 1}});

  auto su21 = spin_weights(build_root_datum(GroupId::su(2, 1)));
  CHECK(total_multiplicity(su21.plus) + total_multiplicity(su21.minus) == 4);

  auto sp4 = spin_weights(build_root_datum(GroupId::sp_real(2)));
  CHECK(total_multiplicity(sp4.plus) == 4);
  CHECK(total_multiplicity(sp4.minus) == 4);

  CHECK_THROWS_AS(spin_weights(build_root_datum(GroupId::sp_real(3)), 5), Error);
}

TEST_CASE("spin weights are shifted subset sums with the documented parity") {
  for (const auto& g : small_groups(3)) {
    auto d = build_root_datum(g);
    auto nc = d.noncompact_positive_roots();
    const int n = static_cast<int>(nc.size());
    auto s = spin_weights(d);
    CHECK(total_multiplicity(s.plus) + total_multiplicity(s.minus) == (1LL << n));
    // Oracle: count subsets of each parity landing on each weight.
    WeightMultiset even, odd;
    const Weight shift = d.rho_k() - d.rho_g();
    for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
      Weight w = shift;
      for (int k = 0; k < n; ++k) {
        if (mask >> k & 1) w += nc[k];
      }
      (std::popcount(mask) % 2 ? odd : even)[w] += 1;
    }
    CHECK((n % 2 == 0 ? s.plus == even : s.plus == odd));
  }
}

TEST_CASE("index_discrete_series examples") {
  auto sl = fixtures::sl2_datum();
  for (long n = 1; n <= 5; ++n) {
    CHECK(index_discrete_series(sl2_weight(n), sl) == E(n));
    CHECK(index_discrete_series(sl2_weight(-n), sl) == -E(-n));
  }
  CHECK_THROWS_AS(index_discrete_series(sl2_weight(0), sl), Error);

  auto su21 = build_root_datum(GroupId::su(2, 1));
  CHECK(index_discrete_series(su21.rho_g(), su21) == tilde_E(su21.rho_g(), su21));
}

TEST_CASE("evaluate_index examples") {
  auto sl = fixtures::sl2_datum();
  auto dplus = fixtures::sl2_family(SL2Module::DPlus);
  CHECK(evaluate_index(dplus, sl2_weight(5), sl) == E(5));
  auto f = fixtures::sl2_family(SL2Module::F);
  for (long n = -6; n <= 6; ++n) {
    CHECK(dim_virtual(evaluate_index(f, sl2_weight(n), sl), sl) == 0);
    CHECK(evaluate_index(f, sl2_weight(n), sl) == E(-n) - E(n));
  }
  CHECK_THROWS_AS(evaluate_index(dplus, Weight{make_rational(1, 4), make_rational(-1, 4)}, sl),
                  Error);

  auto su21 = build_root_datum(GroupId::su(2, 1));
  auto hol = discrete_series_family(su21.rho_g(), su21);
  CHECK(evaluate_index(hol, Weight{1, 1, -2}, su21).is_zero());
}

TEST_CASE("index_polynomial examples") {
  auto sl = fixtures::sl2_datum();
  CHECK(index_polynomial(fixtures::sl2_family(SL2Module::DPlus), sl) == MultiPoly::constant(2, 1));
  CHECK(index_polynomial(fixtures::sl2_family(SL2Module::DMinus), sl) ==
        MultiPoly::constant(2, -1));
  CHECK(index_polynomial(fixtures::sl2_family(SL2Module::F), sl).is_zero());

  auto su21 = build_root_datum(GroupId::su(2, 1));
  auto q = index_polynomial(discrete_series_family(su21.rho_g(), su21), su21);
  auto l = MultiPoly::variable(3, 0) - MultiPoly::variable(3, 1);
  CHECK((q == l || q == -l));
}

TEST_CASE("index polynomial matches dimensions on lattice points") {
  std::mt19937 rng(41);
  for (const auto& fx : fixtures::fixture_families(3)) {
    auto d = build_root_datum(parse_group(fx.group));
    auto q = index_polynomial(fx.family, d);
    for (int trial = 0; trial < 200; ++trial) {
      Weight lambda = fx.family.base;
      std::uniform_int_distribution<int> c(-7, 7);
      for (auto& x : lambda.c) x += c(rng);
      CHECK_MESSAGE(Rational(dim_virtual(evaluate_index(fx.family, lambda, d), d)) ==
                        q.eval(lambda),
                    fx.group << " " << fx.label);
    }
  }
}

TEST_CASE("verify_translation examples") {
  auto sl = fixtures::sl2_datum();
  auto dplus = fixtures::sl2_family(SL2Module::DPlus);
  CHECK(verify_translation(dplus, Weight{1, -1}, sl2_weight(5), sl));
  auto lhs = tensor_virtual(evaluate_index(dplus, sl2_weight(5), sl),
                            weight_multiset(Weight{1, -1}, sl), sl);
  CHECK(lhs == E(3) + E(5) + E(7));
  CHECK(verify_translation(dplus, Weight{0, 0}, sl2_weight(3), sl));

  auto su21 = build_root_datum(GroupId::su(2, 1));
  auto hol = discrete_series_family(su21.rho_g(), su21);
  CHECK(verify_translation(hol, Weight{1, 0, -1}, su21.rho_g(), su21));
}

TEST_CASE("translation principle on all chamber families") {
  std::mt19937 rng(42);
  for (const auto& g : {GroupId::su(2, 1), GroupId::sp_real(2), GroupId::so_even_odd(1, 1),
                        GroupId::sp_pq(1, 1)}) {
    auto d = build_root_datum(g);
    std::vector<Weight> roots;
    for (const auto& r : d.positive_roots()) roots.push_back(r.vec);
    const Weight highest_root = dominant_conjugate(roots.front(), roots).weight;
    for (const auto& fam : all_chamber_families(d)) {
      for (int trial = 0; trial < 3; ++trial) {
        Weight lambda = random_lattice_point(rng, d, 4);
        CHECK_MESSAGE(verify_translation(fam, highest_root, lambda, d), g.name());
      }
    }
  }
}

TEST_CASE("act_on_family examples") {
  auto sl = fixtures::sl2_datum();
  const auto e = WeylElement::identity(2);
  const auto s = WeylElement::reflection(Weight{1, -1});
  auto dplus = fixtures::sl2_family(SL2Module::DPlus);
  CHECK(act_on_family(e, dplus, sl) == dplus);
  auto moved = act_on_family(s, dplus, sl);
  // Coefficient reindexing: a'_u = a_{us}.
  CHECK(moved.coeffs == std::map<WeylElement, long long>{{s, 1}});
  CHECK(evaluate_index(moved, sl2_weight(4), sl) == E(-4));
  CHECK(index_polynomial(moved, sl) == index_polynomial(dplus, sl));
  auto su = build_root_datum(GroupId::su(2, 1));
  auto fam = discrete_series_family(Weight{4, 2, 3}, su);
  for (const auto& w : weyl_elements(su, WhichGroup::G)) {
    CHECK(act_on_family(w, act_on_family(w.inverse(), fam, su), su) == fam);
  }
}

TEST_CASE("integral Weyl group check") {
  auto sl = fixtures::sl2_datum();
  const auto s = WeylElement::reflection(Weight{1, -1});
  CHECK(in_integral_weyl_group(s, sl2_weight(1), sl));
  CHECK_FALSE(in_integral_weyl_group(s, Weight{make_rational(1, 4), make_rational(-1, 4)}, sl));
  IndexFamily odd{Weight{make_rational(1, 4), make_rational(-1, 4)}, {}};
  CHECK_THROWS_AS(act_on_family(s, odd, sl, true), Error);
}

TEST_CASE("canonical_family respects W_k cosets") {
  auto d = build_root_datum(GroupId::su(2, 1));
  auto wk = weyl_elements(d, WhichGroup::K);
  auto wg = weyl_elements(d, WhichGroup::G);
  std::mt19937 rng(43);
  for (const auto& u : wg) {
    IndexFamily a{d.rho_g(), {}};
    a.add(u, 3);
    for (const auto& x : wk) {
      IndexFamily b{d.rho_g(), {}};
      b.add(x * u, 3 * x.sgn());
      CHECK(canonical_family(a, d) == canonical_family(b, d));
      Weight lambda = random_lattice_point(rng, d);
      CHECK(evaluate_index(a, lambda, d) == evaluate_index(b, lambda, d));
    }
  }
}

TEST_CASE("index polynomials are harmonic, homogeneous and in the D_k span") {
  for (const auto& fx : fixtures::fixture_families(4)) {
    auto d = build_root_datum(parse_group(fx.group));
    auto q = index_polynomial(fx.family, d);
    CHECK(is_harmonic(q, d));
    if (!q.is_zero()) {
      CHECK(q.is_homogeneous());
      CHECK(q.degree() == static_cast<int>(d.num_compact_positive()));
    }
    auto span = orbit_span(weyl_dim_poly(d), weyl_elements(d, WhichGroup::G));
    CHECK(span.contains(q));
    if (fx.gk_dim && *fx.gk_dim < static_cast<int>(d.num_noncompact_positive())) {
      CHECK_MESSAGE(q.is_zero(), fx.group << " " << fx.label);
    }
  }
}

TEST_CASE("equivariance of index polynomials") {
  std::vector<std::pair<RootDatum, IndexFamily>> cases;
  for (const auto& fx : fixtures::fixture_families(3)) {
    cases.emplace_back(build_root_datum(parse_group(fx.group)), fx.family);
  }
  auto sp4 = build_root_datum(GroupId::sp_real(2));
  for (const auto& fam : all_chamber_families(sp4)) cases.emplace_back(sp4, fam);
  for (const auto& [d, fam] : cases) {
    auto q = index_polynomial(fam, d);
    for (const auto& w : weyl_elements(d, WhichGroup::G)) {
      // Q_{w.fam} = w . Q_fam
      CHECK(index_polynomial(act_on_family(w, fam, d), d) == act(w, q));
    }
  }
}

TEST_CASE("nonzero index propagates across regular lattice points") {
  std::mt19937 rng(44);
  auto d = build_root_datum(GroupId::sp_real(2));
  for (const auto& fam : all_chamber_families(d)) {
    for (int trial = 0; trial < 20; ++trial) {
      Weight lambda = random_lattice_point(rng, d);
      if (!d.is_regular(lambda)) continue;
      CHECK_FALSE(evaluate_index(fam, lambda, d).is_zero());
    }
  }
}
