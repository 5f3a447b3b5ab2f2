#include <doctest.h>

#include <functional>

#include "dix/kvirt.hpp"
#include "dix/weyl_action.hpp"
#include "support.hpp"

using namespace dix;
using namespace dix::testing;

namespace {

Weight sl2(long n) { return Weight{make_rational(n, 2), make_rational(-n, 2)}; }

std::vector<Weight> positive_vectors(const RootDatum& d) {
  std::vector<Weight> out;
  for (const auto& r : d.positive_roots()) out.push_back(r.vec);
  return out;
}

// Kostant's multiplicity formula with a brute-force partition function.
long long kostant_multiplicity(const Weight& highest, const Weight& mu, const RootDatum& d) {
  const auto roots = positive_vectors(d);
  const Weight& rho = d.rho_g();
  std::map<std::pair<Weight, std::size_t>, long long> memo;
  std::function<long long(const Weight&, std::size_t)> partitions =
      [&](const Weight& v, std::size_t i) -> long long {
    if (inner(v, rho) < 0) return 0;
    if (i == roots.size()) return v.is_zero() ? 1 : 0;
    auto key = std::make_pair(v, i);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    long long total = 0;
    Weight cur = v;
    while (inner(cur, rho) >= 0) {
      total += partitions(cur, i + 1);
      cur -= roots[i];
    }
    memo[key] = total;
    return total;
  };
  long long m = 0;
  for (const auto& w : weyl_elements(d, WhichGroup::G)) {
    m += w.sgn() * partitions(w.apply(highest + rho) - (mu + rho), 0);
  }
  return m;
}

Weight random_dominant(std::mt19937& rng, const RootDatum& d) {
  while (true) {
    std::uniform_int_distribution<int> c(-3, 3);
    Weight v(d.rank());
    for (auto& x : v.c) x = c(rng);
    auto dc = dominant_conjugate(v, positive_vectors(d));
    return dc.weight;
  }
}

}  // namespace

TEST_CASE("tilde_E examples") {
  auto su21 = build_root_datum(GroupId::su(2, 1));
  CHECK(tilde_E(Weight{1, 1, -2}, su21).is_zero());
  auto dom = tilde_E(Weight{2, 0, -2}, su21);
  REQUIRE(dom.terms.size() == 1);
  CHECK(dom.terms.begin()->second == 1);
  auto flipped = tilde_E(Weight{0, 2, -2}, su21);
  REQUIRE(flipped.terms.size() == 1);
  CHECK(flipped.terms.begin()->first == dom.terms.begin()->first);
  CHECK(flipped.terms.begin()->second == -1);
  // gamma - rho_g must lie in the lattice.
  CHECK(tilde_E(Weight{make_rational(5, 2), 0, -2}, su21).is_zero());
}

TEST_CASE("tilde_E is W_k skew") {
  std::mt19937 rng(31);
  for (const auto& g : small_groups(3)) {
    auto d = build_root_datum(g);
    auto wk = weyl_elements(d, WhichGroup::K);
    for (int trial = 0; trial < 20; ++trial) {
      auto gamma = random_lattice_point(rng, d);
      auto base = tilde_E(gamma, d);
      for (const auto& w : wk) CHECK(tilde_E(w.apply(gamma), d) == w.sgn() * base);
    }
  }
}

TEST_CASE("dim_virtual examples") {
  auto sl = build_root_datum(GroupId::su(1, 1));
  for (long n = -4; n <= 4; ++n) CHECK(dim_virtual(tilde_E(sl2(n), sl), sl) == 1);
  CHECK(dim_virtual(VirtualKModule{}, sl) == 0);
  // No compact roots: both terms stay with their own sign.
  auto v = tilde_E(sl.rho_g(), sl) + tilde_E(-sl.rho_g(), sl);
  CHECK(dim_virtual(v, sl) == 2);
  CHECK(dim_virtual(tilde_E(sl.rho_g(), sl) - tilde_E(-sl.rho_g(), sl), sl) == 0);
}

TEST_CASE("dim_virtual is the signed Weyl dimension") {
  std::mt19937 rng(32);
  for (const auto& g : small_groups(4)) {
    auto d = build_root_datum(g);
    auto dk = weyl_dim_poly(d);
    for (int trial = 0; trial < 100; ++trial) {
      auto gamma = random_lattice_point(rng, d);
      CHECK_MESSAGE(Rational(dim_virtual(tilde_E(gamma, d), d)) == dk.eval(gamma), g.name());
    }
  }
}

TEST_CASE("weight_multiset examples") {
  auto sl = build_root_datum(GroupId::su(1, 1));
  auto adj = weight_multiset(Weight{1, -1}, sl);
  CHECK(adj == WeightMultiset{{Weight{-1, 1}, 1}, {Weight{0, 0}, 1}, {Weight{1, -1}, 1}});

  auto su21 = build_root_datum(GroupId::su(2, 1));
  auto adj3 = weight_multiset(Weight{1, 0, -1}, su21);
  CHECK(adj3.size() == 7);
  CHECK(adj3.at(Weight{0, 0, 0}) == 2);
  CHECK(total_multiplicity(adj3) == 8);

  auto sp4 = build_root_datum(GroupId::sp_real(2));
  auto std4 = weight_multiset(Weight{1, 0}, sp4);
  CHECK(std4 == WeightMultiset{{Weight{1, 0}, 1}, {Weight{-1, 0}, 1}, {Weight{0, 1}, 1},
                               {Weight{0, -1}, 1}});

  CHECK_THROWS_AS(weight_multiset(Weight{0, 1}, sp4), Error);
  CHECK_THROWS_AS(weight_multiset(Weight{make_rational(1, 2), make_rational(1, 2)}, sp4), Error);
}

TEST_CASE("Freudenthal agrees with Kostant in rank two") {
  std::mt19937 rng(33);
  std::vector<GroupId> groups{GroupId::su(2, 1), GroupId::sp_real(2), GroupId::so_even_odd(1, 1),
                              GroupId::so_even_even(1, 1), GroupId::so_star(2)};
  for (const auto& g : groups) {
    auto d = build_root_datum(g);
    for (int trial = 0; trial < 4; ++trial) {
      auto hw = random_dominant(rng, d);
      auto ms = weight_multiset(hw, d);
      for (const auto& [mu, m] : ms) CHECK_MESSAGE(kostant_multiplicity(hw, mu, d) == m, g.name());
      // A weight just outside the support has multiplicity zero.
      auto outside = hw + d.positive_roots()[0].vec;
      CHECK(kostant_multiplicity(hw, outside, d) == 0);
    }
  }
}

TEST_CASE("weight multiset mass is the Weyl dimension") {
  std::mt19937 rng(34);
  for (const auto& g : small_groups(3)) {
    auto d = build_root_datum(g);
    auto dg = weyl_dim_poly_g(d);
    for (int trial = 0; trial < 3; ++trial) {
      auto hw = random_dominant(rng, d);
      auto ms = weight_multiset(hw, d);
      CHECK_MESSAGE(Rational(static_cast<long>(total_multiplicity(ms))) == dg.eval(hw + d.rho_g()),
                    g.name());
      for (const auto& w : weyl_elements(d, WhichGroup::G)) {
        for (const auto& [mu, m] : ms) CHECK(ms.at(w.apply(mu)) == m);
      }
    }
  }
}

TEST_CASE("tensor_virtual examples") {
  auto sl = build_root_datum(GroupId::su(1, 1));
  auto adj = weight_multiset(Weight{1, -1}, sl);
  for (long n = -3; n <= 3; ++n) {
    auto expected = tilde_E(sl2(n - 2), sl) + tilde_E(sl2(n), sl) + tilde_E(sl2(n + 2), sl);
    CHECK(tensor_virtual(tilde_E(sl2(n), sl), adj, sl) == expected);
  }
  auto su21 = build_root_datum(GroupId::su(2, 1));
  auto g = tilde_E(Weight{2, 1, -3}, su21);
  CHECK(tensor_virtual(g, WeightMultiset{{Weight{0, 0, 0}, 1}}, su21) == g);

  // (2,1,-3) + (0,1,-1) is singular for e1 - e2 and drops out.
  auto adj3 = weight_multiset(Weight{1, 0, -1}, su21);
  Weight gamma{2, 1, -3};
  CHECK(tilde_E(gamma + Weight{0, 1, -1}, su21).is_zero());
  VirtualKModule by_hand;
  int nonzero = 0;
  for (const auto& [mu, m] : adj3) {
    auto t = tilde_E(gamma + mu, su21);
    if (!t.is_zero()) ++nonzero;
    by_hand += m * t;
  }
  CHECK(nonzero < 7);
  CHECK(tensor_virtual(g, adj3, su21) == by_hand);
}

TEST_CASE("tensor_virtual is bilinear and commutes with W_k normalization") {
  std::mt19937 rng(35);
  for (const auto& grp : {GroupId::su(2, 1), GroupId::sp_real(2), GroupId::sp_pq(1, 1)}) {
    auto d = build_root_datum(grp);
    auto f = weight_multiset(random_dominant(rng, d), d);
    auto wk = weyl_elements(d, WhichGroup::K);
    for (int trial = 0; trial < 5; ++trial) {
      auto a = random_lattice_point(rng, d);
      auto b = random_lattice_point(rng, d);
      auto va = tilde_E(a, d);
      auto vb = tilde_E(b, d);
      CHECK(tensor_virtual(2 * va - vb, f, d) ==
            2 * tensor_virtual(va, f, d) - tensor_virtual(vb, f, d));
      for (const auto& w : wk) {
        CHECK(tensor_virtual(tilde_E(w.apply(a), d), f, d) == w.sgn() * tensor_virtual(va, f, d));
      }
    }
  }
}

TEST_CASE("TruncatedSeries arithmetic") {
  auto e2 = TruncatedSeries::exp(2, 6);
  auto em2 = TruncatedSeries::exp(-2, 6);
  CHECK(e2 * em2 == TruncatedSeries::exp(0, 6));
  CHECK((e2 / e2) == TruncatedSeries::exp(0, 6));
  auto e1 = TruncatedSeries::exp(1, 6);
  CHECK(e1 * e1 == e2);
  CHECK(TruncatedSeries(4).valuation() == -1);
}

TEST_CASE("ch_series examples") {
  auto sl = build_root_datum(GroupId::su(1, 1));
  auto s = ch_series(tilde_E(sl2(3), sl), Weight{1, -1}, 5, sl);
  CHECK(s == TruncatedSeries::exp(3, 5));
  CHECK(s[0] == 1);
  CHECK(ch_series(VirtualKModule{}, Weight{1, -1}, 5, sl).is_zero());

  auto su21 = build_root_datum(GroupId::su(2, 1));
  auto v = tilde_E(su21.rho_g(), su21);
  CHECK(ch_series(v, Weight{1, 0, -1}, 4, su21)[0] == Rational(dim_virtual(v, su21)));
  CHECK_THROWS_AS(ch_series(v, Weight{1, 1, 0}, 4, su21), Error);
}

TEST_CASE("ch_series matches summing weights of the K-type") {
  // K-types of SU(2,1) and Sp(4,R): compact part is a single A1 on the first
  // two coordinates, so the weights of [gamma] are gamma - rho_k - j(e1 - e2).
  std::mt19937 rng(36);
  for (const auto& grp : {GroupId::su(2, 1), GroupId::sp_real(2)}) {
    auto d = build_root_datum(grp);
    for (int trial = 0; trial < 10; ++trial) {
      auto gamma = random_lattice_point(rng, d);
      auto v = tilde_E(gamma, d);
      if (v.is_zero()) continue;
      const auto& [key, c] = *v.terms.begin();
      Weight hw = key - d.rho_k();
      if (grp.family == Family::SU) hw = key - d.normalize(d.rho_k());
      Weight y(d.rank());
      for (auto& x : y.c) x = random_rational(rng, 9);
      try {
        require_regular_direction(y, d);
      } catch (const Error&) {
        continue;
      }
      TruncatedSeries oracle(6);
      const Rational top = hw[0] - hw[1];
      for (long j = 0; j <= top; ++j) {
        Weight mu = hw;
        mu[0] -= j;
        mu[1] += j;
        oracle += TruncatedSeries::exp(inner(mu, y), 6);
      }
      oracle *= Rational(static_cast<long>(c));
      CHECK(ch_series(v, y, 6, d) == oracle);
    }
  }
}

TEST_CASE("ch_series constant term is the dimension") {
  std::mt19937 rng(37);
  for (const auto& g : small_groups(3)) {
    auto d = build_root_datum(g);
    Weight y = d.rho_g();
    for (int trial = 0; trial < 10; ++trial) {
      VirtualKModule v = tilde_E(random_lattice_point(rng, d), d) -
                         3 * tilde_E(random_lattice_point(rng, d), d);
      CHECK_MESSAGE(ch_series(v, y, 2, d)[0] == Rational(dim_virtual(v, d)), g.name());
    }
  }
}

TEST_CASE("parallel and serial power sums agree") {
  std::mt19937 rng(38);
  std::vector<Rational> values;
  std::vector<int> signs;
  for (int k = 0; k < 200; ++k) {
    values.push_back(random_rational(rng, 9));
    signs.push_back(k % 3 == 0 ? -1 : 1);
  }
  CHECK(kernels::signed_power_sums(values, signs, 15, kernels::Exec::Serial) ==
        kernels::signed_power_sums(values, signs, 15, kernels::Exec::Parallel));
}
