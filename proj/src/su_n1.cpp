#include "dix/su_n1.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "dix/weyl_action.hpp"

namespace dix::su_n1 {

namespace {

void check_n(int n) {
  if (n < 1) throw Error(Errc::IndexOutOfRange, "SU(n,1) needs n >= 1");
}

void check_i(int n, int i, int lo, int hi) {
  check_n(n);
  if (i < lo || i > hi) {
    throw Error(Errc::IndexOutOfRange, "chamber index " + std::to_string(i) + " outside [" +
                                           std::to_string(lo) + "," + std::to_string(hi) +
                                           "] for n = " + std::to_string(n));
  }
}

long binom2(int k) { return static_cast<long>(k) * (k - 1) / 2; }

}  // namespace

RootDatum datum(int n, const Limits& limits) {
  check_n(n);
  return build_root_datum(GroupId::su(n, 1), limits);
}

int chamber_of(const Weight& lambda, int n) {
  check_n(n);
  if (static_cast<int>(lambda.size()) != n + 1) {
    throw Error(Errc::DimensionMismatch, "SU(n,1) weights have n+1 coordinates");
  }
  for (int k = 0; k + 1 < n; ++k) {
    if (lambda[k] < lambda[k + 1]) throw Error(Errc::NotInC, to_string(lambda) + " is not in C");
  }
  const Rational& last = lambda[n];
  // lambda_{n-i} is lambda[n-i-1]; lambda_{n-i+1} is lambda[n-i].
  for (int i = 0; i <= n; ++i) {
    const bool upper = i == n || lambda[n - i - 1] >= last;
    const bool lower = i == 0 || last >= lambda[n - i];
    if (upper && lower) return i;
  }
  throw Error(Errc::NotInC, "no chamber found");
}

Weight chamber_representative(int n, int i) {
  check_i(n, i, 0, n);
  Weight v(n + 1);
  for (int k = 1; k <= n; ++k) v[k - 1] = 2 * (n - k + 1);
  v[n] = 2 * i + 1;
  return v;
}

IndexFamily chamber_family(int n, int i) {
  return discrete_series_family(chamber_representative(n, i), datum(n, Limits{n + 1}));
}

MultiPoly char_poly_det(int n, int i) {
  check_i(n, i, 1, n - 1);
  if (n > 8) throw Error(Errc::IndexOutOfRange, "determinant expansion is limited to n <= 8");
  // m[r][c]
  std::vector<std::vector<MultiPoly>> m(n, std::vector<MultiPoly>(n, MultiPoly(n)));
  for (int r = 0; r < n - 2; ++r) {
    const int power = n - 2 - r;
    for (int c = 0; c < n; ++c) m[r][c] = pow(MultiPoly::variable(n, c), power);
  }
  for (int c = 0; c < n; ++c) {
    m[n - 2][c] = MultiPoly::constant(n, c < n - i ? 1 : 0);
    m[n - 1][c] = MultiPoly::constant(n, c < n - i ? 0 : 1);
  }
  // Laplace expansion row by row; dp[mask] sums over partial permutations
  // using the columns in mask.
  std::vector<MultiPoly> dp(1u << n, MultiPoly(n));
  dp[0] = MultiPoly::constant(n, 1);
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (dp[mask].is_zero()) continue;
    const int row = std::popcount(mask);
    if (row == n) continue;
    for (int c = 0; c < n; ++c) {
      if (mask >> c & 1 || m[row][c].is_zero()) continue;
      const int inversions = std::popcount(mask >> (c + 1));
      MultiPoly term = dp[mask] * m[row][c];
      if (inversions % 2) term *= Rational(-1);
      dp[mask | (1u << c)] += term;
    }
  }
  return dp[(1u << n) - 1];
}

MultiPoly character_polynomial(int n, int i) {
  check_i(n, i, 0, n);
  if (i == 0 || i == n) return vandermonde(n);
  return char_poly_det(n, i);
}

MultiPoly index_polynomial_n(int n, int i) {
  const auto d = datum(n, Limits{n + 1});
  const MultiPoly q = index_polynomial(chamber_family(n, i), d);
  // Drop the last variable; q must not depend on it.
  MultiPoly out(n);
  for (const auto& [e, c] : q.terms()) {
    if (e[n] != 0) throw Error(Errc::IllegalParams, "index polynomial depends on lambda_{n+1}");
    out.add_term(Exponent(e.begin(), e.begin() + n), c);
  }
  return out;
}

MultiPoly gcd_closed_form(int n, int i) {
  check_i(n, i, 0, n);
  std::vector<int> first(n - i), second(i);
  std::iota(first.begin(), first.end(), 0);
  std::iota(second.begin(), second.end(), n - i);
  return vandermonde(n, first) * vandermonde(n, second);
}

MultiPoly root_form_gcd(const MultiPoly& a, const MultiPoly& b) {
  if (a.nvars() != b.nvars()) throw Error(Errc::DimensionMismatch, "gcd arity");
  const int n = a.nvars();
  std::vector<LinearForm> factors;
  for (int p = 0; p < n; ++p) {
    for (int q = p + 1; q < n; ++q) {
      const auto l = LinearForm::difference(n, p, q);
      const int k = std::min(linear_factor_multiplicity(a, l), linear_factor_multiplicity(b, l));
      for (int j = 0; j < k; ++j) factors.push_back(l);
    }
  }
  return linear_form_product(factors, n);
}

MultiPoly gcd_with_index(int n, int i) {
  check_i(n, i, 1, n - 1);
  return root_form_gcd(char_poly_det(n, i), index_polynomial_n(n, i));
}

TauInvariant tau_invariant(int n, int i) {
  const Weight rep = chamber_representative(n, i);
  std::vector<int> order(n + 1);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return rep[a] > rep[b]; });
  auto compact = [n](int a, int b) { return (a < n) == (b < n); };
  auto oriented = [](int a, int b) { return std::make_pair(std::min(a, b), std::max(a, b)); };

  TauInvariant tau;
  std::vector<bool> in_tau(n, false);  // simple root at sorted position k
  for (int k = 0; k < n; ++k) {
    if (compact(order[k], order[k + 1])) {
      in_tau[k] = true;
      tau.simple.push_back(oriented(order[k], order[k + 1]));
    }
  }
  // e_{order[a]} - e_{order[b]} (a < b) is the sum of the simple roots at
  // positions a..b-1.
  for (int a = 0; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) {
      bool generated = true;
      for (int k = a; k < b && generated; ++k) generated = in_tau[k];
      if (generated) tau.generated.push_back(oriented(order[a], order[b]));
    }
  }
  std::sort(tau.simple.begin(), tau.simple.end());
  std::sort(tau.generated.begin(), tau.generated.end());
  return tau;
}

std::vector<LinearForm> tau_forms(const TauInvariant& tau, int n) {
  std::vector<LinearForm> out;
  for (const auto& [p, q] : tau.generated) out.push_back(LinearForm::difference(n, p, q));
  return out;
}

int gk_dimension(int n, int i) {
  check_i(n, i, 0, n);
  return (i == 0 || i == n) ? n : 2 * n - 1;
}

DegreeReport degree_report(int n, int i) {
  check_i(n, i, 2, n - 2);
  DegreeReport r;
  r.n = n;
  r.i = i;
  const MultiPoly p = char_poly_det(n, i);
  const MultiPoly q = index_polynomial_n(n, i);
  const MultiPoly g = gcd_with_index(n, i);
  r.deg_p = p.degree();
  r.deg_q = q.degree();
  r.deg_r = g.degree();
  auto divide_out = [&](MultiPoly x) {
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) {
        const auto l = LinearForm::difference(n, a, b);
        const int k = linear_factor_multiplicity(g, l);
        for (int j = 0; j < k; ++j) x = *exact_divide(x, l);
      }
    }
    return x;
  };
  const MultiPoly pr = divide_out(p);
  const MultiPoly qr = divide_out(q);
  r.deg_p_over_r = pr.degree();
  r.deg_q_over_r = qr.degree();
  r.gk_dim = gk_dimension(n, i);
  r.num_positive = static_cast<int>(binom2(n + 1));
  r.consistent = r.deg_p == binom2(n - 1) && r.deg_q == binom2(n) &&
                 r.deg_r == binom2(i) + binom2(n - i) &&
                 r.deg_p_over_r == i * (n - i) - (n - 1) && r.deg_q_over_r == i * (n - i) &&
                 r.deg_p == r.num_positive - r.gk_dim && pr * g == p && qr * g == q;
  return r;
}

}  // namespace dix::su_n1
