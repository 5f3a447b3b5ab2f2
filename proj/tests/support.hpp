#pragma once

#include <random>
#include <vector>

#include "dix/polyalg.hpp"

namespace dix::testing {

inline Rational random_rational(std::mt19937& rng, int range = 5) {
  std::uniform_int_distribution<int> num(-range, range);
  std::uniform_int_distribution<int> den(1, 3);
  return make_rational(num(rng), den(rng));
}

inline MultiPoly random_poly(std::mt19937& rng, int nvars, int max_degree, int terms = 6) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<int> var(0, nvars - 1);
  MultiPoly p(nvars);
  for (int t = 0; t < terms; ++t) {
    Exponent e(nvars, 0);
    const int d = deg(rng);
    for (int k = 0; k < d; ++k) e[var(rng)] += 1;
    p.add_term(e, random_rational(rng));
  }
  return p;
}

inline LinearForm random_form(std::mt19937& rng, int nvars) {
  std::uniform_int_distribution<int> c(-3, 3);
  LinearForm l;
  do {
    l.coeffs.assign(nvars, Rational(0));
    for (auto& x : l.coeffs) x = c(rng);
  } while (l.is_zero());
  return l;
}

inline std::vector<Rational> random_point(std::mt19937& rng, int n) {
  std::vector<Rational> pt(n);
  for (auto& x : pt) x = random_rational(rng, 7);
  return pt;
}

}  // namespace dix::testing

namespace dix::testing {

// Rank of a dense rational matrix by plain Gaussian elimination.
inline int matrix_rank(std::vector<std::vector<Rational>> m) {
  int rank = 0;
  const int rows = static_cast<int>(m.size());
  const int cols = rows ? static_cast<int>(m[0].size()) : 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int piv = rank;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    for (int r = rank + 1; r < rows; ++r) {
      if (m[r][c] == 0) continue;
      const Rational f = m[r][c] / m[rank][c];
      for (int k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

inline std::vector<GroupId> small_groups(int max_rank) {
  std::vector<GroupId> out;
  for (int p = 1; p <= max_rank; ++p) {
    for (int q = 0; p + q <= max_rank; ++q) {
      if (q >= 1) {
        out.push_back(GroupId::su(p, q));
        out.push_back(GroupId::sp_pq(p, q));
        out.push_back(GroupId::so_even_even(p, q));
      }
      out.push_back(GroupId::so_even_odd(p, q));
    }
    out.push_back(GroupId::sp_real(p));
    out.push_back(GroupId::so_star(p));
  }
  return out;
}

// A random point of rho_g + lattice.
inline Weight random_lattice_point(std::mt19937& rng, const RootDatum& d, int range = 6) {
  std::uniform_int_distribution<int> coord(-range, range);
  Weight v = d.rho_g();
  for (std::size_t i = 0; i < v.size(); ++i) v[i] += coord(rng);
  return v;
}

}  // namespace dix::testing
