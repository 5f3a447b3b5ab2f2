#pragma once

// Discrete series of SU(n,1): chambers, the determinant formula for the
// character polynomial, its common divisor with the index polynomial and the
// tau-invariant.
//
// Coordinates are lambda_1..lambda_{n+1}; the compact roots are e_p - e_q
// with p, q <= n.

#include <vector>

#include "dix/dirac.hpp"
#include "dix/lie_core.hpp"
#include "dix/polyalg.hpp"

namespace dix::su_n1 {

RootDatum datum(int n, const Limits& limits = {});

// The i with lambda_{n-i} >= lambda_{n+1} >= lambda_{n-i+1} (lambda_0 = +inf,
// lambda_{n+1} compared against -inf for i = 0); ties go to the smaller i.
// Throws NotInC unless lambda_1 >= ... >= lambda_n.
int chamber_of(const Weight& lambda, int n);

// lambda_k = 2(n-k+1), lambda_{n+1} = 2i+1: regular, in D_i, on rho_g + lattice.
Weight chamber_representative(int n, int i);

// Discrete series family of the chamber D_i.
IndexFamily chamber_family(int n, int i);

// The determinant in lambda_1..lambda_n: rows lambda^{n-2}, ..., lambda^1, then
// the indicators of the first n-i and of the last i columns. 1 <= i <= n-1.
MultiPoly char_poly_det(int n, int i);

// Character polynomial proxy for every chamber: char_poly_det for
// 1 <= i <= n-1, the Vandermonde V(lambda_1..lambda_n) for i in {0, n}.
MultiPoly character_polynomial(int n, int i);

// Index polynomial of the chamber family restricted to lambda_1..lambda_n
// (it does not involve lambda_{n+1}).
MultiPoly index_polynomial_n(int n, int i);

// prod_{1<=p<q<=n-i} (X_p - X_q) prod_{n-i+1<=r<s<=n} (X_r - X_s)
MultiPoly gcd_closed_form(int n, int i);

// Largest product of root forms X_p - X_q dividing both polynomials.
MultiPoly root_form_gcd(const MultiPoly& a, const MultiPoly& b);

// root_form_gcd(char_poly_det, index polynomial); 1 <= i <= n-1.
MultiPoly gcd_with_index(int n, int i);

struct TauInvariant {
  // Compact simple roots of the chamber, as (p, q) with p < q (0-based).
  std::vector<std::pair<int, int>> simple;
  // Positive roots generated by them, same encoding.
  std::vector<std::pair<int, int>> generated;
};

TauInvariant tau_invariant(int n, int i);

// Forms X_p - X_q in n variables for the generated roots.
std::vector<LinearForm> tau_forms(const TauInvariant& tau, int n);

struct DegreeReport {
  int n = 0;
  int i = 0;
  int deg_p = 0;
  int deg_q = 0;
  int deg_r = 0;
  int deg_p_over_r = 0;
  int deg_q_over_r = 0;
  int gk_dim = 0;
  int num_positive = 0;
  // Every computed degree equals its closed form.
  bool consistent = false;
};

// 2 <= i <= n-2.
DegreeReport degree_report(int n, int i);

// Gelfand-Kirillov dimension of the discrete series in D_i.
int gk_dimension(int n, int i);

}  // namespace dix::su_n1
