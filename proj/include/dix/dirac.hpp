#pragma once

// Spin modules, Dirac index of discrete series and index families over
// coherent families.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dix/kvirt.hpp"
#include "dix/lie_core.hpp"
#include "dix/polyalg.hpp"

namespace dix {

struct SpinWeights {
  WeightMultiset plus;
  WeightMultiset minus;
};

// Weights -rho_n + (sum of a subset of R_n^+). A subset goes to `plus` when
// its size has the parity of #R_n^+, so that ch(S+ - S-) = d_g / d_k.
SpinWeights spin_weights(const RootDatum& datum, int max_noncompact = 20);

// sum_plus e^{t mu(y)} - sum_minus e^{t mu(y)} through t^order.
TruncatedSeries spin_character_series(const SpinWeights& spin, const Weight& y, int order);

// Sign eps(lambda) in I(X_lambda) = eps(lambda) [x lambda], x lambda the
// R_k-dominant conjugate: (-1)^{#{beta in R_n^+ : (x lambda, beta) < 0}}.
int discrete_series_sign(const Weight& lambda, const RootDatum& datum);

// Index of the discrete series with Harish-Chandra parameter lambda.
VirtualKModule index_discrete_series(const Weight& lambda, const RootDatum& datum);

struct IndexFamily {
  Weight base;
  std::map<WeylElement, long long> coeffs;

  bool is_zero() const { return coeffs.empty(); }
  void add(const WeylElement& w, long long a);
  friend bool operator==(const IndexFamily&, const IndexFamily&) = default;
};

IndexFamily operator+(const IndexFamily& a, const IndexFamily& b);
IndexFamily operator*(long long s, const IndexFamily& f);

// Family of the discrete series whose parameter lies in the chamber of
// `lambda` (which becomes the base).
IndexFamily discrete_series_family(const Weight& lambda, const RootDatum& datum);

// sum_w a_w tilde_E(w lambda); lambda must lie in base + lattice.
VirtualKModule evaluate_index(const IndexFamily& fam, const Weight& lambda,
                              const RootDatum& datum);

// Q(lambda) = sum_w a_w D_k(w lambda)
MultiPoly index_polynomial(const IndexFamily& fam, const RootDatum& datum);

// I(X_lambda) (x) F == sum_{mu in Delta(F)} I(X_{lambda+mu}).
bool verify_translation(const IndexFamily& fam, const Weight& highest, const Weight& lambda,
                        const RootDatum& datum);

// The R_k-dominant W_g-conjugates of rho_g, one per discrete series chamber,
// in increasing lexicographic order.
std::vector<Weight> chamber_representatives(const RootDatum& datum, const Limits& limits = {});

// lambda0 - w lambda0 in the root lattice.
bool in_integral_weyl_group(const WeylElement& w, const Weight& lambda0, const RootDatum& datum);
bool in_root_lattice(const Weight& v, const RootDatum& datum);

// a'_u = a_{uw}, so that Q_{w.fam}(lambda) = Q_fam(w^{-1} lambda). With
// validate set, throws IllegalParams when w is outside the integral Weyl
// group of the base.
IndexFamily act_on_family(const WeylElement& w, const IndexFamily& fam,
                          const RootDatum& datum, bool validate = false);

// Coefficients moved to the smallest element of each coset W_k u, using
// tilde_E(x u lambda) = sgn(x) tilde_E(u lambda). Two families give the same
// index at regular lambda iff their canonical forms agree.
IndexFamily canonical_family(const IndexFamily& fam, const RootDatum& datum);

}  // namespace dix
