#pragma once

#include <set>
#include <vector>

#include "dix/kernels.hpp"
#include "dix/lie_core.hpp"
#include "dix/polyalg.hpp"

namespace dix {

// (w.P)(lambda) = P(w^{-1} lambda)
MultiPoly act(const WeylElement& w, const MultiPoly& p);

// Subspace of polynomials kept in reduced row echelon form, pivots at the
// graded-lex leading monomial of each basis element.
class PolySpan {
 public:
  explicit PolySpan(int nvars, std::size_t max_columns = Limits{}.max_span_columns)
      : nvars_(nvars), max_columns_(max_columns) {}

  // True if p was not already in the span.
  bool add(const MultiPoly& p);
  bool contains(const MultiPoly& p) const;

  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<MultiPoly>& basis() const { return basis_; }

 private:
  MultiPoly reduce(MultiPoly p) const;

  int nvars_;
  std::size_t max_columns_;
  std::set<Exponent> columns_;
  std::vector<MultiPoly> basis_;
};

PolySpan orbit_span(const MultiPoly& p, const std::vector<WeylElement>& ws,
                    const Limits& limits = {},
                    kernels::Exec exec = kernels::Exec::Parallel);

// D_k(lambda) = prod_{alpha in R_k^+} <lambda, alpha^vee> / <rho_k, alpha^vee>
MultiPoly weyl_dim_poly(const RootDatum& datum);

// Same product over all of R_g^+ (normalized at rho_g).
MultiPoly weyl_dim_poly_g(const RootDatum& datum);

}  // namespace dix
