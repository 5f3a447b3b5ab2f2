#pragma once

// Exact multivariate polynomials over Q.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dix/lie_core.hpp"
#include "dix/rational.hpp"
#include "dix/weight.hpp"

namespace dix {

using Exponent = std::vector<int>;

// Graded lexicographic, largest first. Only used for deterministic
// iteration and serialization.
struct GradedLexGreater {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

class MultiPoly {
 public:
  using TermMap = std::map<Exponent, Rational, GradedLexGreater>;

  explicit MultiPoly(int nvars = 0) : nvars_(nvars) {}

  static MultiPoly constant(int nvars, const Rational& c);
  static MultiPoly variable(int nvars, int i);
  static MultiPoly monomial(const Exponent& e, const Rational& c);

  int nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  // -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;
  Rational coefficient(const Exponent& e) const;

  // Adds c * X^e, dropping the term if it cancels.
  void add_term(const Exponent& e, const Rational& c);

  Rational eval(const std::vector<Rational>& point) const;
  Rational eval(const Weight& point) const { return eval(point.c); }

  MultiPoly derivative(int var) const;

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  MultiPoly& operator*=(const Rational& s);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Rational& s) { return a *= s; }
  friend MultiPoly operator*(const Rational& s, MultiPoly a) { return a *= s; }
  friend MultiPoly operator-(MultiPoly a) { return a *= Rational(-1); }
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

 private:
  void check_arity(const MultiPoly& o) const;

  int nvars_;
  TermMap terms_;
};

MultiPoly pow(const MultiPoly& p, int k);

// X_i -> images[i]; every image must have arity new_nvars.
MultiPoly substitute(const MultiPoly& p, const std::vector<MultiPoly>& images, int new_nvars);

// Same polynomial in a larger ring; variable i goes to positions[i].
MultiPoly embed(const MultiPoly& p, int new_nvars, const std::vector<int>& positions);

// Human-readable rendering, e.g. "X1^2 - 2*X1*X2 + 1/2".
std::string to_string(const MultiPoly& p);

struct LinearForm {
  std::vector<Rational> coeffs;

  LinearForm() = default;
  explicit LinearForm(std::vector<Rational> c) : coeffs(std::move(c)) {}
  static LinearForm from_weight(const Weight& w) { return LinearForm(w.c); }
  // X_i - X_j
  static LinearForm difference(int nvars, int i, int j);

  int nvars() const { return static_cast<int>(coeffs.size()); }
  bool is_zero() const;
  MultiPoly to_poly() const;
  // The variable solved for by restrict_to_hyperplane: the largest index
  // carrying a nonzero coefficient.
  int elimination_index() const;
  // Scaled so the elimination coefficient is 1.
  LinearForm normalized() const;

  friend bool operator==(const LinearForm&, const LinearForm&) = default;
};

std::string to_string(const LinearForm& l);

// Product of the forms in `nvars` variables; the empty product is 1.
MultiPoly linear_form_product(const std::vector<LinearForm>& forms, int nvars);

// Eliminates X_j (j = l.elimination_index()) by solving l = 0. The result
// has nvars - 1 variables, the surviving ones in their original order.
MultiPoly restrict_to_hyperplane(const MultiPoly& p, const LinearForm& l);

bool divides_linear_form(const MultiPoly& p, const LinearForm& l);

// p / l when l divides p exactly.
std::optional<MultiPoly> exact_divide(const MultiPoly& p, const LinearForm& l);

// Multiplicity of l as a factor of p (p must be nonzero).
int linear_factor_multiplicity(const MultiPoly& p, const LinearForm& l);

// prod_{a<b} (X_{idx[a]} - X_{idx[b]}) in nvars variables.
MultiPoly vandermonde(int nvars, const std::vector<int>& indices);
MultiPoly vandermonde(int nvars);

// op(d/dX) applied to p: each X_i in op is read as d/dX_i.
MultiPoly apply_operator(const MultiPoly& op, const MultiPoly& p);

// Generators of the W-invariant constant coefficient operators without
// constant term: power sums p_1..p_r (A), p_2,p_4,..,p_2r (B, C),
// p_2,..,p_{2r-2} and X_1...X_r (D).
std::vector<MultiPoly> invariant_operator_generators(RootType type, int rank);

bool is_harmonic(const MultiPoly& p, const RootDatum& datum);

}  // namespace dix
