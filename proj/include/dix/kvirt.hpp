#pragma once

// Virtual K~-modules written in the basis of the E~_gamma, weight multisets
// of finite-dimensional g-modules, and exact characters on the compact torus.

#include <map>
#include <vector>

#include "dix/lie_core.hpp"
#include "dix/polyalg.hpp"

namespace dix {

// Keys are R_k-dominant-regular parameters (trace-normalized in type A).
struct VirtualKModule {
  std::map<Weight, long long> terms;

  bool is_zero() const { return terms.empty(); }
  // Adds c to an already normalized key.
  void add(const Weight& gamma, long long c);

  VirtualKModule& operator+=(const VirtualKModule& o);
  VirtualKModule& operator-=(const VirtualKModule& o);
  VirtualKModule& operator*=(long long s);

  friend VirtualKModule operator+(VirtualKModule a, const VirtualKModule& b) { return a += b; }
  friend VirtualKModule operator-(VirtualKModule a, const VirtualKModule& b) { return a -= b; }
  friend VirtualKModule operator*(long long s, VirtualKModule a) { return a *= s; }
  friend VirtualKModule operator-(VirtualKModule a) { return a *= -1; }
  friend bool operator==(const VirtualKModule&, const VirtualKModule&) = default;
};

std::string to_string(const VirtualKModule& v);

// Ê_gamma: zero when gamma - rho_g is off the lattice or gamma is
// R_k-singular, otherwise sgn(x) [x gamma] with x gamma dominant regular.
VirtualKModule tilde_E(const Weight& gamma, const RootDatum& datum);
// v += c * tilde_E(gamma)
void add_tilde_E(VirtualKModule& v, const Weight& gamma, long long c, const RootDatum& datum);

Integer dim_virtual(const VirtualKModule& v, const RootDatum& datum);

using WeightMultiset = std::map<Weight, long long>;

long long total_multiplicity(const WeightMultiset& m);

// Weights of the irreducible g-module of the given highest weight, by
// Freudenthal's formula on dominant weights and W_g-orbits.
WeightMultiset weight_multiset(const Weight& highest, const RootDatum& datum);

// sum_gamma sum_mu c_gamma tilde_E(gamma + mu)
VirtualKModule tensor_virtual(const VirtualKModule& v, const WeightMultiset& weights,
                              const RootDatum& datum);

// Power series in t truncated after t^order.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(int order = 0) : c_(order + 1) {}
  explicit TruncatedSeries(std::vector<Rational> coeffs);

  // e^{a t}
  static TruncatedSeries exp(const Rational& a, int order);

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return c_; }
  const Rational& operator[](int j) const { return c_.at(j); }
  Rational& operator[](int j) { return c_.at(j); }
  bool is_zero() const;
  // Smallest j with c_j != 0, or -1 for the zero series.
  int valuation() const;

  TruncatedSeries truncate(int order) const;
  // Divides by t^k; the first k coefficients must vanish. Order drops by k.
  TruncatedSeries shift_down(int k) const;

  TruncatedSeries& operator+=(const TruncatedSeries& o);
  TruncatedSeries& operator-=(const TruncatedSeries& o);
  TruncatedSeries& operator*=(const Rational& s);
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(TruncatedSeries a, const Rational& s) { return a *= s; }
  // Requires b[0] != 0.
  friend TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b);
  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  std::vector<Rational> c_;
};

std::string to_string(const TruncatedSeries& s);

// Throws SingularDirection when alpha(y) = 0 for some root.
void require_regular_direction(const Weight& y, const RootDatum& datum);

// prod_{alpha in roots} (e^{t alpha(y)/2} - e^{-t alpha(y)/2}) / t^{|roots|}
TruncatedSeries weyl_denominator_reduced(const std::vector<Weight>& roots, const Weight& y,
                                         int order);

// Taylor expansion of ch_k(V)(exp ty) through t^order.
TruncatedSeries ch_series(const VirtualKModule& v, const Weight& y, int order,
                          const RootDatum& datum);

}  // namespace dix
