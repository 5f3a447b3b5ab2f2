#include "dix/kvirt.hpp"

#include <deque>
#include <set>
#include <sstream>

#include "dix/kernels.hpp"
#include "dix/weyl_action.hpp"

namespace dix {

void VirtualKModule::add(const Weight& gamma, long long c) {
  if (c == 0) return;
  auto [it, inserted] = terms.try_emplace(gamma, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

VirtualKModule& VirtualKModule::operator+=(const VirtualKModule& o) {
  for (const auto& [g, c] : o.terms) add(g, c);
  return *this;
}

VirtualKModule& VirtualKModule::operator-=(const VirtualKModule& o) {
  for (const auto& [g, c] : o.terms) add(g, -c);
  return *this;
}

VirtualKModule& VirtualKModule::operator*=(long long s) {
  if (s == 0) {
    terms.clear();
    return *this;
  }
  for (auto& [g, c] : terms) c *= s;
  return *this;
}

std::string to_string(const VirtualKModule& v) {
  if (v.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [g, c] : v.terms) {
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << '-';
    first = false;
    const long long mag = c < 0 ? -c : c;
    if (mag != 1) os << mag << '*';
    os << "E" << to_string(g);
  }
  return os.str();
}

void add_tilde_E(VirtualKModule& v, const Weight& gamma, long long c, const RootDatum& datum) {
  if (c == 0) return;
  if (!datum.in_lattice(gamma - datum.rho_g())) return;
  auto dc = dominant_conjugate(gamma, datum.compact_positive_roots());
  if (dc.singular) return;
  v.add(datum.normalize(dc.weight), dc.sign * c);
}

VirtualKModule tilde_E(const Weight& gamma, const RootDatum& datum) {
  VirtualKModule v;
  add_tilde_E(v, gamma, 1, datum);
  return v;
}

Integer dim_virtual(const VirtualKModule& v, const RootDatum& datum) {
  const MultiPoly dk = weyl_dim_poly(datum);
  Rational total = 0;
  for (const auto& [g, c] : v.terms) total += dk.eval(g) * Rational(static_cast<long>(c));
  if (!is_integral(total)) {
    throw Error(Errc::OffLattice, "non-integral dimension " + to_string(total));
  }
  return total.get_num();
}

long long total_multiplicity(const WeightMultiset& m) {
  long long s = 0;
  for (const auto& [w, k] : m) s += k;
  return s;
}

namespace {

std::vector<Weight> positive_vectors(const RootDatum& datum) {
  std::vector<Weight> out;
  for (const auto& r : datum.positive_roots()) out.push_back(r.vec);
  return out;
}

bool is_dominant(const Weight& v, const std::vector<Weight>& roots) {
  for (const auto& a : roots) {
    if (inner(v, a) < 0) return false;
  }
  return true;
}

std::set<Weight> orbit(const Weight& v, const std::vector<Weight>& roots) {
  std::set<Weight> seen{v};
  std::deque<Weight> queue{v};
  while (!queue.empty()) {
    Weight cur = queue.front();
    queue.pop_front();
    for (const auto& a : roots) {
      Weight r = reflect(cur, a);
      if (seen.insert(r).second) queue.push_back(std::move(r));
    }
  }
  return seen;
}

}  // namespace

WeightMultiset weight_multiset(const Weight& highest, const RootDatum& datum) {
  if (static_cast<int>(highest.size()) != datum.rank()) {
    throw Error(Errc::DimensionMismatch, "highest weight has wrong length");
  }
  const auto roots = positive_vectors(datum);
  if (!datum.in_lattice(highest)) {
    throw Error(Errc::NotDominantIntegral, to_string(highest) + " is not in the lattice");
  }
  for (const auto& a : roots) {
    const Rational k = pairing(highest, a);
    if (!is_integral(k) || k < 0) {
      throw Error(Errc::NotDominantIntegral, to_string(highest) + " is not dominant integral");
    }
  }
  const Weight& rho = datum.rho_g();

  // Dominant weights below the highest one; the dominance order is generated
  // by subtracting positive roots within the dominant chamber.
  std::set<Weight> dominant{highest};
  std::deque<Weight> queue{highest};
  while (!queue.empty()) {
    Weight cur = queue.front();
    queue.pop_front();
    for (const auto& a : roots) {
      Weight next = cur - a;
      if (is_dominant(next, roots) && dominant.insert(next).second) queue.push_back(next);
    }
  }
  std::vector<Weight> order(dominant.begin(), dominant.end());
  std::stable_sort(order.begin(), order.end(), [&](const Weight& a, const Weight& b) {
    return inner(highest - a, rho) < inner(highest - b, rho);
  });

  std::map<Weight, long long> mult;
  auto lookup = [&](const Weight& v) -> long long {
    auto dc = dominant_conjugate(v, roots);
    auto it = mult.find(dc.weight);
    return it == mult.end() ? 0 : it->second;
  };
  const Weight top = highest + rho;
  const Rational top_norm = inner(top, top);
  for (const auto& mu : order) {
    if (mu == highest) {
      mult[mu] = 1;
      continue;
    }
    Rational sum = 0;
    for (const auto& a : roots) {
      for (int k = 1;; ++k) {
        Weight shifted = mu + Rational(k) * a;
        const long long m = lookup(shifted);
        if (m == 0) break;
        sum += Rational(static_cast<long>(m)) * inner(shifted, a);
      }
    }
    const Weight mr = mu + rho;
    const Rational m = 2 * sum / (top_norm - inner(mr, mr));
    if (!is_integral(m)) throw Error(Errc::NotDominantIntegral, "non-integral multiplicity");
    if (m != 0) mult[mu] = m.get_num().get_si();
  }

  WeightMultiset out;
  for (const auto& [mu, m] : mult) {
    for (const auto& w : orbit(mu, roots)) out[w] = m;
  }
  return out;
}

VirtualKModule tensor_virtual(const VirtualKModule& v, const WeightMultiset& weights,
                              const RootDatum& datum) {
  VirtualKModule out;
  for (const auto& [g, c] : v.terms) {
    for (const auto& [mu, m] : weights) add_tilde_E(out, g + mu, c * m, datum);
  }
  return out;
}

TruncatedSeries::TruncatedSeries(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  if (c_.empty()) c_.resize(1);
}

TruncatedSeries TruncatedSeries::exp(const Rational& a, int order) {
  TruncatedSeries s(order);
  Rational term = 1;
  for (int j = 0; j <= order; ++j) {
    s.c_[j] = term;
    term = term * a / (j + 1);
  }
  return s;
}

bool TruncatedSeries::is_zero() const { return valuation() < 0; }

int TruncatedSeries::valuation() const {
  for (std::size_t j = 0; j < c_.size(); ++j) {
    if (c_[j] != 0) return static_cast<int>(j);
  }
  return -1;
}

TruncatedSeries TruncatedSeries::truncate(int order) const {
  std::vector<Rational> c(c_.begin(), c_.begin() + std::min<std::size_t>(c_.size(), order + 1));
  c.resize(order + 1);
  return TruncatedSeries(std::move(c));
}

TruncatedSeries TruncatedSeries::shift_down(int k) const {
  if (k > order()) throw Error(Errc::IllegalParams, "shift beyond truncation order");
  for (int j = 0; j < k; ++j) {
    if (c_[j] != 0) throw Error(Errc::IllegalParams, "series does not vanish to the shifted order");
  }
  return TruncatedSeries(std::vector<Rational>(c_.begin() + k, c_.end()));
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
  if (o.order() < order()) c_.resize(o.c_.size());
  for (std::size_t j = 0; j < c_.size(); ++j) c_[j] += o.c_[j];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
  if (o.order() < order()) c_.resize(o.c_.size());
  for (std::size_t j = 0; j < c_.size(); ++j) c_[j] -= o.c_[j];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const Rational& s) {
  for (auto& x : c_) x *= s;
  return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int n = std::min(a.order(), b.order());
  TruncatedSeries out(n);
  for (int i = 0; i <= n; ++i) {
    if (a.c_[i] == 0) continue;
    for (int j = 0; i + j <= n; ++j) out.c_[i + j] += a.c_[i] * b.c_[j];
  }
  return out;
}

TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (b.c_[0] == 0) throw Error(Errc::IllegalParams, "series division by a non-unit");
  const int n = std::min(a.order(), b.order());
  TruncatedSeries q(n);
  for (int k = 0; k <= n; ++k) {
    Rational acc = a.c_[k];
    for (int j = 1; j <= k; ++j) acc -= b.c_[j] * q.c_[k - j];
    q.c_[k] = acc / b.c_[0];
  }
  return q;
}

std::string to_string(const TruncatedSeries& s) {
  std::ostringstream os;
  os << '[';
  for (int j = 0; j <= s.order(); ++j) {
    if (j) os << ", ";
    os << s[j].get_str();
  }
  os << " | O(t^" << s.order() + 1 << ")]";
  return os.str();
}

void require_regular_direction(const Weight& y, const RootDatum& datum) {
  if (static_cast<int>(y.size()) != datum.rank()) {
    throw Error(Errc::DimensionMismatch, "direction has wrong length");
  }
  for (const auto& r : datum.positive_roots()) {
    if (inner(r.vec, y) == 0) {
      throw Error(Errc::SingularDirection, "root " + to_string(r.vec) + " vanishes on " + to_string(y));
    }
  }
}

TruncatedSeries weyl_denominator_reduced(const std::vector<Weight>& roots, const Weight& y,
                                         int order) {
  // (e^{at/2} - e^{-at/2}) / t = sum_j a^{2j+1} / (2^{2j} (2j+1)!) t^{2j}
  TruncatedSeries out = TruncatedSeries::exp(0, order);
  for (const auto& a : roots) {
    const Rational v = inner(a, y);
    TruncatedSeries f(order);
    Rational term = v;  // v^{k+1} / (2^k (k+1)!)
    for (int k = 0; k <= order; ++k) {
      if (k % 2 == 0) f[k] = term;
      term = term * v / (2 * (k + 2));
    }
    out = out * f;
  }
  return out;
}

TruncatedSeries ch_series(const VirtualKModule& v, const Weight& y, int order,
                          const RootDatum& datum) {
  require_regular_direction(y, datum);
  if (order < 0) throw Error(Errc::IllegalParams, "negative series order");
  const auto compact = datum.compact_positive_roots();
  const int rk = static_cast<int>(compact.size());
  const int full = order + rk;
  const auto wk = weyl_elements(datum, WhichGroup::K);

  // Numerator: sum_gamma c_gamma sum_w sgn(w) e^{t (w gamma)(y)}.
  std::vector<Rational> values;
  std::vector<int> signs;
  for (const auto& [g, c] : v.terms) {
    for (const auto& w : wk) {
      values.push_back(inner(w.apply(g), y));
      signs.push_back(static_cast<int>(w.sgn() * c));
    }
  }
  auto sums = kernels::signed_power_sums(values, signs, full);
  TruncatedSeries num(full);
  Rational fact = 1;
  for (int j = 0; j <= full; ++j) {
    if (j) fact *= j;
    num[j] = sums[j] / fact;
  }
  return num.shift_down(rk) / weyl_denominator_reduced(compact, y, order);
}

}  // namespace dix
