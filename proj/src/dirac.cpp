#include "dix/dirac.hpp"

#include <set>

#include "dix/weyl_action.hpp"

namespace dix {

SpinWeights spin_weights(const RootDatum& datum, int max_noncompact) {
  const auto nc = datum.noncompact_positive_roots();
  const int n = static_cast<int>(nc.size());
  if (n > max_noncompact) {
    throw Error(Errc::CapExceeded, std::to_string(n) + " noncompact roots exceed the spin cap");
  }
  Weight rho_n = datum.rho_g() - datum.rho_k();
  SpinWeights out;
  for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
    Weight w = -rho_n;
    int size = 0;
    for (int k = 0; k < n; ++k) {
      if (mask >> k & 1) {
        w += nc[k];
        ++size;
      }
    }
    auto& side = (size % 2 == n % 2) ? out.plus : out.minus;
    side[w] += 1;
  }
  return out;
}

TruncatedSeries spin_character_series(const SpinWeights& spin, const Weight& y, int order) {
  TruncatedSeries s(order);
  for (const auto& [mu, m] : spin.plus) {
    s += TruncatedSeries::exp(inner(mu, y), order) * Rational(static_cast<long>(m));
  }
  for (const auto& [mu, m] : spin.minus) {
    s -= TruncatedSeries::exp(inner(mu, y), order) * Rational(static_cast<long>(m));
  }
  return s;
}

int discrete_series_sign(const Weight& lambda, const RootDatum& datum) {
  if (!datum.is_regular(lambda)) {
    throw Error(Errc::SingularParameter, to_string(lambda) + " is singular for R_g");
  }
  auto dc = dominant_conjugate(lambda, datum.compact_positive_roots());
  int sign = 1;
  for (const auto& b : datum.noncompact_positive_roots()) {
    if (inner(dc.weight, b) < 0) sign = -sign;
  }
  return sign;
}

VirtualKModule index_discrete_series(const Weight& lambda, const RootDatum& datum) {
  const int eps = discrete_series_sign(lambda, datum);
  auto dc = dominant_conjugate(lambda, datum.compact_positive_roots());
  // eps [x lambda] = eps sgn(x) tilde_E(lambda)
  VirtualKModule v;
  add_tilde_E(v, dc.weight, eps, datum);
  return v;
}

void IndexFamily::add(const WeylElement& w, long long a) {
  if (a == 0) return;
  auto [it, inserted] = coeffs.try_emplace(w, a);
  if (!inserted) {
    it->second += a;
    if (it->second == 0) coeffs.erase(it);
  }
}

IndexFamily operator+(const IndexFamily& a, const IndexFamily& b) {
  if (a.base != b.base) throw Error(Errc::IllegalParams, "families with different bases");
  IndexFamily out = a;
  for (const auto& [w, c] : b.coeffs) out.add(w, c);
  return out;
}

IndexFamily operator*(long long s, const IndexFamily& f) {
  IndexFamily out{f.base, {}};
  for (const auto& [w, c] : f.coeffs) out.add(w, s * c);
  return out;
}

IndexFamily discrete_series_family(const Weight& lambda, const RootDatum& datum) {
  const int eps = discrete_series_sign(lambda, datum);
  auto dc = dominant_conjugate(lambda, datum.compact_positive_roots());
  IndexFamily fam{lambda, {}};
  fam.add(WeylElement::identity(datum.rank()), eps * dc.sign);
  return fam;
}

VirtualKModule evaluate_index(const IndexFamily& fam, const Weight& lambda,
                              const RootDatum& datum) {
  if (!datum.in_lattice(lambda - fam.base)) {
    throw Error(Errc::OffLattice, to_string(lambda) + " is not in " + to_string(fam.base) +
                                      " + lattice");
  }
  VirtualKModule v;
  for (const auto& [w, a] : fam.coeffs) add_tilde_E(v, w.apply(lambda), a, datum);
  return v;
}

MultiPoly index_polynomial(const IndexFamily& fam, const RootDatum& datum) {
  const MultiPoly dk = weyl_dim_poly(datum);
  MultiPoly q(datum.rank());
  // D_k(w lambda) = (w^{-1} . D_k)(lambda)
  for (const auto& [w, a] : fam.coeffs) q += act(w.inverse(), dk) * Rational(static_cast<long>(a));
  return q;
}

bool verify_translation(const IndexFamily& fam, const Weight& highest, const Weight& lambda,
                        const RootDatum& datum) {
  const auto weights = weight_multiset(highest, datum);
  const auto lhs = tensor_virtual(evaluate_index(fam, lambda, datum), weights, datum);
  VirtualKModule rhs;
  for (const auto& [mu, m] : weights) rhs += m * evaluate_index(fam, lambda + mu, datum);
  return lhs == rhs;
}

bool in_root_lattice(const Weight& v, const RootDatum& datum) {
  Rational sum = 0;
  for (const auto& x : v.c) {
    if (!is_integral(x)) return false;
    sum += x;
  }
  switch (datum.type()) {
    case RootType::A:
      return sum == 0;
    case RootType::B:
      return true;
    case RootType::C:
    case RootType::D:
      return sum.get_num() % 2 == 0;
  }
  return false;
}

bool in_integral_weyl_group(const WeylElement& w, const Weight& lambda0, const RootDatum& datum) {
  return in_root_lattice(lambda0 - w.apply(lambda0), datum);
}

IndexFamily act_on_family(const WeylElement& w, const IndexFamily& fam, const RootDatum& datum,
                          bool validate) {
  if (validate && !in_integral_weyl_group(w, fam.base, datum)) {
    throw Error(Errc::IllegalParams, "Weyl element outside the integral Weyl group of the base");
  }
  // a'_u = a_{uw}: the coefficient sitting at v moves to u = v w^{-1}.
  const WeylElement winv = w.inverse();
  IndexFamily out{fam.base, {}};
  for (const auto& [v, a] : fam.coeffs) out.add(v * winv, a);
  return out;
}

IndexFamily canonical_family(const IndexFamily& fam, const RootDatum& datum) {
  const auto wk = weyl_elements(datum, WhichGroup::K);
  IndexFamily out{fam.base, {}};
  for (const auto& [u, a] : fam.coeffs) {
    // a_u tilde_E(u lambda) = a_u sgn(x) tilde_E(x u lambda)
    const WeylElement* best = nullptr;
    WeylElement best_xu;
    for (const auto& x : wk) {
      WeylElement xu = x * u;
      if (!best || xu < best_xu) {
        best = &x;
        best_xu = xu;
      }
    }
    out.add(best_xu, a * best->sgn());
  }
  return out;
}

}  // namespace dix

namespace dix {

std::vector<Weight> chamber_representatives(const RootDatum& datum, const Limits& limits) {
  std::set<Weight> reps;
  const auto compact = datum.compact_positive_roots();
  for (const auto& w : weyl_elements(datum, WhichGroup::G, limits)) {
    reps.insert(dominant_conjugate(w.apply(datum.rho_g()), compact).weight);
  }
  return {reps.begin(), reps.end()};
}

}  // namespace dix
