#include "dix/weyl_action.hpp"

namespace dix {

MultiPoly act(const WeylElement& w, const MultiPoly& p) {
  if (w.size() != p.nvars()) throw Error(Errc::DimensionMismatch, "Weyl element acts on wrong rank");
  // X_i -> sign_i X_{perm(i)}
  const auto& perm = w.perm();
  const auto& sign = w.sign();
  MultiPoly out(p.nvars());
  Exponent f(p.nvars());
  for (const auto& [e, c] : p.terms()) {
    int s = 1;
    for (int i = 0; i < p.nvars(); ++i) {
      f[perm[i]] = e[i];
      if (sign[i] < 0 && (e[i] & 1)) s = -s;
    }
    out.add_term(f, s > 0 ? c : Rational(-c));
  }
  return out;
}

MultiPoly PolySpan::reduce(MultiPoly p) const {
  for (const auto& row : basis_) {
    const auto& pivot = row.terms().begin()->first;
    const Rational c = p.coefficient(pivot);
    if (c != 0) p -= row * c;
  }
  return p;
}

bool PolySpan::contains(const MultiPoly& p) const {
  if (p.nvars() != nvars_) throw Error(Errc::DimensionMismatch, "span arity");
  return reduce(p).is_zero();
}

bool PolySpan::add(const MultiPoly& p) {
  if (p.nvars() != nvars_) throw Error(Errc::DimensionMismatch, "span arity");
  for (const auto& [e, c] : p.terms()) columns_.insert(e);
  if (columns_.size() > max_columns_) {
    throw Error(Errc::CapExceeded, "span needs more than " + std::to_string(max_columns_) +
                                       " monomial columns");
  }
  MultiPoly r = reduce(p);
  if (r.is_zero()) return false;
  const auto pivot = r.terms().begin()->first;
  r *= Rational(1) / r.terms().begin()->second;
  for (auto& row : basis_) {
    const Rational c = row.coefficient(pivot);
    if (c != 0) row -= r * c;
  }
  auto pos = basis_.begin();
  GradedLexGreater greater;
  while (pos != basis_.end() && greater(pos->terms().begin()->first, pivot)) ++pos;
  basis_.insert(pos, std::move(r));
  return true;
}

PolySpan orbit_span(const MultiPoly& p, const std::vector<WeylElement>& ws, const Limits& limits,
                    kernels::Exec exec) {
  PolySpan span(p.nvars(), limits.max_span_columns);
  for (const auto& t : kernels::orbit_translates(p, ws, exec)) span.add(t);
  return span;
}

namespace {
MultiPoly dim_product(const std::vector<Weight>& roots, const Weight& rho, int rank) {
  MultiPoly out = MultiPoly::constant(rank, Rational(1));
  for (const auto& a : roots) {
    // <lambda, a^vee> / <rho, a^vee> = (lambda, a) / (rho, a)
    const Rational denom = inner(rho, a);
    LinearForm l(a.c);
    for (auto& x : l.coeffs) x /= denom;
    out *= l.to_poly();
  }
  return out;
}
}  // namespace

MultiPoly weyl_dim_poly(const RootDatum& datum) {
  return dim_product(datum.compact_positive_roots(), datum.rho_k(), datum.rank());
}

MultiPoly weyl_dim_poly_g(const RootDatum& datum) {
  std::vector<Weight> roots;
  for (const auto& r : datum.positive_roots()) roots.push_back(r.vec);
  return dim_product(roots, datum.rho_g(), datum.rank());
}

}  // namespace dix
