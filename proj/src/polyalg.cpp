#include "dix/polyalg.hpp"

#include <numeric>
#include <sstream>

namespace dix {

bool GradedLexGreater::operator()(const Exponent& a, const Exponent& b) const {
  const int da = std::accumulate(a.begin(), a.end(), 0);
  const int db = std::accumulate(b.begin(), b.end(), 0);
  if (da != db) return da > db;
  return b < a;
}

MultiPoly MultiPoly::constant(int nvars, const Rational& c) {
  MultiPoly p(nvars);
  p.add_term(Exponent(nvars, 0), c);
  return p;
}

MultiPoly MultiPoly::variable(int nvars, int i) {
  if (i < 0 || i >= nvars) throw Error(Errc::DimensionMismatch, "variable index out of range");
  Exponent e(nvars, 0);
  e[i] = 1;
  return monomial(e, Rational(1));
}

MultiPoly MultiPoly::monomial(const Exponent& e, const Rational& c) {
  MultiPoly p(static_cast<int>(e.size()));
  p.add_term(e, c);
  return p;
}

int MultiPoly::degree() const {
  if (terms_.empty()) return -1;
  const auto& e = terms_.begin()->first;
  return std::accumulate(e.begin(), e.end(), 0);
}

bool MultiPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  const int d = degree();
  const auto& last = terms_.rbegin()->first;
  return std::accumulate(last.begin(), last.end(), 0) == d;
}

Rational MultiPoly::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPoly::add_term(const Exponent& e, const Rational& c) {
  if (static_cast<int>(e.size()) != nvars_) {
    throw Error(Errc::DimensionMismatch, "exponent arity " + std::to_string(e.size()) +
                                             " in a polynomial of arity " + std::to_string(nvars_));
  }
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational MultiPoly::eval(const std::vector<Rational>& point) const {
  if (static_cast<int>(point.size()) != nvars_) {
    throw Error(Errc::DimensionMismatch, "evaluation point of length " +
                                             std::to_string(point.size()) + " for arity " +
                                             std::to_string(nvars_));
  }
  // Powers are shared across terms.
  std::vector<std::vector<Rational>> powers(nvars_, std::vector<Rational>{Rational(1)});
  Rational total = 0;
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (int i = 0; i < nvars_; ++i) {
      auto& pw = powers[i];
      while (static_cast<int>(pw.size()) <= e[i]) pw.push_back(pw.back() * point[i]);
      if (e[i]) term *= pw[e[i]];
    }
    total += term;
  }
  return total;
}

MultiPoly MultiPoly::derivative(int var) const {
  MultiPoly out(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponent f = e;
    f[var] -= 1;
    out.add_term(f, c * e[var]);
  }
  return out;
}

void MultiPoly::check_arity(const MultiPoly& o) const {
  if (o.nvars_ != nvars_) {
    throw Error(Errc::DimensionMismatch, "polynomials of arity " + std::to_string(nvars_) +
                                             " and " + std::to_string(o.nvars_));
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  check_arity(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  check_arity(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
  *this = *this * o;
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.check_arity(b);
  MultiPoly out(a.nvars_);
  Exponent e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (int i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

MultiPoly pow(const MultiPoly& p, int k) {
  if (k < 0) throw Error(Errc::IllegalParams, "negative power");
  MultiPoly result = MultiPoly::constant(p.nvars(), Rational(1));
  MultiPoly base = p;
  while (k) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k) base *= base;
  }
  return result;
}

MultiPoly substitute(const MultiPoly& p, const std::vector<MultiPoly>& images, int new_nvars) {
  if (static_cast<int>(images.size()) != p.nvars()) {
    throw Error(Errc::DimensionMismatch, "substitution needs one image per variable");
  }
  for (const auto& img : images) {
    if (img.nvars() != new_nvars) throw Error(Errc::DimensionMismatch, "image arity");
  }
  std::vector<std::vector<MultiPoly>> powers(
      images.size(), std::vector<MultiPoly>{MultiPoly::constant(new_nvars, Rational(1))});
  MultiPoly out(new_nvars);
  for (const auto& [e, c] : p.terms()) {
    MultiPoly term = MultiPoly::constant(new_nvars, c);
    for (std::size_t i = 0; i < images.size(); ++i) {
      auto& pw = powers[i];
      while (static_cast<int>(pw.size()) <= e[i]) pw.push_back(pw.back() * images[i]);
      if (e[i]) term *= pw[e[i]];
    }
    out += term;
  }
  return out;
}

MultiPoly embed(const MultiPoly& p, int new_nvars, const std::vector<int>& positions) {
  if (static_cast<int>(positions.size()) != p.nvars()) {
    throw Error(Errc::DimensionMismatch, "embedding needs one position per variable");
  }
  MultiPoly out(new_nvars);
  for (const auto& [e, c] : p.terms()) {
    Exponent f(new_nvars, 0);
    for (int i = 0; i < p.nvars(); ++i) f.at(positions[i]) += e[i];
    out.add_term(f, c);
  }
  return out;
}

std::string to_string(const MultiPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool any_var = false;
    std::ostringstream vars;
    for (int i = 0; i < p.nvars(); ++i) {
      if (!e[i]) continue;
      if (any_var) vars << '*';
      vars << 'X' << (i + 1);
      if (e[i] > 1) vars << '^' << e[i];
      any_var = true;
    }
    if (!any_var) {
      os << mag.get_str();
    } else {
      if (mag != 1) os << mag.get_str() << '*';
      os << vars.str();
    }
  }
  return os.str();
}

LinearForm LinearForm::difference(int nvars, int i, int j) {
  std::vector<Rational> c(nvars);
  c.at(i) += 1;
  c.at(j) -= 1;
  return LinearForm(std::move(c));
}

bool LinearForm::is_zero() const {
  for (const auto& x : coeffs) {
    if (x != 0) return false;
  }
  return true;
}

MultiPoly LinearForm::to_poly() const {
  MultiPoly p(nvars());
  for (int i = 0; i < nvars(); ++i) {
    Exponent e(nvars(), 0);
    e[i] = 1;
    p.add_term(e, coeffs[i]);
  }
  return p;
}

int LinearForm::elimination_index() const {
  for (int i = nvars() - 1; i >= 0; --i) {
    if (coeffs[i] != 0) return i;
  }
  throw Error(Errc::ZeroForm, "linear form is identically zero");
}

LinearForm LinearForm::normalized() const {
  const Rational lead = coeffs[elimination_index()];
  LinearForm out = *this;
  for (auto& x : out.coeffs) x /= lead;
  return out;
}

std::string to_string(const LinearForm& l) { return to_string(l.to_poly()); }

MultiPoly linear_form_product(const std::vector<LinearForm>& forms, int nvars) {
  MultiPoly out = MultiPoly::constant(nvars, Rational(1));
  for (const auto& l : forms) {
    if (l.nvars() != nvars) throw Error(Errc::DimensionMismatch, "linear form arity");
    out *= l.to_poly();
  }
  return out;
}

MultiPoly restrict_to_hyperplane(const MultiPoly& p, const LinearForm& l) {
  if (l.nvars() != p.nvars()) throw Error(Errc::DimensionMismatch, "linear form arity");
  const int j = l.elimination_index();
  const int n = p.nvars();
  std::vector<MultiPoly> images;
  images.reserve(n);
  for (int i = 0, k = 0; i < n; ++i) {
    if (i == j) {
      images.emplace_back(n - 1);
      continue;
    }
    images.push_back(MultiPoly::variable(n - 1, k++));
  }
  // X_j = -(1/c_j) sum_{i != j} c_i X_i
  MultiPoly solved(n - 1);
  for (int i = 0, k = 0; i < n; ++i) {
    if (i == j) continue;
    Exponent e(n - 1, 0);
    e[k++] = 1;
    solved.add_term(e, -l.coeffs[i] / l.coeffs[j]);
  }
  images[j] = solved;
  return substitute(p, images, n - 1);
}

bool divides_linear_form(const MultiPoly& p, const LinearForm& l) {
  return restrict_to_hyperplane(p, l).is_zero();
}

std::optional<MultiPoly> exact_divide(const MultiPoly& p, const LinearForm& l) {
  if (l.nvars() != p.nvars()) throw Error(Errc::DimensionMismatch, "linear form arity");
  const int j = l.elimination_index();
  const Rational cj = l.coeffs[j];
  const MultiPoly lp = l.to_poly();
  MultiPoly rem = p;
  MultiPoly quot(p.nvars());
  // Long division in X_j; each pass removes the top X_j-degree slice.
  while (true) {
    int top = 0;
    for (const auto& [e, c] : rem.terms()) top = std::max(top, e[j]);
    if (top == 0) break;
    MultiPoly step(p.nvars());
    for (const auto& [e, c] : rem.terms()) {
      if (e[j] != top) continue;
      Exponent f = e;
      f[j] -= 1;
      step.add_term(f, c / cj);
    }
    quot += step;
    rem -= step * lp;
  }
  if (!rem.is_zero()) return std::nullopt;
  return quot;
}

int linear_factor_multiplicity(const MultiPoly& p, const LinearForm& l) {
  if (p.is_zero()) throw Error(Errc::IllegalParams, "multiplicity in the zero polynomial");
  int m = 0;
  MultiPoly cur = p;
  while (auto q = exact_divide(cur, l)) {
    cur = std::move(*q);
    ++m;
  }
  return m;
}

MultiPoly vandermonde(int nvars, const std::vector<int>& indices) {
  std::vector<LinearForm> forms;
  for (std::size_t a = 0; a < indices.size(); ++a) {
    for (std::size_t b = a + 1; b < indices.size(); ++b) {
      forms.push_back(LinearForm::difference(nvars, indices[a], indices[b]));
    }
  }
  return linear_form_product(forms, nvars);
}

MultiPoly vandermonde(int nvars) {
  std::vector<int> idx(nvars);
  std::iota(idx.begin(), idx.end(), 0);
  return vandermonde(nvars, idx);
}

MultiPoly apply_operator(const MultiPoly& op, const MultiPoly& p) {
  if (op.nvars() != p.nvars()) throw Error(Errc::DimensionMismatch, "operator arity");
  const int n = p.nvars();
  MultiPoly out(n);
  for (const auto& [eo, co] : op.terms()) {
    for (const auto& [ep, cp] : p.terms()) {
      Rational c = co * cp;
      Exponent f(n);
      bool dead = false;
      for (int i = 0; i < n && !dead; ++i) {
        if (eo[i] > ep[i]) {
          dead = true;
          break;
        }
        f[i] = ep[i] - eo[i];
        // falling factorial ep!/(ep-eo)!
        for (int k = 0; k < eo[i]; ++k) c *= (ep[i] - k);
      }
      if (!dead) out.add_term(f, c);
    }
  }
  return out;
}

namespace {
MultiPoly power_sum(int nvars, int k) {
  MultiPoly p(nvars);
  for (int i = 0; i < nvars; ++i) {
    Exponent e(nvars, 0);
    e[i] = k;
    p.add_term(e, Rational(1));
  }
  return p;
}
}  // namespace

std::vector<MultiPoly> invariant_operator_generators(RootType type, int rank) {
  std::vector<MultiPoly> gens;
  switch (type) {
    case RootType::A:
      for (int k = 1; k <= rank; ++k) gens.push_back(power_sum(rank, k));
      break;
    case RootType::B:
    case RootType::C:
      for (int k = 1; k <= rank; ++k) gens.push_back(power_sum(rank, 2 * k));
      break;
    case RootType::D:
      for (int k = 1; k <= rank - 1; ++k) gens.push_back(power_sum(rank, 2 * k));
      gens.push_back(MultiPoly::monomial(Exponent(rank, 1), Rational(1)));
      break;
  }
  return gens;
}

bool is_harmonic(const MultiPoly& p, const RootDatum& datum) {
  if (p.nvars() != datum.rank()) throw Error(Errc::DimensionMismatch, "arity differs from rank");
  for (const auto& op : invariant_operator_generators(datum.type(), datum.rank())) {
    if (!apply_operator(op, p).is_zero()) return false;
  }
  return true;
}

}  // namespace dix
