#include "dix/rational.hpp"
#include "dix/weight.hpp"

#include <sstream>

namespace dix {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::IllegalParams: return "IllegalParams";
    case Errc::RankCapExceeded: return "RankCapExceeded";
    case Errc::EnumerationCapExceeded: return "EnumerationCapExceeded";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::ZeroForm: return "ZeroForm";
    case Errc::CapExceeded: return "CapExceeded";
    case Errc::NotDominantIntegral: return "NotDominantIntegral";
    case Errc::SingularDirection: return "SingularDirection";
    case Errc::SingularParameter: return "SingularParameter";
    case Errc::OffLattice: return "OffLattice";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::NotInC: return "NotInC";
    case Errc::InvalidPartition: return "InvalidPartition";
    case Errc::UnsupportedFamily: return "UnsupportedFamily";
    case Errc::UnknownSuite: return "UnknownSuite";
    case Errc::UnsupportedFormat: return "UnsupportedFormat";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

std::string to_string(const Rational& r) { return r.get_str(); }

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto valid = !s.empty();
  for (std::size_t i = 0; i < s.size() && valid; ++i) {
    char ch = s[i];
    valid = (ch >= '0' && ch <= '9') || ch == '/' || (i == 0 && (ch == '-' || ch == '+'));
  }
  if (!valid || s.find('/') != s.rfind('/') || s.back() == '/') {
    throw Error(Errc::ParseError, "not a rational: '" + s + "'");
  }
  if (s.front() == '+') s.erase(0, 1);
  Rational r;
  if (r.set_str(s, 10) != 0 || r.get_den() == 0) {
    throw Error(Errc::ParseError, "not a rational: '" + s + "'");
  }
  r.canonicalize();
  return r;
}

bool Weight::is_zero() const {
  for (const auto& x : c) {
    if (x != 0) return false;
  }
  return true;
}

namespace {
void check_same(const Weight& a, const Weight& b) {
  if (a.size() != b.size()) {
    throw Error(Errc::DimensionMismatch,
                "weights of length " + std::to_string(a.size()) + " and " +
                    std::to_string(b.size()));
  }
}
}  // namespace

Weight& Weight::operator+=(const Weight& o) {
  check_same(*this, o);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.c[i];
  return *this;
}

Weight& Weight::operator-=(const Weight& o) {
  check_same(*this, o);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] -= o.c[i];
  return *this;
}

Weight& Weight::operator*=(const Rational& s) {
  for (auto& x : c) x *= s;
  return *this;
}

bool operator<(const Weight& a, const Weight& b) {
  const auto n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    const int cmp_ab = cmp(a.c[i], b.c[i]);
    if (cmp_ab != 0) return cmp_ab < 0;
  }
  return a.size() < b.size();
}

Rational inner(const Weight& a, const Weight& b) {
  check_same(a, b);
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a.c[i] * b.c[i];
  return s;
}

Rational pairing(const Weight& lambda, const Weight& alpha) {
  const Rational norm = inner(alpha, alpha);
  if (norm == 0) throw Error(Errc::ZeroForm, "pairing with the zero vector");
  return Rational(2 * inner(lambda, alpha) / norm);
}

Weight reflect(const Weight& v, const Weight& alpha) {
  return v - pairing(v, alpha) * alpha;
}

std::string to_string(const Weight& w) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) os << ',';
    os << w.c[i].get_str();
  }
  os << ')';
  return os.str();
}

}  // namespace dix
