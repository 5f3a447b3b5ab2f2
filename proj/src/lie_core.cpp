#include "dix/lie_core.hpp"

#include <algorithm>
#include <deque>
#include <regex>
#include <set>

namespace dix {

RootType GroupId::root_type() const {
  switch (family) {
    case Family::SU: return RootType::A;
    case Family::SOeEvenOdd: return RootType::B;
    case Family::Sp2nR:
    case Family::SpPQ: return RootType::C;
    case Family::SOeEvenEven:
    case Family::SOStar: return RootType::D;
  }
  return RootType::A;
}

std::string GroupId::name() const {
  const auto s = [](int v) { return std::to_string(v); };
  switch (family) {
    case Family::SU: return "SU(" + s(p) + "," + s(q) + ")";
    case Family::SOeEvenOdd: return "SOe(" + s(2 * p) + "," + s(2 * q + 1) + ")";
    case Family::Sp2nR: return "Sp(" + s(2 * p) + ",R)";
    case Family::SpPQ: return "Sp(" + s(p) + "," + s(q) + ")";
    case Family::SOeEvenEven: return "SOe(" + s(2 * p) + "," + s(2 * q) + ")";
    case Family::SOStar: return "SO*(" + s(2 * p) + ")";
  }
  return "?";
}

GroupId parse_group(const std::string& text) {
  std::string t;
  for (char ch : text) {
    if (ch != ' ') t.push_back(ch);
  }
  if (t == "SL2" || t == "SL(2,R)") return GroupId::su(1, 1);
  std::smatch m;
  static const std::regex two(R"(^(SU|SOe|Sp)\((\d+),(\d+)\)$)");
  static const std::regex real(R"(^Sp\((\d+),R\)$)");
  static const std::regex star(R"(^SO\*\((\d+)\)$)");
  GroupId g;
  if (std::regex_match(t, m, real)) {
    const int twice_n = std::stoi(m[1]);
    if (twice_n % 2 != 0) throw Error(Errc::ParseError, "Sp(2n,R) needs an even argument: " + text);
    g = GroupId::sp_real(twice_n / 2);
  } else if (std::regex_match(t, m, star)) {
    const int twice_n = std::stoi(m[1]);
    if (twice_n % 2 != 0) throw Error(Errc::ParseError, "SO*(2n) needs an even argument: " + text);
    g = GroupId::so_star(twice_n / 2);
  } else if (std::regex_match(t, m, two)) {
    const int a = std::stoi(m[2]);
    const int b = std::stoi(m[3]);
    if (m[1] == "SU") {
      g = GroupId::su(a, b);
    } else if (m[1] == "Sp") {
      g = GroupId::sp_pq(a, b);
    } else {
      if (a % 2 != 0) throw Error(Errc::ParseError, "SOe(2p,.) needs an even first argument: " + text);
      g = (b % 2 == 1) ? GroupId::so_even_odd(a / 2, (b - 1) / 2) : GroupId::so_even_even(a / 2, b / 2);
    }
  } else {
    throw Error(Errc::ParseError, "unrecognized group: " + text);
  }
  validate(g);
  return g;
}

void validate(const GroupId& g) {
  bool ok = true;
  switch (g.family) {
    case Family::SU:
    case Family::SpPQ:
    case Family::SOeEvenEven: ok = g.p >= 1 && g.q >= 1; break;
    case Family::SOeEvenOdd: ok = g.p >= 1 && g.q >= 0; break;
    case Family::Sp2nR:
    case Family::SOStar: ok = g.p >= 1; break;
  }
  if (!ok) {
    throw Error(Errc::IllegalParams, "parameters out of range for " + g.name());
  }
}

// ---------------------------------------------------------------------------
// WeylElement

WeylElement::WeylElement(std::vector<int> perm, std::vector<int> sign)
    : perm_(std::move(perm)), sign_(std::move(sign)) {
  if (perm_.size() != sign_.size()) {
    throw Error(Errc::DimensionMismatch, "permutation and sign vector differ in length");
  }
}

WeylElement WeylElement::identity(int n) {
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  return WeylElement(std::move(perm), std::vector<int>(n, 1));
}

WeylElement WeylElement::reflection(const Weight& alpha) {
  const int n = static_cast<int>(alpha.size());
  std::vector<int> perm(n, -1);
  std::vector<int> sign(n, 1);
  for (int i = 0; i < n; ++i) {
    Weight e(n);
    e[i] = 1;
    const Weight image = reflect(e, alpha);
    for (int j = 0; j < n; ++j) {
      if (image[j] == 0) continue;
      if (perm[i] != -1 || (image[j] != 1 && image[j] != -1)) {
        throw Error(Errc::IllegalParams, "reflection is not a signed permutation: " + to_string(alpha));
      }
      perm[i] = j;
      sign[i] = image[j] > 0 ? 1 : -1;
    }
  }
  return WeylElement(std::move(perm), std::move(sign));
}

WeylElement WeylElement::decode(const std::vector<int>& code) {
  const int n = static_cast<int>(code.size());
  std::vector<int> perm(n);
  std::vector<int> sign(n);
  std::vector<bool> seen(n, false);
  for (int i = 0; i < n; ++i) {
    const int v = code[i] < 0 ? -code[i] : code[i];
    if (v < 1 || v > n || seen[v - 1]) throw Error(Errc::ParseError, "bad signed permutation encoding");
    seen[v - 1] = true;
    perm[i] = v - 1;
    sign[i] = code[i] < 0 ? -1 : 1;
  }
  return WeylElement(std::move(perm), std::move(sign));
}

Weight WeylElement::apply(const Weight& v) const {
  if (static_cast<int>(v.size()) != size()) {
    throw Error(Errc::DimensionMismatch, "Weyl element and weight differ in rank");
  }
  Weight out(v.size());
  for (int i = 0; i < size(); ++i) {
    out[perm_[i]] = sign_[i] > 0 ? v[i] : Rational(-v[i]);
  }
  return out;
}

WeylElement WeylElement::inverse() const {
  std::vector<int> perm(size());
  std::vector<int> sign(size());
  for (int i = 0; i < size(); ++i) {
    perm[perm_[i]] = i;
    sign[perm_[i]] = sign_[i];
  }
  return WeylElement(std::move(perm), std::move(sign));
}

WeylElement operator*(const WeylElement& a, const WeylElement& b) {
  if (a.size() != b.size()) throw Error(Errc::DimensionMismatch, "composing Weyl elements of different rank");
  std::vector<int> perm(a.size());
  std::vector<int> sign(a.size());
  for (int i = 0; i < a.size(); ++i) {
    perm[i] = a.perm_[b.perm_[i]];
    sign[i] = b.sign_[i] * a.sign_[b.perm_[i]];
  }
  return WeylElement(std::move(perm), std::move(sign));
}

int WeylElement::sgn() const {
  int s = 1;
  std::vector<bool> visited(size(), false);
  for (int i = 0; i < size(); ++i) {
    if (sign_[i] < 0) s = -s;
    if (visited[i]) continue;
    int len = 0;
    for (int j = i; !visited[j]; j = perm_[j]) {
      visited[j] = true;
      ++len;
    }
    if (len % 2 == 0) s = -s;
  }
  return s;
}

bool WeylElement::is_identity() const {
  for (int i = 0; i < size(); ++i) {
    if (perm_[i] != i || sign_[i] != 1) return false;
  }
  return true;
}

std::vector<int> WeylElement::encode() const {
  std::vector<int> code(size());
  for (int i = 0; i < size(); ++i) code[i] = sign_[i] * (perm_[i] + 1);
  return code;
}

// ---------------------------------------------------------------------------
// RootDatum

RootDatum::RootDatum(GroupId group, std::vector<Root> positive_roots)
    : group_(group), rank_(group.rank()), roots_(std::move(positive_roots)),
      rho_g_(group.rank()), rho_k_(group.rank()) {
  for (const auto& r : roots_) {
    rho_g_ += r.vec;
    if (r.compact) rho_k_ += r.vec;
  }
  rho_g_ *= Rational(1, 2);
  rho_k_ *= Rational(1, 2);
}

std::vector<Weight> RootDatum::compact_positive_roots() const {
  std::vector<Weight> out;
  for (const auto& r : roots_) {
    if (r.compact) out.push_back(r.vec);
  }
  return out;
}

std::vector<Weight> RootDatum::noncompact_positive_roots() const {
  std::vector<Weight> out;
  for (const auto& r : roots_) {
    if (!r.compact) out.push_back(r.vec);
  }
  return out;
}

std::size_t RootDatum::num_compact_positive() const {
  return static_cast<std::size_t>(
      std::count_if(roots_.begin(), roots_.end(), [](const Root& r) { return r.compact; }));
}

bool RootDatum::in_lattice(const Weight& v) const {
  if (static_cast<int>(v.size()) != rank_) {
    throw Error(Errc::DimensionMismatch, "weight of length " + std::to_string(v.size()) + " for rank " +
                                             std::to_string(rank_));
  }
  if (type() == RootType::A) {
    for (std::size_t i = 1; i < v.size(); ++i) {
      if (!is_integral(Rational(v[i] - v[0]))) return false;
    }
    return true;
  }
  return std::all_of(v.c.begin(), v.c.end(), [](const Rational& x) { return is_integral(x); });
}

Weight RootDatum::normalize(const Weight& v) const {
  if (type() != RootType::A || v.size() == 0) return v;
  Rational mean = 0;
  for (const auto& x : v.c) mean += x;
  mean /= static_cast<long>(v.size());
  Weight out = v;
  for (auto& x : out.c) x -= mean;
  return out;
}

bool RootDatum::is_regular(const Weight& v) const {
  return std::all_of(roots_.begin(), roots_.end(), [&](const Root& r) { return inner(v, r.vec) != 0; });
}

bool RootDatum::is_compact_regular(const Weight& v) const {
  return std::all_of(roots_.begin(), roots_.end(),
                     [&](const Root& r) { return !r.compact || inner(v, r.vec) != 0; });
}

bool RootDatum::is_compact_dominant_regular(const Weight& v) const {
  return std::all_of(roots_.begin(), roots_.end(),
                     [&](const Root& r) { return !r.compact || inner(v, r.vec) > 0; });
}

namespace {

Weight unit(int n, int i, int coeff = 1) {
  Weight w(n);
  w[i] = coeff;
  return w;
}

Weight pair_root(int n, int i, int j, int sign_j) {
  Weight w(n);
  w[i] = 1;
  w[j] = sign_j;
  return w;
}

// Block index of coordinate i for two-block families.
int block(const GroupId& g, int i) { return i < g.p ? 0 : 1; }

}  // namespace

RootDatum build_root_datum(const GroupId& group, const Limits& limits) {
  validate(group);
  const int n = group.rank();
  if (n > limits.max_rank) {
    throw Error(Errc::RankCapExceeded, group.name() + " has rank " + std::to_string(n) + " > cap " +
                                           std::to_string(limits.max_rank));
  }
  const RootType type = group.root_type();
  const bool single = group.single_parameter();
  std::vector<Root> roots;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const bool same_block = single || block(group, i) == block(group, j);
      roots.push_back({pair_root(n, i, j, -1), same_block});
      if (type != RootType::A) {
        // e_i + e_j is compact inside a B/C/D block, never for the A_{n-1}
        // subsystems of Sp(2n,R) and SO*(2n).
        roots.push_back({pair_root(n, i, j, +1), same_block && !single});
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    switch (group.family) {
      case Family::SOeEvenOdd: roots.push_back({unit(n, i), block(group, i) == 1}); break;
      case Family::SpPQ: roots.push_back({unit(n, i, 2), true}); break;
      case Family::Sp2nR: roots.push_back({unit(n, i, 2), false}); break;
      default: break;
    }
  }
  return RootDatum(group, std::move(roots));
}

namespace {

std::size_t factorial(int n) {
  std::size_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::size_t>(i);
  return f;
}

std::size_t order_of(RootType type, int n) {
  if (n <= 0) return 1;
  switch (type) {
    case RootType::A: return factorial(n);
    case RootType::B:
    case RootType::C: return (std::size_t{1} << n) * factorial(n);
    case RootType::D: return (std::size_t{1} << (n - 1)) * factorial(n);
  }
  return 1;
}

}  // namespace

std::size_t weyl_order(const RootDatum& datum, WhichGroup which) {
  const GroupId& g = datum.group();
  if (which == WhichGroup::G) return order_of(g.root_type(), g.rank());
  switch (g.family) {
    case Family::SU: return factorial(g.p) * factorial(g.q);
    case Family::SOeEvenOdd: return order_of(RootType::D, g.p) * order_of(RootType::B, g.q);
    case Family::Sp2nR:
    case Family::SOStar: return factorial(g.p);
    case Family::SpPQ: return order_of(RootType::C, g.p) * order_of(RootType::C, g.q);
    case Family::SOeEvenEven: return order_of(RootType::D, g.p) * order_of(RootType::D, g.q);
  }
  return 1;
}

std::vector<WeylElement> weyl_elements(const RootDatum& datum, WhichGroup which, const Limits& limits) {
  const std::size_t expected = weyl_order(datum, which);
  if (expected > limits.max_weyl) {
    throw Error(Errc::EnumerationCapExceeded, "|W| = " + std::to_string(expected) + " exceeds cap " +
                                                  std::to_string(limits.max_weyl));
  }
  std::vector<WeylElement> generators;
  for (const auto& r : datum.positive_roots()) {
    if (which == WhichGroup::G || r.compact) generators.push_back(WeylElement::reflection(r.vec));
  }
  std::set<WeylElement> seen{WeylElement::identity(datum.rank())};
  std::deque<WeylElement> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    const WeylElement w = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& s : generators) {
      WeylElement next = s * w;
      if (seen.insert(next).second) {
        if (seen.size() > limits.max_weyl) {
          throw Error(Errc::EnumerationCapExceeded, "Weyl group enumeration exceeded cap");
        }
        frontier.push_back(std::move(next));
      }
    }
  }
  return {seen.begin(), seen.end()};
}

DominantConjugate dominant_conjugate(const Weight& v, const std::vector<Weight>& positive_roots) {
  DominantConjugate out{v, 1, false};
  bool moved = true;
  while (moved) {
    moved = false;
    for (const auto& alpha : positive_roots) {
      if (inner(out.weight, alpha) < 0) {
        out.weight = reflect(out.weight, alpha);
        out.sign = -out.sign;
        moved = true;
      }
    }
  }
  for (const auto& alpha : positive_roots) {
    if (inner(out.weight, alpha) == 0) out.singular = true;
  }
  return out;
}

}  // namespace dix
