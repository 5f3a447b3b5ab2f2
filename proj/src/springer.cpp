#include "dix/springer.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace dix::springer {

Partition make_partition(std::vector<int> parts) {
  std::erase(parts, 0);
  for (int x : parts) {
    if (x < 0) throw Error(Errc::InvalidPartition, "negative part");
  }
  std::sort(parts.rbegin(), parts.rend());
  return parts;
}

int size(const Partition& p) {
  int s = 0;
  for (int x : p) s += x;
  return s;
}

Partition dual(const Partition& p) {
  Partition d;
  if (p.empty()) return d;
  for (int k = 1; k <= p.front(); ++k) {
    int c = 0;
    for (int x : p) c += x >= k ? 1 : 0;
    d.push_back(c);
  }
  return d;
}

std::string to_string(const Partition& p) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < p.size();) {
    std::size_t j = i;
    while (j < p.size() && p[j] == p[i]) ++j;
    if (i) os << ',';
    os << p[i];
    if (j - i > 1) os << '^' << (j - i);
    i = j;
  }
  os << ']';
  return os.str();
}

std::string to_list_string(const Partition& p) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i];
  os << ']';
  return os.str();
}

std::string to_string(const Bipartition& bp) {
  auto part = [](const Partition& p) { return p.empty() ? std::string("[]") : to_string(p); };
  return "(" + part(bp.alpha) + "," + part(bp.beta) + ")";
}

namespace {

std::string row_string(const std::vector<int>& r) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << r[i];
  os << ')';
  return os.str();
}

char type_char(RootType t) {
  switch (t) {
    case RootType::A: return 'A';
    case RootType::B: return 'B';
    case RootType::C: return 'C';
    case RootType::D: return 'D';
  }
  return '?';
}

// Drops leading (0, a+1) shifts until some row does not start at 0.
Symbol reduce(Symbol s) {
  while (!s.top.empty() && !s.bottom.empty() && s.top.front() == 0 && s.bottom.front() == 0) {
    s.top.erase(s.top.begin());
    s.bottom.erase(s.bottom.begin());
    for (auto& x : s.top) --x;
    for (auto& x : s.bottom) --x;
  }
  return s;
}

// Increasing, zero-padded to `len`, plus (0,1,2,...).
std::vector<int> staircase(const Partition& p, int len) {
  std::vector<int> row(len, 0);
  for (std::size_t i = 0; i < p.size(); ++i) row[len - 1 - i] = p[i];
  for (int i = 0; i < len; ++i) row[i] += i;
  return row;
}

Partition unstaircase(const std::vector<int>& row) {
  std::vector<int> parts;
  for (std::size_t i = 0; i < row.size(); ++i) {
    const int v = row[i] - static_cast<int>(i);
    if (v < 0) throw Error(Errc::InvalidPartition, "symbol row is not strictly increasing");
    parts.push_back(v);
  }
  return make_partition(parts);
}

Partition repeat(int part, int count) { return Partition(std::max(count, 0), part); }

Partition concat(Partition a, const Partition& b) {
  a.insert(a.end(), b.begin(), b.end());
  return make_partition(a);
}

}  // namespace

std::string to_string(const Symbol& s) {
  return std::string(1, type_char(s.type)) + ":" + row_string(s.top) + "/" + row_string(s.bottom);
}

bool equivalent(const Symbol& a, const Symbol& b) {
  const Symbol ra = reduce(a), rb = reduce(b);
  return ra.type == rb.type && ra.top == rb.top && ra.bottom == rb.bottom;
}

SigmaK sigma_k(const GroupId& g) {
  validate(g);
  SigmaK s;
  const int lo = std::min(g.p, g.q), hi = std::max(g.p, g.q);
  switch (g.family) {
    case Family::SU:
      s.type_a = concat(repeat(2, lo), repeat(1, hi - lo));
      break;
    case Family::SOeEvenOdd:
      s.bipartition = Bipartition{repeat(1, g.p), repeat(1, g.q)};
      break;
    case Family::Sp2nR:
    case Family::SOStar:
      s.bipartition = Bipartition{repeat(1, (g.p + 1) / 2), repeat(1, g.p / 2)};
      break;
    case Family::SpPQ:
      s.bipartition = Bipartition{{}, concat(repeat(2, lo), repeat(1, hi - lo))};
      break;
    case Family::SOeEvenEven:
      s.bipartition = Bipartition{concat(repeat(2, lo), repeat(1, hi - lo)), {}};
      break;
  }
  return s;
}

Symbol symbol_of_bipartition(const Bipartition& bp, RootType type) {
  if (type == RootType::A) throw Error(Errc::UnsupportedFamily, "symbols are defined for B, C, D");
  const int la = static_cast<int>(bp.alpha.size());
  const int lb = static_cast<int>(bp.beta.size());
  Symbol s;
  s.type = type;
  if (type == RootType::D) {
    const int m = std::max(la, lb);
    s.top = staircase(bp.alpha, m);
    s.bottom = staircase(bp.beta, m);
  } else {
    const int m = std::max(std::max(la - 1, 0), lb);
    s.top = staircase(bp.alpha, m + 1);
    s.bottom = staircase(bp.beta, m);
  }
  return s;
}

std::optional<Partition> partition_of_symbol(const Symbol& s) {
  std::vector<int> merged;
  const bool b = s.type == RootType::B;
  for (int x : s.top) merged.push_back(b ? 2 * x + 1 : 2 * x);
  for (int x : s.bottom) merged.push_back(b ? 2 * x : 2 * x + 1);
  std::sort(merged.begin(), merged.end());
  std::vector<int> parts;
  for (std::size_t i = 0; i < merged.size(); ++i) {
    if (i && merged[i] == merged[i - 1]) return std::nullopt;
    const int v = merged[i] - static_cast<int>(i);
    if (v < 0) return std::nullopt;
    parts.push_back(v);
  }
  return make_partition(parts);
}

Symbol symbol_of_partition(const Partition& p, RootType type) {
  if (type == RootType::A) throw Error(Errc::UnsupportedFamily, "symbols are defined for B, C, D");
  std::vector<int> inc(p.rbegin(), p.rend());
  // B and C use an odd number of entries, D an even one.
  const bool want_odd = type != RootType::D;
  if ((inc.size() % 2 == 1) != want_odd) inc.insert(inc.begin(), 0);
  for (std::size_t i = 0; i < inc.size(); ++i) inc[i] += static_cast<int>(i);
  Symbol s;
  s.type = type;
  for (int x : inc) {
    const bool odd = x % 2 == 1;
    const bool to_top = type == RootType::B ? odd : !odd;
    (to_top ? s.top : s.bottom).push_back(x / 2);
  }
  const std::size_t want_top = want_odd ? s.bottom.size() + 1 : s.bottom.size();
  if (s.top.size() != want_top) {
    throw Error(Errc::InvalidPartition,
                to_string(p) + " does not come from a symbol of type " + type_char(type));
  }
  return s;
}

Bipartition bipartition_of_symbol(const Symbol& s) {
  return Bipartition{unstaircase(s.top), unstaircase(s.bottom)};
}

bool valid_nilpotent(const Partition& p, RootType type, int n_total) {
  if (size(p) != n_total) return false;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    if (p[i] < p[i + 1] || p[i + 1] <= 0) return false;
  }
  if (!p.empty() && p.back() <= 0) return false;
  if (type == RootType::A) return true;
  std::map<int, int> mult;
  for (int x : p) ++mult[x];
  const int restricted_parity = type == RootType::C ? 1 : 0;
  for (const auto& [part, m] : mult) {
    if (part % 2 == restricted_parity && m % 2 != 0) return false;
  }
  return true;
}

bool very_even(const Partition& p) {
  if (p.empty()) return false;
  std::map<int, int> mult;
  for (int x : p) {
    if (x % 2 != 0) return false;
    ++mult[x];
  }
  return std::all_of(mult.begin(), mult.end(), [](const auto& kv) { return kv.second % 2 == 0; });
}

long orbit_dim(const Partition& p, RootType type, int n_total) {
  if (!valid_nilpotent(p, type, n_total)) {
    throw Error(Errc::InvalidPartition,
                to_string(p) + " is not a nilpotent orbit of size " + std::to_string(n_total));
  }
  const long n = n_total;
  long sq = 0;
  for (int s : dual(p)) sq += static_cast<long>(s) * s;
  long odd = 0;
  for (int x : p) odd += x % 2;
  switch (type) {
    case RootType::A: return n * n - sq;
    case RootType::B:
    case RootType::D: return (n * n - n) / 2 - (sq - odd) / 2;
    case RootType::C: return (n * n + n) / 2 - (sq + odd) / 2;
  }
  return 0;
}

Integer standard_tableaux(const Partition& p) {
  const int n = size(p);
  Integer num = 1;
  for (int k = 2; k <= n; ++k) num *= k;
  const Partition d = dual(p);
  Integer hooks = 1;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (int j = 0; j < p[i]; ++j) hooks *= (p[i] - j - 1) + (d[j] - static_cast<int>(i) - 1) + 1;
  }
  return num / hooks;
}

Integer bipartition_dim(const Bipartition& bp, int max_rank) {
  const int n = bp.rank();
  if (n > max_rank) {
    throw Error(Errc::CapExceeded,
                "bipartition of " + std::to_string(n) + " exceeds " + std::to_string(max_rank));
  }
  Integer binom;
  mpz_bin_uiui(binom.get_mpz_t(), n, size(bp.alpha));
  return binom * standard_tableaux(bp.alpha) * standard_tableaux(bp.beta);
}

Integer sigma_k_dim(const SigmaK& s, RootType type, int max_rank) {
  if (s.type_a) {
    if (size(*s.type_a) > max_rank) throw Error(Errc::CapExceeded, "partition too large");
    return standard_tableaux(*s.type_a);
  }
  if (!s.bipartition) throw Error(Errc::UnsupportedFamily, "empty sigma_K");
  Integer d = bipartition_dim(*s.bipartition, max_rank);
  if (type == RootType::D && s.bipartition->alpha == s.bipartition->beta) d /= 2;
  return d;
}

int natural_dimension(RootType type, int rank) {
  switch (type) {
    case RootType::A: return rank;
    case RootType::B: return 2 * rank + 1;
    case RootType::C:
    case RootType::D: return 2 * rank;
  }
  return 0;
}

std::string generator_text(const RootDatum& datum) {
  // Each compact root is +-e_i +- e_j or a multiple of e_i; factors are taken
  // up to sign and scalar.
  std::set<std::pair<int, int>> minus, plus;
  std::set<int> single;
  for (const auto& r : datum.compact_positive_roots()) {
    std::vector<int> nz;
    for (int i = 0; i < static_cast<int>(r.size()); ++i) {
      if (r.c[i] != 0) nz.push_back(i);
    }
    if (nz.size() == 1) {
      single.insert(nz[0]);
    } else if (nz.size() == 2) {
      const bool same = sgn(r.c[nz[0]]) == sgn(r.c[nz[1]]);
      (same ? plus : minus).insert({nz[0], nz[1]});
    }
  }
  auto x = [](int i) { return "X" + std::to_string(i + 1); };
  std::ostringstream os;
  for (const auto& pr : minus) {
    if (plus.erase(pr)) {
      os << '(' << x(pr.first) << "^2-" << x(pr.second) << "^2)";
    } else {
      os << '(' << x(pr.first) << '-' << x(pr.second) << ')';
    }
  }
  for (const auto& pr : plus) os << '(' << x(pr.first) << '+' << x(pr.second) << ')';
  for (int i : single) os << x(i);
  const std::string out = os.str();
  return out.empty() ? "1" : out;
}

SpringerRow springer_row(const GroupId& group, const Limits& limits) {
  const RootDatum datum = build_root_datum(group, limits);
  SpringerRow row;
  row.group = group;
  std::vector<LinearForm> forms;
  for (const auto& r : datum.compact_positive_roots()) forms.push_back(LinearForm::from_weight(r));
  row.generator = linear_form_product(forms, datum.rank());
  row.generator_text = generator_text(datum);
  row.sigma = sigma_k(group);
  row.num_compact_positive = static_cast<int>(datum.num_compact_positive());
  row.num_positive = static_cast<int>(datum.num_positive());
  row.generator_degree = row.generator.degree();

  const RootType type = datum.type();
  const int n_total = natural_dimension(type, datum.rank());
  std::optional<Partition> candidate;
  if (type == RootType::A) {
    candidate = row.sigma.type_a;
  } else {
    row.symbol = symbol_of_bipartition(*row.sigma.bipartition, type);
    candidate = partition_of_symbol(*row.symbol);
  }
  if (candidate && valid_nilpotent(*candidate, type, n_total)) {
    row.is_springer = true;
    row.partition = candidate;
    row.orbit_dim = orbit_dim(*candidate, type, n_total);
    row.two_orbits = type == RootType::D && very_even(*candidate);
  }
  return row;
}

std::vector<Family> all_families() {
  return {Family::SU, Family::SOeEvenOdd, Family::Sp2nR,
          Family::SpPQ, Family::SOeEvenEven, Family::SOStar};
}

std::string family_name(Family f) {
  switch (f) {
    case Family::SU: return "su";
    case Family::SOeEvenOdd: return "so-even-odd";
    case Family::Sp2nR: return "sp-real";
    case Family::SpPQ: return "sp-pq";
    case Family::SOeEvenEven: return "so-even-even";
    case Family::SOStar: return "so-star";
  }
  return "?";
}

Family parse_family(const std::string& name) {
  for (Family f : all_families()) {
    if (family_name(f) == name) return f;
  }
  throw Error(Errc::UnsupportedFamily, "unknown family '" + name + "'");
}

std::vector<GroupId> table_groups(int max, const std::vector<Family>& families) {
  std::vector<GroupId> out;
  for (Family f : all_families()) {
    if (std::find(families.begin(), families.end(), f) == families.end()) continue;
    switch (f) {
      case Family::SU:
      case Family::SpPQ:
      case Family::SOeEvenEven:
        for (int p = 1; p <= max; ++p) {
          for (int q = p; q <= max; ++q) out.push_back({f, p, q});
        }
        break;
      case Family::SOeEvenOdd:
        for (int p = 1; p <= max; ++p) {
          for (int q = 0; q <= max; ++q) out.push_back({f, p, q});
        }
        break;
      case Family::Sp2nR:
      case Family::SOStar:
        for (int n = 1; n <= max; ++n) out.push_back({f, n, 0});
        break;
    }
  }
  return out;
}

Limits table_limits(int max) { return Limits{std::max(2 * max, 8)}; }

std::vector<SpringerRow> springer_table(int max, const std::vector<Family>& families,
                                        kernels::Exec exec) {
  return springer_table(max, families, table_limits(max), exec);
}

std::vector<SpringerRow> springer_table(int max, const std::vector<Family>& families,
                                        const Limits& limits, kernels::Exec exec) {
  const auto groups = table_groups(max, families);
  return kernels::map_indices<SpringerRow>(
      groups.size(), [&](std::size_t i) { return springer_row(groups[i], limits); }, exec);
}

}  // namespace dix::springer
