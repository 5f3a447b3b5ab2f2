#include "dix/fixtures.hpp"

#include "dix/su_n1.hpp"

namespace dix::fixtures {

RootDatum sl2_datum() { return build_root_datum(GroupId::su(1, 1)); }

Weight sl2_weight(long n) { return Weight{make_rational(n, 2), make_rational(-n, 2)}; }

long sl2_label(const Weight& w) {
  const Rational d = w[0] - w[1];
  if (!is_integral(d)) throw Error(Errc::OffLattice, "not an SL(2,R) weight");
  return d.get_num().get_si();
}

std::string name(SL2Module m) {
  switch (m) {
    case SL2Module::F: return "F";
    case SL2Module::DPlus: return "D+";
    case SL2Module::DMinus: return "D-";
    case SL2Module::P: return "P";
  }
  return "?";
}

IndexFamily sl2_family(SL2Module m) {
  const WeylElement e = WeylElement::identity(2);
  const WeylElement s = WeylElement::reflection(Weight{1, -1});
  IndexFamily fam{sl2_weight(1), {}};
  switch (m) {
    case SL2Module::F:
      // I(F_n) = E_{-n} - E_n
      fam.add(e, -1);
      fam.add(s, 1);
      break;
    case SL2Module::DPlus:
      fam.add(e, 1);
      break;
    case SL2Module::DMinus:
      fam.add(s, -1);
      break;
    case SL2Module::P:
      break;
  }
  return fam;
}

int sl2_gk_dimension(SL2Module m) { return m == SL2Module::F ? 0 : 1; }

long sl2_expected_q(SL2Module m) {
  switch (m) {
    case SL2Module::DPlus: return 1;
    case SL2Module::DMinus: return -1;
    default: return 0;
  }
}

Matrix4 sl2_expected_s_action() {
  // rows/columns ordered F, D+, D-, P
  return {{{-1, 1, 1, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}};
}

std::vector<VarietyRow> sl2_variety_table() {
  return {{"finite-dimensional", {0, 0}, 0},
          {"holomorphic discrete series", {1, 0}, 1},
          {"antiholomorphic discrete series", {0, 1}, -1},
          {"principal series", {1, 1}, 0}};
}

std::vector<OneDimIndex> sl2_ps_index_constants() {
  return {{"P", -1, 1}, {"V0", -1, 1}, {"V-2", -1, -1}};
}

std::vector<FixtureFamily> fixture_families(int max_n) {
  std::vector<FixtureFamily> out;
  for (auto m : kSL2Modules) out.push_back({"SL2", name(m), sl2_family(m), sl2_gk_dimension(m)});
  for (int n = 2; n <= max_n; ++n) {
    for (int i = 0; i <= n; ++i) {
      out.push_back({GroupId::su(n, 1).name(), "D" + std::to_string(i), su_n1::chamber_family(n, i),
                     su_n1::gk_dimension(n, i)});
    }
  }
  return out;
}

}  // namespace dix::fixtures

namespace dix::fixtures {

namespace {
springer::Partition block(std::initializer_list<std::pair<int, int>> parts) {
  std::vector<int> out;
  for (auto [part, count] : parts) out.insert(out.end(), std::max(count, 0), part);
  return springer::make_partition(out);
}
}  // namespace

TableRow springer_table_row(const GroupId& g) {
  validate(g);
  const long p = g.p, q = g.q;
  switch (g.family) {
    case Family::SU: {
      const int lo = std::min(g.p, g.q), hi = std::max(g.p, g.q);
      return {true, block({{2, lo}, {1, hi - lo}}), 2 * p * q};
    }
    case Family::SOeEvenOdd:
      if (q == p) return {true, block({{3, 1}, {2, g.p * 2 - 2}, {1, 2}}), 2 * p * (2 * p + 1)};
      if (q == p - 1) return {true, block({{3, 1}, {2, g.p * 2 - 2}}), 2 * p * (2 * p - 1)};
      if (p == 1) return {true, block({{3, 1}, {1, 2 * g.q}}), 2 * (2 * q + 1)};
      if (q >= p + 1) {
        return {true, block({{3, 1}, {2, 2 * g.p - 2}, {1, 2 * (g.q - g.p) + 2}}), 2 * p * (2 * q + 1)};
      }
      return {false, {}, 0};
    case Family::Sp2nR:
      return {true, block({{2, g.p}}), p * (p + 1)};
    case Family::SpPQ:
      return {false, {}, 0};
    case Family::SOeEvenEven: {
      const int lo = std::min(g.p, g.q), hi = std::max(g.p, g.q);
      return {true, block({{3, 1}, {2, 2 * lo - 2}, {1, 2 * (hi - lo) + 1}}), 4 * p * q};
    }
    case Family::SOStar:
      if (g.p % 2 == 0) return {true, block({{2, g.p}}), p * (p - 1)};
      return {true, block({{2, g.p - 1}, {1, 2}}), p * (p - 1)};
  }
  return {};
}

}  // namespace dix::fixtures

namespace dix::fixtures {

MultiPoly su_n1_displayed_factorization(int n, int i) {
  auto l = [n](int k) { return MultiPoly::variable(n, k - 1); };
  if (n == 4 && i == 2) {
    return -((l(1) - l(2)) * (l(3) - l(4)) * (l(1) + l(2) - l(3) - l(4)));
  }
  if (n == 5 && i == 2) {
    const auto quad = l(1) * l(2) + l(1) * l(3) - l(1) * l(4) - l(1) * l(5) + l(2) * l(3) -
                      l(2) * l(4) - l(2) * l(5) - l(3) * l(4) - l(3) * l(5) + l(4) * l(4) +
                      l(4) * l(5) + l(5) * l(5);
    return -((l(1) - l(2)) * (l(1) - l(3)) * (l(2) - l(3)) * (l(4) - l(5)) * quad);
  }
  throw Error(Errc::IndexOutOfRange, "no displayed factorization for this (n, i)");
}

}  // namespace dix::fixtures
