#pragma once

// Worked examples with known answers: SL(2,R) coherent families, the
// discrete series of SU(n,1), and the associated-variety data used for the
// multiplicity conjecture.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "dix/dirac.hpp"
#include "dix/springer.hpp"

namespace dix::fixtures {

// SL(2,R) = SU(1,1); the integer n is the weight (n/2, -n/2).
RootDatum sl2_datum();
Weight sl2_weight(long n);
// Integer label of an SL(2,R) weight.
long sl2_label(const Weight& w);

enum class SL2Module { F, DPlus, DMinus, P };
inline constexpr std::array<SL2Module, 4> kSL2Modules{SL2Module::F, SL2Module::DPlus,
                                                      SL2Module::DMinus, SL2Module::P};
std::string name(SL2Module m);

// Index family of the coherent family through the module at base n0 = 1.
IndexFamily sl2_family(SL2Module m);
int sl2_gk_dimension(SL2Module m);
// Expected constant index polynomial.
long sl2_expected_q(SL2Module m);

// Coherent continuation action of s in the basis (F, D+, D-, P):
// column j holds the coordinates of s . (module j).
using Matrix4 = std::array<std::array<long, 4>, 4>;
Matrix4 sl2_expected_s_action();

// Multiplicities of the two real forms O^1, O^2 in the associated variety of
// each module, and its index polynomial.
struct VarietyRow {
  std::string module;
  std::array<long, 2> multiplicities;
  long q;
};
std::vector<VarietyRow> sl2_variety_table();

// Index constants for the indecomposable module P of generalized
// infinitesimal character and its Verma constituents: each is -C_k for the
// one-dimensional K~-module of weight k.
struct OneDimIndex {
  std::string module;
  long sign;
  long weight;
};
std::vector<OneDimIndex> sl2_ps_index_constants();

struct FixtureFamily {
  std::string group;
  std::string label;
  IndexFamily family;
  std::optional<int> gk_dim;
};

// SL(2,R) families and the discrete series chambers of SU(n,1), n <= max_n.
std::vector<FixtureFamily> fixture_families(int max_n = 3);

// Displayed factorizations of the SU(n,1) determinant for (n, i) = (4, 2)
// and (5, 2), with the sign of the determinant as defined.
MultiPoly su_n1_displayed_factorization(int n, int i);

// Closed forms of the classification table: Springer flag, orbit partition
// and orbit dimension, by family and parameters. SU(p,q) with p > q reads as
// SU(q,p).
struct TableRow {
  bool springer = false;
  springer::Partition partition;
  long dim = 0;
};
TableRow springer_table_row(const GroupId& group);

}  // namespace dix::fixtures
