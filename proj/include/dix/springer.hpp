#pragma once

// Springer correspondence for the W_g-representation generated by the
// compact Weyl dimension polynomial: bipartitions, symbols, nilpotent orbit
// partitions and their dimensions.

#include <optional>
#include <string>
#include <vector>

#include "dix/kernels.hpp"
#include "dix/lie_core.hpp"
#include "dix/polyalg.hpp"

namespace dix::springer {

// Weakly decreasing positive parts.
using Partition = std::vector<int>;

// Sorts decreasingly and drops zeros.
Partition make_partition(std::vector<int> parts);
int size(const Partition& p);
Partition dual(const Partition& p);
// [a^k, b^l, ...] compact notation, e.g. "[3,2^2,1^2]"; "[]" when empty.
std::string to_string(const Partition& p);
// Plain comma list, e.g. "[3,2,2,1,1]".
std::string to_list_string(const Partition& p);

struct Bipartition {
  Partition alpha;
  Partition beta;
  int rank() const { return size(alpha) + size(beta); }
  friend bool operator==(const Bipartition&, const Bipartition&) = default;
};
std::string to_string(const Bipartition& bp);

struct Symbol {
  std::vector<int> top;
  std::vector<int> bottom;
  RootType type = RootType::B;
  friend bool operator==(const Symbol&, const Symbol&) = default;
};
std::string to_string(const Symbol& s);

// Equality up to the simultaneous shift (a) -> (0, a+1) on both rows.
bool equivalent(const Symbol& a, const Symbol& b);

// sigma_K for the family: a partition of p+q for SU(p,q), a bipartition
// otherwise.
struct SigmaK {
  std::optional<Partition> type_a;
  std::optional<Bipartition> bipartition;
};
SigmaK sigma_k(const GroupId& group);

Symbol symbol_of_bipartition(const Bipartition& bp, RootType type);
std::optional<Partition> partition_of_symbol(const Symbol& s);

// Inverse direction: the symbol whose partition is p (p a partition of 2n+1
// for B, 2n for C and D) and the bipartition it encodes.
Symbol symbol_of_partition(const Partition& p, RootType type);
Bipartition bipartition_of_symbol(const Symbol& s);

// Sum is N and the parity rule of the type holds (even parts with even
// multiplicity for B and D, odd parts for C).
bool valid_nilpotent(const Partition& p, RootType type, int n_total);
// Type D, every part even.
bool very_even(const Partition& p);

// Complex dimension of the orbit in sl_N, so_N or sp_N.
long orbit_dim(const Partition& p, RootType type, int n_total);

// Number of standard tableaux, by the hook length formula.
Integer standard_tableaux(const Partition& p);
// C(n, |alpha|) f^alpha f^beta: dimension of the W(B_n) irreducible.
Integer bipartition_dim(const Bipartition& bp, int max_rank = 12);
// Dimension of sigma_K as a W_g representation; the W(B_n) module restricts
// to two irreducibles of half dimension in type D when alpha = beta.
Integer sigma_k_dim(const SigmaK& s, RootType type, int max_rank = 12);

// Natural module size N: p+q (A), 2n+1 (B), 2n (C, D).
int natural_dimension(RootType type, int rank);

struct SpringerRow {
  GroupId group;
  MultiPoly generator;
  std::string generator_text;
  SigmaK sigma;
  std::optional<Symbol> symbol;
  bool is_springer = false;
  std::optional<Partition> partition;
  std::optional<long> orbit_dim;
  bool two_orbits = false;
  // Consistency checks of the assembled row.
  int generator_degree = 0;
  int num_compact_positive = 0;
  int num_positive = 0;
};

// Product of the compact positive roots as linear factors, e.g.
// "(X1^2-X2^2)(X3^2-X4^2)X3X4"; "1" when there are none.
std::string generator_text(const RootDatum& datum);

SpringerRow springer_row(const GroupId& group, const Limits& limits = Limits{10});

// Every family with all parameters in [1, max] (q in [0, max] for
// SO_e(2p,2q+1)); unordered-pair families (SU, Sp(p,q), SO_e(2p,2q)) with
// q >= p. Rows ordered by family, then parameters.
std::vector<GroupId> table_groups(int max, const std::vector<Family>& families);
// Default limits allow rank max(2 * max, 8).
Limits table_limits(int max);
std::vector<SpringerRow> springer_table(int max, const std::vector<Family>& families,
                                        kernels::Exec exec = kernels::Exec::Parallel);
std::vector<SpringerRow> springer_table(int max, const std::vector<Family>& families,
                                        const Limits& limits, kernels::Exec exec);

std::vector<Family> all_families();
Family parse_family(const std::string& name);
std::string family_name(Family f);

}  // namespace dix::springer
