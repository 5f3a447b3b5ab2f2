#pragma once

// Root data, Weyl groups and coordinate conventions for the classical
// equal-rank real forms.
//
// Coordinates are the usual epsilon-coordinates:
//   SU(p,q)        Q^{p+q}, roots e_i - e_j, compact iff both indices lie
//                  in the same block {0..p-1} / {p..p+q-1}.
//   SO_e(2p,2q+1)  B_{p+q}; compact = D_p on the first p coordinates plus
//                  B_q on the last q.
//   Sp(2n,R)       C_n; compact = {e_i - e_j}.
//   Sp(p,q)        C_{p+q}; compact = C_p x C_q.
//   SO_e(2p,2q)    D_{p+q}; compact = D_p x D_q.
//   SO*(2n)        D_n; compact = {e_i - e_j}.
// SU weights are not quotiented by the trace line; everything computed from
// them is invariant under adding a multiple of (1,...,1).

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "dix/weight.hpp"

namespace dix {

enum class Family { SU, SOeEvenOdd, Sp2nR, SpPQ, SOeEvenEven, SOStar };
enum class RootType { A, B, C, D };

struct Limits {
  int max_rank = 8;
  std::size_t max_weyl = 100000;
  std::size_t max_span_columns = 20000;
};

struct GroupId {
  Family family = Family::SU;
  // (p,q) for two-parameter families; single-parameter families keep n in p.
  int p = 1;
  int q = 1;

  static GroupId su(int p, int q) { return {Family::SU, p, q}; }
  static GroupId so_even_odd(int p, int q) { return {Family::SOeEvenOdd, p, q}; }
  static GroupId sp_real(int n) { return {Family::Sp2nR, n, 0}; }
  static GroupId sp_pq(int p, int q) { return {Family::SpPQ, p, q}; }
  static GroupId so_even_even(int p, int q) { return {Family::SOeEvenEven, p, q}; }
  static GroupId so_star(int n) { return {Family::SOStar, n, 0}; }

  bool single_parameter() const {
    return family == Family::Sp2nR || family == Family::SOStar;
  }
  // Number of ambient coordinates.
  int rank() const { return single_parameter() ? p : p + q; }
  RootType root_type() const;
  // E.g. "SU(2,1)", "SOe(4,5)", "Sp(4,R)", "Sp(1,2)", "SOe(2,4)", "SO*(6)".
  std::string name() const;

  friend auto operator<=>(const GroupId&, const GroupId&) = default;
};

// Inverse of GroupId::name(); also accepts "SL2" as SU(1,1).
GroupId parse_group(const std::string& text);

// Throws IllegalParams when out of the family's legal range.
void validate(const GroupId& g);

struct Root {
  Weight vec;
  bool compact = false;
};

// Signed permutation: e_i -> sign[i] * e_{perm[i]}.
class WeylElement {
 public:
  WeylElement() = default;
  WeylElement(std::vector<int> perm, std::vector<int> sign);

  static WeylElement identity(int n);
  // The reflection s_alpha; alpha must be a root of a classical system.
  static WeylElement reflection(const Weight& alpha);
  // Inverse of encode().
  static WeylElement decode(const std::vector<int>& code);

  int size() const { return static_cast<int>(perm_.size()); }
  const std::vector<int>& perm() const { return perm_; }
  const std::vector<int>& sign() const { return sign_; }

  Weight apply(const Weight& v) const;
  WeylElement inverse() const;
  // (a * b)(v) = a(b(v)).
  friend WeylElement operator*(const WeylElement& a, const WeylElement& b);
  // Determinant of the signed permutation matrix.
  int sgn() const;
  bool is_identity() const;

  // entry i = sign[i] * (perm[i] + 1)
  std::vector<int> encode() const;

  friend auto operator<=>(const WeylElement&, const WeylElement&) = default;

 private:
  std::vector<int> perm_;
  std::vector<int> sign_;
};

class RootDatum {
 public:
  RootDatum() = default;
  RootDatum(GroupId group, std::vector<Root> positive_roots);

  const GroupId& group() const { return group_; }
  int rank() const { return rank_; }
  RootType type() const { return group_.root_type(); }
  const std::vector<Root>& positive_roots() const { return roots_; }
  std::vector<Weight> compact_positive_roots() const;
  std::vector<Weight> noncompact_positive_roots() const;
  std::size_t num_positive() const { return roots_.size(); }
  std::size_t num_compact_positive() const;
  std::size_t num_noncompact_positive() const { return num_positive() - num_compact_positive(); }

  const Weight& rho_g() const { return rho_g_; }
  const Weight& rho_k() const { return rho_k_; }

  // Membership in the weight lattice: integral coordinate differences for
  // SU, integral coordinates otherwise.
  bool in_lattice(const Weight& v) const;
  // Representative of v modulo the trace line (type A only; identity
  // otherwise).
  Weight normalize(const Weight& v) const;

  bool is_regular(const Weight& v) const;          // for R_g
  bool is_compact_regular(const Weight& v) const;  // for R_k
  bool is_compact_dominant_regular(const Weight& v) const;

 private:
  GroupId group_;
  int rank_ = 0;
  std::vector<Root> roots_;
  Weight rho_g_;
  Weight rho_k_;
};

RootDatum build_root_datum(const GroupId& group, const Limits& limits = {});

enum class WhichGroup { G, K };

// Known order of W_g or W_k, from the block structure.
std::size_t weyl_order(const RootDatum& datum, WhichGroup which);

// Complete, sorted, duplicate-free enumeration by closure under the
// reflections of the (compact) positive roots.
std::vector<WeylElement> weyl_elements(const RootDatum& datum, WhichGroup which,
                                       const Limits& limits = {});

// x * v dominant for the given positive system, reached by repeated
// reflection in roots with negative pairing; sign = sgn(x). `singular` is set
// when some root of the system is orthogonal to v (weight is then the
// dominant, non-regular conjugate).
struct DominantConjugate {
  Weight weight;
  int sign = 1;
  bool singular = false;
};
DominantConjugate dominant_conjugate(const Weight& v, const std::vector<Weight>& positive_roots);

}  // namespace dix
