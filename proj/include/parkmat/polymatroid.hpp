#ifndef PARKMAT_POLYMATROID_HPP
#define PARKMAT_POLYMATROID_HPP

#include <mutex>
#include <vector>

#include "parkmat/matroid.hpp"
#include "parkmat/tutte.hpp"

namespace parkmat {

using ExponentVec = std::vector<int>;

inline int degree_of(const ExponentVec& q) {
  int s = 0;
  for (int v : q) s += v;
  return s;
}

/// Dense table of a normalized monotone submodular function on 2^[d],
/// indexed by block-subset bitmask.
struct SubmodularTable {
  int d = 0;
  std::vector<int> f;  // size 2^d

  int operator()(Mask j) const { return f[j]; }
  int full_value() const { return f[full_mask(d)]; }

  // f(empty) = 0, monotone, submodular; violations are implementation bugs.
  void validate() const;
};

/// f_A(J) = rank of A(J) in the dual matroid, for every J.
SubmodularTable parking_submodular(const TransversalMatroid& m);

/// Lattice points of { q >= 0 : sum_{j in J} q_j <= f(J) for all J }, graded
/// by degree. Enumeration is a lexicographic DFS with per-coordinate bounds
/// q_j <= f({j}) and prefix pruning, so outputs are byte-for-byte stable.
class Polymatroid {
 public:
  explicit Polymatroid(SubmodularTable table);

  int d() const { return table_.d; }
  int max_degree() const { return table_.full_value(); }
  const SubmodularTable& table() const { return table_; }

  bool member(const ExponentVec& q) const;

  const std::vector<std::vector<ExponentVec>>& lattice_points() const;
  std::vector<long long> graded_counts() const;

  /// Minimal monomial generators of the nonparking ideal: q outside the
  /// polymatroid with every q - e_j inside. Lexicographically sorted.
  std::vector<ExponentVec> minimal_nonmembers() const;

  struct PurityResult {
    bool pure = true;
    ExponentVec witness;  // undominated point when !pure
  };
  /// Every lattice point must be dominated componentwise by one of top
  /// degree; failure signals an implementation bug.
  PurityResult purity_check() const;

 private:
  SubmodularTable table_;
  mutable std::vector<std::vector<ExponentVec>> graded_;
  mutable std::once_flag once_;
};

}  // namespace parkmat

#endif
