#ifndef PARKMAT_SET_SYSTEM_HPP
#define PARKMAT_SET_SYSTEM_HPP

#include <bit>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace parkmat {

// Subsets of the ground set are word-width bit-sets; ground sets above 64
// elements are rejected at parse time.
using Mask = std::uint64_t;

inline int popcount(Mask m) { return std::popcount(m); }
inline Mask bit(int i) { return Mask{1} << i; }
inline bool has_bit(Mask m, int i) { return (m >> i) & Mask{1}; }
inline Mask full_mask(int n) { return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Visits subsets of {0,..,n-1} of fixed size k in increasing colex/bitmask
// order. k = 0 visits the empty mask once.
template <class F>
void for_each_subset_of_size(int n, int k, F&& fn) {
  if (k < 0 || k > n) return;
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    Mask m = 0;
    for (int i : idx) m |= bit(i);
    fn(m);
    int pos = k - 1;
    while (pos >= 0 && idx[pos] == n - k + pos) --pos;
    if (pos < 0) break;
    ++idx[pos];
    for (int i = pos + 1; i < k; ++i) idx[i] = idx[i - 1] + 1;
  }
}

struct GroundSet {
  std::vector<std::string> labels;

  int size() const { return static_cast<int>(labels.size()); }
  Mask full() const { return full_mask(size()); }
  bool operator==(const GroundSet&) const = default;
};

/// A labeled set system A = (A_1,...,A_d) over a ground set of at most 64
/// elements. Blocks are bit-sets over ground indices; element labels are kept
/// for reporting only.
struct SetSystem {
  GroundSet ground;
  std::vector<Mask> blocks;

  int n() const { return ground.size(); }
  int d() const { return static_cast<int>(blocks.size()); }
  Mask ground_mask() const { return ground.full(); }

  // A(J): union of the blocks selected by a bitmask over block indices.
  Mask block_union(Mask block_sel) const {
    Mask u = 0;
    for (int j = 0; j < d(); ++j)
      if (has_bit(block_sel, j)) u |= blocks[j];
    return u;
  }

  std::string label_set(Mask elems) const;
  bool operator==(const SetSystem&) const = default;
};

struct Matching {
  int size = 0;
  std::vector<int> block_to_elem;  // -1 where unassigned; injective otherwise
};

/// Maximum bipartite matching between blocks and the elements of `restrict_to`
/// (element s matchable to block j iff s is in A_j). Augmenting-path search
/// scans blocks and elements in ascending index order, so the returned
/// assignment is deterministic.
Matching max_matching(const SetSystem& sys, Mask restrict_to);

/// For a square system (|S| = d): a block subset J with |A(J)| < |J|, if one
/// exists. Empty result certifies a size-d transversal.
std::optional<Mask> hall_violator(const SetSystem& sys);

struct TransversalResult {
  bool exists = false;
  Matching matching;   // size d when exists
  Mask violator = 0;   // block subset with |A(J)| < |J| when !exists
};

TransversalResult full_transversal_exists(const SetSystem& sys);

/// Subsystem with exactly rank(M[A]) blocks presenting the same matroid.
/// Removal candidates are tried in descending block index; a removal is kept
/// only if rank values agree on every subset of size <= d.
SetSystem normalize_presentation(const SetSystem& sys);

/// Parses the JSON input format {"ground":[label,...],"blocks":[[label,...],...]}.
/// Integer labels are coerced to their decimal-string form.
SetSystem parse_set_system(const std::string& text);

/// Reproducible random system: each of the d blocks is a uniformly random
/// nonempty subset of an n-element ground set labeled "1".."n".
SetSystem random_system(int n, int d, std::uint64_t seed);

}  // namespace parkmat

#endif
