#ifndef PARKMAT_MATROID_HPP
#define PARKMAT_MATROID_HPP

#include <atomic>
#include <cstdint>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "parkmat/set_system.hpp"

namespace parkmat {

/// Rank oracle for the transversal matroid M[A] of a full-rank presentation.
/// rank(T) is the size of a maximum matching between blocks and T; values are
/// memoized per subset bit-pattern. For subset sweeps (Tutte polynomial) a
/// dense 2^n table can be precomputed, optionally in parallel; entries are
/// written once each, so any interleaving yields the same cache contents.
class TransversalMatroid {
 public:
  explicit TransversalMatroid(SetSystem sys);

  int rank(Mask t) const;
  int rank_of_matroid() const { return d_; }
  int n() const { return sys_.n(); }
  const SetSystem& system() const { return sys_; }
  Mask ground_mask() const { return sys_.ground_mask(); }

  /// Transversal rank as min over J' of |A(J') cap T| + d - |J'|. Must agree
  /// with rank() on every subset; kept as an independent cross-check.
  int rank_formula(Mask t) const;

  /// Dual matroid rank: rank(S \ T) - d + |T|.
  int dual_rank(Mask t) const;

  /// Complements of the rank-(d-1) flats, each a minimal set meeting every
  /// basis. Sorted by ascending bit-pattern.
  std::vector<Mask> cocircuits() const;

  /// Dense rank table over all 2^n subsets (n <= max_n enforced by callers).
  const std::vector<std::uint8_t>& rank_table(bool parallel = true) const;
  bool has_rank_table() const { return table_built_.load(std::memory_order_acquire); }

 private:
  SetSystem sys_;
  int d_;
  mutable std::vector<std::uint8_t> table_;
  mutable std::atomic<bool> table_built_{false};
  mutable std::unordered_map<Mask, int> memo_;
  mutable std::mutex mu_;
};

}  // namespace parkmat

#endif
