#include "parkmat/matroid.hpp"

#include <omp.h>

#include <algorithm>
#include <stdexcept>

namespace parkmat {

TransversalMatroid::TransversalMatroid(SetSystem sys) : sys_(std::move(sys)) {
  d_ = sys_.d();
  if (max_matching(sys_, sys_.ground_mask()).size != d_)
    throw std::invalid_argument(
        "TransversalMatroid: presentation is not full rank; normalize first");
}

int TransversalMatroid::rank(Mask t) const {
  if (table_built_.load(std::memory_order_acquire)) return table_[t];
  {
    std::scoped_lock lock(mu_);
    auto it = memo_.find(t);
    if (it != memo_.end()) return it->second;
  }
  int r = max_matching(sys_, t).size;
  std::scoped_lock lock(mu_);
  memo_.emplace(t, r);
  return r;
}

int TransversalMatroid::rank_formula(Mask t) const {
  int best = sys_.n() + d_;
  for (Mask sel = 0; sel < (Mask{1} << d_); ++sel) {
    int v = popcount(sys_.block_union(sel) & t) + d_ - popcount(sel);
    best = std::min(best, v);
  }
  return best;
}

int TransversalMatroid::dual_rank(Mask t) const {
  return rank(sys_.ground_mask() & ~t) - d_ + popcount(t);
}

std::vector<Mask> TransversalMatroid::cocircuits() const {
  const Mask full = sys_.ground_mask();
  std::vector<Mask> flats;
  for_each_subset_of_size(sys_.n(), d_ - 1, [&](Mask t) {
    if (rank(t) != d_ - 1) return;
    Mask closure = t;
    for (int s = 0; s < sys_.n(); ++s)
      if (!has_bit(t, s) && rank(t | bit(s)) == d_ - 1) closure |= bit(s);
    flats.push_back(closure);
  });
  std::sort(flats.begin(), flats.end());
  flats.erase(std::unique(flats.begin(), flats.end()), flats.end());
  std::vector<Mask> cocircs;
  cocircs.reserve(flats.size());
  for (Mask h : flats) cocircs.push_back(full & ~h);
  std::sort(cocircs.begin(), cocircs.end());
  return cocircs;
}

const std::vector<std::uint8_t>& TransversalMatroid::rank_table(bool parallel) const {
  std::scoped_lock lock(mu_);
  if (table_built_.load(std::memory_order_acquire)) return table_;
  if (sys_.n() > 30) throw BudgetError("rank table: 2^n sweep too large");
  const std::int64_t total = std::int64_t{1} << sys_.n();
  table_.resize(total);
  if (parallel) {
#pragma omp parallel for schedule(static)
    for (std::int64_t m = 0; m < total; ++m)
      table_[m] = static_cast<std::uint8_t>(max_matching(sys_, static_cast<Mask>(m)).size);
  } else {
    for (std::int64_t m = 0; m < total; ++m)
      table_[m] = static_cast<std::uint8_t>(max_matching(sys_, static_cast<Mask>(m)).size);
  }
  table_built_.store(true, std::memory_order_release);
  return table_;
}

}  // namespace parkmat
