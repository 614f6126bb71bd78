#include "parkmat/polymatroid.hpp"

#include <stdexcept>
#include <string>

namespace parkmat {

void SubmodularTable::validate() const {
  if (d < 1 || f.size() != (std::size_t{1} << d))
    throw std::logic_error("submodular table: wrong size");
  if (f[0] != 0) throw std::logic_error("submodular table: f(empty) != 0");
  const Mask full = full_mask(d);
  // local exchange conditions are equivalent to monotonicity/submodularity
  for (Mask j = 0; j <= full; ++j) {
    if (f[j] < 0) throw std::logic_error("submodular table: negative value");
    for (int i = 0; i < d; ++i) {
      if (has_bit(j, i)) continue;
      if (f[j | bit(i)] < f[j])
        throw std::logic_error("submodular table: not monotone at J=" + std::to_string(j));
      for (int k = i + 1; k < d; ++k) {
        if (has_bit(j, k)) continue;
        if (f[j | bit(i) | bit(k)] + f[j] > f[j | bit(i)] + f[j | bit(k)])
          throw std::logic_error("submodular table: not submodular at J=" + std::to_string(j));
      }
    }
  }
}

SubmodularTable parking_submodular(const TransversalMatroid& m) {
  SubmodularTable t;
  t.d = m.rank_of_matroid();
  t.f.resize(std::size_t{1} << t.d);
  for (Mask j = 0; j < (Mask{1} << t.d); ++j)
    t.f[j] = m.dual_rank(m.system().block_union(j));
  t.validate();
  return t;
}

Polymatroid::Polymatroid(SubmodularTable table) : table_(std::move(table)) {
  table_.validate();
}

bool Polymatroid::member(const ExponentVec& q) const {
  if (static_cast<int>(q.size()) != table_.d)
    throw std::invalid_argument("polymatroid member: arity mismatch");
  const Mask full = full_mask(table_.d);
  std::vector<int> sums(std::size_t{1} << table_.d, 0);
  for (Mask j = 1; j <= full; ++j) {
    int low = std::countr_zero(j);
    sums[j] = sums[j & (j - 1)] + q[low];
    if (sums[j] > table_.f[j]) return false;
  }
  return true;
}

namespace {

// Invariant: sums[j] is current for every j inside the assigned prefix.
// Constraint sums grow with v, so the first violated v rules out larger ones.
void dfs_points(const SubmodularTable& t, int coord, ExponentVec& q,
                std::vector<int>& sums, std::vector<std::vector<ExponentVec>>& out) {
  const int d = t.d;
  if (coord == d) {
    out[sums[full_mask(d)]].push_back(q);
    return;
  }
  const int cap = t.f[bit(coord)];
  const Mask prefix = full_mask(coord + 1);
  for (int v = 0; v <= cap; ++v) {
    q[coord] = v;
    bool feasible = true;
    for (Mask j = bit(coord); j <= prefix; ++j) {
      if (!has_bit(j, coord) || (j & ~prefix)) continue;
      sums[j] = sums[j & ~bit(coord)] + v;
      if (sums[j] > t.f[j]) feasible = false;
    }
    if (!feasible) break;
    dfs_points(t, coord + 1, q, sums, out);
  }
  q[coord] = 0;
}

}  // namespace

const std::vector<std::vector<ExponentVec>>& Polymatroid::lattice_points() const {
  std::call_once(once_, [this] {
    graded_.assign(table_.full_value() + 1, {});
    ExponentVec q(table_.d, 0);
    std::vector<int> sums(std::size_t{1} << table_.d, 0);
    dfs_points(table_, 0, q, sums, graded_);
    while (graded_.size() > 1 && graded_.back().empty()) graded_.pop_back();
  });
  return graded_;
}

std::vector<long long> Polymatroid::graded_counts() const {
  std::vector<long long> counts;
  for (const auto& pts : lattice_points()) counts.push_back(static_cast<long long>(pts.size()));
  return counts;
}

std::vector<ExponentVec> Polymatroid::minimal_nonmembers() const {
  // any minimal nonmember has q_j <= f({j}) + 1 in each coordinate
  const int d = table_.d;
  std::vector<int> box(d);
  for (int j = 0; j < d; ++j) box[j] = table_.f[bit(j)] + 1;
  std::vector<ExponentVec> out;
  ExponentVec q(d, 0);
  while (true) {
    if (!member(q)) {
      bool minimal = true;
      for (int j = 0; j < d && minimal; ++j) {
        if (q[j] == 0) continue;
        --q[j];
        if (!member(q)) minimal = false;
        ++q[j];
      }
      if (minimal) out.push_back(q);
    }
    // lex odometer
    int pos = d - 1;
    while (pos >= 0 && q[pos] == box[pos]) q[pos--] = 0;
    if (pos < 0) break;
    ++q[pos];
  }
  return out;
}

Polymatroid::PurityResult Polymatroid::purity_check() const {
  const auto& graded = lattice_points();
  const auto& top = graded.back();
  for (const auto& pts : graded)
    for (const auto& q : pts) {
      bool dominated = false;
      for (const auto& t : top) {
        bool le = true;
        for (int j = 0; j < table_.d && le; ++j) le = q[j] <= t[j];
        if (le) {
          dominated = true;
          break;
        }
      }
      if (!dominated) return {false, q};
    }
  return {true, {}};
}

}  // namespace parkmat
