#include "parkmat/set_system.hpp"

#include <json.hpp>

#include <algorithm>
#include <random>
#include <unordered_map>

namespace parkmat {

std::string SetSystem::label_set(Mask elems) const {
  std::string out = "{";
  bool first = true;
  for (int i = 0; i < n(); ++i) {
    if (!has_bit(elems, i)) continue;
    if (!first) out += ",";
    out += ground.labels[i];
    first = false;
  }
  return out + "}";
}

namespace {

bool try_augment(const SetSystem& sys, Mask restrict_to, int block,
                 std::vector<int>& elem_to_block, Mask& visited) {
  Mask candidates = sys.blocks[block] & restrict_to & ~visited;
  while (candidates) {
    int s = std::countr_zero(candidates);
    candidates &= candidates - 1;
    visited |= bit(s);
    if (elem_to_block[s] < 0 ||
        try_augment(sys, restrict_to, elem_to_block[s], elem_to_block, visited)) {
      elem_to_block[s] = block;
      return true;
    }
  }
  return false;
}

}  // namespace

Matching max_matching(const SetSystem& sys, Mask restrict_to) {
  std::vector<int> elem_to_block(sys.n(), -1);
  Matching m;
  m.block_to_elem.assign(sys.d(), -1);
  for (int j = 0; j < sys.d(); ++j) {
    Mask visited = 0;
    if (try_augment(sys, restrict_to, j, elem_to_block, visited)) ++m.size;
  }
  for (int s = 0; s < sys.n(); ++s)
    if (elem_to_block[s] >= 0) m.block_to_elem[elem_to_block[s]] = s;
  return m;
}

namespace {

// Blocks reachable from the unmatched ones by alternating paths. Every
// element of A(J) for the resulting J is matched into J, so |A(J)| =
// |J| - #unmatched and J violates Hall's condition.
Mask deficiency_witness(const SetSystem& sys, const Matching& m) {
  std::vector<int> elem_to_block(sys.n(), -1);
  for (int j = 0; j < sys.d(); ++j)
    if (m.block_to_elem[j] >= 0) elem_to_block[m.block_to_elem[j]] = j;
  Mask reach = 0;
  for (int j = 0; j < sys.d(); ++j)
    if (m.block_to_elem[j] < 0) reach |= bit(j);
  while (true) {
    Mask elems = 0;
    for (int j = 0; j < sys.d(); ++j)
      if (has_bit(reach, j)) elems |= sys.blocks[j];
    Mask next = reach;
    while (elems) {
      int s = std::countr_zero(elems);
      elems &= elems - 1;
      if (elem_to_block[s] >= 0) next |= bit(elem_to_block[s]);
    }
    if (next == reach) return reach;
    reach = next;
  }
}

}  // namespace

std::optional<Mask> hall_violator(const SetSystem& sys) {
  if (sys.n() != sys.d())
    throw InputError("hall_violator requires a square system (|S| = d)");
  Matching m = max_matching(sys, sys.ground_mask());
  if (m.size == sys.d()) return std::nullopt;
  return deficiency_witness(sys, m);
}

TransversalResult full_transversal_exists(const SetSystem& sys) {
  TransversalResult r;
  r.matching = max_matching(sys, sys.ground_mask());
  r.exists = (r.matching.size == sys.d());
  if (!r.exists) r.violator = deficiency_witness(sys, r.matching);
  return r;
}

namespace {

// Rank agreement on all subsets of size <= cap determines the matroid, since
// every independent set has size <= rank <= cap.
bool same_ranks_upto(const SetSystem& a, const SetSystem& b, int cap) {
  int n = a.n();
  bool ok = true;
  for (int k = 0; k <= std::min(cap, n) && ok; ++k) {
    for_each_subset_of_size(n, k, [&](Mask t) {
      if (ok && max_matching(a, t).size != max_matching(b, t).size) ok = false;
    });
  }
  return ok;
}

}  // namespace

SetSystem normalize_presentation(const SetSystem& sys) {
  const int rank = max_matching(sys, sys.ground_mask()).size;
  if (rank == sys.d()) return sys;
  const int cap = std::min(sys.d(), sys.n());
  SetSystem cur = sys;
  while (cur.d() > rank) {
    bool removed = false;
    for (int j = cur.d() - 1; j >= 0 && cur.d() > rank; --j) {
      SetSystem cand = cur;
      cand.blocks.erase(cand.blocks.begin() + j);
      if (same_ranks_upto(cand, sys, cap)) {
        cur = std::move(cand);
        removed = true;
      }
    }
    if (!removed)
      throw std::logic_error("normalize_presentation: no removable block found");
  }
  return cur;
}

namespace {

std::string label_of(const nlohmann::json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  throw InputError("labels must be strings or integers");
}

}  // namespace

SetSystem parse_set_system(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("ground") || !j.contains("blocks"))
    throw InputError("expected an object with \"ground\" and \"blocks\"");
  if (!j["ground"].is_array() || !j["blocks"].is_array())
    throw InputError("\"ground\" and \"blocks\" must be arrays");

  SetSystem sys;
  std::unordered_map<std::string, int> index;
  for (const auto& v : j["ground"]) {
    std::string lab = label_of(v);
    if (!index.emplace(lab, sys.ground.size()).second)
      throw InputError("duplicate ground label \"" + lab + "\"");
    sys.ground.labels.push_back(lab);
  }
  if (sys.n() < 1) throw InputError("ground set is empty");
  if (sys.n() > 64) throw InputError("ground sets above 64 elements are not supported");
  if (j["blocks"].empty()) throw InputError("block list is empty");
  for (const auto& blk : j["blocks"]) {
    if (!blk.is_array()) throw InputError("each block must be an array of labels");
    Mask m = 0;
    for (const auto& v : blk) {
      std::string lab = label_of(v);
      auto it = index.find(lab);
      if (it == index.end())
        throw InputError("block element \"" + lab + "\" is not a declared ground label");
      m |= bit(it->second);
    }
    sys.blocks.push_back(m);
  }
  return sys;
}

SetSystem random_system(int n, int d, std::uint64_t seed) {
  if (n < 1 || n > 64 || d < 1) throw InputError("random_system: need 1 <= n <= 64, d >= 1");
  std::mt19937_64 rng(seed);
  SetSystem sys;
  for (int i = 1; i <= n; ++i) sys.ground.labels.push_back(std::to_string(i));
  for (int j = 0; j < d; ++j) {
    Mask m = rng() & sys.ground_mask();
    if (m == 0) m = bit(static_cast<int>(rng() % n));
    sys.blocks.push_back(m);
  }
  return sys;
}

}  // namespace parkmat
