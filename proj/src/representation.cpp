#include "parkmat/representation.hpp"

#include <algorithm>
#include <map>
#include <random>

namespace parkmat {

std::string mode_name(ReprMode m) { return m == ReprMode::powers ? "powers" : "random"; }

RatMatrix Representation::column_submatrix(Mask t) const {
  RatMatrix m(d());
  for (int j = 0; j < d(); ++j) {
    m[j].reserve(popcount(t));
    for (int s = 0; s < n(); ++s)
      if (has_bit(t, s)) m[j].push_back(cols[s][j]);
  }
  return m;
}

namespace {

// Empty result means certified; otherwise the offending subset.
std::optional<Mask> certify(const Representation& v) {
  const int cap = std::min(v.d(), v.n());
  std::optional<Mask> bad;
  for (int k = 1; k <= cap && !bad; ++k) {
    for_each_subset_of_size(v.n(), k, [&](Mask t) {
      if (bad) return;
      if (mat_rank(v.column_submatrix(t), false) != max_matching(v.sys, t).size) bad = t;
    });
  }
  return bad;
}

Representation draw(const SetSystem& sys, ReprMode mode, std::uint64_t seed) {
  Representation v;
  v.sys = sys;
  v.mode = mode;
  v.seed = seed;
  v.cols.assign(sys.n(), std::vector<Rat>(sys.d(), Rat(0)));
  if (mode == ReprMode::powers) {
    for (int s = 0; s < sys.n(); ++s)
      for (int j = 0; j < sys.d(); ++j)
        if (has_bit(sys.blocks[j], s))
          v.cols[s][j] = Rat(int_pow(static_cast<unsigned long>(s) + 1,
                                     static_cast<unsigned long>(j) + 1));
  } else {
    std::mt19937_64 rng(seed);
    // fixed draw order (rows, then columns) keeps a given seed reproducible
    for (int j = 0; j < sys.d(); ++j)
      for (int s = 0; s < sys.n(); ++s)
        if (has_bit(sys.blocks[j], s))
          v.cols[s][j] = Rat(static_cast<unsigned long>(1 + (rng() & 0xFFFF)));
  }
  return v;
}

}  // namespace

Representation build_representation(const SetSystem& sys, ReprMode mode, std::uint64_t seed) {
  if (mode == ReprMode::powers) {
    Representation v = draw(sys, mode, seed);
    if (auto bad = certify(v))
      throw NotGenericError("powers-mode representation failed genericity at T=" +
                            sys.label_set(*bad) + "; rerun with --mode random");
    v.certified = true;
    return v;
  }
  for (int attempt = 0; attempt < 16; ++attempt) {
    Representation v = draw(sys, mode, seed + attempt);
    if (!certify(v)) {
      v.certified = true;
      return v;
    }
  }
  throw std::runtime_error("random representation: certification failed 16 times");
}

std::vector<Hyperplane> hyperplanes_with_forms(const Representation& v) {
  if (!v.certified)
    throw std::logic_error("hyperplanes_with_forms: representation not certified");
  const int d = v.d(), n = v.n();
  std::map<Mask, Hyperplane> by_flat;
  for_each_subset_of_size(n, d - 1, [&](Mask t) {
    if (max_matching(v.sys, t).size != d - 1) return;
    std::vector<int> members;
    for (int s = 0; s < n; ++s)
      if (has_bit(t, s)) members.push_back(s);
    // j-th coefficient: signed minor dropping row j of the chosen columns
    std::vector<Rat> form(d);
    for (int j = 0; j < d; ++j) {
      RatMatrix minor(d - 1, std::vector<Rat>(d - 1));
      for (int r = 0, rr = 0; r < d; ++r) {
        if (r == j) continue;
        for (int c = 0; c < d - 1; ++c) minor[rr][c] = v.cols[members[c]][r];
        ++rr;
      }
      Rat det = mat_det(std::move(minor));
      if ((d - 1 + j) % 2 != 0) det = -det;
      form[j] = det;
    }
    int lead = 0;
    while (lead < d && form[lead] == 0) ++lead;
    if (lead == d) throw std::logic_error("hyperplane form vanished on an independent set");
    const Rat scale = 1 / form[lead];
    for (auto& c : form) c *= scale;
    Hyperplane h;
    h.form = std::move(form);
    for (int s = 0; s < n; ++s) {
      Rat val = 0;
      for (int j = 0; j < d; ++j) val += h.form[j] * v.cols[s][j];
      if (val == 0) h.flat |= bit(s);
    }
    h.rho = n - popcount(h.flat);
    by_flat.emplace(h.flat, std::move(h));
  });
  std::vector<Hyperplane> out;
  out.reserve(by_flat.size());
  for (auto& [flat, h] : by_flat) out.push_back(std::move(h));
  return out;
}

}  // namespace parkmat
