#include "parkmat/sqfree.hpp"

#include <stdexcept>

namespace parkmat {

namespace {

bool contains_cocircuit(Mask support, const std::vector<Mask>& cocircuits) {
  for (Mask c : cocircuits)
    if ((support & c) == c) return true;
  return false;
}

}  // namespace

SqFreeElement phi_image(const Representation& v, const ExponentVec& q,
                        const std::vector<Mask>& cocircuits) {
  if (static_cast<int>(q.size()) != v.d())
    throw std::invalid_argument("phi_image: exponent arity mismatch");
  SqFreeElement cur;
  cur.terms.emplace(Mask{0}, Rat(1));
  for (int j = 0; j < v.d(); ++j) {
    for (int rep = 0; rep < q[j]; ++rep) {
      SqFreeElement next;
      for (const auto& [support, coeff] : cur.terms) {
        Mask avail = v.sys.blocks[j] & ~support;
        while (avail) {
          int s = std::countr_zero(avail);
          avail &= avail - 1;
          Mask grown = support | bit(s);
          if (contains_cocircuit(grown, cocircuits)) continue;
          auto [it, inserted] = next.terms.emplace(grown, coeff * v.entry(j, s));
          if (!inserted) it->second += coeff * v.entry(j, s);
        }
      }
      for (auto it = next.terms.begin(); it != next.terms.end();)
        it = (it->second == 0) ? next.terms.erase(it) : std::next(it);
      cur = std::move(next);
      if (cur.is_zero()) return cur;
    }
  }
  return cur;
}

}  // namespace parkmat
