#ifndef PARKMAT_SQFREE_HPP
#define PARKMAT_SQFREE_HPP

#include <map>
#include <vector>

#include "parkmat/polymatroid.hpp"
#include "parkmat/rational.hpp"
#include "parkmat/representation.hpp"

namespace parkmat {

/// Element of the squarefree quotient algebra in the y-variables: terms are
/// squarefree supports (bit-sets) with rational coefficients, and no support
/// contains a cocircuit.
struct SqFreeElement {
  std::map<Mask, Rat> terms;

  bool is_zero() const { return terms.empty(); }
  bool operator==(const SqFreeElement&) const = default;
};

/// Image of x^q under x_j -> r_j = sum_s (v_s)_j y_s, computed by repeated
/// multiplication with eager reduction: a product term dies as soon as it
/// repeats an element (y_s^2 = 0) or its support contains a cocircuit. The
/// quotient ideal is monomial, so eager pruning is exact. Zero output is the
/// membership-complement signal: phi(x^q) = 0 iff q is nonparking.
SqFreeElement phi_image(const Representation& v, const ExponentVec& q,
                        const std::vector<Mask>& cocircuits);

}  // namespace parkmat

#endif
