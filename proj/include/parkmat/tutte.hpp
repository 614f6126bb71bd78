#ifndef PARKMAT_TUTTE_HPP
#define PARKMAT_TUTTE_HPP

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "parkmat/matroid.hpp"

namespace parkmat {

struct TuttePoly {
  // (x exponent, y exponent) -> coefficient; zero coefficients absent.
  std::map<std::pair<int, int>, long long> terms;

  long long coeff(int i, int j) const {
    auto it = terms.find({i, j});
    return it == terms.end() ? 0 : it->second;
  }
  long long eval11() const;  // number of bases
  std::string text() const;
  bool operator==(const TuttePoly&) const = default;
};

struct TutteOptions {
  int max_n = 24;        // 2^n subset sweep budget
  bool parallel = true;  // OpenMP sweep with per-thread accumulators
};

/// Corank-nullity expansion sum_{T} (x-1)^{d-r(T)} (y-1)^{|T|-r(T)}.
/// The parallel path fills the matroid's dense rank table first; the merge of
/// per-thread count tables is a sum of nonnegative integers, so the result is
/// independent of scheduling.
TuttePoly tutte(const TransversalMatroid& m, const TutteOptions& opt = {});

/// Serial reference: one pass over all subsets computing each matching rank
/// directly, bypassing the rank table. Kept for testing the parallel kernel.
TuttePoly tutte_reference(const TransversalMatroid& m, int max_n = 24);

using HVector = std::vector<long long>;

/// Coefficients of z^(n-d) * T(1, 1/z); length n-d+1, h_0 = 1.
HVector h_vector_from_tutte(const TuttePoly& t, int n, int d);
HVector h_vector_from_tutte(const TransversalMatroid& m, const TutteOptions& opt = {});

}  // namespace parkmat

#endif
