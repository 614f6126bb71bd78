#ifndef PARKMAT_MVPOLY_HPP
#define PARKMAT_MVPOLY_HPP

#include <map>
#include <string>
#include <vector>

#include "parkmat/polymatroid.hpp"
#include "parkmat/rational.hpp"

namespace parkmat {

/// Sparse multivariate polynomial over exact rationals, canonical form:
/// exponent vectors mapped to nonzero coefficients, lexicographic key order.
struct MVPoly {
  int nvars = 0;
  std::map<ExponentVec, Rat> terms;

  static MVPoly one(int nvars);
  void add(const ExponentVec& q, const Rat& c);
  bool is_zero() const { return terms.empty(); }
  int degree() const;
  std::string text(const std::string& var = "x") const;
  bool operator==(const MVPoly&) const = default;
};

/// p * (c_1 x_1 + ... + c_d x_d), skipping zero coefficients.
MVPoly multiply_by_linear(const MVPoly& p, const std::vector<Rat>& coeffs);

/// (c_1 x_1 + ... + c_d x_d)^e expanded exactly; the number of terms is
/// C(e + d' - 1, d' - 1) for d' nonzero coefficients.
MVPoly expand_power(const std::vector<Rat>& form, int e);

std::string monomial_text(const ExponentVec& q, const std::string& var = "x");

}  // namespace parkmat

#endif
