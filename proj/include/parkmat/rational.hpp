#ifndef PARKMAT_RATIONAL_HPP
#define PARKMAT_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace parkmat {

// Exact scalar field: arbitrary-precision rationals. Zero-testing decides
// ranks and kernels, so no floating point is used anywhere.
using Rat = mpq_class;
using BigInt = mpz_class;

inline std::string rat_str(const Rat& q) { return q.get_str(); }

inline Rat rat_from_str(const std::string& s) {
  Rat q(s);
  q.canonicalize();
  return q;
}

inline BigInt int_pow(unsigned long base, unsigned long exp) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
  return r;
}

}  // namespace parkmat

#endif
