#ifndef PARKMAT_REPRESENTATION_HPP
#define PARKMAT_REPRESENTATION_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "parkmat/matrix.hpp"
#include "parkmat/set_system.hpp"

namespace parkmat {

enum class ReprMode { powers, random };

std::string mode_name(ReprMode m);

struct NotGenericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Exact d x n rational matrix whose column v_s has (v_s)_j != 0 exactly when
/// s lies in block j. Certification replaces the usual genericity-by-
/// transcendentals argument with a finite exact check: the column rank of
/// every subset of size <= d equals its matching rank, which pins the column
/// matroid to M[A].
struct Representation {
  SetSystem sys;
  std::vector<std::vector<Rat>> cols;  // cols[s][j]
  ReprMode mode = ReprMode::powers;
  std::uint64_t seed = 0;
  bool certified = false;

  int d() const { return sys.d(); }
  int n() const { return sys.n(); }
  const Rat& entry(int j, int s) const { return cols[s][j]; }

  /// Linear form v_s(x) coefficients (the column as a row of length d).
  const std::vector<Rat>& column(int s) const { return cols[s]; }

  /// Submatrix of the selected columns, d rows.
  RatMatrix column_submatrix(Mask t) const;
};

/// powers mode: (v_s)_j = (1-based index of s)^j on the support. random mode:
/// nonzero entries uniform in [1, 2^16] from the given seed; a failed
/// certification redraws with seed+1, at most 16 attempts. powers-mode
/// certification failure raises NotGenericError telling the caller to rerun
/// with random mode.
Representation build_representation(const SetSystem& sys, ReprMode mode,
                                    std::uint64_t seed = 0);

/// Maximal rank-(d-1) flats of a certified representation, with defining
/// linear forms. Forms are computed as signed minors over an independent
/// (d-1)-subset of columns and normalized so the first nonzero coefficient
/// is 1; flats are deduplicated and sorted by ascending bit-pattern.
struct Hyperplane {
  Mask flat = 0;              // H as an element subset
  std::vector<Rat> form;      // length d
  int rho = 0;                // |S \ H|
};

std::vector<Hyperplane> hyperplanes_with_forms(const Representation& v);

}  // namespace parkmat

#endif
