#ifndef PARKMAT_MATRIX_HPP
#define PARKMAT_MATRIX_HPP

#include <vector>

#include "parkmat/rational.hpp"

namespace parkmat {

using RatMatrix = std::vector<std::vector<Rat>>;

/// Rank by exact Gaussian elimination. Pivot selection is the first row with
/// a nonzero entry in the current column, so serial and parallel paths reduce
/// identically; the parallel path eliminates the rows below a pivot
/// concurrently (each row updates only itself).
int mat_rank(RatMatrix m, bool parallel = true);

/// Serial reference elimination, kept for testing the parallel kernel.
int mat_rank_reference(RatMatrix m);

/// Exact determinant of a square matrix.
Rat mat_det(RatMatrix m);

}  // namespace parkmat

#endif
