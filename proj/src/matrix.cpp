#include "parkmat/matrix.hpp"

#include <omp.h>

#include <cstddef>
#include <stdexcept>
#include <utility>

namespace parkmat {

namespace {

// row -= (row[c] / prow[c]) * prow, from column c on. The two scratch
// rationals are caller-owned so their limb storage is reused across rows;
// per-entry temporaries would hammer the allocator from every thread.
void eliminate_row(std::vector<Rat>& row, const std::vector<Rat>& prow, std::size_t c,
                   const Rat& pinv, Rat& factor, Rat& prod) {
  const std::size_t cols = row.size();
  mpq_mul(factor.get_mpq_t(), row[c].get_mpq_t(), pinv.get_mpq_t());
  row[c] = 0;
  for (std::size_t cc = c + 1; cc < cols; ++cc) {
    if (prow[cc] == 0) continue;
    mpq_mul(prod.get_mpq_t(), factor.get_mpq_t(), prow[cc].get_mpq_t());
    mpq_sub(row[cc].get_mpq_t(), row[cc].get_mpq_t(), prod.get_mpq_t());
  }
}

int eliminate(RatMatrix& m, bool parallel) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t pivot_row = 0;
  Rat pinv, sfactor, sprod;
  for (std::size_t c = 0; c < cols && pivot_row < rows; ++c) {
    std::size_t p = pivot_row;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    if (p != pivot_row) std::swap(m[p], m[pivot_row]);
    const std::vector<Rat>& prow = m[pivot_row];
    mpq_inv(pinv.get_mpq_t(), prow[c].get_mpq_t());
    if (parallel) {
#pragma omp parallel
      {
        Rat factor, prod;
#pragma omp for schedule(dynamic, 16)
        for (std::size_t r = pivot_row + 1; r < rows; ++r) {
          if (m[r][c] == 0) continue;
          eliminate_row(m[r], prow, c, pinv, factor, prod);
        }
      }
    } else {
      for (std::size_t r = pivot_row + 1; r < rows; ++r) {
        if (m[r][c] == 0) continue;
        eliminate_row(m[r], prow, c, pinv, sfactor, sprod);
      }
    }
    ++pivot_row;
  }
  return static_cast<int>(pivot_row);
}

}  // namespace

int mat_rank(RatMatrix m, bool parallel) { return eliminate(m, parallel); }

int mat_rank_reference(RatMatrix m) { return eliminate(m, false); }

Rat mat_det(RatMatrix m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("mat_det: matrix not square");
  Rat det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    const Rat pinv = 1 / m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m[r][c] == 0) continue;
      Rat factor = m[r][c] * pinv;
      for (std::size_t cc = c; cc < n; ++cc) m[r][cc] -= factor * m[c][cc];
    }
  }
  return det;
}

}  // namespace parkmat
