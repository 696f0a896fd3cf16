#pragma once

// Exact Gaussian elimination and matrix product kernels.
//
// Two implementations share one contract: `serial` is the reference used by
// tests, `parallel` distributes the independent row updates of each pivot
// step (and the rows of a product) over OpenMP threads. Both perform the
// same arithmetic in the same order per row, so their outputs are identical.

#include <cstddef>
#include <vector>

#include "ncmot/matrix.hpp"

namespace ncmot::kernels {

struct Echelon {
  Matrix reduced;                    // row echelon form (reduced when requested)
  std::vector<std::size_t> pivots;   // pivot column of each nonzero row
};

namespace serial {
/// Pivots are the first nonzero entry at or below the current row. With
/// `reduce` the pivot rows are scaled to 1 and cleared above as well.
Echelon row_reduce(Matrix m, bool reduce);
Matrix multiply(const Matrix& a, const Matrix& b);
}  // namespace serial

namespace parallel {
Echelon row_reduce(Matrix m, bool reduce);
Matrix multiply(const Matrix& a, const Matrix& b);
}  // namespace parallel

/// Dispatches to the parallel kernel once rows * cols reaches the threshold.
Echelon row_reduce(Matrix m, bool reduce);
Matrix multiply(const Matrix& a, const Matrix& b);

std::size_t parallel_threshold();
void set_parallel_threshold(std::size_t entries);

}  // namespace ncmot::kernels
