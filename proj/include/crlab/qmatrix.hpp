#pragma once

#include <cstddef>
#include <vector>

#include "crlab/rational.hpp"

namespace crlab {

/// Execution policy for the data-parallel kernels. Arithmetic is exact, so
/// the serial reference and the OpenMP path produce identical results; the
/// serial path is kept for testing and as the baseline in the benchmark.
enum class Exec { Serial, Parallel };

/// Dense matrix over the Gaussian rationals, row-major.
class QMatrix {
  public:
    QMatrix() = default;
    QMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    GaussRat& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const GaussRat& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    void append_row(const std::vector<GaussRat>& row);

    friend bool operator==(const QMatrix& x, const QMatrix& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
    }

  private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<GaussRat> a_;
};

/// In-place reduction to row echelon form; returns the rank. Pivot selection
/// is deterministic (first nonzero row per column), so the echelon form does
/// not depend on the execution policy or thread count.
std::size_t echelonize(QMatrix& m, Exec exec);

std::size_t rank(QMatrix m, Exec exec);

/// Greedy leftmost-pivot column selection; returns the pivot column indices.
std::vector<std::size_t> pivot_columns(QMatrix m);

}  // namespace crlab
