#include "crlab/qmatrix.hpp"

#include <utility>

#include "crlab/errors.hpp"

namespace crlab {

void QMatrix::append_row(const std::vector<GaussRat>& row) {
    if (rows_ == 0 && cols_ == 0) cols_ = row.size();
    if (row.size() != cols_) throw usage_error("row length does not match matrix");
    a_.insert(a_.end(), row.begin(), row.end());
    ++rows_;
}

namespace {

// Row updates below a pivot are independent of each other; this is the
// data-parallel inner loop shared by both execution policies.
void eliminate_below(QMatrix& m, std::size_t pr, std::size_t col, Exec exec) {
    const std::size_t rows = m.rows(), cols = m.cols();
    const long first = static_cast<long>(pr) + 1;
#pragma omp parallel for schedule(dynamic) if (exec == Exec::Parallel)
    for (long r = first; r < static_cast<long>(rows); ++r) {
        const std::size_t rr = static_cast<std::size_t>(r);
        if (m.at(rr, col).is_zero()) continue;
        GaussRat f = m.at(rr, col) / m.at(pr, col);
        for (std::size_t c = col; c < cols; ++c)
            m.at(rr, c) -= f * m.at(pr, c);
    }
}

}  // namespace

std::size_t echelonize(QMatrix& m, Exec exec) {
    std::size_t r = 0;
    for (std::size_t col = 0; col < m.cols() && r < m.rows(); ++col) {
        std::size_t pivot = r;
        while (pivot < m.rows() && m.at(pivot, col).is_zero()) ++pivot;
        if (pivot == m.rows()) continue;
        if (pivot != r)
            for (std::size_t c = col; c < m.cols(); ++c)
                std::swap(m.at(r, c), m.at(pivot, c));
        eliminate_below(m, r, col, exec);
        ++r;
    }
    return r;
}

std::size_t rank(QMatrix m, Exec exec) { return echelonize(m, exec); }

std::vector<std::size_t> pivot_columns(QMatrix m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t col = 0; col < m.cols() && r < m.rows(); ++col) {
        std::size_t pivot = r;
        while (pivot < m.rows() && m.at(pivot, col).is_zero()) ++pivot;
        if (pivot == m.rows()) continue;
        if (pivot != r)
            for (std::size_t c = col; c < m.cols(); ++c)
                std::swap(m.at(r, c), m.at(pivot, c));
        eliminate_below(m, r, col, Exec::Serial);
        pivots.push_back(col);
        ++r;
    }
    return pivots;
}

}  // namespace crlab
