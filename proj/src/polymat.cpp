#include "crlab/polymat.hpp"

#include "crlab/errors.hpp"

namespace crlab {

namespace {

Poly det_skipping(const PolyMatrix& m, std::size_t row0, std::vector<char>& used_col) {
    const std::size_t n = m.size();
    if (row0 == n) return Poly::constant(m[0][0].table(), GaussRat(1));
    Poly acc(m[0][0].table());
    int pos = 0;  // position of c among the still-unused columns
    for (std::size_t c = 0; c < n; ++c) {
        if (used_col[c]) continue;
        if (!m[row0][c].is_zero()) {
            used_col[c] = 1;
            Poly minor = det_skipping(m, row0 + 1, used_col);
            used_col[c] = 0;
            Poly term = m[row0][c] * minor;
            acc += (pos % 2 == 0) ? term : -term;
        }
        ++pos;
    }
    return acc;
}

}  // namespace

Poly poly_det(const PolyMatrix& m) {
    if (m.empty()) throw usage_error("determinant of an empty matrix");
    for (const auto& row : m)
        if (row.size() != m.size()) throw usage_error("determinant needs a square matrix");
    std::vector<char> used(m.size(), 0);
    return det_skipping(m, 0, used);
}

PolyMatrix poly_adjugate(const PolyMatrix& m) {
    const std::size_t n = m.size();
    if (n == 0) throw usage_error("adjugate of an empty matrix");
    const TablePtr& t = m[0][0].table();
    if (n == 1) return {{Poly::constant(t, GaussRat(1))}};

    PolyMatrix adj(n, std::vector<Poly>(n, Poly(t)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            PolyMatrix minor;
            for (std::size_t r = 0; r < n; ++r) {
                if (r == i) continue;
                std::vector<Poly> row;
                for (std::size_t c = 0; c < n; ++c)
                    if (c != j) row.push_back(m[r][c]);
                minor.push_back(std::move(row));
            }
            Poly cof = poly_det(minor);
            adj[j][i] = ((i + j) % 2 == 0) ? cof : -cof;  // transposed cofactor
        }
    }
    return adj;
}

}  // namespace crlab
