#include "crlab/finite_type.hpp"

#include <cstdint>
#include <string>
#include <utility>

#include "crlab/errors.hpp"
#include "crlab/polymat.hpp"

namespace crlab {

Poly apply_field(const VectorField& V, const Poly& f) {
    if (f.table() != V.table)
        throw usage_error("vector field and polynomial use different variable tables");
    Poly acc(V.table);
    for (std::size_t i = 0; i < V.coeffs.size(); ++i)
        if (!V.coeffs[i].is_zero()) acc += V.coeffs[i] * f.derivative(i);
    return acc;
}

VectorField lie_bracket(const VectorField& V, const VectorField& W) {
    if (V.table != W.table)
        throw usage_error("vector fields use different variable tables");
    VectorField B{V.table, std::vector<Poly>(V.coeffs.size(), Poly(V.table))};
    for (std::size_t m = 0; m < B.coeffs.size(); ++m)
        B.coeffs[m] = apply_field(V, W.coeffs[m]) - apply_field(W, V.coeffs[m]);
    return B;
}

std::vector<VectorField> cr_fields(const GenericSubmanifold& M) {
    const std::size_t N = M.n_z(), d = M.codim(), n = 2 * N;
    const TablePtr& t = M.table();

    // d x N matrix dsigma/dzeta and its value at the origin.
    PolyMatrix dz(d, std::vector<Poly>(N, Poly(t)));
    std::vector<GaussRat> origin(n);
    QMatrix at0(d, N);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < N; ++j) {
            dz[i][j] = M.sigma()[i].derivative(N + j);
            at0.at(i, j) = dz[i][j].evaluate(origin);
        }

    // Deterministic choice of an invertible d x d block: leftmost pivots.
    std::vector<std::size_t> J = pivot_columns(at0);
    if (J.size() != d)
        throw usage_error("genericity: no invertible d x d minor of dsigma/dzeta at 0");

    PolyMatrix A(d, std::vector<Poly>(d, Poly(t)));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t k = 0; k < d; ++k) A[i][k] = dz[i][J[k]];
    Poly detA = poly_det(A);
    PolyMatrix adjA = poly_adjugate(A);

    std::vector<char> in_J(N, 0);
    for (std::size_t k : J) in_J[k] = 1;

    std::vector<VectorField> fields;
    for (std::size_t k = 0; k < N; ++k) {
        if (in_J[k]) continue;
        VectorField L{t, std::vector<Poly>(n, Poly(t))};
        L.coeffs[N + k] = detA;
        for (std::size_t j = 0; j < d; ++j) {
            Poly cj(t);
            for (std::size_t i = 0; i < d; ++i) cj += adjA[j][i] * dz[i][k];
            L.coeffs[N + J[j]] = -cj;
        }
        for (const auto& s : M.sigma())
            if (!apply_field(L, s).is_zero())
                throw usage_error("internal: constructed field fails to annihilate sigma");
        fields.push_back(std::move(L));
    }

    // Their conjugates are the (1,0) fields: conjugate each coefficient and
    // swap it onto the partner frame direction.
    const std::size_t howmany = fields.size();
    for (std::size_t f = 0; f < howmany; ++f) {
        VectorField C{t, std::vector<Poly>(n, Poly(t))};
        for (std::size_t i = 0; i < n; ++i) {
            if (fields[f].coeffs[i].is_zero()) continue;
            int p = t->partner(i);
            C.coeffs[static_cast<std::size_t>(p)] = fields[f].coeffs[i].conj_involution();
        }
        fields.push_back(std::move(C));
    }
    return fields;
}

namespace {

std::vector<GaussRat> value_at_origin(const VectorField& V) {
    std::vector<GaussRat> row(V.coeffs.size());
    for (std::size_t i = 0; i < V.coeffs.size(); ++i) row[i] = V.coeffs[i].constant_term();
    return row;
}

bool same_field(const VectorField& a, const VectorField& b) { return a.coeffs == b.coeffs; }

}  // namespace

TypeReport finite_type_order(const GenericSubmanifold& M, int cap, Exec exec) {
    if (cap < 1) throw usage_error("bracket cap must be at least 1");
    const std::size_t n = 2 * M.n_z();
    const std::size_t want = n - M.codim();

    TypeReport rep;
    rep.cap = cap;

    std::vector<VectorField> gens = cr_fields(M);
    std::vector<VectorField> level = gens;  // words of the current length
    QMatrix span(0, n);
    std::size_t dim = 0;

    for (int length = 1; length <= cap; ++length) {
        for (const auto& f : level) span.append_row(value_at_origin(f));
        dim = rank(span, exec);
        rep.span_dims.push_back(dim);
        if (dim == want) {
            rep.finite = true;
            rep.order = length;
            return rep;
        }
        if (length == cap) break;

        // Left-nested words of the next length, deduplicated; dropping
        // duplicates and zero fields cannot change any later span.
        std::vector<VectorField> next(gens.size() * level.size(),
                                      VectorField{M.table(), {}});
        std::string err;
        const std::int64_t total = static_cast<std::int64_t>(next.size());
#pragma omp parallel for schedule(dynamic) if (exec == Exec::Parallel)
        for (std::int64_t w = 0; w < total; ++w) {
            try {
                const auto& g = gens[static_cast<std::size_t>(w) / level.size()];
                const auto& h = level[static_cast<std::size_t>(w) % level.size()];
                next[static_cast<std::size_t>(w)] = lie_bracket(g, h);
            } catch (const std::exception& e) {
#pragma omp critical
                if (err.empty()) err = e.what();
            }
        }
        if (!err.empty()) throw resource_error(err);

        std::vector<VectorField> filtered;
        for (auto& f : next) {
            bool zero = true;
            for (const auto& c : f.coeffs)
                if (!c.is_zero()) {
                    zero = false;
                    break;
                }
            if (zero) continue;
            bool dup = false;
            for (const auto& kept : filtered)
                if (same_field(kept, f)) {
                    dup = true;
                    break;
                }
            if (!dup) filtered.push_back(std::move(f));
        }
        level = std::move(filtered);
        if (level.empty()) break;  // closure stabilized; span frozen from here on
    }

    // Pad to the cap: once the closure dies out the span stays constant.
    while (rep.span_dims.size() < static_cast<std::size_t>(cap))
        rep.span_dims.push_back(dim);
    return rep;
}

}  // namespace crlab
