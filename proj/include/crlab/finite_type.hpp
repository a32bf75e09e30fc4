#pragma once

#include <cstddef>
#include <vector>

#include "crlab/qmatrix.hpp"
#include "crlab/varieties.hpp"

namespace crlab {

/// Polynomial-coefficient derivation in the frame d/dZ_0..d/dZ_{N-1},
/// d/dzeta_0..d/dzeta_{N-1}; coeffs[i] multiplies the derivative along the
/// i-th table variable.
struct VectorField {
    TablePtr table;
    std::vector<Poly> coeffs;  // one entry per table variable
};

/// Outcome of the bracket-span search at the origin. When finite is set,
/// order is the first bracket length at which the span reaches 2N - d and
/// span_dims has exactly that many entries; otherwise span_dims is padded to
/// cap (the span can no longer grow once the closure stabilizes, but the
/// artifact reports only "undetermined", never "infinite type").
struct TypeReport {
    bool finite = false;
    int order = 0;
    int cap = 0;
    std::vector<std::size_t> span_dims;
};

/// Action of the derivation on a polynomial.
Poly apply_field(const VectorField& V, const Poly& f);

/// The N - d tangent (0,1) fields from the adjugate construction
/// L_k = det(A) d/dzeta_k - sum_j (adj(A) b_k)_j d/dzeta_{J_j},
/// with A an invertible-at-0 d x d block of dsigma/dzeta, followed by their
/// conjugates as (1,0) fields. Every returned field annihilates every
/// sigma_i identically.
std::vector<VectorField> cr_fields(const GenericSubmanifold& M);

VectorField lie_bracket(const VectorField& V, const VectorField& W);

/// Kohn / Bloom-Graham finite type at 0: breadth-first closure of left-nested
/// brackets of the cr_fields, exact span dimension at the origin per length.
TypeReport finite_type_order(const GenericSubmanifold& M, int cap,
                             Exec exec = Exec::Parallel);

}  // namespace crlab
