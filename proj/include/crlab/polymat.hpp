#pragma once

#include <vector>

#include "crlab/poly.hpp"

namespace crlab {

using PolyMatrix = std::vector<std::vector<Poly>>;

/// Determinant by Laplace expansion; fine at the small sizes the vector-field
/// and Jacobian constructions need.
Poly poly_det(const PolyMatrix& m);

/// Adjugate: adj(m) * m = m * adj(m) = det(m) * I, division-free.
PolyMatrix poly_adjugate(const PolyMatrix& m);

}  // namespace crlab
