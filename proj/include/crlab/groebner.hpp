#pragma once

#include <optional>
#include <string>
#include <vector>

#include "crlab/poly.hpp"
#include "crlab/qmatrix.hpp"

namespace crlab {

/// Dimension data for a polynomial ideal. krull_dim is -1 for the unit
/// ideal; colength (vector-space dimension of the quotient) is present
/// exactly when the ideal is zero-dimensional.
struct DimReport {
    int krull_dim = 0;
    bool zero_dimensional = false;
    std::optional<long> colength;
};

/// Result of the jet-space colength computation: either the exact codimension
/// in the formal power series ring, or "unknown beyond the cap".
struct Colength {
    bool known = false;
    long value = 0;      // meaningful when known
    int jet_order = 0;   // first k at which the jet test succeeded
    int cap = 0;
};

/// Generator list with a cached reduced Gröbner basis under a fixed order.
/// Generators are immutable after construction; the basis is computed on
/// first use (compute it under single ownership before sharing the Ideal
/// across threads) and never changes afterwards.
class Ideal {
  public:
    Ideal(TablePtr table, std::vector<Poly> gens,
          MonomialOrder order = MonomialOrder::degrevlex());

    const TablePtr& table() const { return table_; }
    const MonomialOrder& order() const { return order_; }
    const std::vector<Poly>& generators() const { return gens_; }

    /// The unique reduced Gröbner basis: monic, auto-reduced, sorted by
    /// decreasing leading monomial. Empty for the zero ideal, {1} for the
    /// unit ideal.
    const std::vector<Poly>& basis() const;

    bool is_zero() const { return basis().empty(); }
    bool is_unit() const;

  private:
    TablePtr table_;
    MonomialOrder order_;
    std::vector<Poly> gens_;
    mutable std::optional<std::vector<Poly>> gb_;
};

/// Buchberger's algorithm with the normal selection strategy: pairs in a
/// degree-ordered queue, ties broken by generator index, product criterion
/// applied. Returns the reduced basis.
std::vector<Poly> buchberger(const TablePtr& table, const std::vector<Poly>& gens,
                             const MonomialOrder& order);

/// Remainder of f on division by the basis; no remainder term is divisible
/// by a basis leading term, and f - result lies in the ideal.
Poly normal_form(const Poly& f, const std::vector<Poly>& basis,
                 const MonomialOrder& order);
Poly normal_form(const Poly& f, const Ideal& I);

/// Reductions against a fixed basis are independent per polynomial.
std::vector<Poly> normal_form_batch(const std::vector<Poly>& fs, const Ideal& I,
                                    Exec exec = Exec::Parallel);

bool member(const Poly& f, const Ideal& I);

/// Radical membership via the Rabinowitsch trick: f vanishes on the zero set
/// of I iff 1 lies in I + <1 - y*f> with y a fresh auxiliary variable.
bool radical_member(const Poly& f, const Ideal& I);

/// Intersection with the subring generated by the kept variables, computed
/// with a block elimination order. The result lives in the same table.
Ideal eliminate(const Ideal& I, const std::vector<char>& keep,
                MonomialOrder out_order = MonomialOrder::degrevlex());

/// Krull dimension via independent variable subsets modulo the leading-term
/// ideal, with colength (standard monomial count) in the zero-dimensional
/// case.
DimReport krull_dim(const Ideal& I);

/// Codimension of I in the formal power series ring at the origin, decided
/// by exact linear algebra on jets: the first k with m^k contained in
/// I + m^(k+1) yields the answer. Semi-decidable; returns unknown past cap.
/// Generators must vanish at the origin.
Colength local_colength(const Ideal& I, int cap, Exec exec = Exec::Parallel);

/// Contraction of I along the ring homomorphism induced by F: the ideal of
/// all g (in the target coordinates, one per component of F) with g(F) in I.
/// Computed by eliminating the source variables from the graph ideal.
Ideal preimage_under_map(const Ideal& I, const std::vector<Poly>& F,
                         const TablePtr& target,
                         MonomialOrder out_order = MonomialOrder::degrevlex());

/// Ideal equality by two-way membership of basis elements.
bool ideals_equal(const Ideal& a, const Ideal& b);

}  // namespace crlab
