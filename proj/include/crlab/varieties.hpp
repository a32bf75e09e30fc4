#pragma once

#include <optional>
#include <string>
#include <vector>

#include "crlab/groebner.hpp"

namespace crlab {

/// Real-analytic variety through the origin, given by defining polynomials
/// sigma_i(Z, zeta) on a paired table laid out as z_0..z_{N-1}, ~z_0..~z_{N-1}.
/// Construction validates that every generator vanishes at (0,0) and that the
/// ideal <sigma> is stable under the reality involution.
class RealVariety {
  public:
    RealVariety(TablePtr table, std::vector<Poly> sigma,
                std::optional<int> dim_hint = std::nullopt);

    const TablePtr& table() const { return table_; }    // full (Z, zeta) table
    const TablePtr& z_table() const { return z_table_; }  // Z-block only
    std::size_t n_z() const { return z_table_->size(); }
    const std::vector<Poly>& sigma() const { return sigma_; }
    std::optional<int> dim_hint() const { return dim_hint_; }

  private:
    TablePtr table_;
    TablePtr z_table_;
    std::vector<Poly> sigma_;
    std::optional<int> dim_hint_;
};

/// Generic submanifold: additionally the d x N matrix dsigma/dZ has full rank
/// d at the origin, so the defining functions have independent holomorphic
/// differentials there.
class GenericSubmanifold : public RealVariety {
  public:
    GenericSubmanifold(TablePtr table, std::vector<Poly> sigma,
                       std::optional<int> dim_hint = std::nullopt);
    std::size_t codim() const { return sigma().size(); }
};

struct EssentialReport {
    Ideal ideal_of_E0;  // in Z-variables
    DimReport dim;
    bool essentially_finite = false;
};

/// Ideal of the Segre variety Sigma_p in Z-variables: substitute the
/// coordinate-wise conjugate of p for the zeta-block of every sigma_i.
Ideal segre_at(const RealVariety& X, const std::vector<GaussRat>& p);

/// The ideal <sigma_1,...,sigma_d> in the full (Z, zeta) table.
Ideal complexification(const RealVariety& X);

/// The essential variety E_0 = {Z : Sigma_0 is contained in Sigma_Z}: reduce
/// each sigma_i(W, zeta) against the basis of I(Sigma_0) in a W-copy of the
/// Z-block (block order W >> zeta); the remainder's coefficient polynomials
/// c(zeta), one per standard W-monomial, must vanish at zeta = conj(Z), so
/// their conjugation images generate the ideal of E_0.
EssentialReport essential_variety(const RealVariety& X);

/// Containment I(X_c) in I(Gamma x Sigma_0^*), with Gamma a user-supplied
/// variety through 0 in Z-variables, checked by radical membership of every
/// sigma_i in <Gamma-generators> + <conj(Segre-at-0 generators)>.
bool check_condition_b(const RealVariety& X, const Ideal& Gamma);

/// Exact-membership variant: every generator of the complexification lies in
/// the ideal generated by J (Z-variables) and conj(Segre-at-0) (zeta-variables)
/// inside the full table.
bool check_condition_c(const RealVariety& X, const Ideal& J);

/// Curve criterion: mu is a nontrivial N-tuple of polynomials in one
/// parameter s with no constant terms; true iff every s-coefficient (orders
/// 0..jet_cap) of sigma_i(mu(s), zeta) is a radical member of I(Sigma_0^*).
bool check_condition_d(const RealVariety& X, const std::vector<Poly>& mu, int jet_cap);

/// Coefficient-extraction core shared by essential_variety and the criterion
/// variety: reduce each f against the basis G under the given block order,
/// split the remainder's terms along group_mask, conjugate the cofactor
/// polynomials, and transplant them into out_table via out_map.
std::vector<Poly> conj_coefficient_ideal(const std::vector<Poly>& fs, const std::vector<Poly>& G,
                                         const MonomialOrder& block_order,
                                         const std::vector<char>& group_mask,
                                         const TablePtr& out_table,
                                         const std::vector<int>& out_map);

}  // namespace crlab
