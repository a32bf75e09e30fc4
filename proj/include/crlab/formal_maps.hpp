#pragma once

#include <optional>
#include <string>
#include <vector>

#include "crlab/finite_type.hpp"
#include "crlab/varieties.hpp"

namespace crlab {

/// Formal holomorphic map jet: one polynomial component per target variable,
/// in the source Z-variables, with no constant terms and total degree at most
/// degree_cap. The conjugate jet is derived on demand, never stored.
class FormalMapJet {
  public:
    FormalMapJet(TablePtr z_table, std::vector<Poly> components, int degree_cap);

    static FormalMapJet identity(const TablePtr& z_table, int degree_cap = 1);

    const TablePtr& z_table() const { return z_table_; }
    const std::vector<Poly>& components() const { return components_; }
    int degree_cap() const { return degree_cap_; }

  private:
    TablePtr z_table_;
    std::vector<Poly> components_;
    int degree_cap_;
};

/// Codimension of I(H_1,...,H_N) in the formal power series ring.
Colength is_finite_map(const FormalMapJet& H, int cap);

/// det(dH_i/dZ_j) is not the zero polynomial.
bool jacobian_nonvanishing(const FormalMapJet& H);

/// The formal inclusion H(M) in X_tilde: every target generator composed with
/// the complexified jet (H(Z), conj-H(zeta)) must lie in <sigma> of M.
bool maps_into(const FormalMapJet& H, const RealVariety& M, const RealVariety& Xt);

struct PreimageIdentityReport {
    bool hypotheses_ok = false;
    std::string failed_hypothesis;  // empty when hypotheses_ok
    Colength map_colength;
    bool map_sends_into = false;
    std::optional<Ideal> preimage;      // phi_H^{-1}(I(Sigma_0)) in target Z-vars
    std::optional<Ideal> target_segre;  // I(Sigma~_0)
    bool ideals_match = false;
    DimReport source_dim;  // dim of the source Segre ideal at 0
    DimReport target_dim;  // dim of the target Segre ideal at 0
    bool dims_match = false;
    bool verified() const { return hypotheses_ok && ideals_match && dims_match; }
};

/// The preimage identity phi_H^{-1}(I(Sigma_0)) = I(Sigma~_0) together with
/// dim Sigma_0 = dim Sigma~_0, under the hypotheses that H is a finite map
/// and maps M into Xt. Hypothesis failures are reported, never ignored; the
/// ideal comparison is still carried out for diagnostic value.
PreimageIdentityReport verify_segre_preimage_identity(const FormalMapJet& H,
                                                      const RealVariety& M,
                                                      const RealVariety& Xt,
                                                      int colength_cap);

struct CriterionReport {
    Ideal ideal;  // in target Z-variables
    DimReport dim;
    bool satisfied = false;  // dim == 0: the criterion variety is the origin
};

/// The criterion variety C = {Z~ : phi_H(I(Sigma~_{Z~})) in I(Sigma_0)}: for
/// each target generator, reduce sigma~_j(H(W), zeta~) against I(Sigma_0) in
/// a W-copy of the source Z-block (block order W >> zeta~) and collect the
/// conjugated coefficient polynomials of the remainder.
CriterionReport criterion_variety(const FormalMapJet& H, const GenericSubmanifold& M,
                                  const RealVariety& Xt);

enum class Verdict { CriterionSatisfied, Inconclusive };

struct VerdictReport {
    TypeReport finite_type;
    EssentialReport source_essential;
    Colength map_finite;
    bool maps_into_ok = false;
    CriterionReport criterion;
    Verdict verdict = Verdict::Inconclusive;
    std::string reason;  // empty when the criterion is satisfied
};

/// Runs all five sub-analyses and combines them: CriterionSatisfied iff the
/// source has finite type and is essentially finite, the map is finite and
/// sends M into Xt, and the criterion variety is zero-dimensional. The reason
/// names the first failing prerequisite in that order.
VerdictReport analyticity_verdict(const GenericSubmanifold& M, const RealVariety& Xt,
                                  const FormalMapJet& H, int bracket_cap, int colength_cap);

}  // namespace crlab
