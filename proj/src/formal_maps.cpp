#include "crlab/formal_maps.hpp"

#include <utility>

#include "crlab/errors.hpp"
#include "crlab/polymat.hpp"

namespace crlab {

FormalMapJet::FormalMapJet(TablePtr z_table, std::vector<Poly> components, int degree_cap)
    : z_table_(std::move(z_table)), components_(std::move(components)), degree_cap_(degree_cap) {
    if (!z_table_ || z_table_->size() == 0) throw usage_error("map needs a source table");
    if (components_.empty()) throw usage_error("map needs at least one component");
    if (degree_cap_ < 1) throw usage_error("degree cap must be at least 1");
    for (const auto& h : components_) {
        if (h.table() != z_table_)
            throw usage_error("map component uses a different variable table");
        if (!h.constant_term().is_zero())
            throw usage_error("no-constant-term: map component has a constant term");
        if (h.total_degree() > degree_cap_)
            throw usage_error("map component exceeds the degree cap " +
                              std::to_string(degree_cap_));
    }
}

FormalMapJet FormalMapJet::identity(const TablePtr& z_table, int degree_cap) {
    return FormalMapJet(z_table, identity_images(z_table), degree_cap);
}

Colength is_finite_map(const FormalMapJet& H, int cap) {
    return local_colength(Ideal(H.z_table(), H.components()), cap);
}

bool jacobian_nonvanishing(const FormalMapJet& H) {
    const std::size_t n = H.z_table()->size();
    if (H.components().size() != n)
        throw usage_error("Jacobian needs a square map (one component per source variable)");
    PolyMatrix jac(n, std::vector<Poly>(n, Poly(H.z_table())));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) jac[i][j] = H.components()[i].derivative(j);
    return !poly_det(jac).is_zero();
}

namespace {

// The complexified jet (H(Z), conj-H(zeta)) as substitution images for the
// target's full table, living in the source's full table.
std::vector<Poly> complexified_images(const FormalMapJet& H, const RealVariety& M) {
    const std::size_t N = M.n_z();
    std::vector<int> z_to_full(N);
    for (std::size_t i = 0; i < N; ++i) z_to_full[i] = static_cast<int>(i);
    std::vector<Poly> images;
    images.reserve(2 * H.components().size());
    for (const auto& h : H.components()) images.push_back(h.transplant(M.table(), z_to_full));
    for (const auto& h : H.components())
        images.push_back(h.transplant(M.table(), z_to_full).conj_involution());
    return images;
}

}  // namespace

bool maps_into(const FormalMapJet& H, const RealVariety& M, const RealVariety& Xt) {
    if (H.z_table() != M.z_table())
        throw usage_error("map components must live in the source Z-variables");
    if (H.components().size() != Xt.n_z())
        throw usage_error("map needs one component per target variable");

    auto images = complexified_images(H, M);
    Ideal I(M.table(), M.sigma());
    for (const auto& sig : Xt.sigma())
        if (!member(sig.substitute(images), I)) return false;
    return true;
}

PreimageIdentityReport verify_segre_preimage_identity(const FormalMapJet& H,
                                                      const RealVariety& M,
                                                      const RealVariety& Xt,
                                                      int colength_cap) {
    PreimageIdentityReport rep;
    rep.map_colength = is_finite_map(H, colength_cap);
    rep.map_sends_into = maps_into(H, M, Xt);
    rep.hypotheses_ok = rep.map_colength.known && rep.map_sends_into;
    if (!rep.map_colength.known)
        rep.failed_hypothesis = "map is not known to be finite within colength cap " +
                                std::to_string(colength_cap);
    else if (!rep.map_sends_into)
        rep.failed_hypothesis = "map does not send the source into the target";

    const std::size_t N = M.n_z();
    Ideal segre_src = segre_at(M, std::vector<GaussRat>(N));
    rep.preimage = preimage_under_map(segre_src, H.components(), Xt.z_table());
    rep.target_segre = segre_at(Xt, std::vector<GaussRat>(Xt.n_z()));
    rep.ideals_match = ideals_equal(*rep.preimage, *rep.target_segre);
    rep.source_dim = krull_dim(segre_src);
    rep.target_dim = krull_dim(*rep.target_segre);
    rep.dims_match = rep.source_dim.krull_dim == rep.target_dim.krull_dim;
    return rep;
}

CriterionReport criterion_variety(const FormalMapJet& H, const GenericSubmanifold& M,
                                  const RealVariety& Xt) {
    if (H.z_table() != M.z_table())
        throw usage_error("map components must live in the source Z-variables");
    if (H.components().size() != Xt.n_z())
        throw usage_error("map needs one component per target variable");

    const std::size_t Ns = M.n_z(), Nt = Xt.n_z();

    // Joint table: target (Z~, zeta~) block, then a W-copy of the source
    // Z-block for the coefficient extraction.
    std::vector<std::string> src_names;
    for (std::size_t i = 0; i < Ns; ++i) src_names.push_back(M.z_table()->name(i));
    auto [joint, off] = join_tables(Xt.table(), VarTable::plain(src_names, VarKind::Holo));

    std::vector<int> z_to_w(Ns);
    for (std::size_t i = 0; i < Ns; ++i) z_to_w[i] = static_cast<int>(off + i);

    // sigma~_j(H(W), zeta~).
    std::vector<Poly> images;
    images.reserve(2 * Nt);
    for (const auto& h : H.components()) images.push_back(h.transplant(joint, z_to_w));
    for (std::size_t k = 0; k < Nt; ++k) images.push_back(Poly::variable(joint, Nt + k));
    std::vector<Poly> fs;
    for (const auto& sig : Xt.sigma()) fs.push_back(sig.substitute(images));

    // I(Sigma_0) of the source in the W-positions, Groebner under W >> zeta~.
    Ideal segre_src = segre_at(M, std::vector<GaussRat>(Ns));
    std::vector<Poly> G_gens;
    for (const auto& g : segre_src.generators()) G_gens.push_back(g.transplant(joint, z_to_w));
    std::vector<char> w_mask(joint->size(), 0);
    for (std::size_t i = 0; i < Ns; ++i) w_mask[off + i] = 1;
    auto block = MonomialOrder::block(w_mask, MonomialOrder::Kind::DegRevLex,
                                      MonomialOrder::Kind::DegRevLex);
    auto G = buchberger(joint, G_gens, block);

    std::vector<int> out_map(joint->size(), -1);
    for (std::size_t k = 0; k < Nt; ++k) out_map[k] = static_cast<int>(k);
    std::vector<Poly> gens = conj_coefficient_ideal(fs, G, block, w_mask, Xt.z_table(), out_map);

    CriterionReport rep{Ideal(Xt.z_table(), std::move(gens)), {}, false};
    rep.dim = krull_dim(rep.ideal);
    rep.satisfied = rep.dim.krull_dim == 0;
    return rep;
}

VerdictReport analyticity_verdict(const GenericSubmanifold& M, const RealVariety& Xt,
                                  const FormalMapJet& H, int bracket_cap, int colength_cap) {
    VerdictReport rep{finite_type_order(M, bracket_cap),
                      essential_variety(M),
                      is_finite_map(H, colength_cap),
                      maps_into(H, M, Xt),
                      criterion_variety(H, M, Xt),
                      Verdict::Inconclusive,
                      ""};

    if (!rep.finite_type.finite)
        rep.reason = "finite type not determined within bracket cap " +
                     std::to_string(bracket_cap);
    else if (!rep.source_essential.essentially_finite)
        rep.reason = "source not essentially finite";
    else if (!rep.map_finite.known)
        rep.reason = "map finiteness not determined within colength cap " +
                     std::to_string(colength_cap);
    else if (!rep.maps_into_ok)
        rep.reason = "map does not send the source into the target";
    else if (!rep.criterion.satisfied)
        rep.reason = "criterion variety has positive dimension";
    else
        rep.verdict = Verdict::CriterionSatisfied;
    return rep;
}

}  // namespace crlab
