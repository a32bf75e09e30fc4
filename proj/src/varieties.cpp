#include "crlab/varieties.hpp"

#include <utility>

#include "crlab/errors.hpp"
#include "crlab/qmatrix.hpp"

namespace crlab {

namespace {

// The paired layout z_0..z_{N-1}, ~z_0..~z_{N-1} that all variety index
// arithmetic relies on.
void require_paired_layout(const TablePtr& t) {
    if (!t || t->size() == 0 || t->size() % 2 != 0)
        throw usage_error("variety table must hold an even number of paired variables");
    const std::size_t n = t->size() / 2;
    for (std::size_t i = 0; i < n; ++i) {
        if (t->kind(i) != VarKind::Holo || t->kind(n + i) != VarKind::AntiHolo ||
            t->partner(i) != static_cast<int>(n + i))
            throw usage_error("variety table must list the Z-block first, "
                              "then the paired zeta-block");
    }
}

std::vector<std::string> z_names(const TablePtr& t) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < t->size() / 2; ++i) names.push_back(t->name(i));
    return names;
}

}  // namespace

RealVariety::RealVariety(TablePtr table, std::vector<Poly> sigma, std::optional<int> dim_hint)
    : table_(std::move(table)), sigma_(std::move(sigma)), dim_hint_(dim_hint) {
    require_paired_layout(table_);
    if (sigma_.empty()) throw usage_error("variety needs at least one defining polynomial");
    for (const auto& s : sigma_) {
        if (s.table() != table_)
            throw usage_error("defining polynomial uses a different variable table");
        if (s.is_zero()) throw usage_error("zero defining polynomial");
        if (!s.constant_term().is_zero())
            throw usage_error("origin: defining polynomial does not vanish at 0");
    }
    z_table_ = VarTable::plain(z_names(table_), VarKind::Holo);

    Ideal I(table_, sigma_);
    for (std::size_t i = 0; i < sigma_.size(); ++i)
        if (!member(sigma_[i].conj_involution(), I))
            throw usage_error("reality: conj of defining polynomial " + std::to_string(i + 1) +
                              " is not in the defining ideal");
}

GenericSubmanifold::GenericSubmanifold(TablePtr table, std::vector<Poly> sigma,
                                       std::optional<int> dim_hint)
    : RealVariety(std::move(table), std::move(sigma), dim_hint) {
    const std::size_t N = n_z(), d = this->sigma().size();
    std::vector<GaussRat> origin(this->table()->size());
    QMatrix jac(d, N);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < N; ++j)
            jac.at(i, j) = this->sigma()[i].derivative(j).evaluate(origin);
    if (rank(jac, Exec::Serial) != d)
        throw usage_error("genericity: dsigma/dZ does not have rank " + std::to_string(d) +
                          " at the origin");
}

Ideal segre_at(const RealVariety& X, const std::vector<GaussRat>& p) {
    const std::size_t N = X.n_z();
    if (p.size() != N) throw usage_error("segre_at: point needs " + std::to_string(N) +
                                         " coordinates");
    std::vector<Poly> images;
    images.reserve(2 * N);
    for (std::size_t i = 0; i < N; ++i) images.push_back(Poly::variable(X.z_table(), i));
    for (std::size_t i = 0; i < N; ++i)
        images.push_back(Poly::constant(X.z_table(), p[i].conj()));
    std::vector<Poly> gens;
    gens.reserve(X.sigma().size());
    for (const auto& s : X.sigma()) gens.push_back(s.substitute(images));
    return Ideal(X.z_table(), std::move(gens));
}

Ideal complexification(const RealVariety& X) { return Ideal(X.table(), X.sigma()); }

std::vector<Poly> conj_coefficient_ideal(const std::vector<Poly>& fs, const std::vector<Poly>& G,
                                         const MonomialOrder& block_order,
                                         const std::vector<char>& group_mask,
                                         const TablePtr& out_table,
                                         const std::vector<int>& out_map) {
    std::vector<Poly> out;
    for (const auto& f : fs) {
        Poly r = normal_form(f, G, block_order);
        for (const auto& [key, coeff] : r.group_by(group_mask)) {
            (void)key;
            out.push_back(coeff.conj_involution().transplant(out_table, out_map));
        }
    }
    return out;
}

EssentialReport essential_variety(const RealVariety& X) {
    const std::size_t N = X.n_z();

    // Fresh W-copy of the full table: W-block in the Z positions, the zeta
    // block shared by name, so sigma transplants by index.
    TablePtr wt = VarTable::paired(z_names(X.table()));

    std::vector<int> z_to_w(N);
    for (std::size_t i = 0; i < N; ++i) z_to_w[i] = static_cast<int>(i);
    Ideal segre0 = segre_at(X, std::vector<GaussRat>(N));
    std::vector<Poly> segre_gens;
    for (const auto& g : segre0.generators()) segre_gens.push_back(g.transplant(wt, z_to_w));

    std::vector<char> w_mask(2 * N, 0);
    for (std::size_t i = 0; i < N; ++i) w_mask[i] = 1;
    auto block = MonomialOrder::block(w_mask, MonomialOrder::Kind::DegRevLex,
                                      MonomialOrder::Kind::DegRevLex);
    auto G = buchberger(wt, segre_gens, block);

    std::vector<int> full_to_w(2 * N);
    for (std::size_t i = 0; i < 2 * N; ++i) full_to_w[i] = static_cast<int>(i);
    std::vector<Poly> fs;
    for (const auto& s : X.sigma()) fs.push_back(s.transplant(wt, full_to_w));

    // conj swaps the coefficient polynomials into the W-block positions.
    std::vector<int> out_map(2 * N, -1);
    for (std::size_t i = 0; i < N; ++i) out_map[i] = static_cast<int>(i);
    std::vector<Poly> gens =
        conj_coefficient_ideal(fs, G, block, w_mask, X.z_table(), out_map);

    EssentialReport rep{Ideal(X.z_table(), std::move(gens)), {}, false};
    rep.dim = krull_dim(rep.ideal_of_E0);
    rep.essentially_finite = rep.dim.zero_dimensional;
    return rep;
}

namespace {

// Common core of conditions (b) and (c): the ideal of Gamma x Sigma_0^*
// inside the full table, from a Z-ideal Gamma and the Segre ideal at 0.
Ideal product_ideal(const RealVariety& X, const Ideal& gamma) {
    if (gamma.table() != X.z_table())
        throw usage_error("witness ideal must live in the variety's Z-variables");
    if (gamma.is_unit()) throw usage_error("witness ideal must be proper");
    for (const auto& g : gamma.generators())
        if (!g.constant_term().is_zero())
            throw usage_error("witness ideal must vanish at the origin");

    const std::size_t N = X.n_z();
    std::vector<int> z_to_full(N);
    for (std::size_t i = 0; i < N; ++i) z_to_full[i] = static_cast<int>(i);

    std::vector<Poly> gens;
    for (const auto& g : gamma.generators()) gens.push_back(g.transplant(X.table(), z_to_full));
    Ideal segre0 = segre_at(X, std::vector<GaussRat>(N));
    for (const auto& g : segre0.generators())
        gens.push_back(g.transplant(X.table(), z_to_full).conj_involution());
    return Ideal(X.table(), std::move(gens));
}

}  // namespace

bool check_condition_b(const RealVariety& X, const Ideal& Gamma) {
    Ideal K = product_ideal(X, Gamma);
    for (const auto& s : X.sigma())
        if (!radical_member(s, K)) return false;
    return true;
}

bool check_condition_c(const RealVariety& X, const Ideal& J) {
    Ideal K = product_ideal(X, J);
    for (const auto& s : X.sigma())
        if (!member(s, K)) return false;
    return true;
}

bool check_condition_d(const RealVariety& X, const std::vector<Poly>& mu, int jet_cap) {
    const std::size_t N = X.n_z();
    if (mu.size() != N) throw usage_error("mu needs one component per Z-variable");
    bool nontrivial = false;
    for (const auto& m : mu) {
        if (m.table() != mu[0].table() || m.table()->size() != 1)
            throw usage_error("mu components must share a one-variable table");
        if (!m.constant_term().is_zero())
            throw usage_error("mu components must vanish at s = 0");
        nontrivial = nontrivial || !m.is_zero();
    }
    if (!nontrivial) throw usage_error("mu must have a nonzero component");
    if (jet_cap < 0) throw usage_error("jet cap must be non-negative");

    // Working table (s, zeta_0..zeta_{N-1}).
    std::vector<std::string> zeta;
    for (std::size_t i = 0; i < N; ++i) zeta.push_back(X.table()->name(N + i));
    auto [ct, off] = join_tables(mu[0].table(), VarTable::plain(zeta, VarKind::AntiHolo));

    std::vector<Poly> images;
    images.reserve(2 * N);
    for (std::size_t i = 0; i < N; ++i) images.push_back(mu[i].transplant(ct, {0}));
    for (std::size_t i = 0; i < N; ++i) images.push_back(Poly::variable(ct, off + i));

    // I(Sigma_0^*) in the zeta-only table.
    auto zeta_t = VarTable::plain(zeta, VarKind::AntiHolo);
    std::vector<int> z_to_full(N), full_to_zeta(2 * N, -1), ct_to_zeta(ct->size(), -1);
    for (std::size_t i = 0; i < N; ++i) {
        z_to_full[i] = static_cast<int>(i);
        full_to_zeta[N + i] = static_cast<int>(i);
        ct_to_zeta[off + i] = static_cast<int>(i);
    }
    Ideal segre0 = segre_at(X, std::vector<GaussRat>(N));
    std::vector<Poly> star_gens;
    for (const auto& g : segre0.generators())
        star_gens.push_back(
            g.transplant(X.table(), z_to_full).conj_involution().transplant(zeta_t, full_to_zeta));
    Ideal star(zeta_t, std::move(star_gens));

    std::vector<char> s_mask(ct->size(), 0);
    s_mask[0] = 1;
    for (const auto& sig : X.sigma()) {
        Poly f = sig.substitute(images);
        for (const auto& [key, coeff] : f.group_by(s_mask)) {
            if (key.e[0] > static_cast<std::uint32_t>(jet_cap)) continue;
            if (!radical_member(coeff.transplant(zeta_t, ct_to_zeta), star)) return false;
        }
    }
    return true;
}

}  // namespace crlab
