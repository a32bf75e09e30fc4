#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include "crlab/errors.hpp"
#include "crlab/varieties.hpp"

using namespace crlab;

namespace {

Poly c(const TablePtr& t, long v) { return Poly::constant(t, GaussRat(v)); }

// Re w = |z|^2 (Heisenberg hypersurface): sigma = w + ~w - 2 z ~z.
GenericSubmanifold heisenberg() {
    auto t = VarTable::paired({"z", "w"});
    Poly z = Poly::variable(t, 0), w = Poly::variable(t, 1);
    Poly zx = Poly::variable(t, 2), wx = Poly::variable(t, 3);
    return GenericSubmanifold(t, {w + wx - c(t, 2) * z * zx});
}

// Re w = |z|^4: sigma = w + ~w - 2 z^2 ~z^2.
GenericSubmanifold quartic() {
    auto t = VarTable::paired({"z", "w"});
    Poly z = Poly::variable(t, 0), w = Poly::variable(t, 1);
    Poly zx = Poly::variable(t, 2), wx = Poly::variable(t, 3);
    return GenericSubmanifold(t, {w + wx - c(t, 2) * z.pow(2) * zx.pow(2)});
}

// Re w = |z1|^2 in C^3: the z2 direction is flat.
GenericSubmanifold degenerate() {
    auto t = VarTable::paired({"z1", "z2", "w"});
    Poly z1 = Poly::variable(t, 0), w = Poly::variable(t, 2);
    Poly z1x = Poly::variable(t, 3), wx = Poly::variable(t, 5);
    return GenericSubmanifold(t, {w + wx - c(t, 2) * z1 * z1x});
}

// Re w = 0: totally flat hyperplane.
GenericSubmanifold flat() {
    auto t = VarTable::paired({"z", "w"});
    Poly w = Poly::variable(t, 1), wx = Poly::variable(t, 3);
    return GenericSubmanifold(t, {w + wx});
}

bool has_message(const usage_error& e, const std::string& needle) {
    return std::string(e.what()).find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("constructor validates reality, origin, genericity") {
    auto t = VarTable::paired({"z", "w"});
    Poly z = Poly::variable(t, 0), w = Poly::variable(t, 1);
    Poly zx = Poly::variable(t, 2), wx = Poly::variable(t, 3);

    // <w> is not conjugation-stable: conj(w) = ~w is not a member.
    try {
        RealVariety bad(t, {w});
        FAIL("reality violation accepted");
    } catch (const usage_error& e) {
        CHECK(has_message(e, "reality"));
    }

    // Constant term 1: the variety misses the origin.
    try {
        RealVariety bad(t, {w + wx + c(t, 1)});
        FAIL("origin violation accepted");
    } catch (const usage_error& e) {
        CHECK(has_message(e, "origin"));
    }

    // w ~w is real and vanishes at 0, but dsigma/dZ = (0, ~w) vanishes there.
    try {
        GenericSubmanifold bad(t, {w * wx});
        FAIL("genericity violation accepted");
    } catch (const usage_error& e) {
        CHECK(has_message(e, "genericity"));
    }

    // w ~w is still a fine RealVariety.
    CHECK_NOTHROW(RealVariety(t, {w * wx}));

    auto m = heisenberg();
    CHECK(m.codim() == 1);
    CHECK(m.n_z() == 2);
    CHECK(m.z_table()->size() == 2);
    // i*(w - ~w) is real in the involution sense: conj = -i*(~w - w) = itself.
    CHECK_NOTHROW(RealVariety(t, {Poly::constant(t, GaussRat::i()) * (w - wx)}));
    // A non-paired table cannot host a RealVariety.
    CHECK_THROWS_AS(RealVariety(VarTable::plain({"z", "w"}), {Poly(VarTable::plain({"z", "w"}))}),
                    usage_error);
}

TEST_CASE("segre varieties by direct substitution") {
    auto m = heisenberg();
    const auto& zt = m.z_table();
    Poly z = Poly::variable(zt, 0), w = Poly::variable(zt, 1);

    // Sigma_0 = {w = 0}.
    Ideal s0 = segre_at(m, {GaussRat(), GaussRat()});
    REQUIRE(s0.generators().size() == 1);
    CHECK(s0.generators()[0] == w);

    // Sigma_(1,0) = {w = 2z}: substitute conj(p) = (1,0) into the zeta block.
    Ideal s1 = segre_at(m, {GaussRat(1), GaussRat()});
    REQUIRE(s1.generators().size() == 1);
    CHECK(s1.generators()[0] == w - c(zt, 2) * z);

    // A complex point: p = (i, 0) conjugates to (-i, 0), so w - 2 z (-i) = w + 2i z.
    Ideal si = segre_at(m, {GaussRat::i(), GaussRat()});
    REQUIRE(si.generators().size() == 1);
    CHECK(si.generators()[0] == w + Poly::constant(zt, GaussRat(mpq_class(0), mpq_class(2))) * z);

    // Wrong arity is rejected.
    CHECK_THROWS_AS(segre_at(m, {GaussRat(1)}), usage_error);

    // Sigma_0 passes through the origin on every fixture.
    for (const auto& fix : {heisenberg(), quartic(), degenerate(), flat()}) {
        Ideal s = segre_at(fix, std::vector<GaussRat>(fix.n_z()));
        for (const auto& g : s.generators()) CHECK(g.constant_term().is_zero());
    }
}

TEST_CASE("complexification and its slice at zeta = 0") {
    auto m = heisenberg();
    Ideal xc = complexification(m);
    REQUIRE(xc.generators().size() == 1);
    CHECK(xc.generators()[0] == m.sigma()[0]);
    CHECK(xc.table() == m.table());

    // Substituting zeta = 0 into the generators recovers segre_at(m, 0).
    const auto& t = m.table();
    std::vector<Poly> slice_images = {Poly::variable(t, 0), Poly::variable(t, 1), Poly(t),
                                      Poly(t)};
    std::vector<int> z_only(t->size(), -1);
    z_only[0] = 0;
    z_only[1] = 1;
    Ideal s0 = segre_at(m, {GaussRat(), GaussRat()});
    for (std::size_t i = 0; i < xc.generators().size(); ++i) {
        Poly sliced = xc.generators()[i].substitute(slice_images).transplant(m.z_table(), z_only);
        CHECK(sliced == s0.generators()[i]);
    }

    // Conjugation-stability of the complexification ideal, on every fixture.
    for (const auto& fix : {heisenberg(), quartic(), degenerate(), flat()}) {
        Ideal ideal = complexification(fix);
        for (const auto& g : ideal.generators()) CHECK(member(g.conj_involution(), ideal));
    }
}

TEST_CASE("essential variety of the Heisenberg hypersurface") {
    auto m = heisenberg();
    EssentialReport rep = essential_variety(m);
    const auto& zt = m.z_table();

    // Sigma_p = {w = 2 conj(p_z) z}; the intersection over all p forces z = w = 0.
    REQUIRE(rep.ideal_of_E0.basis().size() == 2);
    CHECK(rep.ideal_of_E0.basis()[0] == Poly::variable(zt, 0));
    CHECK(rep.ideal_of_E0.basis()[1] == Poly::variable(zt, 1));
    CHECK(rep.dim.krull_dim == 0);
    CHECK(rep.dim.zero_dimensional);
    CHECK(rep.essentially_finite);
    REQUIRE(rep.dim.colength.has_value());
    CHECK(*rep.dim.colength == 1);
}

TEST_CASE("essential variety of the quartic model") {
    auto m = quartic();
    EssentialReport rep = essential_variety(m);
    const auto& zt = m.z_table();
    Poly z = Poly::variable(zt, 0), w = Poly::variable(zt, 1);

    // Coefficients of sigma(W, zeta) modulo I(Sigma_0): w and z^2 survive.
    REQUIRE(rep.ideal_of_E0.basis().size() == 2);
    CHECK(rep.ideal_of_E0.basis()[0] == z * z);
    CHECK(rep.ideal_of_E0.basis()[1] == w);
    CHECK(rep.essentially_finite);
    REQUIRE(rep.dim.colength.has_value());
    CHECK(*rep.dim.colength == 2);  // standard monomials {1, z}
}

TEST_CASE("essential variety detects the degenerate direction") {
    auto m = degenerate();
    EssentialReport rep = essential_variety(m);
    const auto& zt = m.z_table();

    // The z2-axis lies in every Segre variety, so E_0 = {z1 = w = 0} has dim 1.
    REQUIRE(rep.ideal_of_E0.basis().size() == 2);
    CHECK(rep.ideal_of_E0.basis()[0] == Poly::variable(zt, 0));
    CHECK(rep.ideal_of_E0.basis()[1] == Poly::variable(zt, 2));
    CHECK(rep.dim.krull_dim == 1);
    CHECK_FALSE(rep.essentially_finite);

    // Flat hyperplane: E_0 = {w = 0} is a hyperplane too.
    auto f = flat();
    EssentialReport frep = essential_variety(f);
    REQUIRE(frep.ideal_of_E0.basis().size() == 1);
    CHECK(frep.ideal_of_E0.basis()[0] == Poly::variable(f.z_table(), 1));
    CHECK(frep.dim.krull_dim == 1);
    CHECK_FALSE(frep.essentially_finite);
}

TEST_CASE("essential variety with two defining equations") {
    auto t = VarTable::paired({"z", "w"});
    Poly z = Poly::variable(t, 0), w = Poly::variable(t, 1);
    Poly zx = Poly::variable(t, 2), wx = Poly::variable(t, 3);
    RealVariety x(t, {w + wx, z * zx});

    // Sigma_Z contains Sigma_0 = {w = 0} iff conj(w_Z) = 0 and W_z conj(z_Z) = 0
    // for all W_z, i.e. z = w = 0: a degree-1 W-monomial carries a coefficient.
    EssentialReport rep = essential_variety(x);
    REQUIRE(rep.ideal_of_E0.basis().size() == 2);
    CHECK(rep.ideal_of_E0.basis()[0] == Poly::variable(x.z_table(), 0));
    CHECK(rep.ideal_of_E0.basis()[1] == Poly::variable(x.z_table(), 1));
    CHECK(rep.essentially_finite);
}

TEST_CASE("E_0 lies inside Sigma_0 and Segre fibers pass through 0") {
    for (const auto& fix : {heisenberg(), quartic(), degenerate(), flat()}) {
        EssentialReport rep = essential_variety(fix);
        Ideal s0 = segre_at(fix, std::vector<GaussRat>(fix.n_z()));

        // Vanishing on E_0 of everything vanishing on Sigma_0.
        for (const auto& g : s0.generators()) CHECK(radical_member(g, rep.ideal_of_E0));

        // sigma_i(0, zeta) vanishes on Sigma_0^*: substitute Z = 0, keep zeta.
        const auto& t = fix.table();
        const std::size_t n = fix.n_z();
        std::vector<std::string> names;
        for (std::size_t i = 0; i < n; ++i) names.push_back(t->name(n + i));
        auto zeta_t = VarTable::plain(names, VarKind::AntiHolo);

        std::vector<Poly> images;
        std::vector<int> z_up(n), zeta_down(t->size(), -1);
        for (std::size_t i = 0; i < n; ++i) images.push_back(Poly(t));
        for (std::size_t i = 0; i < n; ++i) {
            images.push_back(Poly::variable(t, n + i));
            z_up[i] = static_cast<int>(i);
            zeta_down[n + i] = static_cast<int>(i);
        }
        std::vector<Poly> star_gens;
        for (const auto& g : s0.generators())
            star_gens.push_back(
                g.transplant(t, z_up).conj_involution().transplant(zeta_t, zeta_down));
        Ideal star(zeta_t, star_gens);
        for (const auto& s : fix.sigma())
            CHECK(radical_member(s.substitute(images).transplant(zeta_t, zeta_down), star));
    }
}

TEST_CASE("essential-variety basis is an order-independent canonical object") {
    for (const auto& fix : {heisenberg(), quartic(), degenerate()}) {
        Ideal e = essential_variety(fix).ideal_of_E0;

        // Recompute through lex, then return to the canonical degrevlex basis.
        auto lex_basis = buchberger(e.table(), e.generators(), MonomialOrder::lex());
        auto back = buchberger(e.table(), lex_basis, MonomialOrder::degrevlex());
        CHECK(back == e.basis());
    }
}

TEST_CASE("condition (c): exact containment in J + Sigma_0^*") {
    auto md = degenerate();
    {
        const auto& zt = md.z_table();
        Ideal j(zt, {Poly::variable(zt, 0), Poly::variable(zt, 2)});
        CHECK(check_condition_c(md, j));
    }

    auto mh = heisenberg();
    const auto& zt = mh.z_table();
    Poly z = Poly::variable(zt, 0), w = Poly::variable(zt, 1);

    // J = maximal ideal: sigma = w*1 + z*(-2 ~z) + ~w term by term.
    CHECK(check_condition_c(mh, Ideal(zt, {z, w})));

    // J = <w> leaves the z ~z term uncovered.
    CHECK_FALSE(check_condition_c(mh, Ideal(zt, {w})));

    // Unit J is rejected.
    CHECK_THROWS_AS(check_condition_c(mh, Ideal(zt, {c(zt, 1)})), usage_error);
    // J must vanish at 0.
    CHECK_THROWS_AS(check_condition_c(mh, Ideal(zt, {z + c(zt, 1)})), usage_error);
}

TEST_CASE("condition (b): radical containment distinguishes witnesses") {
    auto md = degenerate();
    const auto& zt = md.z_table();
    Poly z1 = Poly::variable(zt, 0), w = Poly::variable(zt, 2);

    CHECK(check_condition_b(md, Ideal(zt, {z1, w})));

    // <z1^2, w> passes only up to radical: z1 itself is not a member, but
    // sigma vanishes on the product variety all the same.
    Ideal thick(zt, {z1 * z1, w});
    CHECK_FALSE(check_condition_c(md, thick));
    CHECK(check_condition_b(md, thick));

    auto mh = heisenberg();
    const auto& ht = mh.z_table();
    CHECK_FALSE(check_condition_b(mh, Ideal(ht, {Poly::variable(ht, 1)})));

    // (c) implies (b) wherever we claim (c).
    CHECK(check_condition_b(mh, Ideal(ht, {Poly::variable(ht, 0), Poly::variable(ht, 1)})));
}

TEST_CASE("condition (d): curves inside the essential variety") {
    auto st = VarTable::plain({"s"});
    Poly s = Poly::variable(st, 0);

    // The z2-axis curve lies in E_0 of the degenerate fixture.
    auto md = degenerate();
    CHECK(check_condition_d(md, {Poly(st), s, Poly(st)}, 8));

    // No nontrivial curve fits inside the Heisenberg E_0 = {0}.
    auto mh = heisenberg();
    CHECK_FALSE(check_condition_d(mh, {s, Poly(st)}, 8));
    CHECK_FALSE(check_condition_d(mh, {Poly(st), s}, 8));
    CHECK_FALSE(check_condition_d(mh, {s, s * s}, 8));

    // Trivial curves and constant terms are rejected.
    CHECK_THROWS_AS(check_condition_d(mh, {Poly(st), Poly(st)}, 8), usage_error);
    CHECK_THROWS_AS(check_condition_d(mh, {s + c(st, 1), Poly(st)}, 8), usage_error);

    // Consistency with (a) across fixtures: a curve witness exists exactly
    // when the fixture fails essential finiteness.
    CHECK_FALSE(essential_variety(md).essentially_finite);
    CHECK(essential_variety(mh).essentially_finite);
}
