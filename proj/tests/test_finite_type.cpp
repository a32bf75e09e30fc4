#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "crlab/errors.hpp"
#include "crlab/finite_type.hpp"

using namespace crlab;

namespace {

Poly c(const TablePtr& t, long v) { return Poly::constant(t, GaussRat(v)); }

GenericSubmanifold heisenberg() {
    auto t = VarTable::paired({"z", "w"});
    Poly z = Poly::variable(t, 0), w = Poly::variable(t, 1);
    Poly zx = Poly::variable(t, 2), wx = Poly::variable(t, 3);
    return GenericSubmanifold(t, {w + wx - c(t, 2) * z * zx});
}

GenericSubmanifold quartic() {
    auto t = VarTable::paired({"z", "w"});
    Poly z = Poly::variable(t, 0), w = Poly::variable(t, 1);
    Poly zx = Poly::variable(t, 2), wx = Poly::variable(t, 3);
    return GenericSubmanifold(t, {w + wx - c(t, 2) * z.pow(2) * zx.pow(2)});
}

GenericSubmanifold degenerate() {
    auto t = VarTable::paired({"z1", "z2", "w"});
    Poly z1 = Poly::variable(t, 0), w = Poly::variable(t, 2);
    Poly z1x = Poly::variable(t, 3), wx = Poly::variable(t, 5);
    return GenericSubmanifold(t, {w + wx - c(t, 2) * z1 * z1x});
}

GenericSubmanifold flat() {
    auto t = VarTable::paired({"z", "w"});
    Poly w = Poly::variable(t, 1), wx = Poly::variable(t, 3);
    return GenericSubmanifold(t, {w + wx});
}

Poly random_poly(const TablePtr& t, std::mt19937& rng) {
    std::uniform_int_distribution<int> nterms(0, 2);
    std::uniform_int_distribution<int> coeff(-2, 2);
    std::uniform_int_distribution<int> budget(0, 2);
    std::uniform_int_distribution<std::size_t> pick(0, t->size() - 1);
    Poly p(t);
    const int k = nterms(rng);
    for (int i = 0; i < k; ++i) {
        Monomial m(t->size());
        const int b = budget(rng);
        for (int d = 0; d < b; ++d) m.e[pick(rng)] += 1;
        if (int cc = coeff(rng)) p += Poly::monomial(t, m, GaussRat(cc));
    }
    return p;
}

VectorField random_field(const TablePtr& t, std::mt19937& rng) {
    VectorField v{t, {}};
    for (std::size_t i = 0; i < t->size(); ++i) v.coeffs.push_back(random_poly(t, rng));
    return v;
}

bool is_zero_field(const VectorField& v) {
    for (const auto& p : v.coeffs)
        if (!p.is_zero()) return false;
    return true;
}

std::vector<GaussRat> at0(const VectorField& v) {
    std::vector<GaussRat> row;
    for (const auto& p : v.coeffs) row.push_back(p.constant_term());
    return row;
}

}  // namespace

TEST_CASE("tangent fields of the Heisenberg hypersurface") {
    auto m = heisenberg();
    const auto& t = m.table();
    Poly z = Poly::variable(t, 0), zx = Poly::variable(t, 2);

    auto fields = cr_fields(m);
    REQUIRE(fields.size() == 2);

    // L = d/d~z + 2z d/d~w annihilates w + ~w - 2 z ~z.
    CHECK(fields[0].coeffs[0].is_zero());
    CHECK(fields[0].coeffs[1].is_zero());
    CHECK(fields[0].coeffs[2] == c(t, 1));
    CHECK(fields[0].coeffs[3] == c(t, 2) * z);

    // Its conjugate L-bar = d/dz + 2~z d/dw.
    CHECK(fields[1].coeffs[0] == c(t, 1));
    CHECK(fields[1].coeffs[1] == c(t, 2) * zx);
    CHECK(fields[1].coeffs[2].is_zero());
    CHECK(fields[1].coeffs[3].is_zero());
}

TEST_CASE("tangent fields of the quartic, degenerate, and flat models") {
    auto m4 = quartic();
    {
        const auto& t = m4.table();
        Poly z = Poly::variable(t, 0), zx = Poly::variable(t, 2);
        auto fields = cr_fields(m4);
        REQUIRE(fields.size() == 2);
        // L = d/d~z + 4 z^2 ~z d/d~w.
        CHECK(fields[0].coeffs[2] == c(t, 1));
        CHECK(fields[0].coeffs[3] == c(t, 4) * z.pow(2) * zx);
    }

    auto md = degenerate();
    {
        const auto& t = md.table();
        Poly z1 = Poly::variable(t, 0);
        auto fields = cr_fields(md);
        REQUIRE(fields.size() == 4);  // two (0,1) fields and their conjugates
        CHECK(fields[0].coeffs[3] == c(t, 1));
        CHECK(fields[0].coeffs[5] == c(t, 2) * z1);
        CHECK(fields[1].coeffs[4] == c(t, 1));
        CHECK(fields[1].coeffs[5].is_zero());
    }

    auto mf = flat();
    {
        const auto& t = mf.table();
        auto fields = cr_fields(mf);
        REQUIRE(fields.size() == 2);
        CHECK(fields[0].coeffs[2] == c(t, 1));
        CHECK(fields[0].coeffs[3].is_zero());
        CHECK(fields[1].coeffs[0] == c(t, 1));
    }
}

TEST_CASE("all constructed fields and their brackets are tangent") {
    for (const auto& m : {heisenberg(), quartic(), degenerate(), flat()}) {
        auto fields = cr_fields(m);
        for (const auto& f : fields)
            for (const auto& s : m.sigma()) CHECK(apply_field(f, s).is_zero());

        // A bracket of derivations annihilating sigma annihilates sigma.
        for (const auto& f : fields)
            for (const auto& g : fields) {
                VectorField b = lie_bracket(f, g);
                for (const auto& s : m.sigma()) CHECK(apply_field(b, s).is_zero());
            }
    }
}

TEST_CASE("apply_field is a derivation") {
    auto t = VarTable::paired({"a", "b"});
    std::mt19937 rng(31337);
    for (int trial = 0; trial < 20; ++trial) {
        VectorField v = random_field(t, rng);
        Poly f = random_poly(t, rng), g = random_poly(t, rng);
        CHECK(apply_field(v, f * g) == f * apply_field(v, g) + g * apply_field(v, f));
        CHECK(apply_field(v, f + g) == apply_field(v, f) + apply_field(v, g));
    }

    auto other = VarTable::paired({"c", "d"});
    VectorField v{t, std::vector<Poly>(4, Poly(t))};
    CHECK_THROWS_AS(apply_field(v, Poly::variable(other, 0)), usage_error);
}

TEST_CASE("lie bracket algebra") {
    auto m = heisenberg();
    const auto& t = m.table();
    auto fields = cr_fields(m);

    // [L, L-bar] = 2 d/dw - 2 d/d~w: the Levi form is nondegenerate.
    VectorField levi = lie_bracket(fields[0], fields[1]);
    CHECK(levi.coeffs[0].is_zero());
    CHECK(levi.coeffs[1] == c(t, 2));
    CHECK(levi.coeffs[2].is_zero());
    CHECK(levi.coeffs[3] == c(t, -2));

    std::mt19937 rng(420017);
    for (int trial = 0; trial < 12; ++trial) {
        VectorField u = random_field(t, rng), v = random_field(t, rng),
                    w = random_field(t, rng);

        CHECK(is_zero_field(lie_bracket(u, u)));

        VectorField uv = lie_bracket(u, v), vu = lie_bracket(v, u);
        for (std::size_t i = 0; i < uv.coeffs.size(); ++i)
            CHECK(uv.coeffs[i] == -vu.coeffs[i]);

        // Jacobi: [[u,v],w] + [[v,w],u] + [[w,u],v] = 0.
        VectorField j1 = lie_bracket(lie_bracket(u, v), w);
        VectorField j2 = lie_bracket(lie_bracket(v, w), u);
        VectorField j3 = lie_bracket(lie_bracket(w, u), v);
        for (std::size_t i = 0; i < j1.coeffs.size(); ++i)
            CHECK((j1.coeffs[i] + j2.coeffs[i] + j3.coeffs[i]).is_zero());
    }

    auto other = VarTable::paired({"c", "d"});
    VectorField foreign{other, std::vector<Poly>(4, Poly(other))};
    CHECK_THROWS_AS(lie_bracket(fields[0], foreign), usage_error);
}

TEST_CASE("finite type of the model hypersurfaces") {
    // Levi-nondegenerate: the first bracket already spans.
    TypeReport h = finite_type_order(heisenberg(), 4);
    CHECK(h.finite);
    CHECK(h.order == 2);
    CHECK(h.cap == 4);
    CHECK(h.span_dims == std::vector<std::size_t>{2, 3});

    // |z|^4 model: brackets of length 4 are needed.
    TypeReport q = finite_type_order(quartic(), 6);
    CHECK(q.finite);
    CHECK(q.order == 4);
    CHECK(q.span_dims == std::vector<std::size_t>{2, 2, 2, 3});

    // The same model under a too-small cap stays undetermined.
    TypeReport qshort = finite_type_order(quartic(), 2);
    CHECK_FALSE(qshort.finite);
    CHECK(qshort.order == 0);
    CHECK(qshort.span_dims == std::vector<std::size_t>{2, 2});

    // Degenerate direction does not stop the Levi bracket in z1.
    TypeReport d = finite_type_order(degenerate(), 4);
    CHECK(d.finite);
    CHECK(d.order == 2);
    CHECK(d.span_dims == std::vector<std::size_t>{4, 5});

    // Flat hyperplane: the closure dies immediately, the span stays at 2.
    TypeReport f = finite_type_order(flat(), 6);
    CHECK_FALSE(f.finite);
    CHECK(f.span_dims == std::vector<std::size_t>(6, 2));

    CHECK_THROWS_AS(finite_type_order(heisenberg(), 0), usage_error);
}

TEST_CASE("serial and parallel closures agree") {
    for (const auto& m : {heisenberg(), quartic(), degenerate(), flat()}) {
        TypeReport a = finite_type_order(m, 5, Exec::Serial);
        TypeReport b = finite_type_order(m, 5, Exec::Parallel);
        CHECK(a.finite == b.finite);
        CHECK(a.order == b.order);
        CHECK(a.span_dims == b.span_dims);
    }
}

TEST_CASE("left-nested words span as much as arbitrary bracket words") {
    for (const auto& m : {heisenberg(), quartic(), degenerate(), flat()}) {
        auto gens = cr_fields(m);
        const std::size_t n = 2 * m.n_z();

        std::vector<VectorField> len2;
        for (const auto& g : gens)
            for (const auto& h : gens) len2.push_back(lie_bracket(g, h));

        // Length 3 in every shape: [g,[h,k]] and [[h,k],g].
        std::vector<VectorField> len3;
        for (const auto& g : gens)
            for (const auto& b : len2) {
                len3.push_back(lie_bracket(g, b));
                len3.push_back(lie_bracket(b, g));
            }

        QMatrix span(0, n);
        for (const auto& f : gens) span.append_row(at0(f));
        const std::size_t r1 = rank(span, Exec::Serial);
        for (const auto& f : len2) span.append_row(at0(f));
        const std::size_t r2 = rank(span, Exec::Serial);
        for (const auto& f : len3) span.append_row(at0(f));
        const std::size_t r3 = rank(span, Exec::Serial);

        TypeReport rep = finite_type_order(m, 3);
        REQUIRE(rep.span_dims.size() >= 1);
        CHECK(rep.span_dims[0] == r1);
        if (rep.span_dims.size() >= 2) CHECK(rep.span_dims[1] == r2);
        if (rep.span_dims.size() >= 3) CHECK(rep.span_dims[2] == r3);
    }
}

TEST_CASE("type is invariant under linear changes of coordinates") {
    // z = z' + i w', w = w' pulled through the pairing: the transformed
    // Heisenberg defining function stays real and generic.
    auto t = VarTable::paired({"z", "w"});
    Poly z = Poly::variable(t, 0), w = Poly::variable(t, 1);
    Poly zx = Poly::variable(t, 2), wx = Poly::variable(t, 3);
    Poly iw = Poly::constant(t, GaussRat::i()) * w;
    Poly iwx = Poly::constant(t, GaussRat::i()) * wx;
    GenericSubmanifold sheared(t, {w + wx - c(t, 2) * (z + iw) * (zx - iwx)});

    TypeReport rep = finite_type_order(sheared, 4);
    CHECK(rep.finite);
    CHECK(rep.order == 2);
    CHECK(rep.span_dims == std::vector<std::size_t>{2, 3});

    // A real rescaling composed with a shear on the quartic model.
    Poly zq = z + w;
    Poly zqx = zx + wx;
    GenericSubmanifold sheared4(t, {w + wx - c(t, 2) * zq.pow(2) * zqx.pow(2)});
    TypeReport rep4 = finite_type_order(sheared4, 6);
    CHECK(rep4.finite);
    CHECK(rep4.order == 4);
}
