// Wall-clock comparison of the serial reference kernels against the OpenMP
// paths, on the three data-parallel hot spots: exact rank, batch normal form,
// and the bracket-closure type computation.  Results must agree bit-for-bit;
// the benchmark asserts that before printing timings.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "crlab/finite_type.hpp"
#include "crlab/groebner.hpp"
#include "crlab/qmatrix.hpp"
#include "crlab/varieties.hpp"

using namespace crlab;
using clock_type = std::chrono::steady_clock;

namespace {

double ms_since(clock_type::time_point t0) {
    return std::chrono::duration<double, std::milli>(clock_type::now() - t0).count();
}

void report(const std::string& name, double serial_ms, double parallel_ms) {
    std::cout << name << ": serial " << serial_ms << " ms, parallel " << parallel_ms
              << " ms, speedup " << (parallel_ms > 0 ? serial_ms / parallel_ms : 0.0)
              << "x\n";
}

// Random full-ish matrix with small rational entries; exact arithmetic makes
// the elimination cost grow with entry size, which is the realistic load.
QMatrix random_matrix(std::size_t n, std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 9);
    QMatrix m(n, n + 8);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            m.at(r, c) = GaussRat(mpq_class(num(rng), den(rng)), mpq_class(num(rng), den(rng)));
    return m;
}

void bench_rank(std::size_t n) {
    std::mt19937 rng(12345);
    QMatrix m = random_matrix(n, rng);

    auto t0 = clock_type::now();
    std::size_t rs = rank(m, Exec::Serial);
    double serial_ms = ms_since(t0);

    t0 = clock_type::now();
    std::size_t rp = rank(m, Exec::Parallel);
    double parallel_ms = ms_since(t0);

    if (rs != rp) {
        std::cerr << "rank mismatch: serial " << rs << " vs parallel " << rp << "\n";
        std::exit(1);
    }
    report("rank " + std::to_string(n) + "x" + std::to_string(n + 8), serial_ms,
           parallel_ms);
}

// Random polynomial in the given variables, dense-ish in low degree.
Poly random_poly(const TablePtr& t, std::mt19937& rng, int terms, int deg) {
    std::uniform_int_distribution<int> coef(-5, 5);
    std::uniform_int_distribution<std::size_t> var(0, t->size() - 1);
    std::uniform_int_distribution<int> dd(1, deg);
    Poly p(t);
    for (int k = 0; k < terms; ++k) {
        Poly mono = Poly::constant(t, GaussRat(coef(rng)));
        int d = dd(rng);
        for (int j = 0; j < d; ++j) mono = mono * Poly::variable(t, var(rng));
        p = p + mono;
    }
    return p;
}

void bench_normal_form(int batch) {
    auto t = VarTable::paired({"z1", "z2", "w"});
    Poly z1 = Poly::variable(t, 0), z2 = Poly::variable(t, 1), w = Poly::variable(t, 2);
    Poly z1x = Poly::variable(t, 3), z2x = Poly::variable(t, 4), wx = Poly::variable(t, 5);
    Ideal I(t, {w + wx - Poly::constant(t, GaussRat(2)) * (z1 * z1x + z2 * z2x),
                z1 * z1 * z1 - z2 * z2, w * wx - z1 * z2x});

    std::mt19937 rng(777);
    std::vector<Poly> fs;
    fs.reserve(static_cast<std::size_t>(batch));
    for (int k = 0; k < batch; ++k) fs.push_back(random_poly(t, rng, 24, 6));

    auto t0 = clock_type::now();
    std::vector<Poly> rs = normal_form_batch(fs, I, Exec::Serial);
    double serial_ms = ms_since(t0);

    t0 = clock_type::now();
    std::vector<Poly> rp = normal_form_batch(fs, I, Exec::Parallel);
    double parallel_ms = ms_since(t0);

    if (rs != rp) {
        std::cerr << "normal_form_batch mismatch\n";
        std::exit(1);
    }
    report("normal_form_batch " + std::to_string(batch), serial_ms, parallel_ms);
}

void bench_bracket_closure(int cap) {
    // Tube-like quartic: stays undetermined long enough to exercise the
    // closure at every length up to the cap.
    auto t = VarTable::paired({"z1", "z2", "w"});
    Poly z1 = Poly::variable(t, 0), z2 = Poly::variable(t, 1), w = Poly::variable(t, 2);
    Poly z1x = Poly::variable(t, 3), z2x = Poly::variable(t, 4), wx = Poly::variable(t, 5);
    GenericSubmanifold M(t,
                         {w + wx -
                          Poly::constant(t, GaussRat(2)) * z1 * z1 * z1x * z1x * z2 * z2x});

    auto t0 = clock_type::now();
    TypeReport rs = finite_type_order(M, cap, Exec::Serial);
    double serial_ms = ms_since(t0);

    t0 = clock_type::now();
    TypeReport rp = finite_type_order(M, cap, Exec::Parallel);
    double parallel_ms = ms_since(t0);

    if (rs.finite != rp.finite || rs.order != rp.order || rs.span_dims != rp.span_dims) {
        std::cerr << "finite_type_order mismatch between execution policies\n";
        std::exit(1);
    }
    report("bracket_closure cap " + std::to_string(cap), serial_ms, parallel_ms);
}

}  // namespace

int main(int argc, char** argv) {
    // Scale factor: bench_kernels [small|full]; default small keeps CI fast.
    const bool full = argc > 1 && std::string(argv[1]) == "full";

    bench_rank(full ? 96 : 48);
    bench_normal_form(full ? 256 : 64);
    bench_bracket_closure(full ? 5 : 4);
    std::cout << "all kernels agree across execution policies\n";
    return 0;
}
