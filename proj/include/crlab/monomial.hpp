#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

namespace crlab {

/// Exponent vector indexed by a VarTable. Length always equals the table size.
struct Monomial {
    std::vector<std::uint32_t> e;

    Monomial() = default;
    explicit Monomial(std::size_t n) : e(n, 0) {}

    static Monomial one(std::size_t n) { return Monomial(n); }
    static Monomial var(std::size_t n, std::size_t i, std::uint32_t k = 1) {
        Monomial m(n);
        m.e[i] = k;
        return m;
    }

    std::size_t size() const { return e.size(); }
    bool is_one() const {
        for (auto x : e)
            if (x) return false;
        return true;
    }
    long degree() const { return std::accumulate(e.begin(), e.end(), 0L); }

    Monomial operator*(const Monomial& o) const {
        Monomial m(*this);
        for (std::size_t i = 0; i < e.size(); ++i) m.e[i] += o.e[i];
        return m;
    }

    bool divides(const Monomial& o) const {
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > o.e[i]) return false;
        return true;
    }

    /// Quotient o / *this; caller guarantees divisibility.
    Monomial quotient_of(const Monomial& o) const {
        Monomial m(o);
        for (std::size_t i = 0; i < e.size(); ++i) m.e[i] -= e[i];
        return m;
    }

    Monomial lcm(const Monomial& o) const {
        Monomial m(*this);
        for (std::size_t i = 0; i < e.size(); ++i)
            if (o.e[i] > m.e[i]) m.e[i] = o.e[i];
        return m;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return a.e != b.e; }
    // Structural order for canonical term storage; not a term order.
    friend bool operator<(const Monomial& a, const Monomial& b) { return a.e < b.e; }
};

}  // namespace crlab
