#pragma once

#include <map>
#include <string>
#include <vector>

#include "crlab/monomial.hpp"
#include "crlab/order.hpp"
#include "crlab/rational.hpp"
#include "crlab/vartable.hpp"

namespace crlab {

/// Sparse multivariate polynomial over the Gaussian rationals. Terms are kept
/// in a canonical structural order with no zero coefficients. Every operation
/// is exact; mixing polynomials from different tables is a usage error, and
/// results exceeding the configured degree/term caps fail hard.
class Poly {
  public:
    using TermMap = std::map<Monomial, GaussRat>;

    Poly() = default;
    explicit Poly(TablePtr table) : table_(std::move(table)) {}

    static Poly constant(TablePtr table, GaussRat c);
    static Poly variable(TablePtr table, std::size_t i, std::uint32_t k = 1);
    static Poly monomial(TablePtr table, Monomial m, GaussRat c);

    const TablePtr& table() const { return table_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t num_terms() const { return terms_.size(); }
    long total_degree() const;  // -1 for the zero polynomial

    GaussRat coeff(const Monomial& m) const;
    GaussRat constant_term() const { return coeff(Monomial::one(table_->size())); }
    bool uses_var(std::size_t i) const;
    /// True when every term's support lies in positions with mask[i] != 0.
    bool supported_on(const std::vector<char>& mask) const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    Poly scaled(const GaussRat& c) const;
    Poly pow(std::uint32_t k) const;
    Poly derivative(std::size_t var) const;

    /// Ring homomorphism sending variable i to images[i]; the images live in
    /// a common table, which becomes the table of the result.
    Poly substitute(const std::vector<Poly>& images) const;

    GaussRat evaluate(const std::vector<GaussRat>& point) const;

    /// Conjugate every coefficient and swap each variable with its partner.
    /// Involutive ring automorphism; rejects auxiliary/unpaired variables.
    Poly conj_involution() const;

    /// Re-express in another table. var_map[i] gives the target index of
    /// variable i; -1 entries are allowed only for unused variables.
    Poly transplant(const TablePtr& target, const std::vector<int>& var_map) const;
    /// Transplant matching variables by name.
    Poly transplant(const TablePtr& target) const;

    /// Split into coefficient polynomials: keys are the monomials in the
    /// masked positions, values collect everything else.
    std::map<Monomial, Poly> group_by(const std::vector<char>& mask) const;

    std::pair<Monomial, GaussRat> leading_term(const MonomialOrder& ord) const;
    Monomial leading_monomial(const MonomialOrder& ord) const {
        return leading_term(ord).first;
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    /// Canonical rendering, terms in descending degrevlex order.
    std::string str() const;

    void add_term(const Monomial& m, const GaussRat& c);  // checks caps

  private:
    void require_same_table(const Poly& o) const;
    TablePtr table_;
    TermMap terms_;
};

/// Identity images for `substitute`, convenient to modify pointwise.
std::vector<Poly> identity_images(const TablePtr& table);

}  // namespace crlab
