#include "crlab/poly.hpp"

#include <algorithm>
#include <sstream>

#include "crlab/errors.hpp"

namespace crlab {

Poly Poly::constant(TablePtr table, GaussRat c) {
    Poly p(std::move(table));
    if (!c.is_zero()) p.terms_.emplace(Monomial::one(p.table_->size()), std::move(c));
    return p;
}

Poly Poly::variable(TablePtr table, std::size_t i, std::uint32_t k) {
    if (i >= table->size()) throw usage_error("variable index out of range");
    Poly p(std::move(table));
    if (k == 0) return constant(p.table_, GaussRat(1));
    p.terms_.emplace(Monomial::var(p.table_->size(), i, k), GaussRat(1));
    return p;
}

Poly Poly::monomial(TablePtr table, Monomial m, GaussRat c) {
    Poly p(std::move(table));
    if (m.size() != p.table_->size()) throw usage_error("monomial does not fit table");
    if (!c.is_zero()) p.add_term(m, c);
    return p;
}

long Poly::total_degree() const {
    long d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

GaussRat Poly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? GaussRat() : it->second;
}

bool Poly::uses_var(std::size_t i) const {
    for (const auto& [m, c] : terms_)
        if (m.e[i]) return true;
    return false;
}

bool Poly::supported_on(const std::vector<char>& mask) const {
    for (const auto& [m, c] : terms_)
        for (std::size_t i = 0; i < m.size(); ++i)
            if (m.e[i] && !mask[i]) return false;
    return true;
}

void Poly::require_same_table(const Poly& o) const {
    if (table_.get() != o.table_.get())
        throw usage_error("polynomials belong to different variable tables");
}

void Poly::add_term(const Monomial& m, const GaussRat& c) {
    if (c.is_zero()) return;
    if (m.degree() > caps().max_total_degree)
        throw resource_error("total degree exceeds cap of " +
                             std::to_string(caps().max_total_degree));
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
    if (terms_.size() > caps().max_terms)
        throw resource_error("term count exceeds cap of " +
                             std::to_string(caps().max_terms));
}

Poly Poly::operator-() const {
    Poly p(table_);
    for (const auto& [m, c] : terms_) p.terms_.emplace(m, -c);
    return p;
}

Poly& Poly::operator+=(const Poly& o) {
    require_same_table(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    require_same_table(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    a.require_same_table(b);
    Poly p(a.table_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) p.add_term(ma * mb, ca * cb);
    return p;
}

Poly Poly::scaled(const GaussRat& c) const {
    Poly p(table_);
    if (c.is_zero()) return p;
    for (const auto& [m, k] : terms_) p.terms_.emplace(m, k * c);
    return p;
}

Poly Poly::pow(std::uint32_t k) const {
    Poly r = constant(table_, GaussRat(1));
    for (std::uint32_t i = 0; i < k; ++i) r = r * *this;
    return r;
}

Poly Poly::derivative(std::size_t var) const {
    if (var >= table_->size()) throw usage_error("variable index out of range");
    Poly p(table_);
    for (const auto& [m, c] : terms_) {
        if (!m.e[var]) continue;
        Monomial d = m;
        d.e[var] -= 1;
        p.add_term(d, c * GaussRat(static_cast<long>(m.e[var])));
    }
    return p;
}

Poly Poly::substitute(const std::vector<Poly>& images) const {
    if (images.size() != table_->size())
        throw usage_error("substitution needs one image per variable");
    if (images.empty()) throw usage_error("substitution on empty table");
    const TablePtr& target = images[0].table();
    for (const auto& im : images)
        if (im.table().get() != target.get())
            throw usage_error("substitution images live in different tables");
    Poly acc(target);
    for (const auto& [m, c] : terms_) {
        Poly term = Poly::constant(target, c);
        for (std::size_t i = 0; i < m.size(); ++i)
            if (m.e[i]) term = term * images[i].pow(m.e[i]);
        acc += term;
    }
    return acc;
}

GaussRat Poly::evaluate(const std::vector<GaussRat>& point) const {
    if (point.size() != table_->size())
        throw usage_error("evaluation point has wrong arity");
    GaussRat acc;
    for (const auto& [m, c] : terms_) {
        GaussRat t = c;
        for (std::size_t i = 0; i < m.size(); ++i)
            for (std::uint32_t k = 0; k < m.e[i]; ++k) t *= point[i];
        acc += t;
    }
    return acc;
}

Poly Poly::conj_involution() const {
    Poly p(table_);
    for (const auto& [m, c] : terms_) {
        Monomial sw(table_->size());
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (!m.e[i]) continue;
            if (table_->kind(i) == VarKind::Aux)
                throw usage_error("conjugation does not apply to auxiliary variable " +
                                  table_->name(i));
            int j = table_->partner(i);
            if (j < 0)
                throw usage_error("variable " + table_->name(i) +
                                  " has no conjugation partner");
            sw.e[static_cast<std::size_t>(j)] = m.e[i];
        }
        p.terms_.emplace(sw, c.conj());
    }
    return p;
}

Poly Poly::transplant(const TablePtr& target, const std::vector<int>& var_map) const {
    if (var_map.size() != table_->size())
        throw usage_error("transplant map has wrong arity");
    Poly p(target);
    for (const auto& [m, c] : terms_) {
        Monomial t(target->size());
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (!m.e[i]) continue;
            if (var_map[i] < 0)
                throw usage_error("variable " + table_->name(i) +
                                  " has no image in the target table");
            t.e[static_cast<std::size_t>(var_map[i])] += m.e[i];
        }
        p.add_term(t, c);
    }
    return p;
}

Poly Poly::transplant(const TablePtr& target) const {
    std::vector<int> var_map(table_->size());
    for (std::size_t i = 0; i < table_->size(); ++i)
        var_map[i] = target->find(table_->name(i));
    return transplant(target, var_map);
}

std::map<Monomial, Poly> Poly::group_by(const std::vector<char>& mask) const {
    if (mask.size() != table_->size()) throw usage_error("mask has wrong arity");
    std::map<Monomial, Poly> out;
    for (const auto& [m, c] : terms_) {
        Monomial key(table_->size()), rest(table_->size());
        for (std::size_t i = 0; i < m.size(); ++i)
            (mask[i] ? key.e[i] : rest.e[i]) = m.e[i];
        auto [it, inserted] = out.emplace(key, Poly(table_));
        it->second.add_term(rest, c);
    }
    return out;
}

std::pair<Monomial, GaussRat> Poly::leading_term(const MonomialOrder& ord) const {
    if (terms_.empty()) throw usage_error("zero polynomial has no leading term");
    auto best = terms_.begin();
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
        if (ord.greater(it->first, best->first)) best = it;
    return {best->first, best->second};
}

namespace {

std::string monomial_vars(const VarTable& t, const Monomial& m) {
    std::string s;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (!m.e[i]) continue;
        if (!s.empty()) s += "*";
        s += t.name(i);
        if (m.e[i] > 1) s += "^" + std::to_string(m.e[i]);
    }
    return s;
}

}  // namespace

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::vector<const TermMap::value_type*> ordered;
    ordered.reserve(terms_.size());
    for (const auto& t : terms_) ordered.push_back(&t);
    MonomialOrder drl = MonomialOrder::degrevlex();
    std::sort(ordered.begin(), ordered.end(),
              [&](const auto* a, const auto* b) { return drl.greater(a->first, b->first); });

    std::string out;
    for (const auto* t : ordered) {
        const auto& [m, c] = *t;
        bool negative = false;
        std::string mag;
        if (c.is_real()) {
            negative = c.re() < 0;
            mag = (negative ? (-c).str() : c.str());
        } else if (c.re() == 0) {
            negative = c.im() < 0;
            mag = (negative ? (-c).str() : c.str());
        } else {
            mag = "(" + c.str() + ")";
        }
        std::string vars = monomial_vars(*table_, m);
        std::string body;
        if (vars.empty())
            body = mag;
        else if (mag == "1")
            body = vars;
        else
            body = mag + "*" + vars;
        if (out.empty())
            out = (negative ? "-" : "") + body;
        else
            out += (negative ? " - " : " + ") + body;
    }
    return out;
}

std::vector<Poly> identity_images(const TablePtr& table) {
    std::vector<Poly> images;
    images.reserve(table->size());
    for (std::size_t i = 0; i < table->size(); ++i)
        images.push_back(Poly::variable(table, i));
    return images;
}

}  // namespace crlab
