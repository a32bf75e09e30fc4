#include "crlab/order.hpp"

#include "crlab/errors.hpp"

namespace crlab {

namespace {

int cmp_lex(const Monomial& a, const Monomial& b, const std::vector<char>* mask,
            char want) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (mask && (*mask)[i] != want) continue;
        if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
    }
    return 0;
}

int cmp_degrevlex(const Monomial& a, const Monomial& b, const std::vector<char>* mask,
                  char want) {
    long da = 0, db = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (mask && (*mask)[i] != want) continue;
        da += a.e[i];
        db += b.e[i];
    }
    if (da != db) return da < db ? -1 : 1;
    // Equal degree: the last position where they differ decides, smaller
    // exponent there means the larger monomial.
    for (std::size_t j = a.size(); j-- > 0;) {
        if (mask && (*mask)[j] != want) continue;
        if (a.e[j] != b.e[j]) return a.e[j] > b.e[j] ? -1 : 1;
    }
    return 0;
}

int cmp_base(MonomialOrder::Kind k, const Monomial& a, const Monomial& b,
             const std::vector<char>* mask, char want) {
    if (k == MonomialOrder::Kind::Lex) return cmp_lex(a, b, mask, want);
    return cmp_degrevlex(a, b, mask, want);
}

}  // namespace

MonomialOrder MonomialOrder::block(std::vector<char> elim_mask, Kind inner, Kind outer) {
    if (inner == Kind::Block || outer == Kind::Block)
        throw usage_error("block orders do not nest");
    MonomialOrder o(Kind::Block);
    o.elim_ = std::move(elim_mask);
    o.inner_ = inner;
    o.outer_ = outer;
    return o;
}

MonomialOrder MonomialOrder::by_name(const std::string& name) {
    if (name == "lex") return lex();
    if (name == "degrevlex") return degrevlex();
    throw usage_error("unknown monomial order: " + name);
}

std::string MonomialOrder::name() const {
    switch (kind_) {
        case Kind::Lex: return "lex";
        case Kind::DegRevLex: return "degrevlex";
        case Kind::Block: return "block";
    }
    return "?";
}

int MonomialOrder::cmp(const Monomial& a, const Monomial& b) const {
    if (a.size() != b.size()) throw usage_error("monomial size mismatch in comparison");
    switch (kind_) {
        case Kind::Lex: return cmp_lex(a, b, nullptr, 0);
        case Kind::DegRevLex: return cmp_degrevlex(a, b, nullptr, 0);
        case Kind::Block: {
            if (elim_.size() != a.size())
                throw usage_error("block order mask does not match table size");
            if (int c = cmp_base(inner_, a, b, &elim_, 1)) return c;
            return cmp_base(outer_, a, b, &elim_, 0);
        }
    }
    return 0;
}

}  // namespace crlab
