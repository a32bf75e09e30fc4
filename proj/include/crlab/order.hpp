#pragma once

#include <string>
#include <vector>

#include "crlab/monomial.hpp"

namespace crlab {

/// Term order: total, multiplicative, with 1 minimal. Lex and degrevlex are
/// the base orders; block orders compare an elimination block first and are
/// what elimination and preimage computations run under.
class MonomialOrder {
  public:
    enum class Kind { Lex, DegRevLex, Block };

    static MonomialOrder lex() { return MonomialOrder(Kind::Lex); }
    static MonomialOrder degrevlex() { return MonomialOrder(Kind::DegRevLex); }
    static MonomialOrder block(std::vector<char> elim_mask, Kind inner, Kind outer);
    static MonomialOrder by_name(const std::string& name);  // "lex" | "degrevlex"

    Kind kind() const { return kind_; }
    std::string name() const;

    /// Three-way comparison: negative if a < b, 0 if equal, positive if a > b.
    int cmp(const Monomial& a, const Monomial& b) const;

    bool less(const Monomial& a, const Monomial& b) const { return cmp(a, b) < 0; }
    bool greater(const Monomial& a, const Monomial& b) const { return cmp(a, b) > 0; }

  private:
    explicit MonomialOrder(Kind k) : kind_(k) {}
    Kind kind_;
    std::vector<char> elim_;  // Block only: 1 = elimination block
    Kind inner_ = Kind::DegRevLex;
    Kind outer_ = Kind::DegRevLex;
};

}  // namespace crlab
