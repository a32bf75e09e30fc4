#pragma once

#include <memory>
#include <string>
#include <vector>

namespace crlab {

enum class VarKind { Holo, AntiHolo, Aux };

class VarTable;
using TablePtr = std::shared_ptr<const VarTable>;

/// Ordered variable list with an optional Z/zeta pairing. The anti-holomorphic
/// partner of a variable `z` is named `~z`. Auxiliary variables (Rabinowitsch,
/// graph variables) are never paired. Tables are immutable; polynomials refer
/// to them by shared pointer and two polynomials interoperate only when they
/// hold the same table object.
class VarTable {
  public:
    /// z1,...,zn followed by ~z1,...,~zn with the full pairing.
    static TablePtr paired(const std::vector<std::string>& z_names);

    /// Unpaired variables, all of the given kind.
    static TablePtr plain(const std::vector<std::string>& names,
                          VarKind kind = VarKind::Holo);

    /// Copy of this table with extra auxiliary variables appended.
    TablePtr with_aux(const std::vector<std::string>& aux_names) const;

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_[i]; }
    VarKind kind(std::size_t i) const { return kinds_[i]; }
    int partner(std::size_t i) const { return partners_[i]; }
    bool has(const std::string& name) const { return find(name) >= 0; }
    int find(const std::string& name) const;

    std::vector<std::size_t> indices_of(VarKind k) const;
    std::size_t count_of(VarKind k) const { return indices_of(k).size(); }

    /// True when every non-auxiliary variable has a partner.
    bool fully_paired() const;

  private:
    friend TablePtr make_table(std::vector<std::string> names,
                               std::vector<VarKind> kinds, std::vector<int> partners);
    std::vector<std::string> names_;
    std::vector<VarKind> kinds_;
    std::vector<int> partners_;  // index of partner, -1 if none
};

TablePtr make_table(std::vector<std::string> names, std::vector<VarKind> kinds,
                    std::vector<int> partners);

/// Disjoint union of two tables for graph/elimination constructions. Names
/// from `b` that clash with `a` get primes appended until unique. Pairings
/// within each block are preserved. Returns the table and the offset at
/// which the `b` block starts.
std::pair<TablePtr, std::size_t> join_tables(const TablePtr& a, const TablePtr& b);

}  // namespace crlab
