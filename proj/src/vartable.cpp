#include "crlab/vartable.hpp"

#include <set>

#include "crlab/errors.hpp"

namespace crlab {

namespace {

void check_unique(const std::vector<std::string>& names) {
    std::set<std::string> seen;
    for (const auto& n : names) {
        if (n.empty()) throw usage_error("empty variable name");
        if (!seen.insert(n).second) throw usage_error("duplicate variable name: " + n);
    }
}

}  // namespace

TablePtr make_table(std::vector<std::string> names, std::vector<VarKind> kinds,
                    std::vector<int> partners) {
    check_unique(names);
    auto t = std::make_shared<VarTable>();
    t->names_ = std::move(names);
    t->kinds_ = std::move(kinds);
    t->partners_ = std::move(partners);
    return t;
}

TablePtr VarTable::paired(const std::vector<std::string>& z_names) {
    std::vector<std::string> names;
    std::vector<VarKind> kinds;
    std::vector<int> partners;
    const int n = static_cast<int>(z_names.size());
    for (const auto& z : z_names) {
        names.push_back(z);
        kinds.push_back(VarKind::Holo);
    }
    for (const auto& z : z_names) {
        names.push_back("~" + z);
        kinds.push_back(VarKind::AntiHolo);
    }
    for (int i = 0; i < n; ++i) partners.push_back(n + i);
    for (int i = 0; i < n; ++i) partners.push_back(i);
    return make_table(std::move(names), std::move(kinds), std::move(partners));
}

TablePtr VarTable::plain(const std::vector<std::string>& names, VarKind kind) {
    return make_table(names, std::vector<VarKind>(names.size(), kind),
                      std::vector<int>(names.size(), -1));
}

TablePtr VarTable::with_aux(const std::vector<std::string>& aux_names) const {
    auto names = names_;
    auto kinds = kinds_;
    auto partners = partners_;
    for (const auto& a : aux_names) {
        names.push_back(a);
        kinds.push_back(VarKind::Aux);
        partners.push_back(-1);
    }
    return make_table(std::move(names), std::move(kinds), std::move(partners));
}

int VarTable::find(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return static_cast<int>(i);
    return -1;
}

std::vector<std::size_t> VarTable::indices_of(VarKind k) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (kinds_[i] == k) out.push_back(i);
    return out;
}

bool VarTable::fully_paired() const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (kinds_[i] != VarKind::Aux && partners_[i] < 0) return false;
    return true;
}

std::pair<TablePtr, std::size_t> join_tables(const TablePtr& a, const TablePtr& b) {
    std::vector<std::string> names;
    std::vector<VarKind> kinds;
    std::vector<int> partners;
    std::set<std::string> used;
    for (std::size_t i = 0; i < a->size(); ++i) {
        names.push_back(a->name(i));
        kinds.push_back(a->kind(i));
        partners.push_back(a->partner(i));
        used.insert(a->name(i));
    }
    const std::size_t off = names.size();
    for (std::size_t i = 0; i < b->size(); ++i) {
        std::string n = b->name(i);
        while (used.count(n)) n += "'";
        used.insert(n);
        names.push_back(n);
        kinds.push_back(b->kind(i));
        int p = b->partner(i);
        partners.push_back(p < 0 ? -1 : static_cast<int>(off) + p);
    }
    return {make_table(std::move(names), std::move(kinds), std::move(partners)), off};
}

}  // namespace crlab
