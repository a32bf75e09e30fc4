#include "crlab/groebner.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <utility>

#include "crlab/errors.hpp"

namespace crlab {

namespace {

struct OrderLess {
    const MonomialOrder* ord;
    bool operator()(const Monomial& a, const Monomial& b) const { return ord->less(a, b); }
};

Poly make_monic(const Poly& f, const MonomialOrder& ord) {
    auto [m, c] = f.leading_term(ord);
    (void)m;
    if (c.is_one()) return f;
    return f.scaled(GaussRat(1) / c);
}

Poly mono_shift(const Poly& f, const Monomial& q) {
    return f * Poly::monomial(f.table(), q, GaussRat(1));
}

// Monomials of total degree <= d, every exponent vector exactly once, in a
// fixed (structural) enumeration order.
std::vector<Monomial> monomials_upto(std::size_t n, int d) {
    std::vector<Monomial> out;
    if (d < 0) return out;
    std::vector<std::uint32_t> e(n, 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int rem) {
        if (i == n) {
            Monomial m(n);
            m.e = e;
            out.push_back(m);
            return;
        }
        for (int k = 0; k <= rem; ++k) {
            e[i] = static_cast<std::uint32_t>(k);
            rec(i + 1, rem - k);
        }
        e[i] = 0;
    };
    rec(0, d);
    return out;
}

}  // namespace

Poly normal_form(const Poly& f, const std::vector<Poly>& basis, const MonomialOrder& order) {
    if (f.is_zero() || basis.empty()) return f;

    struct Reducer {
        Monomial lm;
        GaussRat lc;
        const Poly* g;
    };
    std::vector<Reducer> reds;
    reds.reserve(basis.size());
    for (const auto& g : basis) {
        if (g.is_zero()) continue;
        if (g.table() != f.table())
            throw usage_error("normal_form: polynomial and basis use different variable tables");
        auto [lm, lc] = g.leading_term(order);
        reds.push_back({lm, lc, &g});
    }

    std::map<Monomial, GaussRat, OrderLess> work{OrderLess{&order}};
    for (const auto& [m, c] : f.terms()) work.emplace(m, c);

    Poly rem(f.table());
    while (!work.empty()) {
        auto top = std::prev(work.end());
        Monomial m = top->first;
        GaussRat c = top->second;
        work.erase(top);

        const Reducer* hit = nullptr;
        for (const auto& r : reds) {
            if (r.lm.divides(m)) {
                hit = &r;
                break;
            }
        }
        if (!hit) {
            rem.add_term(m, c);
            continue;
        }

        Monomial q = hit->lm.quotient_of(m);
        GaussRat factor = c / hit->lc;
        for (const auto& [mg, cg] : hit->g->terms()) {
            if (mg == hit->lm) continue;
            Monomial mm = q * mg;
            if (mm.degree() > caps().max_total_degree)
                throw resource_error("normal_form: intermediate degree exceeds cap " +
                                     std::to_string(caps().max_total_degree));
            GaussRat delta = factor * cg;
            auto it = work.find(mm);
            if (it == work.end()) {
                work.emplace(mm, -delta);
            } else {
                it->second -= delta;
                if (it->second.is_zero()) work.erase(it);
            }
        }
        if (work.size() + rem.num_terms() > caps().max_terms)
            throw resource_error("normal_form: term count exceeds cap " +
                                 std::to_string(caps().max_terms));
    }
    return rem;
}

std::vector<Poly> buchberger(const TablePtr& table, const std::vector<Poly>& gens,
                             const MonomialOrder& order) {
    std::vector<Poly> G;
    std::vector<Monomial> lms;
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        if (g.table() != table)
            throw usage_error("buchberger: generator uses a different variable table");
        Poly m = make_monic(g, order);
        G.push_back(m);
        lms.push_back(m.leading_monomial(order));
    }
    if (G.empty()) return G;

    // (lcm degree, i, j): popping the smallest element gives the normal
    // selection strategy with a deterministic index tie-break.
    using PairKey = std::tuple<long, std::size_t, std::size_t>;
    std::set<PairKey> queue;
    auto push_pairs = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i)
            queue.emplace(lms[i].lcm(lms[j]).degree(), i, j);
    };
    for (std::size_t j = 1; j < G.size(); ++j) push_pairs(j);

    std::size_t processed = 0;
    while (!queue.empty()) {
        auto [deg, i, j] = *queue.begin();
        (void)deg;
        queue.erase(queue.begin());
        if (++processed > caps().max_pairs)
            throw resource_error("buchberger: pair cap " + std::to_string(caps().max_pairs) +
                                 " exceeded with basis size " + std::to_string(G.size()));

        Monomial l = lms[i].lcm(lms[j]);
        if (l == lms[i] * lms[j]) continue;  // coprime leading monomials

        Poly s = mono_shift(G[i], lms[i].quotient_of(l)) - mono_shift(G[j], lms[j].quotient_of(l));
        Poly r = normal_form(s, G, order);
        if (r.is_zero()) continue;
        r = make_monic(r, order);
        G.push_back(r);
        lms.push_back(r.leading_monomial(order));
        push_pairs(G.size() - 1);
    }

    // Minimalize: scan by increasing leading monomial, dropping any element
    // whose leading monomial is divisible by one already kept.
    std::vector<std::size_t> by_lm(G.size());
    for (std::size_t k = 0; k < by_lm.size(); ++k) by_lm[k] = k;
    std::sort(by_lm.begin(), by_lm.end(), [&](std::size_t a, std::size_t b) {
        int c = order.cmp(lms[a], lms[b]);
        if (c != 0) return c < 0;
        return a < b;
    });
    std::vector<Poly> kept;
    std::vector<Monomial> kept_lms;
    for (std::size_t k : by_lm) {
        bool redundant = false;
        for (const auto& lm : kept_lms) {
            if (lm.divides(lms[k])) {
                redundant = true;
                break;
            }
        }
        if (!redundant) {
            kept.push_back(G[k]);
            kept_lms.push_back(lms[k]);
        }
    }

    // Interreduce tails to a fixpoint; leading monomials are pairwise
    // indivisible, so they survive and monicity is preserved.
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t k = 0; k < kept.size(); ++k) {
            std::vector<Poly> others;
            others.reserve(kept.size() - 1);
            for (std::size_t t = 0; t < kept.size(); ++t)
                if (t != k) others.push_back(kept[t]);
            Poly r = normal_form(kept[k], others, order);
            if (r != kept[k]) {
                kept[k] = r;
                changed = true;
            }
        }
    }

    std::sort(kept.begin(), kept.end(), [&](const Poly& a, const Poly& b) {
        return order.greater(a.leading_monomial(order), b.leading_monomial(order));
    });
    return kept;
}

Ideal::Ideal(TablePtr table, std::vector<Poly> gens, MonomialOrder order)
    : table_(std::move(table)), order_(order), gens_(std::move(gens)) {
    if (!table_) throw usage_error("Ideal: null variable table");
    for (const auto& g : gens_)
        if (g.table() != table_)
            throw usage_error("Ideal: generator uses a different variable table");
}

const std::vector<Poly>& Ideal::basis() const {
    if (!gb_) gb_ = buchberger(table_, gens_, order_);
    return *gb_;
}

bool Ideal::is_unit() const {
    const auto& b = basis();
    return b.size() == 1 && b[0].total_degree() == 0;
}

Poly normal_form(const Poly& f, const Ideal& I) {
    if (f.table() != I.table())
        throw usage_error("normal_form: polynomial lives in a different variable table");
    return normal_form(f, I.basis(), I.order());
}

std::vector<Poly> normal_form_batch(const std::vector<Poly>& fs, const Ideal& I, Exec exec) {
    for (const auto& f : fs)
        if (f.table() != I.table())
            throw usage_error("normal_form_batch: polynomial lives in a different variable table");
    I.basis();  // materialize the shared cache before threads read it

    std::vector<Poly> out(fs.size());
    std::string err;
    const std::int64_t n = static_cast<std::int64_t>(fs.size());
#pragma omp parallel for schedule(dynamic) if (exec == Exec::Parallel)
    for (std::int64_t k = 0; k < n; ++k) {
        try {
            out[static_cast<std::size_t>(k)] = normal_form(fs[static_cast<std::size_t>(k)], I);
        } catch (const std::exception& e) {
#pragma omp critical
            if (err.empty()) err = e.what();
        }
    }
    if (!err.empty()) throw resource_error(err);
    return out;
}

bool member(const Poly& f, const Ideal& I) { return normal_form(f, I).is_zero(); }

bool radical_member(const Poly& f, const Ideal& I) {
    if (f.table() != I.table())
        throw usage_error("radical_member: polynomial lives in a different variable table");
    if (f.is_zero()) return true;
    if (member(f, I)) return true;

    std::string aux = "_r";
    while (I.table()->has(aux)) aux += "_";
    TablePtr ext = I.table()->with_aux({aux});

    std::vector<Poly> gens;
    gens.reserve(I.generators().size() + 1);
    for (const auto& g : I.generators()) gens.push_back(g.transplant(ext));
    Poly y = Poly::variable(ext, ext->size() - 1);
    gens.push_back(Poly::constant(ext, GaussRat(1)) - y * f.transplant(ext));

    return Ideal(ext, std::move(gens)).is_unit();
}

Ideal eliminate(const Ideal& I, const std::vector<char>& keep, MonomialOrder out_order) {
    if (keep.size() != I.table()->size())
        throw usage_error("eliminate: keep mask has wrong length");
    if (out_order.kind() == MonomialOrder::Kind::Block)
        throw usage_error("eliminate: output order must be lex or degrevlex");

    std::vector<char> elim(keep.size());
    for (std::size_t i = 0; i < keep.size(); ++i) elim[i] = keep[i] ? 0 : 1;
    auto block =
        MonomialOrder::block(elim, MonomialOrder::Kind::DegRevLex, out_order.kind());

    auto G = buchberger(I.table(), I.generators(), block);
    std::vector<Poly> sel;
    for (const auto& g : G)
        if (g.supported_on(keep)) sel.push_back(g);
    return Ideal(I.table(), std::move(sel), out_order);
}

DimReport krull_dim(const Ideal& I) {
    DimReport rep;
    if (I.is_unit()) {
        rep.krull_dim = -1;
        rep.zero_dimensional = false;
        return rep;
    }

    const std::size_t n = I.table()->size();
    if (n > 24) throw resource_error("krull_dim: too many variables for subset enumeration");

    std::vector<Monomial> lts;
    std::vector<std::uint32_t> supp;
    for (const auto& g : I.basis()) {
        Monomial lm = g.leading_monomial(I.order());
        std::uint32_t s = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (lm.e[i]) s |= (1u << i);
        lts.push_back(std::move(lm));
        supp.push_back(s);
    }

    // A variable subset is independent iff no leading term is supported
    // entirely inside it; the dimension is the largest independent subset.
    int best = -1;
    const std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
    for (std::uint32_t mask = 0;; ++mask) {
        bool indep = true;
        for (auto s : supp) {
            if ((s & ~mask) == 0) {
                indep = false;
                break;
            }
        }
        if (indep) {
            int pc = 0;
            for (std::uint32_t b = mask; b; b &= b - 1) ++pc;
            best = std::max(best, pc);
        }
        if (mask == full) break;
    }
    rep.krull_dim = best;

    // Zero-dimensional iff every variable carries a pure power leading term.
    std::vector<long> bound(n, -1);
    for (const auto& lm : lts) {
        int var = -1;
        bool pure = true;
        for (std::size_t i = 0; i < n; ++i) {
            if (!lm.e[i]) continue;
            if (var >= 0) {
                pure = false;
                break;
            }
            var = static_cast<int>(i);
        }
        if (!pure || var < 0) continue;
        long k = lm.e[static_cast<std::size_t>(var)];
        if (bound[static_cast<std::size_t>(var)] < 0 || k < bound[static_cast<std::size_t>(var)])
            bound[static_cast<std::size_t>(var)] = k;
    }
    rep.zero_dimensional = true;
    for (std::size_t i = 0; i < n; ++i)
        if (bound[i] < 0) rep.zero_dimensional = false;

    if (rep.zero_dimensional) {
        double box = 1;
        for (std::size_t i = 0; i < n; ++i) box *= static_cast<double>(bound[i]);
        if (box > 2e6) throw resource_error("krull_dim: staircase too large to enumerate");

        long count = 0;
        std::vector<std::uint32_t> e(n, 0);
        std::function<void(std::size_t)> rec = [&](std::size_t i) {
            if (i == n) {
                Monomial m(n);
                m.e = e;
                for (const auto& lt : lts)
                    if (lt.divides(m)) return;
                ++count;
                return;
            }
            for (long k = 0; k < bound[i]; ++k) {
                e[i] = static_cast<std::uint32_t>(k);
                rec(i + 1);
            }
            e[i] = 0;
        };
        rec(0);
        rep.colength = count;
    }
    return rep;
}

Colength local_colength(const Ideal& I, int cap, Exec exec) {
    Colength res;
    res.cap = cap;
    if (cap < 1) throw usage_error("local_colength: cap must be at least 1");
    for (const auto& g : I.generators())
        if (!g.constant_term().is_zero())
            throw usage_error("local_colength: generators must vanish at the origin");

    const std::size_t n = I.table()->size();
    const auto& gens = I.generators();

    // Rows spanning the image of the ideal in the jet space of order k: all
    // shifts x^a * g truncated to degree <= k. Shifts of degree >= k vanish
    // after truncation because generators have no constant term.
    auto jet_matrix = [&](int k, std::vector<Monomial>& cols) {
        cols = monomials_upto(n, k);
        std::map<Monomial, std::size_t> idx;
        for (std::size_t i = 0; i < cols.size(); ++i) idx.emplace(cols[i], i);
        QMatrix W(0, cols.size());
        for (const auto& g : gens) {
            if (g.is_zero()) continue;
            for (const auto& a : monomials_upto(n, k - 1)) {
                std::vector<GaussRat> row(cols.size());
                bool nz = false;
                for (const auto& [m, c] : g.terms()) {
                    Monomial mm = a * m;
                    if (mm.degree() > k) continue;
                    row[idx.at(mm)] += c;
                    nz = true;
                }
                if (nz) W.append_row(row);
            }
        }
        return W;
    };

    for (int k = 1; k <= cap; ++k) {
        std::vector<Monomial> cols;
        QMatrix W = jet_matrix(k, cols);
        std::size_t rank_w = rank(W, exec);

        QMatrix full = W;
        for (std::size_t ci = 0; ci < cols.size(); ++ci) {
            if (cols[ci].degree() != k) continue;
            std::vector<GaussRat> row(cols.size());
            row[ci] = GaussRat(1);
            full.append_row(row);
        }
        if (rank(full, exec) != rank_w) continue;  // m^k not yet swallowed

        // m^k lies in I + m^(k+1), hence in I; the quotient is spanned by
        // jets of order < k modulo the ideal's truncations there.
        std::vector<Monomial> cols_lo;
        QMatrix W_lo = jet_matrix(k - 1, cols_lo);
        res.known = true;
        res.jet_order = k;
        res.value = static_cast<long>(cols_lo.size()) - static_cast<long>(rank(W_lo, exec));
        return res;
    }
    return res;
}

Ideal preimage_under_map(const Ideal& I, const std::vector<Poly>& F, const TablePtr& target,
                         MonomialOrder out_order) {
    if (out_order.kind() == MonomialOrder::Kind::Block)
        throw usage_error("preimage_under_map: output order must be lex or degrevlex");
    if (F.size() != target->size())
        throw usage_error("preimage_under_map: need one map component per target variable");
    for (const auto& f : F)
        if (f.table() != I.table())
            throw usage_error("preimage_under_map: map components must live in the source table");

    auto [joint, off] = join_tables(I.table(), target);
    const std::size_t ns = I.table()->size();
    std::vector<int> src_map(ns);
    for (std::size_t i = 0; i < ns; ++i) src_map[i] = static_cast<int>(i);

    std::vector<Poly> gens;
    gens.reserve(I.generators().size() + F.size());
    for (const auto& g : I.generators()) gens.push_back(g.transplant(joint, src_map));
    for (std::size_t j = 0; j < F.size(); ++j)
        gens.push_back(Poly::variable(joint, off + j) - F[j].transplant(joint, src_map));

    std::vector<char> elim(joint->size(), 0);
    for (std::size_t i = 0; i < ns; ++i) elim[i] = 1;
    auto block =
        MonomialOrder::block(elim, MonomialOrder::Kind::DegRevLex, out_order.kind());
    auto G = buchberger(joint, gens, block);

    std::vector<char> keep(joint->size(), 0);
    std::vector<int> back(joint->size(), -1);
    for (std::size_t j = 0; j < target->size(); ++j) {
        keep[off + j] = 1;
        back[off + j] = static_cast<int>(j);
    }
    std::vector<Poly> sel;
    for (const auto& g : G)
        if (g.supported_on(keep)) sel.push_back(g.transplant(target, back));
    return Ideal(target, std::move(sel), out_order);
}

bool ideals_equal(const Ideal& a, const Ideal& b) {
    if (a.table() != b.table())
        throw usage_error("ideals_equal: ideals live in different variable tables");
    for (const auto& g : a.basis())
        if (!member(g, b)) return false;
    for (const auto& g : b.basis())
        if (!member(g, a)) return false;
    return true;
}

}  // namespace crlab
