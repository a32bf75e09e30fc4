#include "crlab/parser.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "crlab/errors.hpp"

namespace crlab {

namespace {

[[noreturn]] void fail_at(int line, int col, const std::string& msg) {
    throw parse_error("line " + std::to_string(line) + ", col " + std::to_string(col) + ": " +
                      msg);
}

[[noreturn]] void fail_line(int line, const std::string& msg) {
    throw parse_error("line " + std::to_string(line) + ": " + msg);
}

bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

bool ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

// ---------------------------------------------------------------------------
// Polynomial expressions
// ---------------------------------------------------------------------------

struct Token {
    enum Kind { Number, Ident, Sym, End } kind = End;
    std::string text;
    bool imag = false;  // number written with a glued i-suffix: 2i, 3/2i
    char sym = 0;
    int col = 0;  // 1-based within the whole input line
};

class ExprParser {
  public:
    ExprParser(const std::string& text, TablePtr table, int line, int col0)
        : table_(std::move(table)), line_(line) {
        lex(text, col0);
    }

    Poly parse() {
        Poly p = poly();
        if (cur().kind != Token::End) bail(cur(), "trailing input after polynomial");
        return p;
    }

  private:
    std::vector<Token> toks_;
    std::size_t i_ = 0;
    TablePtr table_;
    int line_;

    [[noreturn]] void bail(const Token& t, const std::string& msg) const {
        fail_at(line_, t.col, msg);
    }

    void lex(const std::string& s, int col0) {
        std::size_t p = 0;
        while (p < s.size()) {
            char c = s[p];
            if (std::isspace(static_cast<unsigned char>(c))) {
                ++p;
                continue;
            }
            Token t;
            t.col = col0 + static_cast<int>(p);
            if (std::isdigit(static_cast<unsigned char>(c))) {
                std::size_t q = p;
                while (q < s.size() && std::isdigit(static_cast<unsigned char>(s[q]))) ++q;
                t.kind = Token::Number;
                t.text = s.substr(p, q - p);
                if (q < s.size() && s[q] == 'i' && (q + 1 >= s.size() || !ident_char(s[q + 1]))) {
                    t.imag = true;
                    ++q;
                }
                p = q;
            } else if (ident_start(c) || c == '~') {
                std::size_t q = p + (c == '~' ? 1 : 0);
                if (c == '~' && (q >= s.size() || !ident_start(s[q])))
                    fail_at(line_, t.col, "'~' must be followed by a variable name");
                std::size_t r = q;
                while (r < s.size() && ident_char(s[r])) ++r;
                t.kind = Token::Ident;
                t.text = s.substr(p, r - p);
                p = r;
            } else if (c == '+' || c == '-' || c == '*' || c == '/' || c == '^' || c == '(' ||
                       c == ')') {
                t.kind = Token::Sym;
                t.sym = c;
                ++p;
            } else {
                fail_at(line_, t.col, std::string("unexpected character '") + c + "'");
            }
            toks_.push_back(std::move(t));
        }
        Token end;
        end.kind = Token::End;
        end.col = col0 + static_cast<int>(s.size());
        toks_.push_back(end);
    }

    const Token& cur() const { return toks_[i_]; }
    bool is_sym(char c) const { return cur().kind == Token::Sym && cur().sym == c; }
    void advance() {
        if (i_ + 1 < toks_.size()) ++i_;
    }

    Poly poly() {
        bool negative = false;
        if (is_sym('+') || is_sym('-')) {
            negative = cur().sym == '-';
            advance();
        }
        Poly acc = term();
        if (negative) acc = -acc;
        while (is_sym('+') || is_sym('-')) {
            const bool minus = cur().sym == '-';
            advance();
            Poly t = term();
            acc = minus ? acc - t : acc + t;
        }
        return acc;
    }

    Poly term() {
        Poly acc = factor();
        while (is_sym('*')) {
            advance();
            acc = acc * factor();
        }
        return acc;
    }

    Poly factor() {
        Poly base = atom();
        if (is_sym('^')) {
            advance();
            if (cur().kind != Token::Number || cur().imag)
                bail(cur(), "exponent must be a natural number");
            unsigned long e = 0;
            try {
                e = std::stoul(cur().text);
            } catch (...) {
                bail(cur(), "exponent out of range");
            }
            if (e > 4096) bail(cur(), "exponent out of range");
            advance();
            base = base.pow(static_cast<std::uint32_t>(e));
        }
        return base;
    }

    Poly atom() {
        const Token t = cur();
        if (t.kind == Token::Number) {
            advance();
            mpq_class num(t.text);
            bool imag = t.imag;
            if (!imag && is_sym('/')) {
                advance();
                if (cur().kind != Token::Number) bail(cur(), "expected a denominator");
                mpq_class den(cur().text);
                if (den == 0) bail(cur(), "zero denominator");
                imag = cur().imag;
                advance();
                num /= den;
            }
            num.canonicalize();
            return Poly::constant(table_, imag ? GaussRat(mpq_class(0), num)
                                               : GaussRat(num, mpq_class(0)));
        }
        if (t.kind == Token::Ident) {
            advance();
            if (t.text == "i") return Poly::constant(table_, GaussRat::i());
            const int idx = table_->find(t.text);
            if (idx < 0) bail(t, "undeclared variable '" + t.text + "'");
            return Poly::variable(table_, static_cast<std::size_t>(idx));
        }
        if (t.kind == Token::Sym && t.sym == '(') {
            advance();
            Poly inner = poly();
            if (!is_sym(')')) bail(cur(), "expected ')'");
            advance();
            return inner;
        }
        bail(t, "expected a number, a variable, or '('");
    }
};

// ---------------------------------------------------------------------------
// Sectioned problem files
// ---------------------------------------------------------------------------

struct KeyVal {
    int line = 0;
    int col = 0;  // 1-based column of the value text
    std::string value;
};

struct Section {
    bool present = false;
    int line = 0;
    std::map<std::string, KeyVal> keys;
    std::vector<KeyVal> components;  // [map] only, in file order
};

const std::map<std::string, std::vector<std::string>>& allowed_keys() {
    static const std::map<std::string, std::vector<std::string>> table = {
        {"source", {"vars", "defining", "dim"}},
        {"target", {"vars", "defining", "dim"}},
        {"map", {"component", "degree_cap"}},
        {"options", {"bracket_cap", "colength_cap", "jet_cap", "order"}},
    };
    return table;
}

// Split on sep, reporting each chunk trimmed along with the 1-based column
// of its first non-space character.
std::vector<KeyVal> split_chunks(const KeyVal& kv, char sep, int line) {
    std::vector<KeyVal> out;
    std::size_t start = 0;
    const std::string& v = kv.value;
    for (std::size_t p = 0; p <= v.size(); ++p) {
        if (p < v.size() && v[p] != sep) continue;
        std::size_t lead = start;
        while (lead < p && std::isspace(static_cast<unsigned char>(v[lead]))) ++lead;
        std::string chunk = trim(v.substr(start, p - start));
        if (chunk.empty()) fail_at(line, kv.col + static_cast<int>(lead), "empty entry");
        out.push_back({line, kv.col + static_cast<int>(lead), std::move(chunk)});
        start = p + 1;
    }
    return out;
}

long parse_int(const KeyVal& kv, const std::string& key, long lo, long hi) {
    const std::string& v = kv.value;
    std::size_t p = v.size() && v[0] == '-' ? 1 : 0;
    bool digits = p < v.size();
    for (std::size_t q = p; q < v.size(); ++q)
        digits = digits && std::isdigit(static_cast<unsigned char>(v[q]));
    long value = 0;
    try {
        if (!digits) throw std::invalid_argument(v);
        value = std::stol(v);
    } catch (...) {
        fail_line(kv.line, "'" + key + "' must be an integer");
    }
    if (value < lo || value > hi)
        fail_line(kv.line, "'" + key + "' must be between " + std::to_string(lo) + " and " +
                               std::to_string(hi));
    return value;
}

struct VarietyData {
    TablePtr table;
    std::vector<Poly> sigma;
    std::optional<int> dim;
    int defining_line = 0;
};

VarietyData build_variety(const Section& sec, const std::string& name) {
    auto vars_it = sec.keys.find("vars");
    if (vars_it == sec.keys.end())
        fail_line(sec.line, "[" + name + "] needs a 'vars' line");
    auto def_it = sec.keys.find("defining");
    if (def_it == sec.keys.end())
        fail_line(sec.line, "[" + name + "] needs a 'defining' line");
    if (def_it->second.line < vars_it->second.line)
        fail_line(def_it->second.line, "variables must be declared before use");

    std::vector<std::string> names;
    for (const auto& chunk : split_chunks(vars_it->second, ',', vars_it->second.line)) {
        const std::string& n = chunk.value;
        bool ok = ident_start(n[0]);
        for (char c : n) ok = ok && ident_char(c);
        if (!ok || n == "i") fail_at(chunk.line, chunk.col, "invalid variable name '" + n + "'");
        if (std::find(names.begin(), names.end(), n) != names.end())
            fail_at(chunk.line, chunk.col, "duplicate variable '" + n + "'");
        names.push_back(n);
    }

    VarietyData data;
    data.table = VarTable::paired(names);
    data.defining_line = def_it->second.line;
    for (const auto& chunk : split_chunks(def_it->second, ';', def_it->second.line))
        data.sigma.push_back(ExprParser(chunk.value, data.table, chunk.line, chunk.col).parse());
    if (auto it = sec.keys.find("dim"); it != sec.keys.end())
        data.dim = static_cast<int>(parse_int(it->second, "dim", 0, 1 << 20));
    return data;
}

}  // namespace

ProblemFile parse_problem(const std::string& text) {
    std::map<std::string, Section> secs;
    for (const auto& [name, keys] : allowed_keys()) {
        (void)keys;
        secs[name] = {};
    }

    std::string current;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t nl = text.find('\n', pos);
        std::string raw =
            nl == std::string::npos ? text.substr(pos) : text.substr(pos, nl - pos);
        pos = nl == std::string::npos ? text.size() + 1 : nl + 1;
        ++line_no;

        if (const std::size_t hash = raw.find('#'); hash != std::string::npos)
            raw = raw.substr(0, hash);
        const std::string stripped = trim(raw);
        if (stripped.empty()) continue;

        if (stripped.front() == '[') {
            if (stripped.back() != ']') fail_line(line_no, "malformed section header");
            const std::string name = trim(stripped.substr(1, stripped.size() - 2));
            auto it = secs.find(name);
            if (it == secs.end()) fail_line(line_no, "unknown section [" + name + "]");
            if (it->second.present) fail_line(line_no, "duplicate section [" + name + "]");
            it->second.present = true;
            it->second.line = line_no;
            current = name;
            continue;
        }

        const std::size_t eq = raw.find('=');
        if (eq == std::string::npos) fail_line(line_no, "expected 'key = value'");
        if (current.empty()) fail_line(line_no, "content before any section header");
        const std::string key = trim(raw.substr(0, eq));
        std::size_t vstart = eq + 1;
        while (vstart < raw.size() && std::isspace(static_cast<unsigned char>(raw[vstart])))
            ++vstart;
        const std::string value = trim(raw.substr(eq + 1));
        if (key.empty()) fail_line(line_no, "expected a key before '='");
        if (value.empty()) fail_line(line_no, "empty value for '" + key + "'");

        const auto& allowed = allowed_keys().at(current);
        if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
            fail_line(line_no, "unknown key '" + key + "' in [" + current + "]");

        KeyVal kv{line_no, static_cast<int>(vstart) + 1, value};
        Section& sec = secs[current];
        if (current == "map" && key == "component") {
            sec.components.push_back(std::move(kv));
            continue;
        }
        if (sec.keys.count(key)) fail_line(line_no, "duplicate key '" + key + "'");
        sec.keys[key] = std::move(kv);
    }

    if (!secs["source"].present) fail_line(1, "missing [source] section");

    ProblemFile pf;
    {
        VarietyData d = build_variety(secs["source"], "source");
        try {
            pf.source.emplace(d.table, d.sigma, d.dim);
        } catch (const usage_error& e) {
            fail_line(d.defining_line, e.what());
        }
    }
    if (secs["target"].present) {
        VarietyData d = build_variety(secs["target"], "target");
        try {
            pf.target.emplace(d.table, d.sigma, d.dim);
        } catch (const usage_error& e) {
            fail_line(d.defining_line, e.what());
        }
    }
    if (secs["map"].present) {
        const Section& sec = secs["map"];
        if (sec.components.empty())
            fail_line(sec.line, "[map] needs at least one 'component' line");
        const TablePtr& zt = pf.source->z_table();
        std::vector<Poly> comps;
        long max_deg = 1;
        for (const auto& kv : sec.components) {
            Poly h = ExprParser(kv.value, zt, kv.line, kv.col).parse();
            if (!h.constant_term().is_zero())
                fail_line(kv.line, "no-constant-term: map component has a constant term");
            max_deg = std::max(max_deg, h.total_degree());
            comps.push_back(std::move(h));
        }
        long cap = max_deg;
        int cap_line = sec.line;
        if (auto it = sec.keys.find("degree_cap"); it != sec.keys.end()) {
            cap = parse_int(it->second, "degree_cap", 1, 1 << 20);
            cap_line = it->second.line;
        }
        try {
            pf.map.emplace(zt, std::move(comps), static_cast<int>(cap));
        } catch (const usage_error& e) {
            fail_line(cap_line, e.what());
        }
        if (pf.target && pf.map->components().size() != pf.target->n_z())
            fail_line(sec.line, "map needs " + std::to_string(pf.target->n_z()) +
                                    " components, one per target variable");
    }
    if (secs["options"].present) {
        const Section& sec = secs["options"];
        if (auto it = sec.keys.find("bracket_cap"); it != sec.keys.end())
            pf.options.bracket_cap =
                static_cast<int>(parse_int(it->second, "bracket_cap", 1, 64));
        if (auto it = sec.keys.find("colength_cap"); it != sec.keys.end())
            pf.options.colength_cap =
                static_cast<int>(parse_int(it->second, "colength_cap", 1, 256));
        if (auto it = sec.keys.find("jet_cap"); it != sec.keys.end())
            pf.options.jet_cap = static_cast<int>(parse_int(it->second, "jet_cap", 0, 1024));
        if (auto it = sec.keys.find("order"); it != sec.keys.end()) {
            if (it->second.value != "lex" && it->second.value != "degrevlex")
                fail_line(it->second.line, "'order' must be lex or degrevlex");
            pf.options.order = it->second.value;
        }
    }
    return pf;
}

std::string serialize_problem(const ProblemFile& pf) {
    if (!pf.source) throw usage_error("problem file has no source");
    std::string out;
    auto emit_variety = [&out](const std::string& name, const RealVariety& v) {
        out += "[" + name + "]\n";
        out += "vars = ";
        for (std::size_t i = 0; i < v.n_z(); ++i) {
            if (i) out += ", ";
            out += v.z_table()->name(i);
        }
        out += "\ndefining = ";
        for (std::size_t i = 0; i < v.sigma().size(); ++i) {
            if (i) out += "; ";
            out += v.sigma()[i].str();
        }
        out += "\n";
        if (v.dim_hint()) out += "dim = " + std::to_string(*v.dim_hint()) + "\n";
    };

    emit_variety("source", *pf.source);
    if (pf.target) {
        out += "\n";
        emit_variety("target", *pf.target);
    }
    if (pf.map) {
        out += "\n[map]\n";
        for (const auto& h : pf.map->components()) out += "component = " + h.str() + "\n";
        out += "degree_cap = " + std::to_string(pf.map->degree_cap()) + "\n";
    }
    out += "\n[options]\n";
    out += "bracket_cap = " + std::to_string(pf.options.bracket_cap) + "\n";
    out += "colength_cap = " + std::to_string(pf.options.colength_cap) + "\n";
    out += "jet_cap = " + std::to_string(pf.options.jet_cap) + "\n";
    out += "order = " + pf.options.order + "\n";
    return out;
}

Poly parse_poly(const std::string& text, const TablePtr& table) {
    return ExprParser(text, table, 1, 1).parse();
}

}  // namespace crlab
