#include "crlab/report.hpp"

#include <sstream>

namespace crlab {

std::uint64_t fnv1a64(const std::string& bytes) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char b : bytes) {
        h ^= static_cast<std::uint64_t>(b);
        h *= 1099511628211ULL;
    }
    return h;
}

std::string input_digest(const std::string& bytes) {
    static const char* hex = "0123456789abcdef";
    std::uint64_t h = fnv1a64(bytes);
    std::string out(16, '0');
    for (int k = 15; k >= 0; --k) {
        out[static_cast<std::size_t>(k)] = hex[h & 0xfull];
        h >>= 4;
    }
    return out;
}

ordered_json poly_json(const Poly& p) { return p.str(); }

ordered_json basis_json(const std::vector<Poly>& basis) {
    ordered_json arr = ordered_json::array();
    for (const Poly& g : basis) arr.push_back(g.str());
    return arr;
}

ordered_json ideal_json(const Ideal& I) { return basis_json(I.basis()); }

ordered_json report_json(const Report& r) {
    ordered_json j;
    j["schema"] = 1;
    j["command"] = r.command;
    j["input_digest"] = r.input_digest;
    j["result"] = r.result;
    j["caveats"] = r.caveats;
    return j;
}

std::string render_json(const Report& r) { return report_json(r).dump(2) + "\n"; }

namespace {

void render_value(std::ostream& os, const ordered_json& v, int indent) {
    const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    if (v.is_object()) {
        for (const auto& [key, val] : v.items()) {
            if (val.is_object() || val.is_array()) {
                os << pad << key << ":\n";
                render_value(os, val, indent + 1);
            } else if (val.is_string()) {
                os << pad << key << ": " << val.get<std::string>() << "\n";
            } else {
                os << pad << key << ": " << val.dump() << "\n";
            }
        }
    } else if (v.is_array()) {
        for (const auto& val : v) {
            if (val.is_object() || val.is_array()) {
                os << pad << "-\n";
                render_value(os, val, indent + 1);
            } else if (val.is_string()) {
                os << pad << "- " << val.get<std::string>() << "\n";
            } else {
                os << pad << "- " << val.dump() << "\n";
            }
        }
    } else if (v.is_string()) {
        os << pad << v.get<std::string>() << "\n";
    } else {
        os << pad << v.dump() << "\n";
    }
}

}  // namespace

std::string render_text(const Report& r) {
    std::ostringstream os;
    os << "command: " << r.command << "\n";
    os << "input: " << r.input_digest << "\n";
    render_value(os, r.result, 0);
    for (const std::string& c : r.caveats) os << "note: " << c << "\n";
    return os.str();
}

std::string note_global_dimension() {
    return "dimensions are global Krull dimensions of the polynomial "
           "representatives; the formal-local dimension at the origin may be "
           "smaller for non-monomial generators";
}

std::string note_germ_radical() {
    return "germ containments are checked as radical containments of "
           "polynomial representatives";
}

std::string note_given_generators() {
    return "the supplied generators are treated as defining data; results may "
           "depend on the presentation, not only on the germ";
}

std::string note_type_undetermined(std::size_t cap) {
    return "finite type not determined within bracket cap " +
           std::to_string(cap) + "; a larger --max-length may decide";
}

std::string note_colength_unknown(std::size_t cap) {
    return "map finiteness not determined within colength cap " +
           std::to_string(cap) + "; a larger --cap may decide";
}

bool all_monomial(const std::vector<Poly>& gens) {
    for (const Poly& g : gens)
        if (g.terms().size() > 1) return false;
    return true;
}

}  // namespace crlab
