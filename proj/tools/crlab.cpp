// crlab — exact symbolic toolkit for CR-geometric invariants.
//
// Usage: crlab <subcommand> <file> [--json] [--max-length k] [--cap k]
//                                  [--order lex|degrevlex]
//
// Subcommands: segre essvar ftype mapfinite mapcheck preimage-check
//              criterion verdict gb
//
// Exit status: 0 definite result, 2 inconclusive (a cap was reached before
// the question was decided), 1 usage or input error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "crlab/errors.hpp"
#include "crlab/formal_maps.hpp"
#include "crlab/parser.hpp"
#include "crlab/report.hpp"

using namespace crlab;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitInconclusive = 2;

struct Invocation {
    std::string command;
    std::string file;
    bool json = false;
    int max_length = -1;  // bracket cap override; -1 = not given
    int cap = -1;         // colength cap override; -1 = not given
    std::string order;    // "" = not given
};

struct Resolved {
    int bracket_cap;
    int colength_cap;
    int jet_cap;
    std::string order;
};

// Command-line flags win over the file's [options]; the file wins over the
// built-in defaults (which ProblemOptions already carries).
Resolved resolve(const Invocation& inv, const ProblemOptions& opt) {
    Resolved r{opt.bracket_cap, opt.colength_cap, opt.jet_cap, opt.order};
    if (inv.max_length >= 0) r.bracket_cap = inv.max_length;
    if (inv.cap >= 0) r.colength_cap = inv.cap;
    if (!inv.order.empty()) r.order = inv.order;
    return r;
}

ordered_json options_json(const Resolved& r) {
    ordered_json j;
    j["bracket_cap"] = r.bracket_cap;
    j["colength_cap"] = r.colength_cap;
    j["jet_cap"] = r.jet_cap;
    j["order"] = r.order;
    return j;
}

ordered_json dim_json(const DimReport& d) {
    ordered_json j;
    j["krull_dim"] = d.krull_dim;
    j["zero_dimensional"] = d.zero_dimensional;
    if (d.colength) j["colength"] = *d.colength;
    return j;
}

ordered_json colength_json(const Colength& c) {
    ordered_json j;
    j["status"] = c.known ? "Finite(" + std::to_string(c.value) + ")"
                          : "UnknownBeyond(" + std::to_string(c.cap) + ")";
    j["known"] = c.known;
    if (c.known) {
        j["colength"] = c.value;
        j["jet_order"] = c.jet_order;
    }
    j["cap"] = c.cap;
    return j;
}

ordered_json type_json(const TypeReport& t) {
    ordered_json j;
    j["status"] = t.finite ? "FiniteType(" + std::to_string(t.order) + ")"
                           : "UndeterminedBeyond(" + std::to_string(t.cap) + ")";
    j["finite"] = t.finite;
    if (t.finite) j["order"] = t.order;
    j["cap"] = t.cap;
    j["span_dims"] = t.span_dims;
    return j;
}

ordered_json criterion_json(const CriterionReport& c) {
    ordered_json j;
    j["basis"] = ideal_json(c.ideal);
    j["dim"] = dim_json(c.dim);
    j["satisfied"] = c.satisfied;
    return j;
}

void require_target(const ProblemFile& pf, const std::string& cmd) {
    if (!pf.target)
        throw usage_error("the " + cmd + " command needs a [target] section");
}

void require_map(const ProblemFile& pf, const std::string& cmd) {
    if (!pf.map) throw usage_error("the " + cmd + " command needs a [map] section");
}

// Reports whose dimension figure came from krull_dim of a non-monomial basis
// carry the global-vs-local caveat.
void flag_dimension(Report& rep, const Ideal& I) {
    if (!all_monomial(I.basis())) rep.caveats.push_back(note_global_dimension());
}

int run_command(const Invocation& inv) {
    std::ifstream in(inv.file, std::ios::binary);
    if (!in) {
        std::cerr << "error: cannot open '" << inv.file << "'\n";
        return kExitError;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();

    ProblemFile pf = parse_problem(text);
    const Resolved opt = resolve(inv, pf.options);
    const MonomialOrder order = MonomialOrder::by_name(opt.order);
    const GenericSubmanifold& M = *pf.source;

    Report rep;
    rep.command = inv.command;
    rep.input_digest = input_digest(text);
    rep.result["options"] = options_json(opt);
    int exit_code = kExitOk;

    if (inv.command == "segre") {
        Ideal s0 = segre_at(M, std::vector<GaussRat>(M.table()->size() / 2));
        Ideal I(s0.table(), s0.generators(), order);
        rep.result["basis"] = ideal_json(I);
        rep.result["dim"] = dim_json(krull_dim(I));
        flag_dimension(rep, I);
    } else if (inv.command == "essvar") {
        EssentialReport er = essential_variety(M);
        rep.result["basis"] = ideal_json(er.ideal_of_E0);
        rep.result["dim"] = dim_json(er.dim);
        rep.result["essentially_finite"] = er.essentially_finite;
        flag_dimension(rep, er.ideal_of_E0);
        rep.caveats.push_back(note_given_generators());
    } else if (inv.command == "ftype") {
        TypeReport tr = finite_type_order(M, opt.bracket_cap);
        rep.result["type"] = type_json(tr);
        if (!tr.finite) {
            rep.caveats.push_back(note_type_undetermined(static_cast<std::size_t>(tr.cap)));
            exit_code = kExitInconclusive;
        }
    } else if (inv.command == "mapfinite") {
        require_map(pf, inv.command);
        Colength c = is_finite_map(*pf.map, opt.colength_cap);
        rep.result["map_colength"] = colength_json(c);
        rep.result["jacobian_nonvanishing"] = jacobian_nonvanishing(*pf.map);
        if (!c.known) {
            rep.caveats.push_back(note_colength_unknown(static_cast<std::size_t>(c.cap)));
            exit_code = kExitInconclusive;
        }
    } else if (inv.command == "mapcheck") {
        require_target(pf, inv.command);
        require_map(pf, inv.command);
        rep.result["maps_into"] = maps_into(*pf.map, M, *pf.target);
        rep.caveats.push_back(note_germ_radical());
    } else if (inv.command == "preimage-check") {
        require_target(pf, inv.command);
        require_map(pf, inv.command);
        PreimageIdentityReport pr =
            verify_segre_preimage_identity(*pf.map, M, *pf.target, opt.colength_cap);
        rep.result["hypotheses_ok"] = pr.hypotheses_ok;
        if (!pr.failed_hypothesis.empty())
            rep.result["failed_hypothesis"] = pr.failed_hypothesis;
        rep.result["map_colength"] = colength_json(pr.map_colength);
        rep.result["map_sends_into"] = pr.map_sends_into;
        if (pr.preimage) rep.result["preimage"] = ideal_json(*pr.preimage);
        if (pr.target_segre) rep.result["target_segre"] = ideal_json(*pr.target_segre);
        rep.result["ideals_match"] = pr.ideals_match;
        rep.result["source_dim"] = dim_json(pr.source_dim);
        rep.result["target_dim"] = dim_json(pr.target_dim);
        rep.result["dims_match"] = pr.dims_match;
        rep.result["verified"] = pr.verified();
        rep.caveats.push_back(note_germ_radical());
        if (pr.preimage && !all_monomial(pr.preimage->basis()))
            rep.caveats.push_back(note_global_dimension());
        if (!pr.map_colength.known) {
            rep.caveats.push_back(
                note_colength_unknown(static_cast<std::size_t>(pr.map_colength.cap)));
            exit_code = kExitInconclusive;
        }
    } else if (inv.command == "criterion") {
        require_target(pf, inv.command);
        require_map(pf, inv.command);
        CriterionReport cr = criterion_variety(*pf.map, M, *pf.target);
        rep.result["criterion"] = criterion_json(cr);
        flag_dimension(rep, cr.ideal);
        rep.caveats.push_back(note_given_generators());
    } else if (inv.command == "verdict") {
        require_target(pf, inv.command);
        require_map(pf, inv.command);
        VerdictReport vr =
            analyticity_verdict(M, *pf.target, *pf.map, opt.bracket_cap, opt.colength_cap);
        rep.result["finite_type"] = type_json(vr.finite_type);
        ordered_json ess;
        ess["basis"] = ideal_json(vr.source_essential.ideal_of_E0);
        ess["dim"] = dim_json(vr.source_essential.dim);
        ess["essentially_finite"] = vr.source_essential.essentially_finite;
        rep.result["source_essential"] = ess;
        rep.result["map_colength"] = colength_json(vr.map_finite);
        rep.result["maps_into"] = vr.maps_into_ok;
        rep.result["criterion"] = criterion_json(vr.criterion);
        rep.result["verdict"] =
            vr.verdict == Verdict::CriterionSatisfied ? "CriterionSatisfied" : "Inconclusive";
        if (!vr.reason.empty()) rep.result["reason"] = vr.reason;
        flag_dimension(rep, vr.source_essential.ideal_of_E0);
        flag_dimension(rep, vr.criterion.ideal);
        rep.caveats.push_back(note_given_generators());
        rep.caveats.push_back(note_germ_radical());
        if (!vr.finite_type.finite)
            rep.caveats.push_back(
                note_type_undetermined(static_cast<std::size_t>(vr.finite_type.cap)));
        if (!vr.map_finite.known)
            rep.caveats.push_back(
                note_colength_unknown(static_cast<std::size_t>(vr.map_finite.cap)));
        if (vr.verdict != Verdict::CriterionSatisfied) exit_code = kExitInconclusive;
    } else if (inv.command == "gb") {
        Ideal cx = complexification(M);
        Ideal I(cx.table(), cx.generators(), order);
        ordered_json ring = ordered_json::array();
        for (std::size_t k = 0; k < I.table()->size(); ++k)
            ring.push_back(I.table()->name(k));
        rep.result["ring"] = ring;
        rep.result["basis"] = ideal_json(I);
        rep.result["dim"] = dim_json(krull_dim(I));
        flag_dimension(rep, I);
    }

    std::cout << (inv.json ? render_json(rep) : render_text(rep));
    return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact symbolic toolkit for CR-geometric invariants"};
    app.require_subcommand(1);

    const std::vector<std::pair<std::string, std::string>> commands = {
        {"segre", "Segre variety of the source at the origin"},
        {"essvar", "essential variety of the source at the origin"},
        {"ftype", "finite type order of the source at the origin"},
        {"mapfinite", "finiteness of the map as a formal map germ"},
        {"mapcheck", "does the map send the source into the target?"},
        {"preimage-check", "Segre preimage identity for the map"},
        {"criterion", "criterion variety of the map"},
        {"verdict", "full analyticity-criterion pipeline"},
        {"gb", "reduced Groebner basis of the source's complexified ideal"},
    };

    Invocation inv;
    for (const auto& [name, desc] : commands) {
        CLI::App* sub = app.add_subcommand(name, desc);
        sub->add_option("file", inv.file, "problem file")->required();
        sub->add_flag("--json", inv.json, "emit the JSON report");
        sub->add_option("--max-length", inv.max_length, "bracket length cap")
            ->check(CLI::Range(1, 64));
        sub->add_option("--cap", inv.cap, "colength search cap")->check(CLI::Range(1, 256));
        sub->add_option("--order", inv.order, "monomial order")
            ->check(CLI::IsMember({"lex", "degrevlex"}));
        sub->callback([&inv, name = name] { inv.command = name; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitError;
    }

    try {
        return run_command(inv);
    } catch (const usage_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    } catch (const resource_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
}
