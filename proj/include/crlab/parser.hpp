#pragma once

#include <optional>
#include <string>

#include "crlab/formal_maps.hpp"

namespace crlab {

struct ProblemOptions {
    int bracket_cap = 8;
    int colength_cap = 16;
    int jet_cap = 32;
    std::string order = "degrevlex";  // "lex" | "degrevlex"
};

/// One analysis problem: a source submanifold, an optional target variety,
/// an optional map jet in the source Z-variables, and resource options.
struct ProblemFile {
    std::optional<GenericSubmanifold> source;
    std::optional<RealVariety> target;
    std::optional<FormalMapJet> map;
    ProblemOptions options;
};

/// Sectioned plain-text format:
///
///   # comment to end of line
///   [source]
///   vars = z, w               # Z-block names; zeta-partners ~z, ~w implicit
///   defining = <poly>; <poly>
///   dim = 3                   # optional declared real dimension
///   [target]                  # optional, same keys as [source]
///   [map]                     # optional; components in source Z-variables
///   component = <poly>        # one line per target variable, in order
///   degree_cap = 2            # optional, defaults to the largest degree
///   [options]                 # optional
///   bracket_cap = 8
///   colength_cap = 16
///   jet_cap = 32
///   order = degrevlex
///
/// Polynomial grammar: poly := ['+'|'-'] term (('+'|'-') term)*;
/// term := factor ('*' factor)*; factor := atom ['^' nat];
/// atom := rational | 'i' | var | '(' poly ')'; rational := nat ['/' nat]
/// with an optional 'i' glued to the last number (2i, 3/2i). Whitespace
/// insensitive. Syntax and invariant violations throw parse_error with a
/// line (and column, for syntax) location.
ProblemFile parse_problem(const std::string& text);

/// Canonical text form; parse_problem(serialize_problem(pf)) is structurally
/// identical to pf.
std::string serialize_problem(const ProblemFile& pf);

/// Single-expression entry point used by the file parser and by tests;
/// locations are reported against line 1 of the given text.
Poly parse_poly(const std::string& text, const TablePtr& table);

}  // namespace crlab
