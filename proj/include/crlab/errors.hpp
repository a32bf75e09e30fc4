#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace crlab {

// Caller misuse: mixed variable tables, malformed input, violated preconditions.
struct usage_error : std::runtime_error {
    explicit usage_error(const std::string& what) : std::runtime_error(what) {}
};

// Exact algebra can blow up; resource caps fail hard instead of truncating.
struct resource_error : std::runtime_error {
    explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

// Problem-file rejection: syntax errors carry line/column, invariant
// violations carry the named invariant of the module that owns it.
struct parse_error : usage_error {
    explicit parse_error(const std::string& what) : usage_error(what) {}
};

// Resource caps and default analysis depths. Set once at startup (the CLI
// reads them from the problem file); not meant to be mutated concurrently.
struct Caps {
    int max_total_degree = 256;
    std::size_t max_terms = 500000;
    std::size_t max_pairs = 200000;   // Buchberger pair-queue guard
    int colength_cap = 16;
    int bracket_cap = 8;              // heuristic default, no a-priori bound exists
    int jet_cap = 32;
};

Caps& caps();

}  // namespace crlab
