#pragma once

// Deterministic result reporting for the command-line tool.
//
// A Report carries the command echo, a digest of the input text, a result
// payload (already shaped as ordered JSON so key order is fixed at build
// time), and a list of caveat sentences.  Identical inputs must produce
// byte-identical renderings, in both text and JSON form, regardless of run
// count or thread count; everything here is pure formatting over
// deterministic data.
//
// All exact numbers in payloads are rendered as strings ("3/2", "1+2i"),
// never floats.  Cardinalities (dimensions, caps, counts) are JSON integers.

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "crlab/groebner.hpp"
#include "crlab/poly.hpp"

namespace crlab {

using ordered_json = nlohmann::ordered_json;

// FNV-1a over the raw input bytes; stable across platforms.
std::uint64_t fnv1a64(const std::string& bytes);

// 16 lowercase hex digits of fnv1a64 — the `input_digest` report field.
std::string input_digest(const std::string& bytes);

// Polynomials and ideals enter payloads through their canonical renderings.
ordered_json poly_json(const Poly& p);
ordered_json basis_json(const std::vector<Poly>& basis);
ordered_json ideal_json(const Ideal& I);

struct Report {
    std::string command;
    std::string input_digest;
    ordered_json result = ordered_json::object();
    std::vector<std::string> caveats;
};

// {"schema": 1, "command": ..., "input_digest": ..., "result": ...,
//  "caveats": [...]}
ordered_json report_json(const Report& r);

// Two-space-indented JSON with a trailing newline.
std::string render_json(const Report& r);

// Indented key/value text for terminals; same information as the JSON.
std::string render_text(const Report& r);

// Canonical caveat sentences.  Dimension statements are global Krull
// dimensions of the polynomial representatives; on non-monomial generators
// the formal-local dimension at the origin is a separate (smaller-or-equal)
// quantity, so any report whose dimension came from such an ideal carries
// note_global_dimension().
std::string note_global_dimension();
std::string note_germ_radical();
std::string note_given_generators();
std::string note_type_undetermined(std::size_t cap);
std::string note_colength_unknown(std::size_t cap);

// True when every generator is a single term; such ideals are exactly the
// ones whose Krull dimension is also the local dimension at the origin.
bool all_monomial(const std::vector<Poly>& gens);

}  // namespace crlab
