#pragma once

#include <string>

#include <json.hpp>

#include "latcode/gfcore.hpp"
#include "latcode/lattice_core.hpp"
#include "latcode/lattice_props.hpp"
#include "latcode/subspace_codes.hpp"
#include "latcode/theorem_lab.hpp"

namespace latcode::io {

using Json = nlohmann::ordered_json;

// Subspace files: {"q": int, "modulus": [ints]|null, "n": int, "rows": [[ints]]}.
// Rows must already be in reduced row echelon form; anything else is rejected.
Json subspace_to_json(const gf::Field& f, const gf::SubspaceRepr& s);
std::pair<gf::Field, gf::SubspaceRepr> subspace_from_json(const Json& j);

// Lattice files: {"n": int, "covers": [[lo, hi], ...], "labels": [str]|null}.
// Cover pairs are emitted sorted, so the round trip is byte-stable.
Json lattice_to_json(const lattice::FiniteLattice& L);
lattice::FiniteLattice lattice_from_json(const Json& j);

// Property reports: {"property": str, "holds": bool, "witness": {...}|null}
// with witness {"kind": str, "elements": [int], "detail": str}.
Json witness_to_json(const props::Witness& w);
Json property_report_to_json(const props::PropertyReport& r);

// Axiom reports mirror property reports:
// {"axioms": [{"axiom": str, "pass": bool}], "witness": {...}|null}.
Json axiom_report_to_json(const codes::AxiomReport& r);

// Code files: {"q", "n", "codewords": [subspace JSON, ...],
// "boxplus": [[int]]|null, "complement": [int]|null, "blocks": [[int]]|null}.
Json code_to_json(const codes::SubspaceCode& c);
codes::SubspaceCode code_from_json(const Json& j);

// Suite reports: {"suite": str, "seed": int|null, "instances": int,
// "failures": [{"instance": str, "witness": {...}}]}.
Json suite_report_to_json(const lab::SuiteReport& r);

// Canonical serialization used for files: two-space indent, trailing newline.
std::string dump(const Json& j);

Json parse_file(const std::string& path);
void write_file_atomic(const std::string& path, const std::string& contents);

}  // namespace latcode::io
