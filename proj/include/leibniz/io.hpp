#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "leibniz/algebra.hpp"
#include "leibniz/bimodule.hpp"
#include "leibniz/generate.hpp"

namespace leibniz {

using Json = nlohmann::ordered_json;

// Algebra files:
//   {"field": {"kind": "Q"} | {"kind": "Fp", "p": 5}, "dim": n, "labels": [...],
//    "products": [{"i": 1, "j": 2, "out": ["1", "0", "-1", "0"]}, ...]}
// Indices are 1-based, scalars are strings, unlisted products are zero.

Json field_to_json(const Field& f);
Field field_from_json(const Json& j);

Json scalar_to_json(const Scalar& s);
Json vector_to_json(const Vector& v);
/// Rows are the canonical basis.
Json subspace_to_json(const Subspace& s);
Json matrix_to_json(const Matrix& m);

Json algebra_to_json(const Algebra& a);
/// Shape and field errors raise ParseError naming the offending field.
/// The Leibniz identity is not checked here.
Algebra algebra_from_json(const Json& j);

/// Parses text; ParseError messages carry line and column.
Algebra parse_algebra(const std::string& text, const std::string& source = "<input>");
Algebra load_algebra(const std::filesystem::path& path);
/// Pretty-printed with two-space indent and a trailing newline.
std::string dump_json(const Json& j);
void write_text(const std::filesystem::path& path, const std::string& text);

/// {"algebra": {...}, "module_dim": m, "T": [matrix per basis vector], "S": [...]}
Json bimodule_to_json(const Bimodule& b);
Bimodule bimodule_from_json(const Json& j);

/// Writes one "<name>.json" per entry and a manifest.json carrying provenance and flags.
void write_corpus(const std::filesystem::path& dir, const std::vector<CorpusEntry>& entries);
/// Reads manifest.json when present, otherwise every *.json file in name order.
/// Every entry is re-verified; failures raise NotLeibniz or ParseError naming the file.
std::vector<CorpusEntry> load_corpus(const std::filesystem::path& dir, std::uint64_t budget = default_budget);

} // namespace leibniz
