#pragma once

#include <optional>
#include <string>

#include "leibniz/algebra.hpp"
#include "leibniz/io.hpp"

namespace leibniz {

/// "0,1,0,0" in basis order, or a basis label such as "n".
Element parse_element(const Algebra& a, const std::string& text);
/// Elements separated by ';', e.g. "u" or "1,0,0,0;0,0,1,0".
Subspace parse_subspace(const Algebra& a, const std::string& text);

/// Labeled linear combination ("-u + k") when labels exist, coordinates otherwise.
std::string describe(const Algebra& a, const Vector& v);
/// "span{n, n^2}"; "0" for the zero subspace.
std::string describe(const Algebra& a, const Subspace& s);

struct AnalyzeOptions
{
	bool series = false;
	bool centres = false;
	bool cartan = false;
	bool socle = false;
	bool frattini = false;
	bool primitive = false;
	std::optional<std::string> normalizer;
	std::optional<std::string> engel;
	std::uint64_t budget = default_budget;
};

/// Deterministic JSON report. Gated analyses over Q raise InfiniteField,
/// --cartan over a small field raises FieldTooSmall.
Json analyze(const Algebra& a, const AnalyzeOptions& options);
/// Human-readable rendering of an analyze() report.
std::string analyze_text(const Algebra& a, const Json& report);

/// {"holds": bool, "failure": {"triple": [i, j, k], "lhs": [...], "rhs": [...]}} with 1-based indices.
Json verify_report(const Algebra& a);

} // namespace leibniz
