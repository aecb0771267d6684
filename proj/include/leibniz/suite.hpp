#pragma once

#include <optional>
#include <string>
#include <vector>

#include "leibniz/generate.hpp"
#include "leibniz/io.hpp"

namespace leibniz {

/// A theorem check with a stable name used by --filter and in reports.
struct TheoremInfo
{
	std::string name;
	std::vector<std::string> aliases;
	std::string statement;
};

const std::vector<TheoremInfo>& theorem_catalogue();

/// Canonical name for a name or alias.
std::optional<std::string> resolve_theorem(const std::string& name_or_alias);

enum class CheckStatus { Pass, Fail, Skip };
const char* status_name(CheckStatus s);

struct CheckResult
{
	std::string theorem;
	CheckStatus status;
	std::string detail;
};

struct EntryResult
{
	std::string algebra;
	std::vector<CheckResult> checks; ///< catalogue order
};

struct SuiteOptions
{
	std::uint64_t budget = default_budget;
	std::uint64_t seed = 1;
	std::size_t samples = 6;        ///< random elements per algebra, on top of the basis
	std::vector<std::string> filter; ///< canonical names; empty runs everything
};

struct SuiteReport
{
	std::vector<std::string> theorems; ///< columns, in catalogue order
	std::vector<EntryResult> entries;

	std::size_t count(CheckStatus s) const;
	bool all_passed() const { return count(CheckStatus::Fail) == 0; }
	Json to_json() const;
	std::string to_text() const;
};

/// Checks one algebra against every selected theorem. Enumeration overruns
/// and inapplicable hypotheses are reported as Skip, never as Pass.
EntryResult check_algebra(const std::string& name, const Algebra& a, const SuiteOptions& options);

SuiteReport run_theorem_suite(const std::vector<CorpusEntry>& corpus, const SuiteOptions& options);

} // namespace leibniz
