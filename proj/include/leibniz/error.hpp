#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace leibniz {

enum class ErrorCode {
	DivisionByZero,
	MixedFields,
	InvalidField,
	ParseError,
	AmbientMismatch,
	ShapeMismatch,
	BudgetExceeded,
	InfiniteField,
	NotAnIdeal,
	NotClosed,
	NotLeibniz,
	FieldTooSmall,
	CertificationFailed,
	PreconditionViolated,
	HypothesisViolated,
	TheoremViolated,
	NoComplementNeeded,
	NotAbelianIdeal,
	NotLie,
	NotBimodule,
	RetryBudgetExceeded,
};

std::string_view error_code_name(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so that
/// callers (the CLI in particular) can map them to exit statuses.
class Error : public std::runtime_error
{
  public:
	Error(ErrorCode code, const std::string& what)
	    : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code), detail_(what)
	{}

	ErrorCode code() const noexcept { return code_; }
	/// The message without the code prefix, for rethrowing with more context.
	const std::string& detail() const noexcept { return detail_; }

  private:
	ErrorCode code_;
	std::string detail_;
};

} // namespace leibniz
