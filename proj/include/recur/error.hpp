// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace recur {

enum class ErrorKind {
	invalid_denominator,
	invalid_instance,
	infeasible_budget,
	pigeonhole_infeasible,
	cap_exceeded,
	parse_error,
};

const char *to_string(ErrorKind kind);

/// All library failures are reported through this exception. The kind lets
/// drivers distinguish recoverable budget failures (which trigger the
/// brute-force fallback) from malformed input.
class Error : public std::runtime_error {
public:
	Error(ErrorKind kind, const std::string &what)
	: std::runtime_error(what), kind_(kind)
	{}

	ErrorKind kind() const noexcept { return kind_; }

	/// True for failures that mean "this schedule does not fit", as opposed
	/// to "this input is wrong".
	bool recoverable() const noexcept
	{
		return kind_ == ErrorKind::infeasible_budget ||
		       kind_ == ErrorKind::pigeonhole_infeasible ||
		       kind_ == ErrorKind::cap_exceeded;
	}

private:
	ErrorKind kind_;
};

} // namespace recur
