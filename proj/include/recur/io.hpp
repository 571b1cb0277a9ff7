// SPDX-License-Identifier: Apache-2.0

// JSON interchange. Rationals are "p/q" strings, big integers are decimal
// strings.

#pragma once

#include "recur/certificate.hpp"
#include "recur/config.hpp"
#include "recur/oracle.hpp"
#include "recur/poly.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace recur {

using json = nlohmann::ordered_json;

struct Instance {
	PolySystem polys;
	BigInt range;
	json schedule = json::object();
};

json to_json(const PolySystem &polys);
PolySystem poly_from_json(const json &j);

/// {"degree", "coeffs", "range", "schedule"?}. Throws Error(parse_error) or
/// Error(invalid_instance) naming the offending field.
Instance instance_from_json(const json &j);
json to_json(const Instance &inst);

/// Applies "schedule" overrides (same keys as SolverConfig) to cfg.
void apply_overrides(const json &schedule, SolverConfig &cfg);

/// {"n", "range", "degree", "residuals", "achieved", "trace"}, plus
/// "coeffs" when the instance is given.
json to_json(const Certificate &cert, const PolySystem *polys = nullptr);
Certificate certificate_from_json(const json &j);

/// Fixture record {"polys", "N", "n_star", "value"}.
json to_json(const OracleResult &r, const PolySystem &polys);

/// Parses a coefficient string: "p/q", an integer, a finite decimal, or
/// "sqrt:m" (the square root of m truncated to precision_bits bits).
TorusValue parse_coefficient(const std::string &s, int precision_bits);

} // namespace recur
