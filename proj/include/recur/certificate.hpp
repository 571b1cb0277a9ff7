// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "recur/poly.hpp"
#include "recur/torus.hpp"

#include <string>
#include <utility>
#include <vector>

namespace recur {

/// One recorded parameter choice. Fields keep insertion order so that the
/// serialized trace is reproducible.
struct TraceEntry {
	std::string stage;
	int depth = 0;
	std::vector<std::pair<std::string, std::string>> fields;

	TraceEntry &add(std::string key, std::string value)
	{
		fields.emplace_back(std::move(key), std::move(value));
		return *this;
	}

	friend bool operator==(const TraceEntry &, const TraceEntry &) = default;
};

/// A solver answer that can be re-derived from the raw inputs.
struct Certificate {
	BigInt n;
	BigInt range;
	int degree = 1;
	std::vector<TorusDistance> residuals;  // ||h_j(n)||
	Rational achieved;                     // max_j residuals[j]
	std::string method;                    // kronecker, scan, recursion, split, fallback-scan
	bool fallback = false;                 // some stage used the brute-force prefix fallback
	std::vector<TraceEntry> trace;

	/// Appends another certificate's trace one level deeper.
	void absorb_trace(const Certificate &sub);
};

/// Builds a certificate for `n` against `polys`, recomputing every residual
/// exactly.
Certificate certify(const PolySystem &polys, const BigInt &n, const BigInt &range,
                    std::string method);

} // namespace recur
