// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "recur/poly.hpp"

#include <cstdint>

namespace recur::detail {

struct ScanResult {
	BigInt n;
	Rational value;
};

/// Smallest n in [1, limit] minimizing max_j ||h_j(n)||, evaluating every
/// h_j(n) afresh by Horner's rule modulo the row's common denominator.
ScanResult exact_scan(const PolySystem &polys, std::uint64_t limit);

} // namespace recur::detail
