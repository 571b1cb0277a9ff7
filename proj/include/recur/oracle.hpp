// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "recur/certificate.hpp"
#include "recur/config.hpp"
#include "recur/poly.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace recur {

/// value = min over 1 <= n <= scanned of max_j ||h_j(n)||, attained first at n_star.
struct OracleResult {
	BigInt n_star;
	TorusDistance value;
	std::uint64_t scanned = 0;
};

/// Exhaustive minimizer over [1, N]. Values h_j(n) mod 1 are advanced with a
/// finite-difference table, so no powers are recomputed. Throws
/// Error(cap_exceeded) when N > cfg.oracle_scan_cap.
OracleResult brute_force_min(const PolySystem &polys, std::uint64_t N, const SolverConfig &cfg = {});

struct VerifyReport {
	bool ok = true;
	std::vector<std::string> diagnostics;

	explicit operator bool() const noexcept { return ok; }
};

/// Recomputes every residual of `cert` from `polys` and checks the claimed
/// values bit for bit, plus 1 <= n <= range.
VerifyReport verify_certificate(const Certificate &cert, const PolySystem &polys);

struct IdentityReport {
	bool ok = false;
	BigInt lhs;           // (sum X_i)^k
	BigInt diagonal;      // sum X_i^k
	BigInt off_diagonal;  // sum over non-constant index tuples
};

/// Checks (X_1 + ... + X_n)^k = sum X_i^k + sum_{diagonal excluded} X_{i1}...X_{ik}
/// by enumerating all n^k index tuples. Requires 1 <= n <= 6 and 1 <= k <= 5;
/// throws Error(cap_exceeded) otherwise.
IdentityReport expansion_identity_check(std::span<const BigInt> values, int k);

} // namespace recur
