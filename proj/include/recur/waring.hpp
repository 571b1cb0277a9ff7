// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "recur/config.hpp"
#include "recur/torus.hpp"

#include <cstddef>
#include <vector>

namespace recur {

/// n = sum parts_i^k, parts in descending order, zero-padded.
struct PowerDecomposition {
	BigInt n;
	int k = 2;
	std::vector<BigInt> parts;
};

/// Lagrange decomposition into exactly four squares (a, b, c, e) with
/// a >= b >= c >= e, found by descending exhaustive search. The result has the
/// largest possible a, then the largest b for that a, and so on.
PowerDecomposition four_squares(const BigInt &n);

/// Decomposes n into at most s_max k-th powers.
///
/// For n <= cfg.waring_dp_cap this is a dynamic program over 0..n of minimal
/// term counts (ties broken towards the larger part). Larger n are first
/// reduced greedily by the largest k-th power until the remainder fits the
/// table. The result is zero-padded to the smallest power of two >= s_max.
/// Throws Error(infeasible_budget) when more than s_max terms are needed.
PowerDecomposition kth_power_decomposition(const BigInt &n, int k, std::size_t s_max,
                                           const SolverConfig &cfg = {});

/// Default term budget per degree: the classical g(k) (4, 9, 19, 37 for
/// k = 2..5, then 2^k + floor((3/2)^k) - 2). Outputs are validated, not
/// trusted.
std::size_t default_waring_budget(int k);

/// Smallest power of two >= x (x >= 1).
std::size_t next_pow2(std::size_t x);

/// Number of entries in the seed witness of a degree-k recursion: 4 for
/// squares, next_pow2(default_waring_budget(k)) otherwise.
std::size_t base_terms(int k);

} // namespace recur
