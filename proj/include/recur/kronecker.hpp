// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "recur/config.hpp"
#include "recur/torus.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace recur {

struct KroneckerResult {
	BigInt n;                              // 1 <= n <= N
	std::vector<TorusDistance> residuals;  // ||n alpha_j||
	Rational guarantee;                    // every residual is <= this
	BigInt grid;                           // boxes per dimension actually used
	bool coarsened = false;                // grid reduced to respect the box cap
	std::uint64_t orbit_steps = 0;         // orbit points visited
};

/// Finds 1 <= n <= N with ||n alpha_j|| <= 1/g for every j, g = floor(N^(1/d)).
///
/// Walks the orbit m*alpha for m = 0, 1, ... and records which of the g^d
/// boxes of side 1/g each point falls in. The first repeated box, at orbit
/// positions m < m', yields n = m' - m <= g^d <= N. When g <= 1 the result is
/// n = 1 with guarantee 1/2. When g^d exceeds cfg.kronecker_box_cap, the grid
/// is coarsened to the largest g' with g'^d within the cap; the guarantee is
/// then 1/g'.
KroneckerResult kronecker_approx(std::span<const TorusValue> alphas, const BigInt &N,
                                 const SolverConfig &cfg = {});

} // namespace recur
