// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "recur/config.hpp"
#include "recur/torus.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace recur {

/// Two disjoint index sets whose alpha-weighted power sums nearly agree mod 1.
///
/// betas[j] is exactly (sum_{i in Y} powers_i) * alpha_j mod 1, so the Y side
/// carries no defect. deltas_z[j] is the signed torus difference
/// (sum_{i in Z} powers_i) * alpha_j - betas[j], with |deltas_z[j]| <= 1/grid.
struct SubsetPair {
	std::vector<std::size_t> y_indices;
	std::vector<std::size_t> z_indices;
	std::vector<TorusValue> betas;
	std::vector<Rational> deltas_z;
	BigInt grid;
	/// One side is empty; the other then satisfies ||(sum powers) alpha_j|| <= 1/grid.
	bool degenerate = false;
	std::uint64_t visits = 0;
};

/// Enumerates the subsets of {0..m-1} in Gray-code order, updating the
/// residue vector of sum powers_i * alpha_j one element at a time, until two
/// subsets S != T share a box of side 1/g. Returns Y = S \ T and Z = T \ S.
///
/// Requires g >= 2 and g^d < 2^m; otherwise throws
/// Error(pigeonhole_infeasible). Throws Error(cap_exceeded) when the box map
/// would grow past cfg.pigeonhole_map_cap.
SubsetPair disjoint_subset_pair(std::span<const BigInt> powers, std::span<const TorusValue> alphas,
                                const BigInt &g, const SolverConfig &cfg = {});

/// floor(2^((m-1)/d)), the largest grid for which m elements always collide.
BigInt default_grid(std::size_t m, std::size_t d);

} // namespace recur
