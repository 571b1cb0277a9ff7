// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>

namespace recur {

/// Tunables shared by all solvers. Every field has a desk-scale default; the
/// CLI layers flags, environment and config files on top of these.
struct SolverConfig {
	/// Ranges N at or below this are solved by an exact scan (optimal).
	std::uint64_t brute_threshold = 1'000'000;
	/// Largest range the oracle's exhaustive scan accepts.
	std::uint64_t oracle_scan_cap = 10'000'000;
	/// Maximum number of torus boxes g^d a Kronecker walk may use. Above it
	/// the grid is coarsened to the largest g' with g'^d within the cap.
	std::uint64_t kronecker_box_cap = 100'000'000;
	/// Maximum number of entries in the subset-sum box map.
	std::uint64_t pigeonhole_map_cap = std::uint64_t{1} << 26;
	/// Largest n decomposed by the Waring dynamic program directly.
	std::uint64_t waring_dp_cap = 10'000'000;
	/// Largest base range used when seeding a degree >= 3 recursion, so that
	/// the Waring table stays cheap.
	std::uint64_t waring_base_cap = 1'000'000;
	/// Largest polynomial degree the general pipeline accepts.
	int max_degree = 5;
	/// Largest monomial system a power chain may feed to the lower-degree
	/// solver.
	std::uint64_t chain_system_cap = 4096;
	/// Precision used when an input is given as an irrational (e.g. sqrt:2).
	int precision_bits = 64;
	/// Longest chain x_1..x_m a refinement step may build (2^m subsets).
	std::size_t max_chain_length = 20;
};

} // namespace recur
