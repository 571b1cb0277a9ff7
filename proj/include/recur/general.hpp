// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "recur/certificate.hpp"
#include "recur/config.hpp"
#include "recur/poly.hpp"
#include "recur/quadratic.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace recur {

struct LevelPlan {
	std::size_t m = 0;
	BigInt X;
	BigInt g;
};

/// Parameter schedule for a degree-k monomial recursion over range N.
/// levels[0] is the outermost step (s = 1); the seed witness has base_terms
/// entries, each <= base_bound, from a Kronecker search over base_range.
struct RecursionBudget {
	BigInt range;
	int k = 2;
	std::size_t d = 1;
	std::vector<LevelPlan> levels;
	BigInt base_range;
	BigInt base_bound;
	std::size_t base_terms = 4;

	/// Upper bound on the final entry: prod m X times base_bound.
	BigInt entry_bound() const;
};

/// Splits N across log2(base_terms(k)) refinement levels and the seed.
/// Level l (outermost l = 0) receives about log2(N)/2^(l+1) bits; m follows
/// ceil(sqrt(bits)) raised to at least d + 1, and the outermost X absorbs
/// whatever range is left. Throws Error(infeasible_budget) when nothing fits.
RecursionBudget plan_recursion(std::size_t d, int k, const BigInt &N, const SolverConfig &cfg = {});

/// Number of monomials t^e w alpha_j a power chain of length m hands to the
/// lower-degree solver at its last pick.
std::size_t chain_system_size(std::size_t d, int K, std::size_t m);

/// Power chain for exponent K + 1. Each x_i (i >= 2) is the answer of
/// poly_recurrence over range X for the monomials t^e w alpha_j, 1 <= e <= K,
/// where w runs over products of K + 1 - e earlier picks (repetition allowed).
/// Every mixed monomial credited to its highest chain index is re-checked
/// exactly against pair_bound. K = 1 is build_pairwise_chain.
ChainResult build_power_chain(std::span<const TorusValue> alphas, int K, std::size_t m,
                              const BigInt &X, const SolverConfig &cfg = {});

/// refine_quadratic for (K+1)-th powers, on a power chain.
RefineOutcome refine_general(std::span<const TorusValue> alphas, int K, std::size_t s,
                             const WitnessProducer &producer, std::size_t m, const BigInt &X,
                             const BigInt &g, const SolverConfig &cfg = {});

/// Finds 1 <= n <= N with every ||n^k alpha_j|| small. k = 1 is Kronecker;
/// otherwise as quadratic_recurrence with a Waring seed of base_terms(k)
/// entries and log2(base_terms(k)) refinement steps.
Certificate monomial_recurrence(std::span<const TorusValue> alphas, int k, const BigInt &N,
                                const SolverConfig &cfg = {});

/// Arbitrary systems without constant term. Degree 1 is Kronecker on the
/// linear coefficients; ranges up to cfg.brute_threshold are scanned;
/// otherwise the leading coefficients are solved over N/N' for n, the
/// remainder peeled to H_j(t) = h'_j(tn) and solved over N' for t, and the
/// answer is tn.
Certificate poly_recurrence(const PolySystem &polys, const BigInt &N, const SolverConfig &cfg = {});

/// floor(N^(1/4)), at least 1: the range left for the lower-degree part.
BigInt split_range(const BigInt &N);

} // namespace recur
