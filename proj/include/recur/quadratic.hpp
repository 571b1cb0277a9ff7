// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "recur/certificate.hpp"
#include "recur/config.hpp"
#include "recur/pigeonhole.hpp"
#include "recur/poly.hpp"
#include "recur/torus.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace recur {

/// Concrete integers n_1..n_s <= bound, not all zero, with
/// ||(sum n_i^exponent) alpha_j|| = residuals[j] <= eps.
struct PowerSumWitness {
	int exponent = 2;
	std::size_t s = 0;
	BigInt bound;
	Rational eps;
	std::vector<BigInt> entries;
	std::vector<TorusDistance> residuals;
};

/// Computes the residuals of `entries` against `alphas` and packages them.
PowerSumWitness make_witness(std::span<const TorusValue> alphas, int exponent,
                             std::vector<BigInt> entries, BigInt bound);

/// x_1..x_m in [1, X] whose mixed monomials of total degree K+1, times any
/// alpha_j, are within pair_bound of an integer. For K = 1 these are the
/// products x_i x_i' with i < i'.
struct ChainResult {
	std::vector<BigInt> xs;
	std::size_t m = 0;
	BigInt X;
	int K = 1;
	Rational pair_bound;
};

/// Produces a witness with 2s entries for the targets it is handed.
using WitnessProducer = std::function<PowerSumWitness(std::span<const TorusValue>)>;

struct RefineOutcome {
	PowerSumWitness witness;               // s entries, each <= entry_bound
	ChainResult chain;
	SubsetPair pair;
	std::optional<PowerSumWitness> inner;  // producer's answer; absent for a degenerate pair
	BigInt entry_bound;                    // m X M
	/// Bound implied by the inner witness, the subset defect and the chain:
	/// eps_in + max|delta| * sum n_{s+i}^k + (off-diagonal weight) * pair_bound.
	Rational claimed;
};

/// x_1 = 1; each later x_i is the Kronecker answer, over range X, for the
/// d(i-1) targets x_i' alpha_j (i' < i). pair_bound is the worst per-pick
/// guarantee, 1/floor(X^(1/(d(m-1)))) when no pick is coarsened. All pairs are
/// re-checked exactly before returning.
ChainResult build_pairwise_chain(std::span<const TorusValue> alphas, std::size_t m, const BigInt &X,
                                 const SolverConfig &cfg = {});

/// One halving step on the number of squares: from a 2s-entry witness for
/// the subset residues beta, builds an s-entry witness for alpha.
///
/// Builds the chain, finds a disjoint subset pair Y, Z of the x_i^2 on a
/// grid of side 1/g, asks `producer` for a witness n_1..n_2s on beta and
/// returns N_i = n_i (sum Y) + n_{s+i} (sum Z). Residuals are recomputed
/// exactly. A degenerate pair short-circuits to the single entry sum of the
/// nonempty side, padded with zeros.
RefineOutcome refine_quadratic(std::span<const TorusValue> alphas, std::size_t s,
                               const WitnessProducer &producer, std::size_t m, const BigInt &X,
                               const BigInt &g, const SolverConfig &cfg = {});

/// Finds 1 <= n <= N with every ||n^2 alpha_j|| small.
///
/// Ranges up to cfg.brute_threshold are scanned exactly. Larger ranges seed a
/// four-entry witness (Kronecker plus four squares) and apply two refinement
/// steps; if the schedule does not fit, the best n in a brute-force prefix
/// is returned and the certificate is marked as a fallback.
Certificate quadratic_recurrence(std::span<const TorusValue> alphas, const BigInt &N,
                                 const SolverConfig &cfg = {});

/// Quadratic polynomials alpha_j x^2 + beta_j x: n from quadratic_recurrence
/// over N/N' (N' = floor(N^(1/4))), then t from Kronecker on n beta_j over N';
/// answers tn.
Certificate quadratic_poly_recurrence(const PolySystem &polys, const BigInt &N,
                                      const SolverConfig &cfg = {});

} // namespace recur
