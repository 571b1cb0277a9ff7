// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "recur/torus.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace recur {

/// d polynomials of degree <= k with no constant term. coeffs[j][e] is the
/// coefficient (mod 1) of x^(e+1) in h_j.
struct PolySystem {
	int degree = 1;
	std::vector<std::vector<TorusValue>> coeffs;

	/// h_j(x) = alpha_j x^k for each j.
	static PolySystem monomials(std::span<const TorusValue> alphas, int k);

	std::size_t size() const noexcept { return coeffs.size(); }

	/// Throws Error(invalid_instance) unless there is at least one polynomial,
	/// degree >= 1, and every row has exactly `degree` coefficients.
	void validate() const;

	/// Highest e with a nonzero x^e coefficient in some h_j; 0 if all vanish.
	int effective_degree() const;

	/// h_j(x) mod 1, computed exactly.
	TorusValue evaluate(std::size_t j, const BigInt &x) const;

	/// Leading coefficients coeffs[j][degree-1].
	std::vector<TorusValue> leading() const;

	/// H_j(t) = h'_j(t n), where h'_j drops the x^degree term: the
	/// coefficient of t^e is n^e times that of x^e. Has degree - 1.
	PolySystem peel(const BigInt &n) const;

	friend bool operator==(const PolySystem &, const PolySystem &) = default;
};

} // namespace recur
