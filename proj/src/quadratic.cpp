// SPDX-License-Identifier: Apache-2.0

#include "recur/quadratic.hpp"

#include "detail/engine.hpp"
#include "detail/modint.hpp"
#include "recur/error.hpp"
#include "recur/kronecker.hpp"

#include <algorithm>

namespace recur {

ChainResult build_pairwise_chain(std::span<const TorusValue> alphas, std::size_t m, const BigInt &X,
                                 const SolverConfig &cfg)
{
	if (alphas.empty())
		throw Error(ErrorKind::invalid_instance, "chain: empty list of targets");
	if (m < 2)
		throw Error(ErrorKind::invalid_instance, "chain: m must be >= 2");
	if (X < 1)
		throw Error(ErrorKind::invalid_instance, "chain: X must be >= 1");
	ChainResult c;
	c.m = m;
	c.X = X;
	c.K = 1;
	c.pair_bound = 0;
	c.xs.push_back(1);
	std::vector<TorusValue> targets;
	for (std::size_t i = 1; i < m; ++i) {
		for (const auto &a : alphas)
			targets.push_back(scale_mod1(a, c.xs.back()));
		KroneckerResult kr = kronecker_approx(targets, X, cfg);
		c.xs.push_back(kr.n);
		c.pair_bound = std::max(c.pair_bound, kr.guarantee);
	}
	for (std::size_t i = 0; i < m; ++i)
		for (std::size_t i2 = i + 1; i2 < m; ++i2)
			for (const auto &a : alphas)
				if (dist_to_int(scale_mod1(a, c.xs[i] * c.xs[i2])).value() > c.pair_bound)
					throw std::logic_error("chain: pair bound violated");
	return c;
}

RefineOutcome refine_quadratic(std::span<const TorusValue> alphas, std::size_t s,
                               const WitnessProducer &producer, std::size_t m, const BigInt &X,
                               const BigInt &g, const SolverConfig &cfg)
{
	return detail::refine_with_chain(alphas, 2, s, build_pairwise_chain(alphas, m, X, cfg), g,
	                                 producer, cfg);
}

Certificate quadratic_recurrence(std::span<const TorusValue> alphas, const BigInt &N,
                                 const SolverConfig &cfg)
{
	return detail::run_monomial(alphas, 2, N, cfg,
	                            [&](std::span<const TorusValue> a, std::size_t m, const BigInt &X) {
		                            return build_pairwise_chain(a, m, X, cfg);
	                            });
}

Certificate quadratic_poly_recurrence(const PolySystem &polys, const BigInt &N,
                                      const SolverConfig &cfg)
{
	polys.validate();
	if (polys.degree > 2)
		throw Error(ErrorKind::invalid_instance, "quadratic: degree must be <= 2");
	if (N < 1)
		throw Error(ErrorKind::invalid_instance, "quadratic: range must be >= 1");
	const int eff = polys.effective_degree();
	if (eff == 0)
		return certify(polys, 1, N, "trivial");
	if (eff == 1) {
		std::vector<TorusValue> linear;
		for (const auto &row : polys.coeffs)
			linear.push_back(row.front());
		KroneckerResult kr = kronecker_approx(linear, N, cfg);
		Certificate c = certify(polys, kr.n, N, "kronecker");
		c.trace.push_back(TraceEntry{"kronecker", 0, {}}.add("range", N.get_str())
		                      .add("grid", kr.grid.get_str())
		                      .add("guarantee", rational_str(kr.guarantee)));
		return c;
	}
	if (N <= detail::from_word(cfg.brute_threshold))
		return detail::scan_certificate(polys, N, N, "scan");

	/* split N = (N / N') N': squares over the first part, Kronecker on n beta over N' */
	const BigInt split = split_range(N);
	const BigInt outer = N / split;
	std::vector<TorusValue> alphas, betas;
	for (const auto &row : polys.coeffs) {
		alphas.push_back(row[1]);
		betas.push_back(row[0]);
	}
	Certificate lead = quadratic_recurrence(alphas, outer, cfg);
	const BigInt &n = lead.n;
	std::vector<TorusValue> shifted;
	for (const auto &b : betas)
		shifted.push_back(scale_mod1(b, n));
	KroneckerResult kr = kronecker_approx(shifted, split, cfg);
	Certificate c = certify(polys, kr.n * n, N, "split");
	c.trace.push_back(TraceEntry{"split", 0, {}}.add("range", N.get_str())
	                      .add("split", split.get_str())
	                      .add("outer", outer.get_str())
	                      .add("n", n.get_str())
	                      .add("t", kr.n.get_str())
	                      .add("linear_guarantee", rational_str(kr.guarantee)));
	c.absorb_trace(lead);
	return c;
}

} // namespace recur
