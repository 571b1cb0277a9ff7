// SPDX-License-Identifier: Apache-2.0

#include "recur/general.hpp"

#include "detail/engine.hpp"
#include "detail/modint.hpp"
#include "recur/error.hpp"
#include "recur/kronecker.hpp"

#include <algorithm>

namespace recur {

namespace {

/* Calls f(exps) for every exponent vector over `n` slots summing to `total`. */
template <class F>
void for_each_composition(std::size_t n, unsigned total, std::vector<unsigned> &exps, std::size_t at, F &&f)
{
	if (at + 1 == n) {
		exps[at] = total;
		f(exps);
		return;
	}
	for (unsigned e = 0; e <= total; ++e) {
		exps[at] = e;
		for_each_composition(n, total - e, exps, at + 1, f);
	}
}

BigInt monomial_value(const std::vector<BigInt> &xs, const std::vector<unsigned> &exps)
{
	BigInt w = 1;
	for (std::size_t i = 0; i < exps.size(); ++i)
		if (exps[i] != 0)
			w *= ipow(xs[i], exps[i]);
	return w;
}

/* Truncates a system to its effective degree. */
PolySystem truncated(const PolySystem &p, int degree)
{
	PolySystem t;
	t.degree = degree;
	for (const auto &row : p.coeffs)
		t.coeffs.emplace_back(row.begin(), row.begin() + degree);
	return t;
}

} // namespace

ChainResult build_power_chain(std::span<const TorusValue> alphas, int K, std::size_t m,
                              const BigInt &X, const SolverConfig &cfg)
{
	if (K < 1)
		throw Error(ErrorKind::invalid_instance, "power chain: K must be >= 1");
	if (K == 1)
		return build_pairwise_chain(alphas, m, X, cfg);
	if (alphas.empty())
		throw Error(ErrorKind::invalid_instance, "power chain: empty list of targets");
	if (m < 2)
		throw Error(ErrorKind::invalid_instance, "power chain: m must be >= 2");
	if (X < 1)
		throw Error(ErrorKind::invalid_instance, "power chain: X must be >= 1");
	if (chain_system_size(alphas.size(), K, m) > cfg.chain_system_cap)
		throw Error(ErrorKind::cap_exceeded, "power chain: monomial system too large, reduce m");

	ChainResult c;
	c.m = m;
	c.X = X;
	c.K = K;
	c.pair_bound = 0;
	c.xs.push_back(1);
	std::vector<unsigned> exps;
	for (std::size_t i = 1; i < m; ++i) {
		/* t^e w alpha_j with w a product of K + 1 - e earlier picks */
		PolySystem sys;
		sys.degree = K;
		exps.assign(i, 0);
		for (int e = 1; e <= K; ++e)
			for_each_composition(i, static_cast<unsigned>(K + 1 - e), exps, 0,
			                     [&](const std::vector<unsigned> &ex) {
				                     const BigInt w = monomial_value(c.xs, ex);
				                     for (const auto &a : alphas) {
					                     std::vector<TorusValue> row(static_cast<std::size_t>(K));
					                     row[static_cast<std::size_t>(e - 1)] = scale_mod1(a, w);
					                     sys.coeffs.push_back(std::move(row));
				                     }
			                     });
		Certificate pick = poly_recurrence(sys, X, cfg);
		c.xs.push_back(pick.n);
		c.pair_bound = std::max(c.pair_bound, pick.achieved);
	}

	/* every mixed monomial of total degree K + 1 */
	exps.assign(m, 0);
	for_each_composition(m, static_cast<unsigned>(K + 1), exps, 0, [&](const std::vector<unsigned> &ex) {
		if (std::count_if(ex.begin(), ex.end(), [](unsigned e) { return e != 0; }) < 2)
			return;
		const BigInt w = monomial_value(c.xs, ex);
		for (const auto &a : alphas)
			if (dist_to_int(scale_mod1(a, w)).value() > c.pair_bound)
				throw std::logic_error("power chain: mixed monomial exceeds the chain bound");
	});
	return c;
}

RefineOutcome refine_general(std::span<const TorusValue> alphas, int K, std::size_t s,
                             const WitnessProducer &producer, std::size_t m, const BigInt &X,
                             const BigInt &g, const SolverConfig &cfg)
{
	return detail::refine_with_chain(alphas, K + 1, s, build_power_chain(alphas, K, m, X, cfg), g,
	                                 producer, cfg);
}

Certificate monomial_recurrence(std::span<const TorusValue> alphas, int k, const BigInt &N,
                                const SolverConfig &cfg)
{
	if (k < 1)
		throw Error(ErrorKind::invalid_instance, "monomial: degree must be >= 1");
	if (k > cfg.max_degree)
		throw Error(ErrorKind::invalid_instance,
		            "monomial: degree " + std::to_string(k) + " exceeds the configured cap");
	if (k == 1) {
		if (N < 1)
			throw Error(ErrorKind::invalid_instance, "monomial: range must be >= 1");
		KroneckerResult kr = kronecker_approx(alphas, N, cfg);
		Certificate c = certify(PolySystem::monomials(alphas, 1), kr.n, N, "kronecker");
		c.trace.push_back(TraceEntry{"kronecker", 0, {}}.add("range", N.get_str())
		                      .add("grid", kr.grid.get_str())
		                      .add("guarantee", rational_str(kr.guarantee)));
		return c;
	}
	return detail::run_monomial(alphas, k, N, cfg,
	                            [&, k](std::span<const TorusValue> a, std::size_t m, const BigInt &X) {
		                            return build_power_chain(a, k - 1, m, X, cfg);
	                            });
}

Certificate poly_recurrence(const PolySystem &polys, const BigInt &N, const SolverConfig &cfg)
{
	polys.validate();
	if (N < 1)
		throw Error(ErrorKind::invalid_instance, "poly: range must be >= 1");
	if (polys.degree > cfg.max_degree)
		throw Error(ErrorKind::invalid_instance,
		            "poly: degree " + std::to_string(polys.degree) + " exceeds the configured cap");
	const int eff = polys.effective_degree();
	if (eff == 0)
		return certify(polys, 1, N, "trivial");
	if (eff < polys.degree) {
		Certificate c = poly_recurrence(truncated(polys, eff), N, cfg);
		Certificate full = certify(polys, c.n, N, c.method);
		full.trace = std::move(c.trace);
		full.fallback = c.fallback;
		return full;
	}
	if (eff == 1) {
		KroneckerResult kr = kronecker_approx(polys.leading(), N, cfg);
		Certificate c = certify(polys, kr.n, N, "kronecker");
		c.trace.push_back(TraceEntry{"kronecker", 0, {}}.add("range", N.get_str())
		                      .add("grid", kr.grid.get_str())
		                      .add("guarantee", rational_str(kr.guarantee)));
		return c;
	}
	if (N <= detail::from_word(cfg.brute_threshold))
		return detail::scan_certificate(polys, N, N, "scan");

	const BigInt split = split_range(N);
	const BigInt outer = N / split;
	Certificate lead = monomial_recurrence(polys.leading(), polys.degree, outer, cfg);
	const BigInt &n = lead.n;
	Certificate rest = poly_recurrence(polys.peel(n), split, cfg);
	Certificate c = certify(polys, rest.n * n, N, "split");
	c.trace.push_back(TraceEntry{"split", 0, {}}.add("range", N.get_str())
	                      .add("split", split.get_str())
	                      .add("outer", outer.get_str())
	                      .add("n", n.get_str())
	                      .add("t", rest.n.get_str()));
	c.absorb_trace(lead);
	c.absorb_trace(rest);
	return c;
}

} // namespace recur
