// SPDX-License-Identifier: Apache-2.0

#include "detail/engine.hpp"

#include "detail/modint.hpp"
#include "detail/scan.hpp"
#include "recur/error.hpp"
#include "recur/kronecker.hpp"
#include "recur/waring.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

namespace recur {

PowerSumWitness make_witness(std::span<const TorusValue> alphas, int exponent,
                             std::vector<BigInt> entries, BigInt bound)
{
	PowerSumWitness w;
	w.exponent = exponent;
	w.s = entries.size();
	w.bound = std::move(bound);
	BigInt total = 0;
	for (const auto &e : entries)
		total += ipow(e, static_cast<unsigned long>(exponent));
	w.entries = std::move(entries);
	w.eps = 0;
	for (const auto &a : alphas) {
		w.residuals.push_back(dist_to_int(scale_mod1(a, total)));
		w.eps = std::max(w.eps, w.residuals.back().value());
	}
	return w;
}

BigInt RecursionBudget::entry_bound() const
{
	BigInt b = base_bound;
	for (const auto &l : levels)
		b *= detail::from_word(l.m) * l.X;
	return b;
}

BigInt split_range(const BigInt &N)
{
	BigInt r = iroot(N, 4);
	return r < 1 ? BigInt(1) : r;
}

std::size_t chain_system_size(std::size_t d, int K, std::size_t m)
{
	if (m < 2)
		return 0;
	/* multisets of size r from m - 1 earlier picks: C(m - 2 + r, r) */
	BigInt total = 0;
	for (int r = 1; r <= K; ++r) {
		BigInt c;
		mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(m - 2 + r), static_cast<unsigned long>(r));
		total += c;
	}
	total *= detail::from_word(d);
	return mpz_fits_ulong_p(total.get_mpz_t()) ? detail::to_word(total) : ~std::size_t{0};
}

RecursionBudget plan_recursion(std::size_t d, int k, const BigInt &N, const SolverConfig &cfg)
{
	if (d == 0 || k < 2 || N < 1)
		throw Error(ErrorKind::invalid_instance, "plan: need d >= 1, k >= 2, N >= 1");
	RecursionBudget b;
	b.range = N;
	b.k = k;
	b.d = d;
	b.base_terms = base_terms(k);
	const std::size_t levels = static_cast<std::size_t>(std::countr_zero(b.base_terms));
	const std::size_t bits = mpz_sizeinbase(N.get_mpz_t(), 2) - 1;

	auto choose_m = [&](std::size_t level_bits) {
		auto m = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(level_bits))));
		m = std::max({m, d + 1, std::size_t{2}});
		m = std::min(m, cfg.max_chain_length);
		if (k >= 3)
			while (m > 2 && chain_system_size(d, k - 1, m) > cfg.chain_system_cap)
				--m;
		if (m < d + 1 || m < 2 || chain_system_size(d, k - 1, m) > cfg.chain_system_cap)
			throw Error(ErrorKind::infeasible_budget,
			            "plan: no chain length satisfies g >= 2 within the caps");
		return m;
	};

	const std::size_t base_bits = bits >> levels;
	b.base_bound = ipow(2, base_bits);
	b.base_range = ipow(b.base_bound, static_cast<unsigned long>(k));
	if (k >= 3 && b.base_range > detail::from_word(cfg.waring_base_cap)) {
		b.base_range = detail::from_word(cfg.waring_base_cap);
		b.base_bound = iroot(b.base_range, static_cast<unsigned long>(k));
	}

	b.levels.resize(levels);
	BigInt inner = b.base_bound;
	for (std::size_t l = levels; l-- > 1;) {
		const std::size_t lb = bits >> (l + 1);
		LevelPlan &p = b.levels[l];
		p.m = choose_m(lb);
		p.X = ipow(2, lb) / detail::from_word(p.m);
		if (p.X < 1)
			p.X = 1;
		p.g = default_grid(p.m, d);
		inner *= detail::from_word(p.m) * p.X;
	}
	LevelPlan &outer = b.levels[0];
	outer.m = choose_m(bits >> 1);
	outer.X = N / (detail::from_word(outer.m) * inner);
	outer.g = default_grid(outer.m, d);
	if (outer.X < 1)
		throw Error(ErrorKind::infeasible_budget,
		            "plan: range " + N.get_str() + " too small for the refinement schedule");
	return b;
}

namespace detail {

std::string join(const std::vector<BigInt> &xs)
{
	std::string s;
	for (const auto &x : xs)
		s += (s.empty() ? "" : ",") + x.get_str();
	return s;
}

std::string join(const std::vector<std::size_t> &xs)
{
	std::string s;
	for (auto x : xs)
		s += (s.empty() ? "" : ",") + std::to_string(x);
	return s;
}

RefineOutcome refine_with_chain(std::span<const TorusValue> alphas, int k, std::size_t s,
                                ChainResult chain, const BigInt &g, const WitnessProducer &producer,
                                const SolverConfig &cfg)
{
	if (s == 0)
		throw Error(ErrorKind::invalid_instance, "refine: s must be >= 1");
	const auto ke = static_cast<unsigned long>(k);
	std::vector<BigInt> powers;
	for (const auto &x : chain.xs)
		powers.push_back(ipow(x, ke));

	RefineOutcome out;
	out.pair = disjoint_subset_pair(powers, alphas, g, cfg);
	const SubsetPair &pair = out.pair;

	BigInt ysum = 0, zsum = 0;
	for (auto i : pair.y_indices)
		ysum += chain.xs[i];
	for (auto i : pair.z_indices)
		zsum += chain.xs[i];
	const auto q = from_word(pair.y_indices.size());
	const auto r = from_word(pair.z_indices.size());

	Rational max_delta = 0;
	for (const auto &dz : pair.deltas_z)
		max_delta = std::max(max_delta, Rational(abs(dz)));

	const BigInt m = from_word(chain.m);
	std::vector<BigInt> entries(s, BigInt(0));
	if (pair.degenerate) {
		/* the nonempty side alone: (sum x)^k alpha = (sum x^k) alpha + mixed terms */
		const bool y_side = !pair.y_indices.empty();
		const BigInt &side = y_side ? ysum : zsum;
		const BigInt &count = y_side ? q : r;
		entries[0] = side;
		out.entry_bound = m * chain.X;
		out.claimed = max_delta + Rational(ipow(count, ke) - count) * chain.pair_bound;
	} else {
		out.inner = producer(pair.betas);
		const PowerSumWitness &in = *out.inner;
		if (in.exponent != k || in.entries.size() != 2 * s)
			throw std::logic_error("refine: producer returned a witness of the wrong shape");
		BigInt tail = 0, offdiag = 0;
		for (std::size_t i = 0; i < s; ++i) {
			const BigInt &a = in.entries[i], &b = in.entries[s + i];
			entries[i] = a * ysum + b * zsum;
			const BigInt bk = ipow(b, ke);
			tail += bk;
			offdiag += ipow(a * q + b * r, ke) - ipow(a, ke) * q - bk * r;
		}
		out.entry_bound = m * chain.X * in.bound;
		out.claimed = in.eps + max_delta * Rational(tail) + Rational(offdiag) * chain.pair_bound;
	}
	for (const auto &e : entries)
		if (e > out.entry_bound)
			throw std::logic_error("refine: combined entry exceeds m X M");
	out.witness = make_witness(alphas, k, std::move(entries), out.entry_bound);
	out.chain = std::move(chain);
	return out;
}

namespace {

PowerSumWitness seed_witness(std::span<const TorusValue> betas, const RecursionBudget &b,
                             const SolverConfig &cfg, std::vector<TraceEntry> &trace)
{
	KroneckerResult kr = kronecker_approx(betas, b.base_range, cfg);
	PowerDecomposition dec = b.k == 2 ? four_squares(kr.n)
	                                  : kth_power_decomposition(kr.n, b.k, default_waring_budget(b.k), cfg);
	dec.parts.resize(b.base_terms, BigInt(0));
	PowerSumWitness w = make_witness(betas, b.k, dec.parts, b.base_bound);
	TraceEntry t{"seed", 0, {}};
	t.add("range", b.base_range.get_str())
	    .add("grid", kr.grid.get_str())
	    .add("n0", kr.n.get_str())
	    .add("guarantee", rational_str(kr.guarantee))
	    .add("parts", join(dec.parts))
	    .add("eps", rational_str(w.eps));
	trace.push_back(std::move(t));
	return w;
}

PowerSumWitness recursion_witness(std::span<const TorusValue> alphas, const RecursionBudget &b,
                                  std::size_t level, const SolverConfig &cfg,
                                  const ChainBuilder &chain_builder, std::vector<TraceEntry> &trace)
{
	if (level == b.levels.size())
		return seed_witness(alphas, b, cfg, trace);
	const LevelPlan &p = b.levels[level];
	const std::size_t s = std::size_t{1} << level;
	ChainResult chain = chain_builder(alphas, p.m, p.X);
	WitnessProducer producer = [&](std::span<const TorusValue> betas) {
		return recursion_witness(betas, b, level + 1, cfg, chain_builder, trace);
	};
	RefineOutcome out = refine_with_chain(alphas, b.k, s, std::move(chain), p.g, producer, cfg);
	TraceEntry t{"refine", 0, {}};
	t.add("level", std::to_string(level))
	    .add("s", std::to_string(s))
	    .add("m", std::to_string(p.m))
	    .add("X", p.X.get_str())
	    .add("g", p.g.get_str())
	    .add("chain", join(out.chain.xs))
	    .add("pair_bound", rational_str(out.chain.pair_bound))
	    .add("Y", join(out.pair.y_indices))
	    .add("Z", join(out.pair.z_indices))
	    .add("degenerate", out.pair.degenerate ? "true" : "false")
	    .add("entry_bound", out.entry_bound.get_str())
	    .add("entries", join(out.witness.entries))
	    .add("eps", rational_str(out.witness.eps))
	    .add("claimed", rational_str(out.claimed));
	trace.push_back(std::move(t));
	return std::move(out.witness);
}

} // namespace

Certificate scan_certificate(const PolySystem &polys, const BigInt &N, const BigInt &limit,
                             std::string method)
{
	ScanResult sr = exact_scan(polys, to_word(limit));
	Certificate c = certify(polys, sr.n, N, std::move(method));
	TraceEntry t{"scan", 0, {}};
	t.add("limit", limit.get_str()).add("n", sr.n.get_str()).add("value", rational_str(sr.value));
	c.trace.push_back(std::move(t));
	return c;
}

Certificate run_monomial(std::span<const TorusValue> alphas, int k, const BigInt &N,
                         const SolverConfig &cfg, const ChainBuilder &chain_builder)
{
	if (alphas.empty())
		throw Error(ErrorKind::invalid_instance, "recurrence: empty list of targets");
	if (N < 1)
		throw Error(ErrorKind::invalid_instance, "recurrence: range must be >= 1");
	const PolySystem polys = PolySystem::monomials(alphas, k);
	const BigInt threshold = from_word(cfg.brute_threshold);
	if (N <= threshold)
		return scan_certificate(polys, N, N, "scan");

	std::vector<TraceEntry> trace;
	try {
		RecursionBudget b = plan_recursion(alphas.size(), k, N, cfg);
		TraceEntry plan{"schedule", 0, {}};
		plan.add("range", N.get_str())
		    .add("levels", std::to_string(b.levels.size()))
		    .add("base_range", b.base_range.get_str())
		    .add("base_terms", std::to_string(b.base_terms))
		    .add("entry_bound", b.entry_bound().get_str());
		trace.push_back(std::move(plan));
		PowerSumWitness w = recursion_witness(alphas, b, 0, cfg, chain_builder, trace);
		const BigInt &n = w.entries.front();
		if (n < 1 || n > N)
			throw std::logic_error("recurrence: final entry " + n.get_str() + " outside [1, N]");
		Certificate c = certify(polys, n, N, "recursion");
		c.trace = std::move(trace);
		return c;
	} catch (const Error &e) {
		if (!e.recoverable())
			throw;
		const BigInt limit = std::min(N, threshold);
		Certificate c = scan_certificate(polys, N, limit, "fallback-scan");
		c.fallback = true;
		TraceEntry t{"fallback", 0, {}};
		t.add("reason", e.what());
		c.trace.insert(c.trace.begin(), std::move(t));
		return c;
	}
}

} // namespace detail
} // namespace recur
