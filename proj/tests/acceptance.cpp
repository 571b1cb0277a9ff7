// SPDX-License-Identifier: Apache-2.0
//
// Acceptance gate: one PASS/FAIL line per criterion. Every criterion is run
// twice with the same seed; the last criterion compares the two transcripts
// byte for byte.

#include "recur/general.hpp"
#include "recur/io.hpp"
#include "recur/kronecker.hpp"
#include "recur/oracle.hpp"
#include "recur/quadratic.hpp"
#include "recur/waring.hpp"
#include "support.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>

using namespace recur;
using namespace recur::test;

namespace {

struct Outcome {
	bool pass = true;
	std::string detail;
	double seconds = 0;

	void fail(const std::string &why)
	{
		if (pass)
			detail = why;
		pass = false;
	}
};

using Criterion = std::function<Outcome(std::uint64_t seed, std::string &transcript)>;

void record(std::string &transcript, const Certificate &c, const PolySystem &p)
{
	transcript += to_json(c, &p).dump();
	transcript += '\n';
}

Outcome kronecker_bound(std::uint64_t seed, std::string &transcript)
{
	Outcome o;
	std::mt19937_64 rng(seed);
	int count = 0;
	for (std::size_t d = 1; d <= 3; ++d)
		for (long N : {100, 1000, 10000})
			for (int i = 0; i < 40; ++i) {
				auto a = random_alphas(rng, d, 1000000);
				auto r = kronecker_approx(a, N);
				Rational bound = Rational(1) / Rational(iroot(BigInt(N), d));
				Rational worst = naive_value(PolySystem::monomials(a, 1), r.n);
				if (r.n < 1 || r.n > N)
					o.fail("n out of range");
				if (worst > bound)
					o.fail("residual " + rational_str(worst) + " above " + rational_str(bound));
				transcript += r.n.get_str() + ' ';
				++count;
			}
	transcript += '\n';
	o.detail = o.pass ? std::to_string(count) + " instances within 1/floor(N^(1/d))" : o.detail;
	if (o.pass && count < 300)
		o.fail("too few instances");
	return o;
}

Outcome oracle_optimality(std::uint64_t seed, std::string &transcript)
{
	Outcome o;
	std::mt19937_64 rng(seed);
	int count = 0, mismatches = 0;
	const std::uint64_t ranges[] = {100, 1000, 10000};
	for (int i = 0; i < 120; ++i) {
		std::size_t d = 1 + i % 2;
		int k = 2 + (i / 2) % 2;
		std::uint64_t N = ranges[(i / 4) % 3];
		bool monomial = i % 8 < 4;
		Certificate c;
		PolySystem p;
		if (monomial) {
			auto a = random_alphas(rng, d, 100000);
			p = PolySystem::monomials(a, k);
			c = k == 2 ? quadratic_recurrence(a, big(N)) : monomial_recurrence(a, k, big(N));
		} else {
			p = random_system(rng, d, k, 100000);
			c = k == 2 ? quadratic_poly_recurrence(p, big(N)) : poly_recurrence(p, big(N));
		}
		auto best = brute_force_min(p, N);
		if (c.achieved != best.value.value()) {
			++mismatches;
			o.fail("instance " + std::to_string(i) + ": achieved " + rational_str(c.achieved) +
			       " vs optimum " + best.value.str());
		}
		if (!verify_certificate(c, p).ok)
			o.fail("instance " + std::to_string(i) + " failed verification");
		record(transcript, c, p);
		++count;
	}
	if (o.pass)
		o.detail = std::to_string(count) + " instances, 0 mismatches";
	return o;
}

Outcome refine_pipeline(std::uint64_t seed, std::string &transcript)
{
	Outcome o;
	std::mt19937_64 rng(seed);
	int count = 0;
	for (int i = 0; i < 24; ++i) {
		std::size_t d = 1 + i % 2;
		std::size_t m = 4 + i % 11;  // 4..14
		std::size_t s = 1 + i % 2;
		auto a = random_alphas(rng, d, 10000);
		BigInt g = default_grid(m, d);
		if (g < 2)
			g = 2;
		if (ipow(g, d) >= ipow(2, m))
			continue;
		const long M = 200;
		WitnessProducer producer = [&](std::span<const TorusValue> betas) {
			std::vector<TorusValue> b(betas.begin(), betas.end());
			auto best = naive_min(PolySystem::monomials(b, 2), M);
			std::vector<BigInt> entries(2 * s, BigInt(0));
			entries[0] = best.n;
			return make_witness(betas, 2, entries, M);
		};
		auto out = refine_quadratic(a, s, producer, m, BigInt(1) << 20, g);
		BigInt total = 0;
		for (const auto &e : out.witness.entries) {
			total += e * e;
			if (e > BigInt(static_cast<unsigned long>(m)) * out.chain.X * M)
				o.fail("entry " + e.get_str() + " above mXM");
		}
		Rational exact = 0;
		for (const auto &x : a)
			exact = std::max(exact, naive_dist(x.to_rational() * Rational(total)));
		if (exact != out.witness.eps)
			o.fail("instance " + std::to_string(i) + ": reported eps differs from recomputation");
		if (exact > out.claimed)
			o.fail("instance " + std::to_string(i) + ": residual above claimed bound");
		for (const auto &dz : out.pair.deltas_z)
			if (abs(dz) > Rational(1) / Rational(out.pair.grid))
				o.fail("instance " + std::to_string(i) + ": subset defect above 1/g");
		for (auto y : out.pair.y_indices)
			for (auto z : out.pair.z_indices)
				if (y == z)
					o.fail("instance " + std::to_string(i) + ": Y and Z intersect");
		for (const auto &e : out.witness.entries)
			transcript += e.get_str() + ',';
		transcript += rational_str(out.claimed) + '\n';
		++count;
	}
	if (o.pass && count < 20)
		o.fail("only " + std::to_string(count) + " feasible instances");
	if (o.pass)
		o.detail = std::to_string(count) + " refinements within their claims";
	return o;
}

Outcome cubic_end_to_end(std::uint64_t, std::string &transcript)
{
	Outcome o;
	PolySystem p{3, {{tv(5, 144), tv(7, 144), tv(89, 144)}, {tv(2, 343), tv(100, 343), tv(3, 343)}}};
	const BigInt N = 1000000;
	SolverConfig structured;
	structured.brute_threshold = 1000;
	std::string methods;
	const auto best = brute_force_min(p, 1000000);
	for (const SolverConfig &cfg : {SolverConfig{}, structured}) {
		auto c = poly_recurrence(p, N, cfg);
		auto rep = verify_certificate(c, p);
		if (!rep.ok)
			o.fail("verification failed: " + (rep.diagnostics.empty() ? "" : rep.diagnostics.front()));
		if (c.achieved != naive_value(p, c.n))
			o.fail("achieved differs from the value at n");
		if (c.method == "scan" && c.achieved != best.value.value())
			o.fail("scan missed the optimum");
		if (c.achieved < best.value.value())
			o.fail("achieved below the exhaustive optimum");
		methods += (methods.empty() ? "" : ", ") + c.method + " n=" + c.n.get_str();
		record(transcript, c, p);
	}
	if (o.pass)
		o.detail = "verified (" + methods + "), optimum " + best.value.str() + " at " + best.n_star.get_str();
	return o;
}

Outcome identities(std::uint64_t seed, std::string &transcript)
{
	Outcome o;
	std::mt19937_64 rng(seed);
	int checks = 0;
	for (int t = 0; t < 100; ++t) {
		std::vector<BigInt> v;
		for (int i = 0; i < 5; ++i)
			v.push_back(random_big(rng, 128) - (BigInt(1) << 127));
		for (std::size_t n = 1; n <= 5; ++n)
			for (int k = 1; k <= 5; ++k) {
				auto r = expansion_identity_check(std::span<const BigInt>(v.data(), n), k);
				if (!r.ok)
					o.fail("expansion identity failed");
				++checks;
			}
		transcript += v.front().get_str() + ' ';
	}
	for (int t = 0; t < 100; ++t) {
		int k = 2 + t % 4;
		auto p = random_system(rng, 1 + t % 3, k, 1 << 30);
		BigInt n = random_big(rng, 48) + 1, x = random_big(rng, 32) + 1;
		PolySystem h = p.peel(n);
		for (std::size_t j = 0; j < p.size(); ++j) {
			Rational lhs = naive_eval(p, j, x * n);
			Rational rhs = p.coeffs[j].back().to_rational() * Rational(ipow(x * n, k)) + naive_eval(h, j, x);
			if (TorusValue::from_rational(lhs) != TorusValue::from_rational(rhs))
				o.fail("peeling identity failed");
		}
		transcript += to_json(h).dump() + '\n';
	}
	if (o.pass)
		o.detail = std::to_string(checks) + " expansion checks, 100 peeling draws";
	return o;
}

Outcome waring_base(std::uint64_t, std::string &transcript)
{
	Outcome o;
	BigInt digest = 0;
	for (long n = 0; n <= 100000; ++n) {
		auto p = four_squares(n);
		BigInt s = 0;
		for (const auto &x : p.parts)
			s += x * x;
		if (p.parts.size() != 4 || s != n)
			o.fail("four_squares(" + std::to_string(n) + ") wrong");
		digest = (digest * 31 + p.parts[0]) % 1000000007;
	}
	for (long n = 0; n <= 10000; ++n) {
		auto p = kth_power_decomposition(n, 3, 9);
		BigInt s = 0;
		std::size_t used = 0;
		for (const auto &x : p.parts) {
			s += x * x * x;
			used += x != 0;
		}
		if (s != n || used > 9)
			o.fail("cubes for " + std::to_string(n) + " wrong");
		digest = (digest * 31 + p.parts[0]) % 1000000007;
	}
	transcript += digest.get_str() + '\n';
	if (o.pass)
		o.detail = "four squares to 10^5, nine cubes to 10^4";
	return o;
}

Outcome decay_trend(std::uint64_t, std::string &transcript)
{
	Outcome o;
	std::vector<TorusValue> a{tv("768398401/543339720"), tv("9973081/5757961")};
	PolySystem p = PolySystem::monomials(a, 2);
	Rational prev = 1;
	std::string row;
	for (long N : {1000, 10000, 100000, 1000000}) {
		auto c = quadratic_recurrence(a, N);
		if (c.achieved > prev)
			o.fail("achieved rose at N = " + std::to_string(N));
		prev = c.achieved;
		row += (row.empty() ? "" : " ") + rational_str(c.achieved);
		record(transcript, c, p);
	}
	if (o.pass)
		o.detail = "non-increasing: " + row;
	return o;
}

} // namespace

int main()
{
	const std::uint64_t seed = 20261014;
	const std::vector<std::pair<std::string, std::pair<Criterion, double>>> criteria{
	    {"AC1 kronecker bound", {kronecker_bound, 60}},
	    {"AC2 oracle optimality", {oracle_optimality, 0}},
	    {"AC3 refinement pipeline", {refine_pipeline, 120}},
	    {"AC4 cubic end-to-end", {cubic_end_to_end, 300}},
	    {"AC5 algebraic identities", {identities, 0}},
	    {"AC6 waring base cases", {waring_base, 0}},
	    {"AC7 decay trend", {decay_trend, 600}},
	};

	bool all = true;
	std::vector<std::string> first;
	for (const auto &[name, c] : criteria) {
		std::string transcript;
		auto t0 = std::chrono::steady_clock::now();
		Outcome o;
		try {
			o = c.first(seed, transcript);
		} catch (const std::exception &e) {
			o.fail(std::string("exception: ") + e.what());
		}
		o.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
		if (c.second > 0 && o.seconds >= c.second)
			o.fail("took " + std::to_string(o.seconds) + " s, limit " + std::to_string(c.second));
		all = all && o.pass;
		std::printf("%s %s (%.1f s): %s\n", o.pass ? "PASS" : "FAIL", name.c_str(), o.seconds,
		            o.detail.c_str());
		std::fflush(stdout);
		first.push_back(std::move(transcript));
	}

	Outcome det;
	auto t0 = std::chrono::steady_clock::now();
	std::size_t bytes = 0;
	for (std::size_t i = 0; i < criteria.size(); ++i) {
		std::string again;
		try {
			criteria[i].second.first(seed, again);
		} catch (const std::exception &e) {
			det.fail(std::string("exception: ") + e.what());
		}
		if (again != first[i])
			det.fail(criteria[i].first + " differed on the second run");
		bytes += again.size();
	}
	det.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
	if (det.pass)
		det.detail = "second run byte-identical (" + std::to_string(bytes) + " bytes)";
	all = all && det.pass;
	std::printf("%s AC8 determinism (%.1f s): %s\n", det.pass ? "PASS" : "FAIL", det.seconds,
	            det.detail.c_str());
	return all ? 0 : 1;
}
