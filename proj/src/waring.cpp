// SPDX-License-Identifier: Apache-2.0

#include "recur/waring.hpp"

#include "detail/modint.hpp"
#include "recur/error.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>

namespace recur {

namespace {

BigInt isqrt(const BigInt &x)
{
	BigInt r;
	mpz_sqrt(r.get_mpz_t(), x.get_mpz_t());
	return r;
}

bool is_square(const BigInt &x, BigInt &root)
{
	root = isqrt(x);
	return root * root == x;
}

/* smallest c with c^2 >= x */
BigInt ceil_sqrt(const BigInt &x)
{
	BigInt r = isqrt(x);
	if (r * r < x)
		++r;
	return r;
}

/* Minimal k-th power decomposition of v <= table size by dynamic programming. */
std::vector<std::uint64_t> dp_decompose(std::uint64_t v, int k)
{
	std::vector<std::uint64_t> pw;
	for (std::uint64_t p = 1;; ++p) {
		std::uint64_t x = 1;
		for (int i = 0; i < k; ++i)
			x *= p;
		if (x > v)
			break;
		pw.push_back(x);
	}
	std::vector<std::uint8_t> count(v + 1, 0);
	std::vector<std::uint32_t> choice(v + 1, 0);
	std::size_t top = 0; /* pw[top] is the largest power <= u */
	for (std::uint64_t u = 1; u <= v; ++u) {
		while (top + 1 < pw.size() && pw[top + 1] <= u)
			++top;
		unsigned best = 256;
		std::uint32_t arg = 0;
		for (std::size_t p = top + 1; p-- > 0;) {
			unsigned c = count[u - pw[p]] + 1u;
			if (c < best) {
				best = c;
				arg = static_cast<std::uint32_t>(p + 1);
				if (best == 1)
					break;
			}
		}
		count[u] = static_cast<std::uint8_t>(best > 255 ? 255 : best);
		choice[u] = arg;
	}
	std::vector<std::uint64_t> parts;
	for (std::uint64_t u = v; u > 0;) {
		std::uint64_t p = choice[u];
		parts.push_back(p);
		u -= pw[p - 1];
	}
	return parts;
}

} // namespace

std::size_t next_pow2(std::size_t x)
{
	std::size_t p = 1;
	while (p < x)
		p <<= 1;
	return p;
}

std::size_t default_waring_budget(int k)
{
	switch (k) {
	case 1: return 1;
	case 2: return 4;
	case 3: return 9;
	case 4: return 19;
	case 5: return 37;
	default: break;
	}
	if (k < 1)
		throw Error(ErrorKind::invalid_instance, "waring: degree must be >= 1");
	BigInt three_k = ipow(3, k), two_k = ipow(2, k);
	BigInt floor_ratio = three_k / two_k;
	return detail::to_word(two_k + floor_ratio - 2);
}

std::size_t base_terms(int k)
{
	return k == 2 ? 4 : next_pow2(default_waring_budget(k));
}

PowerDecomposition four_squares(const BigInt &n)
{
	if (sgn(n) < 0)
		throw Error(ErrorKind::invalid_instance, "four_squares: n must be nonnegative");
	PowerDecomposition out{n, 2, {}};
	/* a^2 >= n/4 since a is the largest of four parts */
	const BigInt a_lo = ceil_sqrt(n / 4 + (n % 4 == 0 ? 0 : 1));
	for (BigInt a = isqrt(n); a >= a_lo; --a) {
		const BigInt r1 = n - a * a;
		BigInt b_hi = isqrt(r1);
		if (b_hi > a)
			b_hi = a;
		const BigInt b_lo = ceil_sqrt((r1 + 2) / 3);
		for (BigInt b = b_hi; b >= b_lo; --b) {
			const BigInt r2 = r1 - b * b;
			BigInt c_hi = isqrt(r2);
			if (c_hi > b)
				c_hi = b;
			const BigInt c_lo = ceil_sqrt((r2 + 1) / 2);
			for (BigInt c = c_hi; c >= c_lo; --c) {
				BigInt e;
				if (is_square(r2 - c * c, e) && e <= c) {
					out.parts = {a, b, c, e};
					return out;
				}
			}
		}
		if (sgn(a) == 0)
			break;
	}
	throw Error(ErrorKind::infeasible_budget, "four_squares: search exhausted");
}

PowerDecomposition kth_power_decomposition(const BigInt &n, int k, std::size_t s_max,
                                           const SolverConfig &cfg)
{
	if (k < 2)
		throw Error(ErrorKind::invalid_instance, "waring: exponent must be >= 2");
	if (sgn(n) < 0)
		throw Error(ErrorKind::invalid_instance, "waring: n must be nonnegative");
	if (s_max == 0)
		throw Error(ErrorKind::invalid_instance, "waring: term budget must be positive");

	PowerDecomposition out{n, k, {}};
	BigInt rest = n;
	const BigInt cap = detail::from_word(cfg.waring_dp_cap);
	while (rest > cap) {
		BigInt p = iroot(rest, static_cast<unsigned long>(k));
		out.parts.push_back(p);
		rest -= ipow(p, static_cast<unsigned long>(k));
	}
	for (auto p : dp_decompose(detail::to_word(rest), k))
		out.parts.push_back(detail::from_word(p));
	std::sort(out.parts.begin(), out.parts.end(), std::greater<>());
	if (out.parts.size() > s_max)
		throw Error(ErrorKind::infeasible_budget,
		            "waring: " + n.get_str() + " needs " + std::to_string(out.parts.size()) +
		                " terms, budget is " + std::to_string(s_max));
	out.parts.resize(next_pow2(s_max), BigInt(0));
	return out;
}

} // namespace recur
