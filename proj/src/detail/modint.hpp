// SPDX-License-Identifier: Apache-2.0

// Residue arithmetic used by the hot loops. Each loop is written once as a
// template over the residue type: std::uint64_t when every modulus is below
// 2^62, BigInt otherwise.

#pragma once

#include "recur/torus.hpp"

#include <cstdint>

namespace recur::detail {

inline bool fits_word(const BigInt &x)
{
	return sgn(x) >= 0 && mpz_sizeinbase(x.get_mpz_t(), 2) <= 62;
}

inline std::uint64_t to_word(const BigInt &x)
{
	static_assert(sizeof(unsigned long) == 8);
	return mpz_get_ui(x.get_mpz_t());
}

inline BigInt from_word(std::uint64_t x)
{
	BigInt r;
	mpz_set_ui(r.get_mpz_t(), static_cast<unsigned long>(x));
	return r;
}

template <class T> T convert(const BigInt &x);
template <> inline std::uint64_t convert<std::uint64_t>(const BigInt &x) { return to_word(x); }
template <> inline BigInt convert<BigInt>(const BigInt &x) { return x; }

/* r <- (r + c) mod q, with 0 <= r, c < q */
inline void add_mod(std::uint64_t &r, std::uint64_t c, std::uint64_t q)
{
	r += c;
	if (r >= q)
		r -= q;
}
inline void add_mod(BigInt &r, const BigInt &c, const BigInt &q)
{
	r += c;
	if (r >= q)
		r -= q;
}

/* r <- (r - c) mod q, with 0 <= r, c < q */
inline void sub_mod(std::uint64_t &r, std::uint64_t c, std::uint64_t q)
{
	r = r >= c ? r - c : r + (q - c);
}
inline void sub_mod(BigInt &r, const BigInt &c, const BigInt &q)
{
	r -= c;
	if (sgn(r) < 0)
		r += q;
}

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t q)
{
	return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % q);
}
inline BigInt mul_mod(const BigInt &a, const BigInt &b, const BigInt &q)
{
	BigInt r = a * b;
	mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), q.get_mpz_t());
	return r;
}

/* floor(g r / q); callers guarantee the result fits a word */
inline std::uint64_t box_of(std::uint64_t g, std::uint64_t r, std::uint64_t q)
{
	return static_cast<std::uint64_t>(static_cast<unsigned __int128>(g) * r / q);
}
inline std::uint64_t box_of(const BigInt &g, const BigInt &r, const BigInt &q)
{
	BigInt t = g * r;
	mpz_fdiv_q(t.get_mpz_t(), t.get_mpz_t(), q.get_mpz_t());
	return to_word(t);
}

/* min(r, q - r), the numerator of ||r/q|| */
inline std::uint64_t dist_num(std::uint64_t r, std::uint64_t q) { return r <= q - r ? r : q - r; }
inline BigInt dist_num(const BigInt &r, const BigInt &q)
{
	BigInt o = q - r;
	return r <= o ? r : o;
}

/* a/b < c/d for nonnegative numerators a <= b/2, c <= d/2 */
inline bool frac_less(std::uint64_t a, std::uint64_t b, std::uint64_t c, std::uint64_t d)
{
	return static_cast<unsigned __int128>(a) * d < static_cast<unsigned __int128>(c) * b;
}
inline bool frac_less(const BigInt &a, const BigInt &b, const BigInt &c, const BigInt &d)
{
	return a * d < c * b;
}

/* n mod q for a machine-word n */
inline std::uint64_t reduce_word(std::uint64_t n, std::uint64_t q) { return n % q; }
inline BigInt reduce_word(std::uint64_t n, const BigInt &q)
{
	BigInt r = from_word(n);
	mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), q.get_mpz_t());
	return r;
}

inline bool is_zero(std::uint64_t x) { return x == 0; }
inline bool is_zero(const BigInt &x) { return sgn(x) == 0; }

inline BigInt to_big(std::uint64_t x) { return from_word(x); }
inline const BigInt &to_big(const BigInt &x) { return x; }

} // namespace recur::detail
