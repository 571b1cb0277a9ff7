// SPDX-License-Identifier: Apache-2.0
//
// Test-only helpers. The naive_* functions deliberately share no code with
// the library: they evaluate with plain mpq_class arithmetic, one term at a
// time.

#pragma once

#include "recur/poly.hpp"
#include "recur/torus.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace recur::test {

inline TorusValue tv(long p, long q)
{
	return TorusValue::from_rational(BigInt(p), BigInt(q));
}

inline TorusValue tv(const std::string &s)
{
	return TorusValue::from_rational(parse_rational(s));
}

inline Rational q(const std::string &s)
{
	return parse_rational(s);
}

// ||x|| for an arbitrary rational.
inline Rational naive_dist(const Rational &x)
{
	mpz_class fl;
	mpz_fdiv_q(fl.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
	Rational f = x - Rational(fl);
	Rational other = Rational(1) - f;
	return f < other ? f : other;
}

inline Rational naive_eval(const PolySystem &p, std::size_t j, const BigInt &n)
{
	Rational acc = 0;
	BigInt pw = 1;
	for (std::size_t e = 0; e < p.coeffs[j].size(); ++e) {
		pw *= n;
		acc += p.coeffs[j][e].to_rational() * Rational(pw);
	}
	return acc;
}

inline Rational naive_value(const PolySystem &p, const BigInt &n)
{
	Rational worst = 0;
	for (std::size_t j = 0; j < p.size(); ++j) {
		Rational v = naive_dist(naive_eval(p, j, n));
		if (v > worst)
			worst = v;
	}
	return worst;
}

struct NaiveMin {
	BigInt n;
	Rational value;
};

inline NaiveMin naive_min(const PolySystem &p, std::uint64_t N)
{
	NaiveMin best{0, Rational(1)};
	for (std::uint64_t n = 1; n <= N; ++n) {
		Rational v = naive_value(p, BigInt(std::to_string(n)));
		if (v < best.value) {
			best = {BigInt(std::to_string(n)), v};
			if (v == 0)
				break;
		}
	}
	return best;
}

inline TorusValue random_torus(std::mt19937_64 &rng, long max_den)
{
	std::uniform_int_distribution<long> den(2, max_den);
	long q = den(rng);
	std::uniform_int_distribution<long> num(0, q - 1);
	return tv(num(rng), q);
}

inline std::vector<TorusValue> random_alphas(std::mt19937_64 &rng, std::size_t d, long max_den)
{
	std::vector<TorusValue> out;
	for (std::size_t j = 0; j < d; ++j)
		out.push_back(random_torus(rng, max_den));
	return out;
}

inline PolySystem random_system(std::mt19937_64 &rng, std::size_t d, int degree, long max_den)
{
	PolySystem p;
	p.degree = degree;
	for (std::size_t j = 0; j < d; ++j) {
		std::vector<TorusValue> row;
		for (int e = 0; e < degree; ++e)
			row.push_back(random_torus(rng, max_den));
		p.coeffs.push_back(row);
	}
	return p;
}

inline BigInt random_big(std::mt19937_64 &rng, int bits)
{
	BigInt r = 0;
	for (int i = 0; i < bits; i += 32)
		r = (r << 32) + BigInt(static_cast<unsigned long>(rng() & 0xffffffffu));
	return r >> ((bits + 31) / 32 * 32 - bits);
}

inline BigInt big(std::uint64_t v)
{
	return BigInt(std::to_string(v));
}

} // namespace recur::test
