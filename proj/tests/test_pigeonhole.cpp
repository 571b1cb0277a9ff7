// SPDX-License-Identifier: Apache-2.0

#include "recur/error.hpp"
#include "recur/pigeonhole.hpp"
#include "support.hpp"

#include <doctest.h>

#include <map>

using namespace recur;
using namespace recur::test;

namespace {

struct NaivePair {
	std::vector<std::size_t> y, z;
	std::uint64_t visits;
};

BigInt floor_of(const Rational &x)
{
	BigInt fl;
	mpz_fdiv_q(fl.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
	return fl;
}

// Reflected Gray code: the subset visited at step s is s ^ (s >> 1).
NaivePair naive_gray_pair(const std::vector<BigInt> &powers, const std::vector<TorusValue> &alphas,
                          const BigInt &g)
{
	std::map<std::vector<BigInt>, std::uint64_t> seen;
	for (std::uint64_t s = 0;; ++s) {
		std::uint64_t mask = s ^ (s >> 1);
		std::vector<BigInt> box;
		for (const auto &a : alphas) {
			Rational x = 0;
			for (std::size_t i = 0; i < powers.size(); ++i)
				if ((mask >> i) & 1)
					x += Rational(powers[i]) * a.to_rational();
			x -= Rational(floor_of(x));
			box.push_back(floor_of(x * Rational(g)));
		}
		auto [it, fresh] = seen.emplace(box, mask);
		if (!fresh) {
			NaivePair out{{}, {}, s + 1};
			for (std::size_t i = 0; i < powers.size(); ++i) {
				bool in_s = (it->second >> i) & 1, in_t = (mask >> i) & 1;
				if (in_s && !in_t)
					out.y.push_back(i);
				if (in_t && !in_s)
					out.z.push_back(i);
			}
			return out;
		}
	}
}

void check_pair(const SubsetPair &p, const std::vector<BigInt> &powers,
                const std::vector<TorusValue> &alphas, const BigInt &g)
{
	for (auto y : p.y_indices)
		for (auto z : p.z_indices)
			CHECK(y != z);
	CHECK(!(p.y_indices.empty() && p.z_indices.empty()));
	CHECK(p.degenerate == (p.y_indices.empty() || p.z_indices.empty()));
	BigInt ys = 0, zs = 0;
	for (auto i : p.y_indices)
		ys += powers[i];
	for (auto i : p.z_indices)
		zs += powers[i];
	for (std::size_t j = 0; j < alphas.size(); ++j) {
		Rational a = alphas[j].to_rational();
		CHECK(p.betas[j] == TorusValue::from_rational(Rational(ys) * a));
		CHECK(abs(p.deltas_z[j]) <= Rational(1) / Rational(g));
		// the Z side is the Y side moved by delta
		CHECK(TorusValue::from_rational(p.betas[j].to_rational() + p.deltas_z[j]) ==
		      TorusValue::from_rational(Rational(zs) * a));
	}
}

} // namespace

TEST_CASE("equal elements collide at once")
{
	std::vector<BigInt> powers{1, 1};
	std::vector<TorusValue> alphas{TorusValue{}};
	auto p = disjoint_subset_pair(powers, alphas, 2);
	// the empty set and {0} share the zero box
	CHECK(p.y_indices.empty());
	CHECK(p.z_indices == std::vector<std::size_t>{0});
	CHECK(p.degenerate);
	CHECK(p.betas[0].is_zero());
	CHECK(p.deltas_z[0] == 0);
	CHECK(p.visits == 2);
}

TEST_CASE("powers 1, 4, 9 against 1/10 on a grid of 4")
{
	std::vector<BigInt> powers{1, 4, 9};
	std::vector<TorusValue> alphas{tv(1, 10)};
	auto p = disjoint_subset_pair(powers, alphas, 4);
	auto n = naive_gray_pair(powers, alphas, 4);
	CHECK(p.y_indices == n.y);
	CHECK(p.z_indices == n.z);
	CHECK(p.visits == n.visits);
	check_pair(p, powers, alphas, 4);
	// {0} sits at 0.1, in the same quarter as the empty set
	CHECK(p.y_indices.empty());
	CHECK(p.z_indices == std::vector<std::size_t>{0});
	CHECK(p.degenerate);
}

TEST_CASE("pigeonhole preconditions")
{
	std::vector<BigInt> powers{1, 2, 3};
	std::vector<TorusValue> alphas{tv(1, 7), tv(2, 7)};
	try {
		disjoint_subset_pair(powers, alphas, 3);  // 9 >= 8
		FAIL("expected pigeonhole-infeasible");
	} catch (const Error &e) {
		CHECK(e.kind() == ErrorKind::pigeonhole_infeasible);
	}
	CHECK_THROWS_AS(disjoint_subset_pair(powers, alphas, 1), Error);
	std::vector<BigInt> none;
	CHECK_THROWS_AS(disjoint_subset_pair(none, alphas, 2), Error);

	SolverConfig cfg;
	cfg.pigeonhole_map_cap = 4;
	std::vector<BigInt> many{1, 2, 4, 8, 16, 32, 64};
	std::vector<TorusValue> one{tv(37, 128)};
	try {
		disjoint_subset_pair(many, one, 100, cfg);
		FAIL("expected cap-exceeded");
	} catch (const Error &e) {
		CHECK(e.kind() == ErrorKind::cap_exceeded);
	}
}

TEST_CASE("default_grid")
{
	CHECK(default_grid(12, 2) == 45);  // floor(2^(11/2))
	CHECK(default_grid(7, 1) == 64);
	CHECK(default_grid(10, 3) == 8);
}

TEST_CASE("property: collisions match a Gray-order oracle and stay within 1/g")
{
	std::mt19937_64 rng(31);
	for (int it = 0; it < 80; ++it) {
		std::size_t m = 4 + it % 9, d = 1 + it % 2;
		std::vector<BigInt> powers;
		for (std::size_t i = 0; i < m; ++i)
			powers.push_back(random_big(rng, 20) + 1);
		auto alphas = random_alphas(rng, d, 10000);
		BigInt g = default_grid(m, d);
		if (g < 2)
			continue;
		auto p = disjoint_subset_pair(powers, alphas, g);
		auto n = naive_gray_pair(powers, alphas, g);
		CAPTURE(it);
		CHECK(p.y_indices == n.y);
		CHECK(p.z_indices == n.z);
		CHECK(p.visits == n.visits);
		CHECK(p.visits <= ipow(g, d) + 1);
		check_pair(p, powers, alphas, g);
	}
}

TEST_CASE("squares from a twelve-element chain on a grid of 8")
{
	std::vector<BigInt> powers;
	for (long x : {1, 7, 12, 19, 31, 43, 50, 62, 74, 81, 93, 105})
		powers.push_back(BigInt(x) * x);
	std::vector<TorusValue> alphas{tv(89, 144), tv(13, 21)};
	auto p = disjoint_subset_pair(powers, alphas, 8);
	check_pair(p, powers, alphas, 8);
	auto n = naive_gray_pair(powers, alphas, 8);
	CHECK(p.y_indices == n.y);
	CHECK(p.z_indices == n.z);
}

TEST_CASE("big denominators take the multiprecision path")
{
	std::vector<BigInt> powers{BigInt("123456789012345678901"), 5, 77, 1234567};
	std::vector<TorusValue> alphas{TorusValue::from_rational(BigInt(1), BigInt(1) << 100)};
	auto p = disjoint_subset_pair(powers, alphas, 4);
	check_pair(p, powers, alphas, 4);
	auto n = naive_gray_pair(powers, alphas, 4);
	CHECK(p.y_indices == n.y);
	CHECK(p.z_indices == n.z);
}
