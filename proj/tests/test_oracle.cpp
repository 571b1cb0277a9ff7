// SPDX-License-Identifier: Apache-2.0

#include "recur/error.hpp"
#include "recur/general.hpp"
#include "recur/io.hpp"
#include "recur/oracle.hpp"
#include "support.hpp"

#include <doctest.h>

#include <fstream>

using namespace recur;
using namespace recur::test;

namespace {

json load_fixtures()
{
	std::ifstream in(RECUR_FIXTURE_DIR "/oracle_fixtures.json");
	REQUIRE(in.good());
	return json::parse(in);
}

} // namespace

TEST_CASE("oracle examples")
{
	PolySystem lin{1, {{tv(1, 3)}}};
	auto r = brute_force_min(lin, 10);
	CHECK(r.n_star == 3);
	CHECK(r.value.value() == 0);

	PolySystem sq{2, {{TorusValue{}, tv(89, 144)}}};
	r = brute_force_min(sq, 100);
	// 12^2 = 144
	CHECK(r.n_star == 12);
	CHECK(r.value.value() == 0);

	PolySystem tri{2, {{tv(1, 2), tv(1, 2)}}};
	r = brute_force_min(tri, 10);
	CHECK(r.n_star == 1);
	CHECK(r.value.value() == 0);
}

TEST_CASE("oracle agrees with the frozen fixtures")
{
	json doc = load_fixtures();
	REQUIRE(doc["records"].size() >= 60);
	for (const auto &rec : doc["records"]) {
		PolySystem p = poly_from_json(rec["polys"]);
		std::uint64_t N = std::stoull(rec["N"].get<std::string>());
		auto r = brute_force_min(p, N);
		CAPTURE(rec["tag"].get<std::string>());
		CHECK(r.n_star == BigInt(rec["n_star"].get<std::string>()));
		CHECK(r.value.value() == parse_rational(rec["value"].get<std::string>()));
		auto c = poly_recurrence(p, BigInt(N));
		CHECK(verify_certificate(c, p).ok);
		CHECK(c.achieved >= r.value.value());
		// degree >= 2 is scanned exactly at this size; degree 1 is Kronecker
		if (p.effective_degree() >= 2)
			CHECK(c.achieved == r.value.value());
	}
}

TEST_CASE("property: finite differences agree with direct evaluation")
{
	std::mt19937_64 rng(61);
	for (int it = 0; it < 40; ++it) {
		auto p = random_system(rng, 1 + it % 3, 1 + it % 5, 100000);
		std::uint64_t N = 50 + rng() % 300;
		auto r = brute_force_min(p, N);
		auto naive = naive_min(p, N);
		CAPTURE(it);
		CHECK(r.n_star == naive.n);
		CHECK(r.value.value() == naive.value);
		CHECK(r.scanned == N);
	}
}

TEST_CASE("oracle caps")
{
	PolySystem lin{1, {{tv(1, 3)}}};
	SolverConfig cfg;
	cfg.oracle_scan_cap = 100;
	try {
		brute_force_min(lin, 101, cfg);
		FAIL("expected cap-exceeded");
	} catch (const Error &e) {
		CHECK(e.kind() == ErrorKind::cap_exceeded);
	}
	CHECK_THROWS_AS(brute_force_min(lin, 0), Error);
}

TEST_CASE("verify_certificate accepts solver output and catches tampering")
{
	PolySystem p{2, {{tv(13, 21), tv(89, 144)}, {tv(1, 11), tv(1, 7)}}};
	auto c = poly_recurrence(p, 5000);
	CHECK(verify_certificate(c, p).ok);

	auto bumped = c;
	bumped.n += 1;
	auto rep = verify_certificate(bumped, p);
	CHECK_FALSE(rep.ok);
	CHECK_FALSE(rep.diagnostics.empty());

	Certificate low = poly_recurrence(PolySystem{1, {{tv(1, 3)}, {tv(2, 7)}}}, 5);
	PolySystem lp{1, {{tv(1, 3)}, {tv(2, 7)}}};
	REQUIRE(low.achieved > 0);
	low.achieved = 0;
	rep = verify_certificate(low, lp);
	CHECK_FALSE(rep.ok);
	bool named = false;
	for (const auto &d : rep.diagnostics)
		named = named || d.find("residual[j=") != std::string::npos;
	CHECK(named);

	auto out = c;
	out.n = c.range + 1;
	CHECK_FALSE(verify_certificate(out, p).ok);
	auto short_res = c;
	short_res.residuals.pop_back();
	CHECK_FALSE(verify_certificate(short_res, p).ok);
}

TEST_CASE("expansion identity")
{
	std::vector<BigInt> one{BigInt(12345)};
	auto r = expansion_identity_check(one, 3);
	CHECK(r.ok);
	CHECK(r.off_diagonal == 0);

	std::vector<BigInt> ones{1, 1};
	r = expansion_identity_check(ones, 2);
	CHECK(r.ok);
	CHECK(r.lhs == 4);
	CHECK(r.diagonal == 2);
	CHECK(r.off_diagonal == 2);

	std::mt19937_64 rng(62);
	for (int it = 0; it < 30; ++it) {
		std::vector<BigInt> v;
		for (int i = 0; i < 4; ++i)
			v.push_back(random_big(rng, 90));
		r = expansion_identity_check(v, 3);
		CHECK(r.ok);
		BigInt diag = 0;
		for (const auto &x : v)
			diag += x * x * x;
		CHECK(r.diagonal == diag);
	}
	std::vector<BigInt> seven(7, BigInt(1));
	CHECK_THROWS_AS(expansion_identity_check(seven, 2), Error);
	CHECK_THROWS_AS(expansion_identity_check(ones, 6), Error);
}
