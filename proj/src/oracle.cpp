// SPDX-License-Identifier: Apache-2.0

#include "recur/oracle.hpp"

#include "detail/modint.hpp"
#include "recur/error.hpp"

namespace recur {

namespace {

/* Finite-difference table of one row, as integers modulo the row denominator. */
struct DiffRow {
	BigInt mod;
	std::vector<BigInt> diffs; /* diffs[i] = Delta^i h(0) mod L, i = 0..k */
};

DiffRow difference_table(const PolySystem &p, std::size_t j)
{
	DiffRow r;
	r.mod = 1;
	for (const auto &c : p.coeffs[j])
		r.mod = lcm(r.mod, c.den());
	const auto k = static_cast<std::size_t>(p.degree);
	std::vector<BigInt> vals(k + 1);
	for (std::size_t x = 0; x <= k; ++x) {
		TorusValue v = p.evaluate(j, detail::from_word(x));
		vals[x] = v.num() * (r.mod / v.den());
	}
	/* forward differences in place: vals[i] becomes Delta^i h(0) */
	for (std::size_t i = 1; i <= k; ++i)
		for (std::size_t x = k; x >= i; --x) {
			vals[x] -= vals[x - 1];
			mpz_fdiv_r(vals[x].get_mpz_t(), vals[x].get_mpz_t(), r.mod.get_mpz_t());
		}
	r.diffs = std::move(vals);
	return r;
}

template <class T>
OracleResult scan(const std::vector<DiffRow> &rows, std::uint64_t N)
{
	const std::size_t d = rows.size();
	std::vector<T> mod(d);
	std::vector<std::vector<T>> diff(d);
	for (std::size_t j = 0; j < d; ++j) {
		mod[j] = detail::convert<T>(rows[j].mod);
		for (const auto &v : rows[j].diffs)
			diff[j].push_back(detail::convert<T>(v));
	}
	T best_num(1), best_den(1);
	std::uint64_t best_n = 0, n = 1;
	for (; n <= N; ++n) {
		T worst_num(0), worst_den(1);
		for (std::size_t j = 0; j < d; ++j) {
			auto &D = diff[j];
			for (std::size_t i = 0; i + 1 < D.size(); ++i)
				detail::add_mod(D[i], D[i + 1], mod[j]);
			T dn = detail::dist_num(D[0], mod[j]);
			if (detail::frac_less(worst_num, worst_den, dn, mod[j])) {
				worst_num = dn;
				worst_den = mod[j];
			}
		}
		if (detail::frac_less(worst_num, worst_den, best_num, best_den)) {
			best_num = worst_num;
			best_den = worst_den;
			best_n = n;
		}
	}
	OracleResult r;
	r.n_star = detail::from_word(best_n);
	r.value = TorusDistance(Rational(detail::to_big(best_num), detail::to_big(best_den)));
	r.scanned = N;
	return r;
}

} // namespace

OracleResult brute_force_min(const PolySystem &polys, std::uint64_t N, const SolverConfig &cfg)
{
	polys.validate();
	if (N < 1)
		throw Error(ErrorKind::invalid_instance, "oracle: range must be >= 1");
	if (N > cfg.oracle_scan_cap)
		throw Error(ErrorKind::cap_exceeded,
		            "oracle: range " + std::to_string(N) + " exceeds the scan cap " +
		                std::to_string(cfg.oracle_scan_cap));
	std::vector<DiffRow> rows;
	bool word = true;
	for (std::size_t j = 0; j < polys.size(); ++j) {
		rows.push_back(difference_table(polys, j));
		word = word && detail::fits_word(rows.back().mod);
	}
	return word ? scan<std::uint64_t>(rows, N) : scan<BigInt>(rows, N);
}

VerifyReport verify_certificate(const Certificate &cert, const PolySystem &polys)
{
	VerifyReport rep;
	auto fail = [&](std::string msg) {
		rep.ok = false;
		rep.diagnostics.push_back(std::move(msg));
	};
	if (cert.n < 1)
		fail("n = " + cert.n.get_str() + " is below 1");
	if (cert.n > cert.range)
		fail("n = " + cert.n.get_str() + " exceeds range " + cert.range.get_str());
	if (cert.degree != polys.degree)
		fail("degree " + std::to_string(cert.degree) + " does not match instance degree " +
		     std::to_string(polys.degree));
	if (cert.residuals.size() != polys.size()) {
		fail("certificate has " + std::to_string(cert.residuals.size()) + " residuals, instance has " +
		     std::to_string(polys.size()) + " polynomials");
		return rep;
	}
	Rational worst = 0;
	for (std::size_t j = 0; j < polys.size(); ++j) {
		TorusDistance actual = dist_to_int(polys.evaluate(j, cert.n));
		if (actual != cert.residuals[j])
			fail("residual[" + std::to_string(j) + "] claimed " + cert.residuals[j].str() +
			     ", recomputed " + actual.str());
		if (actual.value() > worst)
			worst = actual.value();
		if (actual.value() > cert.achieved)
			fail("achieved " + rational_str(cert.achieved) + " is below residual[j=" + std::to_string(j) +
			     "] = " + actual.str());
	}
	if (worst != cert.achieved)
		fail("achieved " + rational_str(cert.achieved) + " differs from max residual " + rational_str(worst));
	return rep;
}

IdentityReport expansion_identity_check(std::span<const BigInt> values, int k)
{
	const std::size_t n = values.size();
	if (n == 0 || n > 6 || k < 1 || k > 5)
		throw Error(ErrorKind::cap_exceeded, "identity check: needs 1 <= n <= 6 and 1 <= k <= 5");
	IdentityReport rep;
	BigInt sum = 0;
	for (const auto &v : values)
		sum += v;
	rep.lhs = ipow(sum, static_cast<unsigned long>(k));
	rep.diagonal = 0;
	rep.off_diagonal = 0;
	std::vector<std::size_t> idx(static_cast<std::size_t>(k), 0);
	for (;;) {
		BigInt prod = 1;
		bool constant = true;
		for (auto i : idx) {
			prod *= values[i];
			constant = constant && i == idx.front();
		}
		(constant ? rep.diagonal : rep.off_diagonal) += prod;
		std::size_t pos = 0;
		while (pos < idx.size() && ++idx[pos] == n)
			idx[pos++] = 0;
		if (pos == idx.size())
			break;
	}
	rep.ok = rep.lhs == rep.diagonal + rep.off_diagonal;
	return rep;
}

} // namespace recur
