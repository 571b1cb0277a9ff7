// SPDX-License-Identifier: Apache-2.0

#include "detail/scan.hpp"

#include "detail/modint.hpp"
#include "recur/error.hpp"

namespace recur::detail {

namespace {

/* Row j as integers a_e modulo L with h_j(x) = sum a_e x^(e+1) / L. */
struct Row {
	BigInt mod;
	std::vector<BigInt> coef;
};

Row integer_row(const std::vector<TorusValue> &row)
{
	Row r;
	r.mod = 1;
	for (const auto &c : row)
		r.mod = lcm(r.mod, c.den());
	for (const auto &c : row)
		r.coef.push_back(c.num() * (r.mod / c.den()));
	return r;
}

template <class T>
ScanResult scan_impl(const std::vector<Row> &rows, std::uint64_t limit)
{
	const std::size_t d = rows.size();
	std::vector<T> mod(d);
	std::vector<std::vector<T>> coef(d);
	for (std::size_t j = 0; j < d; ++j) {
		mod[j] = convert<T>(rows[j].mod);
		for (const auto &c : rows[j].coef)
			coef[j].push_back(convert<T>(c));
	}
	T best_num(1), best_den(1); /* above any distance */
	std::uint64_t best_n = 0;
	for (std::uint64_t n = 1; n <= limit; ++n) {
		T worst_num(0), worst_den(1);
		bool beaten = false;
		for (std::size_t j = 0; j < d && !beaten; ++j) {
			const T x = reduce_word(n, mod[j]);
			T acc(0);
			for (std::size_t e = coef[j].size(); e-- > 0;) {
				add_mod(acc, coef[j][e], mod[j]);
				acc = mul_mod(acc, x, mod[j]);
			}
			T dn = dist_num(acc, mod[j]);
			if (frac_less(worst_num, worst_den, dn, mod[j])) {
				worst_num = dn;
				worst_den = mod[j];
				beaten = !frac_less(worst_num, worst_den, best_num, best_den);
			}
		}
		if (!beaten && frac_less(worst_num, worst_den, best_num, best_den)) {
			best_num = worst_num;
			best_den = worst_den;
			best_n = n;
			if (is_zero(best_num))
				break;
		}
	}
	return {from_word(best_n), Rational(to_big(best_num), to_big(best_den))};
}

} // namespace

ScanResult exact_scan(const PolySystem &polys, std::uint64_t limit)
{
	if (limit < 1)
		throw Error(ErrorKind::invalid_instance, "scan: range must be >= 1");
	std::vector<Row> rows;
	bool word = true;
	for (const auto &row : polys.coeffs) {
		rows.push_back(integer_row(row));
		word = word && fits_word(rows.back().mod);
	}
	ScanResult r = word ? scan_impl<std::uint64_t>(rows, limit) : scan_impl<BigInt>(rows, limit);
	r.value.canonicalize();
	return r;
}

} // namespace recur::detail
