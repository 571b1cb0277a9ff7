// SPDX-License-Identifier: Apache-2.0

#include "recur/poly.hpp"

#include "recur/error.hpp"

#include <algorithm>

namespace recur {

PolySystem PolySystem::monomials(std::span<const TorusValue> alphas, int k)
{
	PolySystem p;
	p.degree = k;
	for (const auto &a : alphas) {
		std::vector<TorusValue> row(static_cast<std::size_t>(k));
		row.back() = a;
		p.coeffs.push_back(std::move(row));
	}
	return p;
}

void PolySystem::validate() const
{
	if (degree < 1)
		throw Error(ErrorKind::invalid_instance, "degree must be >= 1");
	if (coeffs.empty())
		throw Error(ErrorKind::invalid_instance, "coeffs: need at least one polynomial");
	for (std::size_t j = 0; j < coeffs.size(); ++j)
		if (coeffs[j].size() != static_cast<std::size_t>(degree))
			throw Error(ErrorKind::invalid_instance,
			            "coeffs[" + std::to_string(j) + "]: expected " + std::to_string(degree) +
			                " coefficients, got " + std::to_string(coeffs[j].size()));
}

int PolySystem::effective_degree() const
{
	int best = 0;
	for (const auto &row : coeffs)
		for (std::size_t e = row.size(); e-- > 0;)
			if (!row[e].is_zero()) {
				best = std::max(best, static_cast<int>(e) + 1);
				break;
			}
	return best;
}

TorusValue PolySystem::evaluate(std::size_t j, const BigInt &x) const
{
	TorusValue acc;
	BigInt xp = 1;
	for (const auto &c : coeffs.at(j)) {
		xp *= x;
		acc = scale_add_mod1(c, xp, acc);
	}
	return acc;
}

std::vector<TorusValue> PolySystem::leading() const
{
	std::vector<TorusValue> out;
	for (const auto &row : coeffs)
		out.push_back(row.back());
	return out;
}

PolySystem PolySystem::peel(const BigInt &n) const
{
	if (degree < 2)
		throw Error(ErrorKind::invalid_instance, "peel: needs degree >= 2");
	PolySystem h;
	h.degree = degree - 1;
	for (const auto &row : coeffs) {
		std::vector<TorusValue> r;
		BigInt np = 1;
		for (int e = 0; e + 1 < degree; ++e) {
			np *= n;
			r.push_back(scale_mod1(row[static_cast<std::size_t>(e)], np));
		}
		h.coeffs.push_back(std::move(r));
	}
	return h;
}

} // namespace recur
