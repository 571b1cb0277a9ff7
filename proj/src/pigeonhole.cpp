// SPDX-License-Identifier: Apache-2.0

#include "recur/pigeonhole.hpp"

#include "detail/modint.hpp"
#include "recur/error.hpp"

#include <bit>
#include <unordered_map>

namespace recur {

namespace {

struct Collision {
	std::uint64_t first;
	std::uint64_t second;
	std::uint64_t visits;
};

template <class T>
Collision gray_walk(std::span<const BigInt> powers, std::span<const TorusValue> alphas,
                    std::uint64_t g_word, std::uint64_t map_cap)
{
	const std::size_t m = powers.size(), d = alphas.size();
	std::vector<T> mod(d), pos(d, T(0));
	std::vector<T> inc(m * d);
	for (std::size_t j = 0; j < d; ++j) {
		mod[j] = detail::convert<T>(alphas[j].den());
		for (std::size_t i = 0; i < m; ++i)
			inc[i * d + j] = detail::convert<T>(
			    detail::mul_mod(powers[i], alphas[j].num(), alphas[j].den()));
	}
	const T g = detail::convert<T>(detail::from_word(g_word));
	std::unordered_map<std::uint64_t, std::uint64_t> seen;
	const std::uint64_t total = m >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m);
	std::uint64_t mask = 0;
	for (std::uint64_t step = 0; step < total; ++step) {
		if (step > 0) {
			const auto bit = static_cast<std::size_t>(std::countr_zero(step));
			mask ^= std::uint64_t{1} << bit;
			const bool added = (mask >> bit) & 1;
			for (std::size_t j = 0; j < d; ++j) {
				if (added)
					detail::add_mod(pos[j], inc[bit * d + j], mod[j]);
				else
					detail::sub_mod(pos[j], inc[bit * d + j], mod[j]);
			}
		}
		std::uint64_t key = 0;
		for (std::size_t j = d; j-- > 0;)
			key = key * g_word + detail::box_of(g, pos[j], mod[j]);
		auto [it, inserted] = seen.try_emplace(key, mask);
		if (!inserted)
			return {it->second, mask, step + 1};
		if (seen.size() >= map_cap)
			throw Error(ErrorKind::cap_exceeded, "pigeonhole: box map exceeded its entry cap");
	}
	throw Error(ErrorKind::pigeonhole_infeasible, "pigeonhole: no collision among all subsets");
}

std::vector<std::size_t> bits_of(std::uint64_t mask)
{
	std::vector<std::size_t> out;
	for (std::size_t i = 0; mask != 0; ++i, mask >>= 1)
		if (mask & 1)
			out.push_back(i);
	return out;
}

} // namespace

BigInt default_grid(std::size_t m, std::size_t d)
{
	if (m == 0 || d == 0)
		return 1;
	return iroot(ipow(2, m - 1), d);
}

SubsetPair disjoint_subset_pair(std::span<const BigInt> powers, std::span<const TorusValue> alphas,
                                const BigInt &g, const SolverConfig &cfg)
{
	const std::size_t m = powers.size(), d = alphas.size();
	if (m == 0 || d == 0)
		throw Error(ErrorKind::invalid_instance, "pigeonhole: need at least one element and one target");
	if (g < 2)
		throw Error(ErrorKind::pigeonhole_infeasible, "pigeonhole: grid must be >= 2");
	if (ipow(g, d) >= ipow(2, m))
		throw Error(ErrorKind::pigeonhole_infeasible,
		            "pigeonhole: g^d >= 2^m, raise m or lower g");
	if (m > 63)
		throw Error(ErrorKind::cap_exceeded, "pigeonhole: more than 63 elements");

	bool word = true;
	for (const auto &a : alphas)
		word = word && detail::fits_word(a.den());
	const std::uint64_t gw = detail::to_word(g);
	Collision c = word ? gray_walk<std::uint64_t>(powers, alphas, gw, cfg.pigeonhole_map_cap)
	                   : gray_walk<BigInt>(powers, alphas, gw, cfg.pigeonhole_map_cap);

	SubsetPair out;
	out.grid = g;
	out.visits = c.visits;
	out.y_indices = bits_of(c.first & ~c.second);
	out.z_indices = bits_of(c.second & ~c.first);
	out.degenerate = out.y_indices.empty() || out.z_indices.empty();
	BigInt ysum = 0, zsum = 0;
	for (auto i : out.y_indices)
		ysum += powers[i];
	for (auto i : out.z_indices)
		zsum += powers[i];
	for (const auto &a : alphas) {
		out.betas.push_back(scale_mod1(a, ysum));
		out.deltas_z.push_back(signed_difference(scale_mod1(a, zsum), out.betas.back()));
	}
	return out;
}

} // namespace recur
