// SPDX-License-Identifier: Apache-2.0

#include "recur/kronecker.hpp"

#include "detail/modint.hpp"
#include "recur/error.hpp"

#include <optional>
#include <unordered_map>

namespace recur {

using detail::box_of;

namespace {

constexpr std::uint64_t flat_table_limit = std::uint64_t{1} << 22;

/* First-seen orbit position per box; flat for small grids. */
class BoxTable {
public:
	explicit BoxTable(std::uint64_t boxes)
	{
		if (boxes <= flat_table_limit)
			flat_.assign(boxes, 0);
	}

	/* Returns the earlier position stored in the box, or records m. */
	std::optional<std::uint64_t> visit(std::uint64_t key, std::uint64_t m)
	{
		if (!flat_.empty()) {
			std::uint64_t &slot = flat_[key];
			if (slot != 0)
				return slot - 1;
			slot = m + 1;
			return std::nullopt;
		}
		auto [it, inserted] = map_.try_emplace(key, m);
		if (!inserted)
			return it->second;
		return std::nullopt;
	}

private:
	std::vector<std::uint64_t> flat_;
	std::unordered_map<std::uint64_t, std::uint64_t> map_;
};

template <class T>
std::pair<std::uint64_t, std::uint64_t>
walk_orbit(std::span<const TorusValue> alphas, std::uint64_t g_word, std::uint64_t boxes)
{
	const std::size_t d = alphas.size();
	std::vector<T> step(d), mod(d), pos(d);
	for (std::size_t j = 0; j < d; ++j) {
		step[j] = detail::convert<T>(alphas[j].num());
		mod[j] = detail::convert<T>(alphas[j].den());
		pos[j] = T(0);
	}
	const T g = detail::convert<T>(detail::from_word(g_word));
	BoxTable table(boxes);
	for (std::uint64_t m = 0;; ++m) {
		std::uint64_t key = 0;
		for (std::size_t j = d; j-- > 0;)
			key = key * g_word + box_of(g, pos[j], mod[j]);
		if (auto prev = table.visit(key, m))
			return {m - *prev, m + 1};
		for (std::size_t j = 0; j < d; ++j)
			detail::add_mod(pos[j], step[j], mod[j]);
	}
}

} // namespace

KroneckerResult kronecker_approx(std::span<const TorusValue> alphas, const BigInt &N,
                                 const SolverConfig &cfg)
{
	if (alphas.empty())
		throw Error(ErrorKind::invalid_instance, "kronecker: empty list of targets");
	if (N < 1)
		throw Error(ErrorKind::invalid_instance, "kronecker: range must be >= 1");
	const auto d = static_cast<unsigned long>(alphas.size());

	KroneckerResult res;
	BigInt g = iroot(N, d);
	if (ipow(g, d) > detail::from_word(cfg.kronecker_box_cap)) {
		g = iroot(detail::from_word(cfg.kronecker_box_cap), d);
		res.coarsened = true;
	}
	res.grid = g;

	if (g <= 1) {
		res.n = 1;
		res.guarantee = Rational(1, 2);
	} else {
		const std::uint64_t boxes = detail::to_word(ipow(g, d));
		const std::uint64_t gw = detail::to_word(g);
		bool word = true;
		for (const auto &a : alphas)
			word = word && detail::fits_word(a.den());
		auto [n, steps] = word ? walk_orbit<std::uint64_t>(alphas, gw, boxes)
		                       : walk_orbit<BigInt>(alphas, gw, boxes);
		res.n = detail::from_word(n);
		res.orbit_steps = steps;
		res.guarantee = Rational(BigInt(1), g);
	}
	res.residuals.reserve(alphas.size());
	for (const auto &a : alphas)
		res.residuals.push_back(dist_to_int(scale_mod1(a, res.n)));
	return res;
}

} // namespace recur
