// SPDX-License-Identifier: Apache-2.0

#include "recur/certificate.hpp"

namespace recur {

void Certificate::absorb_trace(const Certificate &sub)
{
	for (auto e : sub.trace) {
		e.depth += 1;
		trace.push_back(std::move(e));
	}
	fallback = fallback || sub.fallback;
}

Certificate certify(const PolySystem &polys, const BigInt &n, const BigInt &range,
                    std::string method)
{
	Certificate c;
	c.n = n;
	c.range = range;
	c.degree = polys.degree;
	c.method = std::move(method);
	c.achieved = 0;
	for (std::size_t j = 0; j < polys.size(); ++j) {
		c.residuals.push_back(dist_to_int(polys.evaluate(j, n)));
		if (c.residuals.back().value() > c.achieved)
			c.achieved = c.residuals.back().value();
	}
	return c;
}

} // namespace recur
