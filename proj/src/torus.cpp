// SPDX-License-Identifier: Apache-2.0

#include "recur/torus.hpp"

#include "recur/error.hpp"

#include <cctype>

namespace recur {

const char *to_string(ErrorKind kind)
{
	switch (kind) {
	case ErrorKind::invalid_denominator: return "invalid-denominator";
	case ErrorKind::invalid_instance: return "invalid-instance";
	case ErrorKind::infeasible_budget: return "infeasible-budget";
	case ErrorKind::pigeonhole_infeasible: return "pigeonhole-infeasible";
	case ErrorKind::cap_exceeded: return "cap-exceeded";
	case ErrorKind::parse_error: return "parse-error";
	}
	return "unknown";
}

TorusValue TorusValue::from_rational(const BigInt &p, const BigInt &q)
{
	if (sgn(q) <= 0)
		throw Error(ErrorKind::invalid_denominator, "denominator must be positive");
	BigInt r;
	mpz_fdiv_r(r.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
	BigInt g = gcd(r, q);
	if (r == 0)
		return TorusValue{};
	return TorusValue(r / g, q / g);
}

TorusValue TorusValue::from_rational(const Rational &r)
{
	return from_rational(r.get_num(), r.get_den());
}

Rational TorusValue::to_rational() const
{
	Rational r(num_, den_);
	return r;
}

std::string TorusValue::str() const
{
	return num_.get_str() + "/" + den_.get_str();
}

TorusDistance::TorusDistance(Rational value) : value_(std::move(value))
{
	value_.canonicalize();
}

std::string TorusDistance::str() const
{
	return rational_str(value_);
}

TorusValue scale_add_mod1(const TorusValue &t1, const BigInt &c, const TorusValue &t2)
{
	BigInt num = t2.num_ * t1.den_ + c * t1.num_ * t2.den_;
	BigInt den = t1.den_ * t2.den_;
	return TorusValue::from_rational(num, den);
}

TorusValue add_mod1(const TorusValue &a, const TorusValue &b)
{
	return scale_add_mod1(a, 1, b);
}

TorusValue sub_mod1(const TorusValue &a, const TorusValue &b)
{
	return scale_add_mod1(b, -1, a);
}

TorusDistance dist_to_int(const TorusValue &t)
{
	BigInt other = t.den() - t.num();
	return TorusDistance(Rational(t.num() < other ? t.num() : other, t.den()));
}

Rational signed_difference(const TorusValue &a, const TorusValue &b)
{
	Rational d = sub_mod1(a, b).to_rational();
	if (d * 2 >= 1)
		d -= 1;
	return d;
}

std::string rational_str(const Rational &r)
{
	return r.get_num().get_str() + "/" + r.get_den().get_str();
}

namespace {

bool all_digits(std::string_view s)
{
	if (s.empty())
		return false;
	for (char c : s)
		if (!std::isdigit(static_cast<unsigned char>(c)))
			return false;
	return true;
}

} // namespace

BigInt parse_bigint(std::string_view s)
{
	std::string_view body = s;
	bool neg = false;
	if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
		neg = body.front() == '-';
		body.remove_prefix(1);
	}
	if (!all_digits(body))
		throw Error(ErrorKind::parse_error, "malformed integer '" + std::string(s) + "'");
	BigInt v(std::string(body), 10);
	return neg ? BigInt(-v) : v;
}

Rational parse_rational(std::string_view s)
{
	while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
		s.remove_prefix(1);
	while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
		s.remove_suffix(1);
	if (auto slash = s.find('/'); slash != std::string_view::npos) {
		BigInt p = parse_bigint(s.substr(0, slash));
		std::string_view qs = s.substr(slash + 1);
		if (qs.empty() || (!all_digits(qs) && qs.front() != '-'))
			throw Error(ErrorKind::parse_error, "malformed rational '" + std::string(s) + "'");
		BigInt q = parse_bigint(qs);
		if (sgn(q) <= 0)
			throw Error(ErrorKind::invalid_denominator,
			            "non-positive denominator in '" + std::string(s) + "'");
		Rational r(p, q);
		r.canonicalize();
		return r;
	}
	if (auto dot = s.find('.'); dot != std::string_view::npos) {
		std::string_view ip = s.substr(0, dot), fp = s.substr(dot + 1);
		bool neg = !ip.empty() && ip.front() == '-';
		if (!ip.empty() && (ip.front() == '-' || ip.front() == '+'))
			ip.remove_prefix(1);
		if ((ip.empty() && fp.empty()) || (!ip.empty() && !all_digits(ip)) ||
		    (!fp.empty() && !all_digits(fp)))
			throw Error(ErrorKind::parse_error, "malformed decimal '" + std::string(s) + "'");
		BigInt scale = ipow(10, fp.size());
		BigInt whole = ip.empty() ? BigInt(0) : BigInt(std::string(ip), 10);
		BigInt frac = fp.empty() ? BigInt(0) : BigInt(std::string(fp), 10);
		Rational r(whole * scale + frac, scale);
		r.canonicalize();
		return neg ? Rational(-r) : r;
	}
	return Rational(parse_bigint(s));
}

BigInt iroot(const BigInt &x, unsigned long k)
{
	BigInt r;
	mpz_root(r.get_mpz_t(), x.get_mpz_t(), k);
	return r;
}

BigInt ipow(const BigInt &x, unsigned long e)
{
	BigInt r;
	mpz_pow_ui(r.get_mpz_t(), x.get_mpz_t(), e);
	return r;
}

} // namespace recur
