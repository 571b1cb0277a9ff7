// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>

namespace recur {

using BigInt = mpz_class;
using Rational = mpq_class;

/// An exact residue num/den in [0, 1), always in lowest terms.
///
/// Every value the solvers report lives on this type, so residuals are
/// bit-exact. Irrational targets must be supplied as rational
/// approximations; replacing alpha by alpha' with |alpha - alpha'| <= 2^-p
/// moves each ||n^k alpha|| by at most N^k 2^-p, so p should exceed
/// k log2 N plus the wanted accuracy in bits.
class TorusValue {
public:
	/// The zero residue 0/1.
	TorusValue() : num_(0), den_(1) {}

	/// (p mod q)/q. Throws Error(invalid_denominator) when q <= 0.
	static TorusValue from_rational(const BigInt &p, const BigInt &q);
	static TorusValue from_rational(const Rational &r);

	const BigInt &num() const noexcept { return num_; }
	const BigInt &den() const noexcept { return den_; }

	bool is_zero() const noexcept { return num_ == 0; }

	/// The value as a rational in [0, 1).
	Rational to_rational() const;

	/// "p/q" with lowest-terms numerator and denominator.
	std::string str() const;

	friend bool operator==(const TorusValue &a, const TorusValue &b)
	{
		return a.num_ == b.num_ && a.den_ == b.den_;
	}

private:
	TorusValue(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {}

	BigInt num_;
	BigInt den_;

	friend TorusValue scale_add_mod1(const TorusValue &, const BigInt &, const TorusValue &);
};

/// ||t||, an exact rational in [0, 1/2].
class TorusDistance {
public:
	TorusDistance() : value_(0) {}
	explicit TorusDistance(Rational value);

	const Rational &value() const noexcept { return value_; }
	std::string str() const;

	friend bool operator==(const TorusDistance &a, const TorusDistance &b)
	{
		return a.value_ == b.value_;
	}
	friend std::strong_ordering operator<=>(const TorusDistance &a, const TorusDistance &b)
	{
		int c = cmp(a.value_, b.value_);
		return c < 0 ? std::strong_ordering::less
		     : c > 0 ? std::strong_ordering::greater
		             : std::strong_ordering::equal;
	}

private:
	Rational value_;
};

/// (t2 + c * t1) mod 1. The coefficient c may be any integer; negative values
/// wrap like everything else on the torus.
TorusValue scale_add_mod1(const TorusValue &t1, const BigInt &c, const TorusValue &t2);

/// c * t mod 1.
inline TorusValue scale_mod1(const TorusValue &t, const BigInt &c)
{
	return scale_add_mod1(t, c, TorusValue{});
}

/// a + b mod 1.
TorusValue add_mod1(const TorusValue &a, const TorusValue &b);

/// a - b mod 1.
TorusValue sub_mod1(const TorusValue &a, const TorusValue &b);

/// Distance to the nearest integer: min(num, den - num)/den.
TorusDistance dist_to_int(const TorusValue &t);

/// The representative of (a - b) mod 1 in [-1/2, 1/2).
Rational signed_difference(const TorusValue &a, const TorusValue &b);

/// Formats a rational as "p/q", including integers ("3/1").
std::string rational_str(const Rational &r);

/// Parses "p/q", "p", or a finite decimal "x.yyy" exactly. Throws
/// Error(parse_error) or Error(invalid_denominator).
Rational parse_rational(std::string_view s);

/// Parses a nonnegative-or-signed decimal integer; throws Error(parse_error).
BigInt parse_bigint(std::string_view s);

/// floor(x^(1/k)) for x >= 0.
BigInt iroot(const BigInt &x, unsigned long k);

/// x^e.
BigInt ipow(const BigInt &x, unsigned long e);

} // namespace recur
