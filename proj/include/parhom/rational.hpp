#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace parhom {

// Exact rational arithmetic on 64-bit numerator/denominator, always kept in
// lowest terms with a positive denominator. Comparisons go through 128-bit
// cross products, so values at the scale of vertex functions and grid
// midpoints never overflow.
class rational {
public:
	rational() : num_(0), den_(1) {}
	rational(long long n) : num_(n), den_(1) {}
	rational(long long n, long long d);

	long long num() const { return num_; }
	long long den() const { return den_; }
	bool is_integer() const { return den_ == 1; }

	rational operator-() const { return rational(-num_, den_); }
	rational operator+(const rational& o) const;
	rational operator-(const rational& o) const;
	rational operator*(const rational& o) const;
	rational operator/(const rational& o) const;

	std::strong_ordering operator<=>(const rational& o) const;
	bool operator==(const rational& o) const { return num_ == o.num_ && den_ == o.den_; }

	rational abs() const { return num_ < 0 ? -*this : *this; }

	// Accepts "7", "-3", "3.25", "-0.5", "2/3", "-7/2".
	static rational parse(const std::string& s);

	// Exact decimal when the denominator is of the form 2^a 5^b, else "p/q".
	std::string str() const;

private:
	long long num_, den_;
};

// A rational extended with -inf/+inf endpoints, used for rectangle corners.
class ext_rational {
public:
	ext_rational() : tag_(tag::finite), value_(0) {}
	ext_rational(const rational& v) : tag_(tag::finite), value_(v) {}
	static ext_rational neg_inf() { return ext_rational(tag::neg_inf); }
	static ext_rational pos_inf() { return ext_rational(tag::pos_inf); }

	bool is_finite() const { return tag_ == tag::finite; }
	bool is_neg_inf() const { return tag_ == tag::neg_inf; }
	bool is_pos_inf() const { return tag_ == tag::pos_inf; }
	const rational& value() const;

	std::strong_ordering operator<=>(const ext_rational& o) const;
	bool operator==(const ext_rational& o) const;

	// Accepts "inf", "+inf", "-inf", or anything rational::parse accepts.
	static ext_rational parse(const std::string& s);
	std::string str() const;

private:
	enum class tag : int { neg_inf = -1, finite = 0, pos_inf = 1 };
	explicit ext_rational(tag t) : tag_(t), value_(0) {}
	tag tag_;
	rational value_;
};

} // namespace parhom
