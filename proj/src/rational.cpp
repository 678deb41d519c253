#include "parhom/rational.hpp"

#include <numeric>
#include <stdexcept>

namespace parhom {

rational::rational(long long n, long long d) : num_(n), den_(d) {
	if (den_ == 0) throw std::invalid_argument("rational: zero denominator");
	if (den_ < 0) {
		num_ = -num_;
		den_ = -den_;
	}
	long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
	if (g > 1) {
		num_ /= g;
		den_ /= g;
	}
}

rational rational::operator+(const rational& o) const {
	return rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

rational rational::operator-(const rational& o) const {
	return rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

rational rational::operator*(const rational& o) const {
	return rational(num_ * o.num_, den_ * o.den_);
}

rational rational::operator/(const rational& o) const {
	if (o.num_ == 0) throw std::invalid_argument("rational: division by zero");
	return rational(num_ * o.den_, den_ * o.num_);
}

std::strong_ordering rational::operator<=>(const rational& o) const {
	__int128 lhs = static_cast<__int128>(num_) * o.den_;
	__int128 rhs = static_cast<__int128>(o.num_) * den_;
	if (lhs < rhs) return std::strong_ordering::less;
	if (lhs > rhs) return std::strong_ordering::greater;
	return std::strong_ordering::equal;
}

rational rational::parse(const std::string& s) {
	if (s.empty()) throw std::invalid_argument("rational: empty string");
	size_t slash = s.find('/');
	if (slash != std::string::npos) {
		if (slash == 0 || slash + 1 >= s.size())
			throw std::invalid_argument("rational: malformed fraction '" + s + "'");
		long long n, d;
		try {
			size_t used = 0;
			n = std::stoll(s.substr(0, slash), &used);
			if (used != slash) throw std::invalid_argument("");
			std::string dpart = s.substr(slash + 1);
			d = std::stoll(dpart, &used);
			if (used != dpart.size()) throw std::invalid_argument("");
		} catch (const std::exception&) {
			throw std::invalid_argument("rational: malformed fraction '" + s + "'");
		}
		return rational(n, d);
	}
	size_t dot = s.find('.');
	try {
		if (dot == std::string::npos) {
			size_t used = 0;
			long long n = std::stoll(s, &used);
			if (used != s.size()) throw std::invalid_argument("");
			return rational(n);
		}
		std::string intpart = s.substr(0, dot);
		std::string fracpart = s.substr(dot + 1);
		if (fracpart.empty() || fracpart.size() > 18)
			throw std::invalid_argument("");
		for (char ch : fracpart)
			if (ch < '0' || ch > '9') throw std::invalid_argument("");
		bool neg = !intpart.empty() && intpart[0] == '-';
		long long whole = 0;
		if (!intpart.empty() && intpart != "-" && intpart != "+") {
			size_t used = 0;
			whole = std::stoll(intpart, &used);
			if (used != intpart.size()) throw std::invalid_argument("");
		}
		long long den = 1;
		for (size_t i = 0; i < fracpart.size(); ++i) den *= 10;
		long long frac = std::stoll(fracpart);
		long long num = (whole < 0 || neg) ? whole * den - frac : whole * den + frac;
		return rational(num, den);
	} catch (const std::invalid_argument&) {
		throw std::invalid_argument("rational: malformed value '" + s + "'");
	} catch (const std::out_of_range&) {
		throw std::invalid_argument("rational: value out of range '" + s + "'");
	}
}

std::string rational::str() const {
	if (den_ == 1) return std::to_string(num_);
	// Exact decimal exists iff den = 2^a 5^b; scale to 10^max(a,b).
	long long d = den_;
	int twos = 0, fives = 0;
	while (d % 2 == 0) {
		d /= 2;
		++twos;
	}
	while (d % 5 == 0) {
		d /= 5;
		++fives;
	}
	if (d != 1) return std::to_string(num_) + "/" + std::to_string(den_);
	int digits = twos > fives ? twos : fives;
	__int128 scaled = num_;
	for (int i = 0; i < digits; ++i) scaled *= 10;
	scaled /= den_;
	bool neg = scaled < 0;
	if (neg) scaled = -scaled;
	std::string body;
	for (int i = 0; i < digits; ++i) {
		body.insert(body.begin(), static_cast<char>('0' + static_cast<int>(scaled % 10)));
		scaled /= 10;
	}
	std::string head = scaled == 0 ? "0" : "";
	while (scaled > 0) {
		head.insert(head.begin(), static_cast<char>('0' + static_cast<int>(scaled % 10)));
		scaled /= 10;
	}
	return (neg ? "-" : "") + head + "." + body;
}

const rational& ext_rational::value() const {
	if (!is_finite()) throw std::invalid_argument("ext_rational: infinite value has no rational part");
	return value_;
}

std::strong_ordering ext_rational::operator<=>(const ext_rational& o) const {
	if (tag_ != o.tag_) return static_cast<int>(tag_) <=> static_cast<int>(o.tag_);
	if (tag_ != tag::finite) return std::strong_ordering::equal;
	return value_ <=> o.value_;
}

bool ext_rational::operator==(const ext_rational& o) const {
	return (*this <=> o) == std::strong_ordering::equal;
}

ext_rational ext_rational::parse(const std::string& s) {
	if (s == "inf" || s == "+inf") return pos_inf();
	if (s == "-inf") return neg_inf();
	return ext_rational(rational::parse(s));
}

std::string ext_rational::str() const {
	if (is_neg_inf()) return "-inf";
	if (is_pos_inf()) return "inf";
	return value_.str();
}

} // namespace parhom
