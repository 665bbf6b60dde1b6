#pragma once

// Exact integers and rationals.
//
// Integer is an arbitrary-precision signed integer. Rational is always kept
// in lowest terms with a positive denominator, so structural equality is
// numeric equality.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "irrdec/error.hpp"

namespace irrdec {

using Integer = boost::multiprecision::cpp_int;

inline Integer gcd(const Integer& a, const Integer& b) {
    return boost::multiprecision::gcd(a, b);
}

inline Integer lcm(const Integer& a, const Integer& b) {
    if (a == 0 || b == 0) return 0;
    return boost::multiprecision::abs(a / gcd(a, b) * b);
}

inline Integer abs(const Integer& a) { return boost::multiprecision::abs(a); }

// Floor and ceiling of a / b for b != 0.
inline Integer floor_div(const Integer& a, const Integer& b) {
    Integer q = a / b;  // truncates toward zero
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline Integer ceil_div(const Integer& a, const Integer& b) {
    Integer q = a / b;
    if ((a % b != 0) && ((a < 0) == (b < 0))) ++q;
    return q;
}

// Mathematical residue in [0, m) for m > 0.
inline Integer mod_floor(const Integer& a, const Integer& m) {
    Integer r = a % m;
    if (r < 0) r += m;
    return r;
}

class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(int v) : num_(v), den_(1) {}                     // NOLINT
    Rational(long v) : num_(v), den_(1) {}                    // NOLINT
    Rational(long long v) : num_(v), den_(1) {}               // NOLINT
    Rational(const Integer& v) : num_(v), den_(1) {}          // NOLINT
    Rational(Integer num, Integer den) : num_(std::move(num)), den_(std::move(den)) {
        normalize();
    }

    const Integer& num() const { return num_; }
    const Integer& den() const { return den_; }

    bool is_integer() const { return den_ == 1; }
    bool is_zero() const { return num_ == 0; }
    int sign() const { return num_ < 0 ? -1 : (num_ > 0 ? 1 : 0); }

    Integer floor() const { return floor_div(num_, den_); }
    Integer ceil() const { return ceil_div(num_, den_); }

    Rational reciprocal() const {
        if (num_ == 0) throw DomainError("reciprocal of zero");
        return Rational(den_, num_);
    }

    Rational operator-() const {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    Rational& operator+=(const Rational& o) {
        if (den_ == o.den_) {
            num_ += o.num_;
        } else {
            num_ = num_ * o.den_ + o.num_ * den_;
            den_ *= o.den_;
        }
        normalize();
        return *this;
    }
    Rational& operator-=(const Rational& o) { return *this += -o; }
    Rational& operator*=(const Rational& o) {
        num_ *= o.num_;
        den_ *= o.den_;
        normalize();
        return *this;
    }
    Rational& operator/=(const Rational& o) {
        if (o.num_ == 0) throw DomainError("division by zero");
        num_ *= o.den_;
        den_ *= o.num_;
        normalize();
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        Integer l = a.num_ * b.den_;
        Integer r = b.num_ * a.den_;
        if (l < r) return std::strong_ordering::less;
        if (l > r) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    // "p/q", or "p" when q == 1.
    std::string str() const {
        if (den_ == 1) return num_.str();
        return num_.str() + "/" + den_.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    void normalize() {
        if (den_ == 0) throw DomainError("zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        if (num_ == 0) {
            den_ = 1;
            return;
        }
        Integer g = gcd(abs(num_), den_);
        if (g != 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    Integer num_;
    Integer den_;
};

inline Rational pow(const Rational& base, long long exponent) {
    if (exponent < 0) return pow(base.reciprocal(), -exponent);
    Rational result(1);
    Rational b = base;
    while (exponent > 0) {
        if (exponent & 1) result *= b;
        b *= b;
        exponent >>= 1;
    }
    return result;
}

namespace detail {

inline bool parse_integer(std::string_view s, Integer& out) {
    if (s.empty()) return false;
    std::size_t i = 0;
    if (s[0] == '-' || s[0] == '+') i = 1;
    if (i == s.size()) return false;
    for (std::size_t j = i; j < s.size(); ++j) {
        if (s[j] < '0' || s[j] > '9') return false;
    }
    out = Integer(std::string(s.substr(i)));
    if (s[0] == '-') out = -out;
    return true;
}

}  // namespace detail

// Parses "p/q" or "p". Throws DomainError on malformed text or q == 0.
inline Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    Integer num;
    Integer den = 1;
    if (slash == std::string_view::npos) {
        if (!detail::parse_integer(text, num))
            throw DomainError("malformed rational '" + std::string(text) + "'");
    } else {
        auto den_text = text.substr(slash + 1);
        if (!detail::parse_integer(text.substr(0, slash), num) || den_text.empty() ||
            den_text[0] == '+' || den_text[0] == '-' || !detail::parse_integer(den_text, den))
            throw DomainError("malformed rational '" + std::string(text) + "'");
        if (den == 0) throw DomainError("zero denominator in '" + std::string(text) + "'");
    }
    return Rational(num, den);
}

}  // namespace irrdec
