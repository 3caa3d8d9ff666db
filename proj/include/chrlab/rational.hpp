// rational.hpp -- arbitrary-precision integers and exact rationals.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace chrlab {

using BigInt = boost::multiprecision::cpp_int;

/// Floor of a/b for b > 0.
inline BigInt floor_div(const BigInt& a, const BigInt& b) {
    BigInt q = a / b;
    if (q * b > a) --q;
    return q;
}

/// Largest x with x*x <= n (n >= 0).
inline BigInt isqrt(const BigInt& n) {
    return boost::multiprecision::sqrt(n);
}

/// Exact rational number, always stored with den > 0 and gcd(num, den) = 1.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(BigInt num, BigInt den);
    Rational(std::int64_t n) : num_(n), den_(1) {}  // NOLINT: implicit by design

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_integer() const { return den_ == 1; }

    Rational operator+(const Rational& r) const { return Rational(num_ * r.den_ + r.num_ * den_, den_ * r.den_); }
    Rational operator-(const Rational& r) const { return Rational(num_ * r.den_ - r.num_ * den_, den_ * r.den_); }
    Rational operator*(const Rational& r) const { return Rational(num_ * r.num_, den_ * r.den_); }
    Rational operator/(const Rational& r) const { return Rational(num_ * r.den_, den_ * r.num_); }
    Rational operator-() const { return Rational(-num_, den_); }

    bool operator==(const Rational& r) const { return num_ == r.num_ && den_ == r.den_; }
    bool operator<(const Rational& r) const { return num_ * r.den_ < r.num_ * den_; }
    bool operator<=(const Rational& r) const { return num_ * r.den_ <= r.num_ * den_; }
    bool operator>(const Rational& r) const { return r < *this; }
    bool operator>=(const Rational& r) const { return r <= *this; }

    BigInt floor() const { return floor_div(num_, den_); }

    std::string to_string() const;

private:
    BigInt num_;
    BigInt den_;
};

}  // namespace chrlab
