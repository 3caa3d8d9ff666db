// surd.hpp -- exact arithmetic and total-order comparison on quadratic
// surds (a + b*sqrt(d))/c with arbitrary-precision integer components.

#pragma once

#include "chrlab/rational.hpp"

#include <string>

namespace chrlab {

/// A number of the form (a + b*sqrt(d))/c. Canonical form: c > 0,
/// gcd(a, b, c) = 1, d squarefree, and b = 0 exactly when the value is
/// rational (in which case d = 0). Addition and multiplication require
/// both operands to lie in the same quadratic field; mixing
/// incompatible radicals throws std::domain_error. Comparison is exact
/// for arbitrary operands.
class QuadraticSurd {
public:
    QuadraticSurd() : a_(0), b_(0), c_(1), d_(0) {}
    QuadraticSurd(std::int64_t n) : a_(n), b_(0), c_(1), d_(0) {}  // NOLINT: implicit by design
    explicit QuadraticSurd(const Rational& r) : a_(r.num()), b_(0), c_(r.den()), d_(0) {}

    /// Builds (a + b*sqrt(d))/c and canonicalizes. Requires c != 0 and d >= 0.
    static QuadraticSurd make(BigInt a, BigInt b, BigInt c, BigInt d);

    const BigInt& a() const { return a_; }
    const BigInt& b() const { return b_; }
    const BigInt& c() const { return c_; }
    const BigInt& d() const { return d_; }

    bool is_rational() const { return b_ == 0; }
    Rational rational_value() const;  // throws std::domain_error when irrational

    QuadraticSurd operator+(const QuadraticSurd& rhs) const;
    QuadraticSurd operator-(const QuadraticSurd& rhs) const;
    QuadraticSurd operator*(const QuadraticSurd& rhs) const;
    QuadraticSurd operator-() const { return QuadraticSurd(-a_, -b_, c_, d_); }
    QuadraticSurd inverse() const;  // throws std::domain_error on zero

    /// Exact sign of *this - rhs: -1, 0 or +1.
    int compare(const QuadraticSurd& rhs) const;

    bool operator==(const QuadraticSurd& rhs) const {
        return a_ == rhs.a_ && b_ == rhs.b_ && c_ == rhs.c_ && d_ == rhs.d_;
    }
    bool operator<(const QuadraticSurd& rhs) const { return compare(rhs) < 0; }
    bool operator>(const QuadraticSurd& rhs) const { return compare(rhs) > 0; }

    /// "(a+b*sqrt(d))/c" with degenerate parts elided, e.g. "sqrt(5)",
    /// "2*sqrt(2)", "(-1+sqrt(5))/2", "1/2".
    std::string to_string() const;

    /// Truncated decimal expansion with the given number of fractional
    /// digits. Display only; comparisons must use compare().
    std::string decimal(std::size_t digits) const;

    double to_double() const;

private:
    QuadraticSurd(BigInt a, BigInt b, BigInt c, BigInt d)
        : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {}

    void canonicalize();

    BigInt a_, b_, c_, d_;
};

/// Exact sign of (p + q*sqrt(d)) with d >= 0.
int sign_with_radical(const BigInt& p, const BigInt& q, const BigInt& d);

}  // namespace chrlab
