#include "chrlab/surd.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace chrlab {

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0) throw std::invalid_argument("rational with zero denominator");
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    BigInt g = boost::multiprecision::gcd(num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

std::string Rational::to_string() const {
    if (den_ == 1) return num_.str();
    return num_.str() + "/" + den_.str();
}

namespace {

// Splits n >= 0 as square * rest, by trial division up to 4096
// followed by a perfect-square test on the remainder. A square prime
// factor beyond the bound stays inside rest; arithmetic and comparison
// never rely on rest being squarefree, only canonical printing does.
std::pair<BigInt, BigInt> extract_square(BigInt n) {
    BigInt root = 1;
    if (n <= 1) return {root, n};
    for (BigInt d = 2; d <= 4096; ++d) {
        BigInt dd = d * d;
        if (dd > n) break;
        while (n % dd == 0) {
            n /= dd;
            root *= d;
        }
    }
    BigInt s = isqrt(n);
    if (s * s == n) {
        root *= s;
        n = 1;
    }
    return {root, n};
}

}  // namespace

int sign_with_radical(const BigInt& p, const BigInt& q, const BigInt& d) {
    if (q == 0 || d == 0) return p.sign();
    if (p == 0) return q.sign();
    if (p > 0 && q > 0) return 1;
    if (p < 0 && q < 0) return -1;
    // Opposite signs: compare p^2 against q^2 * d; the radical term wins
    // exactly when q^2*d exceeds p^2.
    BigInt lhs = p * p, rhs = q * q * d;
    int radical_sign = q.sign();
    if (lhs == rhs) return 0;
    return (rhs > lhs) ? radical_sign : -radical_sign;
}

namespace {

// Exact sign of t + u*sqrt(d1) + v*sqrt(d2), all d >= 0.
int sign_with_two_radicals(const BigInt& t, const BigInt& u, const BigInt& d1, const BigInt& v,
                           const BigInt& d2) {
    if (u == 0 || d1 == 0) return sign_with_radical(t, v, d2);
    if (v == 0 || d2 == 0) return sign_with_radical(t, u, d1);
    // Compare t + u*sqrt(d1) against -v*sqrt(d2).
    int left = sign_with_radical(t, u, d1);
    int right = (-v).sign();
    if (left != right) return left < right ? -1 : 1;
    if (left == 0) return 0;
    // Same nonzero sign on both sides; square both and compare again,
    // flipping the answer when both sides are negative.
    BigInt t2 = t * t + u * u * d1 - v * v * d2;
    BigInt u2 = 2 * t * u;
    int s = sign_with_radical(t2, u2, d1);
    return left > 0 ? s : -s;
}

}  // namespace

QuadraticSurd QuadraticSurd::make(BigInt a, BigInt b, BigInt c, BigInt d) {
    if (c == 0) throw std::invalid_argument("surd with zero denominator");
    if (d < 0) throw std::invalid_argument("surd with negative radicand");
    QuadraticSurd s(std::move(a), std::move(b), std::move(c), std::move(d));
    s.canonicalize();
    return s;
}

void QuadraticSurd::canonicalize() {
    if (d_ == 0) b_ = 0;
    if (b_ == 0) {
        d_ = 0;
    } else {
        auto [root, rest] = extract_square(d_);
        b_ *= root;
        d_ = rest;
        if (d_ == 1) {  // radical collapsed to an integer
            a_ += b_;
            b_ = 0;
            d_ = 0;
        } else if (d_ == 0) {
            b_ = 0;
        }
    }
    if (c_ < 0) {
        a_ = -a_;
        b_ = -b_;
        c_ = -c_;
    }
    BigInt g = boost::multiprecision::gcd(boost::multiprecision::gcd(a_, b_), c_);
    if (g > 1) {
        a_ /= g;
        b_ /= g;
        c_ /= g;
    }
}

Rational QuadraticSurd::rational_value() const {
    if (!is_rational()) throw std::domain_error("surd is irrational");
    return Rational(a_, c_);
}

namespace {

// Rewrites y = (a2 + b2*sqrt(d2))/c2 over the radical d1, assuming
// d1*d2 is a perfect square; throws std::domain_error otherwise.
// Returns components (a, b, c) with y = (a + b*sqrt(d1))/c.
struct Aligned {
    BigInt a, b, c;
};

Aligned align_radical(const BigInt& d1, const BigInt& a2, const BigInt& b2, const BigInt& c2,
                      const BigInt& d2) {
    if (b2 == 0 || d2 == d1) return {a2, b2, c2};
    BigInt prod = d1 * d2;
    BigInt s = isqrt(prod);
    if (s * s != prod)
        throw std::domain_error("surd arithmetic across incompatible radicals: sqrt(" + d1.str() +
                                ") vs sqrt(" + d2.str() + ")");
    // sqrt(d2) = (s/d1) * sqrt(d1); scale numerator and denominator by d1.
    return {a2 * d1, b2 * s, c2 * d1};
}

}  // namespace

QuadraticSurd QuadraticSurd::operator+(const QuadraticSurd& rhs) const {
    const BigInt& d = (b_ != 0) ? d_ : rhs.d_;
    Aligned l = align_radical(d, a_, b_, c_, d_);
    Aligned r = align_radical(d, rhs.a_, rhs.b_, rhs.c_, rhs.d_);
    return make(l.a * r.c + r.a * l.c, l.b * r.c + r.b * l.c, l.c * r.c, d);
}

QuadraticSurd QuadraticSurd::operator-(const QuadraticSurd& rhs) const { return *this + (-rhs); }

QuadraticSurd QuadraticSurd::operator*(const QuadraticSurd& rhs) const {
    const BigInt& d = (b_ != 0) ? d_ : rhs.d_;
    Aligned l = align_radical(d, a_, b_, c_, d_);
    Aligned r = align_radical(d, rhs.a_, rhs.b_, rhs.c_, rhs.d_);
    return make(l.a * r.a + l.b * r.b * d, l.a * r.b + l.b * r.a, l.c * r.c, d);
}

QuadraticSurd QuadraticSurd::inverse() const {
    // 1/((a + b*sqrt(d))/c) = c*(a - b*sqrt(d)) / (a^2 - b^2 d); the
    // divisor vanishes only when the value itself is zero.
    BigInt norm = a_ * a_ - b_ * b_ * d_;
    if (norm == 0) throw std::domain_error("inverse of zero");
    return make(c_ * a_, -c_ * b_, norm, d_);
}

int QuadraticSurd::compare(const QuadraticSurd& rhs) const {
    // Sign of (a1 c2 - a2 c1) + b1 c2 sqrt(d1) - b2 c1 sqrt(d2); both
    // denominators are positive.
    return sign_with_two_radicals(a_ * rhs.c_ - rhs.a_ * c_, b_ * rhs.c_, d_, -rhs.b_ * c_, rhs.d_);
}

std::string QuadraticSurd::to_string() const {
    if (is_rational()) return Rational(a_, c_).to_string();
    std::ostringstream out;
    bool wrap = a_ != 0 && c_ != 1;
    if (wrap) out << "(";
    if (a_ != 0) out << a_.str();
    if (b_ == 1)
        out << (a_ != 0 ? "+" : "");
    else if (b_ == -1)
        out << "-";
    else
        out << (a_ != 0 && b_ > 0 ? "+" : "") << b_.str() << "*";
    out << "sqrt(" << d_.str() << ")";
    if (wrap) out << ")";
    if (c_ != 1) out << "/" << c_.str();
    return out.str();
}

std::string QuadraticSurd::decimal(std::size_t digits) const {
    if (sign_with_radical(a_, b_, d_) < 0) return "-" + (-*this).decimal(digits);
    // Work at digits + 10 guard places, then truncate. The value is
    // either rational (exact division) or irrational (never exactly a
    // decimal boundary), so the guard digits cannot flip the output.
    const std::size_t guard = 10;
    BigInt scale = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(digits + guard));
    BigInt scaled;
    if (b_ == 0) {
        scaled = floor_div(a_ * scale, c_);
    } else {
        BigInt rad = isqrt(b_ * b_ * d_ * scale * scale);
        if (b_ < 0) rad = -rad - 1;
        scaled = floor_div(a_ * scale + rad, c_);
    }
    BigInt cut = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(guard));
    scaled /= cut;
    BigInt ten_d = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(digits));
    BigInt ip = scaled / ten_d, fp = scaled % ten_d;
    std::string frac = fp.str();
    frac.insert(frac.begin(), digits - frac.size(), '0');
    return ip.str() + "." + frac;
}

double QuadraticSurd::to_double() const {
    double a = a_.convert_to<double>();
    double b = b_.convert_to<double>();
    double c = c_.convert_to<double>();
    double d = d_.convert_to<double>();
    return (a + b * std::sqrt(d)) / c;
}

}  // namespace chrlab
