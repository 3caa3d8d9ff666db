#include "chrlab/christoffel.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace chrlab {

Slope::Slope(std::int64_t p_in, std::int64_t q_in) : p(p_in), q(q_in) {
    if (p < 0 || q < 0) throw std::invalid_argument("slope components must be non-negative");
    if (p == 0 && q == 0) throw std::invalid_argument("slope (0,0) is not allowed");
    if (std::gcd(p, q) != 1)
        throw std::invalid_argument("slope components must be coprime, gcd(" + std::to_string(p) +
                                    "," + std::to_string(q) + ") = " + std::to_string(std::gcd(p, q)));
}

std::vector<Point> LatticePath::points() const {
    std::vector<Point> pts;
    pts.reserve(steps.size() + 1);
    Point at = start;
    pts.push_back(at);
    for (Step s : steps) {
        if (s == Step::Right)
            ++at.x;
        else
            ++at.y;
        pts.push_back(at);
    }
    return pts;
}

Word LatticePath::word() const {
    std::string text;
    text.reserve(steps.size());
    for (Step s : steps) text.push_back(static_cast<char>(s));
    return Word(text);
}

Word lower_christoffel(const Slope& s) {
    if (s.q == 0) return Word("a");
    if (s.p == 0) return Word("b");
    const std::int64_t n = s.p + s.q;
    std::string text;
    text.reserve(static_cast<std::size_t>(n));
    // Letter i is 'a' exactly when i*q does not wrap past a multiple of
    // p+q, i.e. when the residue grows.
    for (std::int64_t i = 1; i <= n; ++i)
        text.push_back((i * s.q) % n > ((i - 1) * s.q) % n ? 'a' : 'b');
    return Word(text);
}

namespace {

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return (a + b - 1) / b; }

}  // namespace

Word upper_christoffel(const Slope& s) {
    if (s.q == 0) return Word("a");
    if (s.p == 0) return Word("b");
    const std::int64_t n = s.p + s.q;
    std::string text;
    text.reserve(static_cast<std::size_t>(n));
    for (std::int64_t i = 1; i <= n; ++i)
        text.push_back(ceil_div(i * s.q, n) > ceil_div((i - 1) * s.q, n) ? 'b' : 'a');
    return Word(text);
}

LatticePath christoffel_path(const Slope& s, PathSide side) {
    LatticePath path;
    if (s.p == 0) {
        path.steps.assign(static_cast<std::size_t>(s.q), Step::Up);
        return path;
    }
    // Column x of the lower path sits at height floor(x*q/p); the upper
    // path at ceil(x*q/p). Horizontal moves come first below the
    // segment and last above it.
    for (std::int64_t x = 0; x < s.p; ++x) {
        if (side == PathSide::Lower) {
            path.steps.push_back(Step::Right);
            std::int64_t rise = (x + 1) * s.q / s.p - x * s.q / s.p;
            for (std::int64_t r = 0; r < rise; ++r) path.steps.push_back(Step::Up);
        } else {
            std::int64_t rise = ceil_div((x + 1) * s.q, s.p) - ceil_div(x * s.q, s.p);
            for (std::int64_t r = 0; r < rise; ++r) path.steps.push_back(Step::Up);
            path.steps.push_back(Step::Right);
        }
    }
    return path;
}

Word central_of(const Slope& s) {
    if (s.p < 1 || s.q < 1)
        throw std::domain_error("central word requires p >= 1 and q >= 1");
    Word w = lower_christoffel(s);
    return w.subword(1, w.size() - 2);
}

bool is_central(const Word& w) {
    return is_balanced(Letter::A + w + Letter::B) && is_balanced(Letter::B + w + Letter::A);
}

bool is_christoffel(const Word& w) {
    if (w.size() == 1) return true;  // "a" and "b", the one-step paths
    if (w.size() < 2) return false;
    Letter first = w.at(0), last = w.at(w.size() - 1);
    if (first == last) return false;
    return is_central(w.subword(1, w.size() - 2));
}

std::set<Word> enumerate_central(std::size_t n, std::size_t bound) {
    if (n > bound)
        throw std::domain_error("enumeration bound exceeded: " + std::to_string(n) + " > " +
                                std::to_string(bound));
    std::set<Word> out;
    for (std::uint64_t index = 0; index < (std::uint64_t{1} << n); ++index) {
        Word w = word_from_index(n, index);
        if (is_central(w)) out.insert(w);
    }
    return out;
}

LineSlope LineSlope::rational(std::int64_t p, std::int64_t q) {
    if (p < 1) throw std::invalid_argument("rational line slope requires p >= 1");
    if (q < 0) throw std::invalid_argument("rational line slope requires q >= 0");
    if (std::gcd(p, q) != 1) throw std::invalid_argument("rational line slope requires gcd(p,q) = 1");
    LineSlope s;
    s.rational_ = true;
    s.value_ = Rational(BigInt(q), BigInt(p));
    return s;
}

LineSlope LineSlope::continued_fraction(std::vector<std::int64_t> terms) {
    if (terms.empty()) throw std::invalid_argument("continued-fraction slope needs at least one term");
    if (terms[0] < 0) throw std::invalid_argument("continued-fraction slope requires t0 >= 0");
    for (std::size_t i = 1; i < terms.size(); ++i)
        if (terms[i] < 1)
            throw std::invalid_argument("continued-fraction partial quotients after t0 must be >= 1");
    LineSlope s;
    s.rational_ = false;
    s.cf_terms_ = std::move(terms);
    return s;
}

const Rational& LineSlope::value() const {
    if (!rational_) throw std::domain_error("irrational slope has no exact rational value");
    return value_;
}

LineSlope LineSlope::extended(const std::vector<std::int64_t>& extra) const {
    if (rational_) throw std::domain_error("rational slope takes no extra terms");
    std::vector<std::int64_t> terms = cf_terms_;
    terms.insert(terms.end(), extra.begin(), extra.end());
    return continued_fraction(std::move(terms));
}

std::pair<Rational, Rational> LineSlope::bounds() const {
    if (rational_) return {value_, value_};
    // Convergents h/k of the prefix; the true value lies strictly
    // between the last convergent and the mediant with its predecessor,
    // because the remaining expansion contributes a remainder in (1, oo).
    BigInt h_prev = 1, k_prev = 0, h = cf_terms_[0], k = 1;
    for (std::size_t i = 1; i < cf_terms_.size(); ++i) {
        BigInt h_next = cf_terms_[i] * h + h_prev;
        BigInt k_next = cf_terms_[i] * k + k_prev;
        h_prev = h;
        k_prev = k;
        h = h_next;
        k = k_next;
    }
    Rational last(h, k);
    Rational mediant(h + h_prev, k + k_prev);
    if (last < mediant) return {last, mediant};
    return {mediant, last};
}

namespace {

Rational rational_ceil_as_value(const Rational& r) { return Rational(-(-r).floor(), BigInt(1)); }

// Approximate value of a non-negative rational; safe for components far
// beyond double range as long as the ratio itself is moderate.
double ratio_to_double(const Rational& r) {
    const double scale = 1e18;
    BigInt scaled = floor_div(r.num() * BigInt(1000000000000000000LL), r.den());
    return scaled.convert_to<double>() / scale;
}

// Value (slope*i + intercept)/(1 + slope) at a rational slope.
Rational event_value(const Rational& slope, const Rational& intercept, std::int64_t i) {
    return (slope * Rational(i) + intercept) / (Rational(1) + slope);
}

// Exact floor (hug = Lower) or ceiling (hug = Upper) of the event value
// at index i; for irrational slopes it is pinned between the values at
// the two slope bounds.
BigInt event_bound(const LineSpec& line, std::int64_t i, PathSide hug) {
    if (line.slope.is_rational()) {
        Rational v = event_value(line.slope.value(), line.intercept, i);
        return hug == PathSide::Lower ? v.floor() : -((-v).floor());
    }
    auto [lo, hi] = line.slope.bounds();
    Rational v_lo = event_value(lo, line.intercept, i);
    Rational v_hi = event_value(hi, line.intercept, i);
    if (v_hi < v_lo) std::swap(v_lo, v_hi);
    if (v_lo == v_hi) {
        // The value is independent of the slope: the line passes through
        // the lattice at this event. Exact either way.
        return hug == PathSide::Lower ? v_lo.floor() : -((-v_lo).floor());
    }
    // The true value lies strictly inside (v_lo, v_hi). Its floor and
    // ceiling are decided exactly when no integer lies strictly inside.
    BigInt next_int = v_lo.floor() + 1;
    if (Rational(next_int) < v_hi) {
        double width = ratio_to_double(v_hi - v_lo);
        double gap = std::min(ratio_to_double(Rational(next_int) - v_lo),
                              ratio_to_double(v_hi - Rational(next_int)));
        // Each extra partial quotient shrinks the slope interval by at
        // least the square of the golden ratio.
        double factor = width / std::max(gap / 4.0, width * 1e-12);
        int extra = std::max(2, static_cast<int>(std::ceil(std::log(factor) / (2.0 * std::log(1.618)))));
        throw insufficient_precision(
            "continued-fraction prefix too short to resolve the step at index " + std::to_string(i),
            std::min(extra, 64));
    }
    if (hug == PathSide::Lower) return v_lo.floor();
    return rational_ceil_as_value(v_hi).num();
}

}  // namespace

Letter cutting_letter(const LineSpec& line, std::int64_t i, PathSide hug) {
    BigInt here = event_bound(line, i, hug);
    BigInt next = event_bound(line, i + 1, hug);
    return next > here ? Letter::B : Letter::A;
}

Word mechanical_window(const LineSpec& line, std::int64_t from, std::int64_t to) {
    if (from > to) throw std::invalid_argument("window range must satisfy from <= to");
    std::string text;
    text.reserve(static_cast<std::size_t>(to - from));
    for (std::int64_t i = from; i < to; ++i)
        text.push_back(to_char(cutting_letter(line, i, PathSide::Lower)));
    return Word(text);
}

}  // namespace chrlab
