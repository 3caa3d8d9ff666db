// christoffel.hpp -- lattice paths hugging a segment or line, the
// words they spell, central words, and cutting-sequence windows for
// rational and continued-fraction slopes.

#pragma once

#include "chrlab/rational.hpp"
#include "chrlab/word.hpp"

#include <cstdint>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

namespace chrlab {

/// Reduced slope q/p of a guiding segment: p horizontal unit steps and
/// q vertical unit steps, gcd(p, q) = 1, (p, q) != (0, 0).
struct Slope {
    std::int64_t p;
    std::int64_t q;
    Slope(std::int64_t p, std::int64_t q);
};

enum class Step : char { Right = 'a', Up = 'b' };
enum class PathSide { Lower, Upper };

struct Point {
    std::int64_t x = 0;
    std::int64_t y = 0;
    bool operator==(const Point&) const = default;
};

/// A unit-step staircase path in the integer lattice.
struct LatticePath {
    Point start;
    std::vector<Step> steps;

    /// All visited points, start first; size() == steps.size() + 1.
    std::vector<Point> points() const;

    /// Encodes Right as 'a' and Up as 'b'.
    Word word() const;
};

/// The word spelled by the path from (0,0) to (p,q) that hugs the
/// segment from below without enclosing lattice points.
Word lower_christoffel(const Slope& s);

/// Same construction hugging the segment from above.
Word upper_christoffel(const Slope& s);

/// The hugging path itself. Built column by column from floor (or
/// ceiling) heights, independently of the modular-arithmetic word
/// construction.
LatticePath christoffel_path(const Slope& s, PathSide side);

/// Interior of the lower word of slope s: lower_christoffel(s) with
/// its first and last letters removed. Requires p >= 1 and q >= 1.
Word central_of(const Slope& s);

/// True iff both awb and bwa are balanced.
bool is_central(const Word& w);

/// True iff w is "a", "b", or a word amb / bma with m central.
bool is_christoffel(const Word& w);

/// All central words of length n, by exhaustive search over 2^n
/// candidates. Refuses n > bound.
std::set<Word> enumerate_central(std::size_t n, std::size_t bound = 20);

/// Slope of a guiding line: an exact rational q/p (p >= 1, q >= 0,
/// coprime), or an irrational number given by a finite prefix
/// t0, t1, t2, ... of its simple continued fraction [t0; t1, t2, ...]
/// (t0 >= 0, all later terms >= 1). A prefix stands for the full,
/// never-terminating expansion of some irrational; operations that
/// cannot resolve a value from the prefix alone throw
/// insufficient_precision rather than rounding.
class LineSlope {
public:
    static LineSlope rational(std::int64_t p, std::int64_t q);
    static LineSlope continued_fraction(std::vector<std::int64_t> terms);

    bool is_rational() const { return rational_; }
    const Rational& value() const;  // rational case only
    const std::vector<std::int64_t>& terms() const { return cf_terms_; }

    /// Copy with additional partial quotients appended (irrational case).
    LineSlope extended(const std::vector<std::int64_t>& extra) const;

    /// An interval certain to contain the slope: a single point for the
    /// rational case, an open interval bracketed by the last convergent
    /// and the next mediant otherwise.
    std::pair<Rational, Rational> bounds() const;

private:
    LineSlope() = default;
    bool rational_ = true;
    Rational value_;
    std::vector<std::int64_t> cf_terms_;
};

/// A line y = slope * x + intercept. Intercepts are exact rationals.
struct LineSpec {
    LineSlope slope;
    Rational intercept;
};

/// Thrown when a continued-fraction prefix is too short to decide a
/// floor. suggested_extra_terms estimates how many further partial
/// quotients would settle the value.
class insufficient_precision : public std::runtime_error {
public:
    insufficient_precision(const std::string& what, int extra)
        : std::runtime_error(what), suggested_extra_terms(extra) {}
    int suggested_extra_terms;
};

/// Letter of the staircase hugging the line from the given side at
/// step index i. Exact; throws insufficient_precision when the slope
/// prefix cannot decide the step.
Letter cutting_letter(const LineSpec& line, std::int64_t i, PathSide hug = PathSide::Lower);

/// cutting_letter over the half-open index range [from, to).
Word mechanical_window(const LineSpec& line, std::int64_t from, std::int64_t to);

}  // namespace chrlab
