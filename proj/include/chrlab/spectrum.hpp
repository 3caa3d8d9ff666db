// spectrum.hpp -- exact two-sided continued-fraction quantities over
// bi-infinite sequences of positive integers.

#pragma once

#include "chrlab/biinfinite.hpp"
#include "chrlab/surd.hpp"
#include "chrlab/word.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace chrlab {

/// An eventually periodic simple continued fraction with leading
/// integer part 0: [0; e1, e2, ...] where the entries e are the
/// preperiod followed by the period repeated forever. All entries must
/// be >= 1. An empty period denotes a finite (rational) expansion.
struct PartialQuotients {
    std::vector<std::int64_t> preperiod;
    std::vector<std::int64_t> period;
};

/// Exact value of the expansion. Purely periodic tails solve the fixed
/// point of the period's convergent matrix, taking the root in (0, 1);
/// finite expansions yield rationals.
QuadraticSurd cf_value(const PartialQuotients& q);

/// A bi-infinite sequence of positive integers with a periodic or
/// doubly-eventually-periodic description; the index conventions match
/// BiInfiniteWord.
class ValuedSequence {
public:
    static ValuedSequence periodic(std::vector<std::int64_t> period, std::int64_t phase = 0);
    static ValuedSequence doubly_periodic(std::vector<std::int64_t> left,
                                          std::vector<std::int64_t> center,
                                          std::vector<std::int64_t> right);

    std::int64_t at(std::int64_t i) const;
    bool is_periodic() const { return kind_ == Kind::Periodic; }
    const std::vector<std::int64_t>& period() const { return period_; }
    const std::vector<std::int64_t>& left() const { return left_; }
    const std::vector<std::int64_t>& center() const { return center_; }
    const std::vector<std::int64_t>& right() const { return right_; }

private:
    enum class Kind { Periodic, Doubly };
    Kind kind_ = Kind::Periodic;
    std::vector<std::int64_t> period_;  // Periodic
    std::int64_t phase_ = 0;
    std::vector<std::int64_t> left_, center_, right_;  // Doubly
};

/// Letterwise valuation of {a,b}-words into positive integers: either
/// the doubling substitution a -> 1,1 / b -> 2,2 or a plain relabeling
/// with two distinct values.
struct Valuation {
    enum class Kind { Double, Identity };
    Kind kind = Kind::Double;
    std::int64_t a_value = 1;
    std::int64_t b_value = 2;

    static Valuation doubling() { return Valuation{}; }
    static Valuation identity(std::int64_t a_value, std::int64_t b_value);
};

std::vector<std::int64_t> apply_valuation(const Word& w, const Valuation& v);

/// Valuation of a finitely described bi-infinite word. Periodic,
/// doubly periodic, and periodic-tail splices are supported; line-backed
/// words are rejected (their tails are not eventually periodic).
ValuedSequence apply_valuation(const BiInfiniteWord& s, const Valuation& v);

/// s_i + [0; s_{i+1}, s_{i+2}, ...] + [0; s_{i-1}, s_{i-2}, ...],
/// evaluated exactly.
QuadraticSurd lambda_value(const ValuedSequence& s, std::int64_t i);

/// Supremum of lambda_value over all indices: a maximum over one period
/// for periodic sequences; for doubly periodic ones, the maximum over
/// the center widened by one period per side together with the two
/// pure-tail regime values.
QuadraticSurd lambda_supremum(const ValuedSequence& s);

enum class ThreeComparison { Less, Equal, Greater };

ThreeComparison compare_with_three(const QuadraticSurd& v);
std::string to_string(ThreeComparison c);

struct SpectrumRow {
    std::int64_t index;
    QuadraticSurd lambda;
};

struct SpectrumReport {
    std::vector<SpectrumRow> rows;  // representative indices, ascending
    QuadraticSurd supremum;
    ThreeComparison versus_three = ThreeComparison::Less;
    std::size_t indices_at_three = 0;  // among the representative rows
    std::vector<std::string> notes;
};

SpectrumReport spectrum_report(const ValuedSequence& s);

}  // namespace chrlab
