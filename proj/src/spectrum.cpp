#include "chrlab/spectrum.hpp"

#include <algorithm>
#include <stdexcept>

namespace chrlab {

namespace {

std::int64_t pos_mod(std::int64_t i, std::int64_t m) {
    std::int64_t r = i % m;
    return r < 0 ? r + m : r;
}

void check_entries(const std::vector<std::int64_t>& entries, const char* what) {
    for (std::int64_t e : entries)
        if (e < 1) throw std::invalid_argument(std::string(what) + " entries must be >= 1");
}

struct Mat {
    BigInt a = 1, b = 0, c = 0, d = 1;  // [[a, b], [c, d]]
};

Mat fold(const std::vector<std::int64_t>& terms) {
    Mat m;
    for (std::int64_t t : terms) {
        // m *= [[t, 1], [1, 0]]
        Mat n;
        n.a = m.a * t + m.b;
        n.b = m.a;
        n.c = m.c * t + m.d;
        n.d = m.c;
        m = n;
    }
    return m;
}

}  // namespace

QuadraticSurd cf_value(const PartialQuotients& q) {
    check_entries(q.preperiod, "preperiod");
    check_entries(q.period, "period");
    // K = [[0,1],[1,0]] * product of preperiod matrices.
    Mat pre = fold(q.preperiod);
    BigInt k00 = pre.c, k01 = pre.d, k10 = pre.a, k11 = pre.b;
    if (q.period.empty()) return QuadraticSurd(Rational(k00, k10));

    // Purely periodic tail y = [0; period, period, ...]: with M the
    // period's matrix product, y solves M01 y^2 + (M00 - M11) y - M10 = 0
    // and is the root in (0, 1).
    Mat m = fold(q.period);
    BigInt disc = (m.a - m.d) * (m.a - m.d) + 4 * m.b * m.c;
    QuadraticSurd y = QuadraticSurd::make(m.d - m.a, 1, 2 * m.b, disc);
    if (!(QuadraticSurd(0) < y) || !(y < QuadraticSurd(1)))
        throw std::domain_error("periodic tail does not solve to a value in (0,1)");

    // Splicing the tail behind the preperiod: the remainder t satisfies
    // t = 1/y, so the value is (K00 + K01 y) / (K10 + K11 y).
    QuadraticSurd num = QuadraticSurd(Rational(k00, 1)) + QuadraticSurd(Rational(k01, 1)) * y;
    QuadraticSurd den = QuadraticSurd(Rational(k10, 1)) + QuadraticSurd(Rational(k11, 1)) * y;
    return num * den.inverse();
}

ValuedSequence ValuedSequence::periodic(std::vector<std::int64_t> period, std::int64_t phase) {
    if (period.empty()) throw std::invalid_argument("period must be non-empty");
    check_entries(period, "period");
    ValuedSequence s;
    s.kind_ = Kind::Periodic;
    s.period_ = std::move(period);
    s.phase_ = phase;
    return s;
}

ValuedSequence ValuedSequence::doubly_periodic(std::vector<std::int64_t> left,
                                               std::vector<std::int64_t> center,
                                               std::vector<std::int64_t> right) {
    if (left.empty() || right.empty())
        throw std::invalid_argument("doubly periodic sequence needs non-empty periods");
    check_entries(left, "left period");
    check_entries(center, "center");
    check_entries(right, "right period");
    ValuedSequence s;
    s.kind_ = Kind::Doubly;
    s.left_ = std::move(left);
    s.center_ = std::move(center);
    s.right_ = std::move(right);
    return s;
}

std::int64_t ValuedSequence::at(std::int64_t i) const {
    if (kind_ == Kind::Periodic) {
        auto P = static_cast<std::int64_t>(period_.size());
        return period_[static_cast<std::size_t>(pos_mod(i - phase_, P))];
    }
    auto C = static_cast<std::int64_t>(center_.size());
    if (i >= 0 && i < C) return center_[static_cast<std::size_t>(i)];
    if (i >= C) {
        auto R = static_cast<std::int64_t>(right_.size());
        return right_[static_cast<std::size_t>((i - C) % R)];
    }
    auto L = static_cast<std::int64_t>(left_.size());
    return left_[static_cast<std::size_t>(pos_mod(i, L))];
}

Valuation Valuation::identity(std::int64_t a_value, std::int64_t b_value) {
    if (a_value == b_value) throw std::invalid_argument("identity valuation needs distinct values");
    if (a_value < 1 || b_value < 1) throw std::invalid_argument("valuation values must be >= 1");
    return Valuation{Kind::Identity, a_value, b_value};
}

std::vector<std::int64_t> apply_valuation(const Word& w, const Valuation& v) {
    std::vector<std::int64_t> out;
    out.reserve(w.size() * (v.kind == Valuation::Kind::Double ? 2 : 1));
    for (std::size_t i = 0; i < w.size(); ++i) {
        bool is_a = w.at(i) == Letter::A;
        if (v.kind == Valuation::Kind::Double) {
            std::int64_t e = is_a ? 1 : 2;
            out.push_back(e);
            out.push_back(e);
        } else {
            out.push_back(is_a ? v.a_value : v.b_value);
        }
    }
    return out;
}

ValuedSequence apply_valuation(const BiInfiniteWord& s, const Valuation& v) {
    if (const auto* rep = std::get_if<PeriodicRep>(&s.rep())) {
        auto P = static_cast<std::int64_t>(rep->period.size());
        return ValuedSequence::periodic(apply_valuation(s.window(0, P), v), 0);
    }
    if (const auto* rep = std::get_if<DoublyPeriodicRep>(&s.rep())) {
        return ValuedSequence::doubly_periodic(apply_valuation(rep->left_period, v),
                                               apply_valuation(rep->center, v),
                                               apply_valuation(rep->right_period, v));
    }
    if (const auto* rep = std::get_if<SplicedRep>(&s.rep())) {
        if (rep->tail.is_periodic()) {
            return ValuedSequence::doubly_periodic(
                apply_valuation(reverse(rep->tail.period()), v),
                apply_valuation(Word(rep->x) + rep->y, v),
                apply_valuation(rep->tail.period(), v));
        }
    }
    throw std::domain_error("valuation requires eventually periodic tails on both sides");
}

namespace {

// Partial quotients of [0; s_{i+1}, s_{i+2}, ...].
PartialQuotients right_tail(const ValuedSequence& s, std::int64_t i) {
    PartialQuotients q;
    if (s.is_periodic()) {
        auto P = static_cast<std::int64_t>(s.period().size());
        for (std::int64_t k = 1; k <= P; ++k) q.period.push_back(s.at(i + k));
        return q;
    }
    auto C = static_cast<std::int64_t>(s.center().size());
    auto R = static_cast<std::int64_t>(s.right().size());
    std::int64_t j = i + 1;
    while (j < C || (j - C) % R != 0) {
        q.preperiod.push_back(s.at(j));
        ++j;
    }
    q.period = s.right();
    return q;
}

// Partial quotients of [0; s_{i-1}, s_{i-2}, ...].
PartialQuotients left_tail(const ValuedSequence& s, std::int64_t i) {
    PartialQuotients q;
    if (s.is_periodic()) {
        auto P = static_cast<std::int64_t>(s.period().size());
        for (std::int64_t k = 1; k <= P; ++k) q.period.push_back(s.at(i - k));
        return q;
    }
    auto L = static_cast<std::int64_t>(s.left().size());
    std::int64_t j = i - 1;
    while (j >= 0 || pos_mod(j, L) != L - 1) {
        q.preperiod.push_back(s.at(j));
        --j;
    }
    q.period.assign(s.left().rbegin(), s.left().rend());
    return q;
}

}  // namespace

QuadraticSurd lambda_value(const ValuedSequence& s, std::int64_t i) {
    return QuadraticSurd(s.at(i)) + cf_value(right_tail(s, i)) + cf_value(left_tail(s, i));
}

QuadraticSurd lambda_supremum(const ValuedSequence& s) {
    if (s.is_periodic()) {
        auto P = static_cast<std::int64_t>(s.period().size());
        QuadraticSurd best = lambda_value(s, 0);
        for (std::int64_t i = 1; i < P; ++i) {
            QuadraticSurd v = lambda_value(s, i);
            if (best < v) best = v;
        }
        return best;
    }
    auto L = static_cast<std::int64_t>(s.left().size());
    auto C = static_cast<std::int64_t>(s.center().size());
    auto R = static_cast<std::int64_t>(s.right().size());
    QuadraticSurd best = lambda_supremum(ValuedSequence::periodic(s.left()));
    QuadraticSurd right_regime = lambda_supremum(ValuedSequence::periodic(s.right()));
    if (best < right_regime) best = right_regime;
    for (std::int64_t i = -L; i < C + R; ++i) {
        QuadraticSurd v = lambda_value(s, i);
        if (best < v) best = v;
    }
    return best;
}

ThreeComparison compare_with_three(const QuadraticSurd& v) {
    int c = v.compare(QuadraticSurd(3));
    if (c < 0) return ThreeComparison::Less;
    if (c > 0) return ThreeComparison::Greater;
    return ThreeComparison::Equal;
}

std::string to_string(ThreeComparison c) {
    switch (c) {
        case ThreeComparison::Less: return "less";
        case ThreeComparison::Equal: return "equal";
        default: return "greater";
    }
}

SpectrumReport spectrum_report(const ValuedSequence& s) {
    SpectrumReport report;
    const QuadraticSurd three(3);
    if (s.is_periodic()) {
        auto P = static_cast<std::int64_t>(s.period().size());
        for (std::int64_t i = 0; i < P; ++i) report.rows.push_back({i, lambda_value(s, i)});
        report.notes.push_back("periodic: indices 0.." + std::to_string(P - 1) +
                               " repeat over every period");
    } else {
        auto L = static_cast<std::int64_t>(s.left().size());
        auto C = static_cast<std::int64_t>(s.center().size());
        auto R = static_cast<std::int64_t>(s.right().size());
        for (std::int64_t i = -L; i < C + R; ++i) report.rows.push_back({i, lambda_value(s, i)});
        QuadraticSurd left_regime = lambda_supremum(ValuedSequence::periodic(s.left()));
        QuadraticSurd right_regime = lambda_supremum(ValuedSequence::periodic(s.right()));
        report.notes.push_back("left tail regime value " + left_regime.to_string() + " ~ " +
                               left_regime.decimal(30));
        report.notes.push_back("right tail regime value " + right_regime.to_string() + " ~ " +
                               right_regime.decimal(30));
    }
    report.supremum = lambda_supremum(s);
    report.versus_three = compare_with_three(report.supremum);
    for (const auto& row : report.rows)
        if (row.lambda.compare(three) == 0) ++report.indices_at_three;
    return report;
}

}  // namespace chrlab
