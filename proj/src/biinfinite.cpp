#include "chrlab/biinfinite.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>

namespace chrlab {

namespace {

std::int64_t pos_mod(std::int64_t i, std::int64_t m) {
    std::int64_t r = i % m;
    return r < 0 ? r + m : r;
}

}  // namespace

RightTail RightTail::periodic(Word period) {
    if (period.empty()) throw std::invalid_argument("tail period must be non-empty");
    RightTail t;
    t.kind_ = Kind::Periodic;
    t.period_ = std::move(period);
    return t;
}

RightTail RightTail::line(LineSpec spec) {
    RightTail t;
    t.kind_ = Kind::Line;
    t.line_ = std::move(spec);
    return t;
}

Letter RightTail::at(std::int64_t k) const {
    if (kind_ == Kind::Periodic)
        return period_.at(static_cast<std::size_t>(pos_mod(k, static_cast<std::int64_t>(period_.size()))));
    return cutting_letter(line_, k, PathSide::Lower);
}

std::size_t RightTail::description_size() const {
    if (kind_ == Kind::Periodic) return period_.size();
    return line_.slope.terms().size() + 2;
}

BiInfiniteWord BiInfiniteWord::periodic(Word period, std::int64_t phase) {
    if (period.empty()) throw std::invalid_argument("period must be non-empty");
    return BiInfiniteWord(PeriodicRep{std::move(period), phase});
}

BiInfiniteWord BiInfiniteWord::spliced(RightTail tail, Letter x, Letter y) {
    if (x == y) throw std::invalid_argument("splice letters must differ");
    return BiInfiniteWord(SplicedRep{std::move(tail), x, y});
}

BiInfiniteWord BiInfiniteWord::doubly_periodic(Word left, Word center, Word right) {
    if (left.empty() || right.empty())
        throw std::invalid_argument("doubly periodic word needs non-empty periods on both sides");
    return BiInfiniteWord(DoublyPeriodicRep{std::move(left), std::move(center), std::move(right)});
}

BiInfiniteWord BiInfiniteWord::line_cut(LineSpec line) {
    if (line.slope.is_rational())
        throw std::invalid_argument("line cut over all indices requires an irrational slope");
    return BiInfiniteWord(LineCutRep{std::move(line), 0, PathSide::Lower});
}

Letter BiInfiniteWord::at(std::int64_t i) const {
    return std::visit(
        [i](const auto& rep) -> Letter {
            using T = std::decay_t<decltype(rep)>;
            if constexpr (std::is_same_v<T, PeriodicRep>) {
                auto P = static_cast<std::int64_t>(rep.period.size());
                return rep.period.at(static_cast<std::size_t>(pos_mod(i - rep.phase, P)));
            } else if constexpr (std::is_same_v<T, SplicedRep>) {
                if (i == 0) return rep.x;
                if (i == 1) return rep.y;
                if (i >= 2) return rep.tail.at(i - 2);
                return rep.tail.at(-i - 1);
            } else if constexpr (std::is_same_v<T, DoublyPeriodicRep>) {
                auto C = static_cast<std::int64_t>(rep.center.size());
                if (i >= 0 && i < C) return rep.center.at(static_cast<std::size_t>(i));
                if (i >= C) {
                    auto R = static_cast<std::int64_t>(rep.right_period.size());
                    return rep.right_period.at(static_cast<std::size_t>((i - C) % R));
                }
                auto L = static_cast<std::int64_t>(rep.left_period.size());
                return rep.left_period.at(static_cast<std::size_t>(pos_mod(i, L)));
            } else {
                return cutting_letter(rep.line, i + rep.offset, rep.hug);
            }
        },
        rep_);
}

Word BiInfiniteWord::window(std::int64_t from, std::int64_t to) const {
    if (from > to) throw std::invalid_argument("window range must satisfy from <= to");
    std::string text;
    text.reserve(static_cast<std::size_t>(to - from));
    for (std::int64_t i = from; i < to; ++i) text.push_back(to_char(at(i)));
    return Word(text);
}

std::size_t BiInfiniteWord::description_size() const {
    return std::visit(
        [](const auto& rep) -> std::size_t {
            using T = std::decay_t<decltype(rep)>;
            if constexpr (std::is_same_v<T, PeriodicRep>) {
                return rep.period.size();
            } else if constexpr (std::is_same_v<T, SplicedRep>) {
                return 2 + rep.tail.description_size();
            } else if constexpr (std::is_same_v<T, DoublyPeriodicRep>) {
                return rep.left_period.size() + rep.center.size() + rep.right_period.size();
            } else {
                return rep.line.slope.terms().size() + 2;
            }
        },
        rep_);
}

CutVerdict markoff_scan_at_cut(const BiInfiniteWord& s, std::int64_t j, std::size_t max_radius) {
    Letter x = s.at(j);
    Letter y = s.at(j + 1);
    if (x == y) throw std::domain_error("no cut at index " + std::to_string(j));
    for (std::int64_t k = 1; k <= static_cast<std::int64_t>(max_radius); ++k) {
        Letter u = s.at(j - k);
        Letter v = s.at(j + 1 + k);
        if (u == v) continue;
        if (u == y && v == x) return CutVerdict{CutVerdictKind::Holds, j, Word()};
        return CutVerdict{CutVerdictKind::FailsAt, j, s.window(j + 2, j + k + 1)};
    }
    return CutVerdict{CutVerdictKind::Inconclusive, j, Word()};
}

namespace {

// First violated cut of period^inf, if any. Scans each cut in one
// period with radius 2P+2; surviving the radius certifies equality of
// the two sides, because period-P sequences agreeing on P consecutive
// positions agree everywhere.
std::optional<CutVerdict> periodic_violation(const Word& period) {
    if (period.empty()) throw std::invalid_argument("period must be non-empty");
    auto s = BiInfiniteWord::periodic(period);
    auto P = static_cast<std::int64_t>(period.size());
    for (std::int64_t j = 0; j < P; ++j) {
        if (s.at(j) == s.at(j + 1)) continue;
        CutVerdict v = markoff_scan_at_cut(s, j, static_cast<std::size_t>(2 * P + 2));
        if (v.kind == CutVerdictKind::FailsAt) return v;
    }
    return std::nullopt;
}

}  // namespace

bool satisfies_markoff_periodic(const Word& period) { return !periodic_violation(period).has_value(); }

std::vector<std::pair<std::size_t, Word>> forbidden_factor_scan(const Word& w) {
    std::vector<std::pair<std::size_t, Word>> hits;
    const std::string& s = w.str();
    const std::size_t n = s.size();
    for (std::size_t pos = 0; pos + 4 <= n; ++pos) {
        for (std::size_t t = 0; pos + 2 * t + 4 <= n; ++t) {
            char x = s[pos];
            if (s[pos + t + 1] != x) continue;
            char y = s[pos + t + 2];
            if (y == x) continue;
            if (s[pos + 2 * t + 3] != y) continue;
            bool mirrored = true;
            for (std::size_t r = 0; r < t; ++r) {
                if (s[pos + t - r] != s[pos + t + 3 + r]) {
                    mirrored = false;
                    break;
                }
            }
            if (mirrored) hits.emplace_back(pos, Word(s.substr(pos + t + 3, t)));
        }
    }
    return hits;
}

bool is_balanced_periodic(const Word& period) {
    if (period.empty()) throw std::invalid_argument("period must be non-empty");
    const std::size_t P = period.size();
    // Window lengths beyond P add whole periods to every window, which
    // shifts all 'a'-counts equally; lengths 1..P over all phases decide.
    std::string tiled = period.str() + period.str();
    std::vector<std::size_t> pre(tiled.size() + 1, 0);
    for (std::size_t i = 0; i < tiled.size(); ++i) pre[i + 1] = pre[i] + (tiled[i] == 'a' ? 1 : 0);
    for (std::size_t len = 1; len <= P; ++len) {
        std::size_t lo = len + 1, hi = 0;
        for (std::size_t phase = 0; phase < P; ++phase) {
            std::size_t c = pre[phase + len] - pre[phase];
            lo = std::min(lo, c);
            hi = std::max(hi, c);
        }
        if (hi - lo > 1) return false;
    }
    return true;
}

std::set<Word> markoff_factors(const Word& w) {
    std::set<Word> cores;
    const std::string& s = w.str();
    const std::size_t n = s.size();
    for (std::size_t pos = 0; pos + 4 <= n; ++pos) {
        for (std::size_t t = 0; pos + 2 * t + 4 <= n; ++t) {
            char y = s[pos];
            char x = s[pos + t + 1];
            if (x == y) continue;
            if (s[pos + t + 2] != y) continue;
            if (s[pos + 2 * t + 3] != x) continue;
            bool mirrored = true;
            for (std::size_t r = 0; r < t; ++r) {
                if (s[pos + t - r] != s[pos + t + 3 + r]) {
                    mirrored = false;
                    break;
                }
            }
            if (mirrored) cores.insert(Word(s.substr(pos + t + 3, t)));
        }
    }
    return cores;
}

bool is_markoff_word(const Word& m) {
    Word period = Letter::A + m + Letter::B;
    if (!satisfies_markoff_periodic(period)) return false;
    auto s = BiInfiniteWord::periodic(period);
    Word win = s.window(0, static_cast<std::int64_t>(4 * (m.size() + 2)));
    return markoff_factors(win).count(m) > 0;
}

BiInfiniteWord spliced_b4(const Word& m, Letter x, Letter y) {
    if (x == y) throw std::invalid_argument("the two letters must differ");
    if (!is_markoff_word(m))
        throw std::domain_error("\"" + m.str() + "\" does not embed as a scan core: construction undefined");
    return BiInfiniteWord::doubly_periodic(y + m + x, y + m + y, x + m + y);
}

BiInfiniteWord xxyxx_form(Letter x, Letter y) {
    if (x == y) throw std::invalid_argument("the two letters must differ");
    return BiInfiniteWord::doubly_periodic(Word(x), Word(y), Word(x));
}

BiInfiniteWord reversal(const BiInfiniteWord& s) {
    return std::visit(
        [](const auto& rep) -> BiInfiniteWord {
            using T = std::decay_t<decltype(rep)>;
            if constexpr (std::is_same_v<T, PeriodicRep>) {
                return BiInfiniteWord::periodic(reverse(rep.period), 1 - rep.phase);
            } else if constexpr (std::is_same_v<T, SplicedRep>) {
                return BiInfiniteWord::spliced(rep.tail, rep.y, rep.x);
            } else if constexpr (std::is_same_v<T, DoublyPeriodicRep>) {
                return BiInfiniteWord::doubly_periodic(reverse(rep.right_period), reverse(rep.center),
                                                       reverse(rep.left_period));
            } else {
                LineCutRep out = rep;
                out.line.intercept = -rep.line.intercept;
                out.offset = -rep.offset - 1;
                out.hug = rep.hug == PathSide::Lower ? PathSide::Upper : PathSide::Lower;
                return BiInfiniteWord(BiInfiniteWord::Rep(std::move(out)));
            }
        },
        s.rep());
}

std::string to_string(WordClass c) {
    switch (c) {
        case WordClass::M1: return "M1";
        case WordClass::M2: return "M2";
        case WordClass::M3: return "M3";
        default: return "M4";
    }
}

namespace {

// Scans every cut in [-span/2, span/2) with the given radius and throws
// on any violation. Inconclusive scans are acceptable here: a window
// cannot certify the condition globally, only refute it.
void window_condition_check(const BiInfiniteWord& s, std::size_t span, std::size_t radius,
                            std::vector<std::string>& evidence) {
    std::int64_t lo = -static_cast<std::int64_t>(span) / 2;
    std::int64_t hi = lo + static_cast<std::int64_t>(span);
    std::size_t cuts = 0;
    for (std::int64_t j = lo; j + 1 < hi; ++j) {
        if (s.at(j) == s.at(j + 1)) continue;
        ++cuts;
        CutVerdict v = markoff_scan_at_cut(s, j, radius);
        if (v.kind == CutVerdictKind::FailsAt)
            throw std::domain_error("cut condition violated at index " + std::to_string(j) +
                                    " (witness core \"" + v.witness_m.str() + "\")");
    }
    evidence.push_back("window check: " + std::to_string(cuts) + " cuts scanned over [" +
                       std::to_string(lo) + "," + std::to_string(hi) + ") at radius " +
                       std::to_string(radius) + ", no violation");
}

ClassLabel classify_periodic(const PeriodicRep& rep, std::vector<std::string> evidence) {
    if (auto v = periodic_violation(rep.period))
        throw std::domain_error("periodic word fails the cut condition at index " +
                                std::to_string(v->cut_index) + " (witness core \"" +
                                v->witness_m.str() + "\")");
    auto P = static_cast<std::int64_t>(rep.period.size());
    auto s = BiInfiniteWord::periodic(rep.period, rep.phase);
    evidence.push_back("exact periodic condition check passed (radius " + std::to_string(2 * P + 2) +
                       " at each cut)");
    std::vector<std::int64_t> mirrors;
    for (std::int64_t j = 0; j < P; ++j) {
        if (s.at(j) == s.at(j + 1)) continue;
        bool mirror = true;
        // Both sides are P-periodic, so agreement over P positions is
        // agreement everywhere.
        for (std::int64_t k = 1; k <= P; ++k) {
            if (s.at(j - k) != s.at(j + 1 + k)) {
                mirror = false;
                break;
            }
        }
        if (mirror) mirrors.push_back(j);
    }
    if (mirrors.empty()) {
        evidence.push_back("no mirror cut within one period (exact for periodic words)");
        evidence.push_back("periodicity bounds the lengths of occurring cores");
        return ClassLabel{WordClass::M1, std::move(evidence)};
    }
    evidence.push_back("mirror cut at index " + std::to_string(mirrors.front()) +
                       " recurs every period: at least two mirror cuts exist");
    return ClassLabel{WordClass::M4, std::move(evidence)};
}

ClassLabel classify_doubly(const DoublyPeriodicRep& rep, std::size_t span, std::size_t radius,
                           std::vector<std::string> evidence) {
    auto s = BiInfiniteWord::doubly_periodic(rep.left_period, rep.center, rep.right_period);
    window_condition_check(s, span, radius, evidence);
    auto L = static_cast<std::int64_t>(rep.left_period.size());
    auto C = static_cast<std::int64_t>(rep.center.size());
    auto R = static_cast<std::int64_t>(rep.right_period.size());
    std::int64_t T = std::lcm(L, R);

    // Degenerate case: the description may spell a globally periodic
    // word. Any global period divides into L on the left tail, so
    // T-periodicity over the certification range decides it.
    bool periodic = true;
    for (std::int64_t i = -(2 * T + L + C); i < C + 2 * T + R && periodic; ++i)
        periodic = s.at(i) == s.at(i + T);
    if (periodic) {
        evidence.push_back("description is globally periodic with period " + std::to_string(T));
        return classify_periodic(PeriodicRep{s.window(0, T), 0}, std::move(evidence));
    }

    std::vector<std::int64_t> mirrors;
    for (std::int64_t j = -(2 * L + C + 2); j <= C + 2 * R + 2; ++j) {
        if (s.at(j) == s.at(j + 1)) continue;
        // Both sides of the cut are eventually periodic; agreement over
        // the preperiods plus one common period certifies equality.
        std::int64_t settle_left = std::max<std::int64_t>(1, j + 1);
        std::int64_t settle_right = std::max<std::int64_t>(1, C - j - 1);
        std::int64_t certify = std::max(settle_left, settle_right) + T + 1;
        bool mirror = true;
        for (std::int64_t k = 1; k <= certify; ++k) {
            if (s.at(j - k) != s.at(j + 1 + k)) {
                mirror = false;
                break;
            }
        }
        if (mirror) mirrors.push_back(j);
    }
    if (mirrors.size() >= 2) {
        evidence.push_back("mirror cuts verified exactly at indices " + std::to_string(mirrors[0]) +
                           " and " + std::to_string(mirrors[1]));
        return ClassLabel{WordClass::M4, std::move(evidence)};
    }
    throw std::domain_error("two-sided representation exposes fewer than two mirror cuts");
}

}  // namespace

ClassLabel classify(const BiInfiniteWord& s, const ClassifyOptions& options) {
    std::size_t desc = s.description_size();
    std::size_t span = options.span ? options.span : 6 * desc;
    std::size_t radius = options.radius ? options.radius : 2 * desc + 2;
    return std::visit(
        [&](const auto& rep) -> ClassLabel {
            using T = std::decay_t<decltype(rep)>;
            std::vector<std::string> evidence;
            if constexpr (std::is_same_v<T, PeriodicRep>) {
                return classify_periodic(rep, std::move(evidence));
            } else if constexpr (std::is_same_v<T, DoublyPeriodicRep>) {
                return classify_doubly(rep, span, radius, std::move(evidence));
            } else if constexpr (std::is_same_v<T, SplicedRep>) {
                if (rep.tail.is_periodic()) {
                    // reverse(u) x y u with periodic u is doubly periodic:
                    // left period reverse(p), center xy, right period p.
                    evidence.push_back("splice over a periodic generator is doubly periodic");
                    DoublyPeriodicRep dep{reverse(rep.tail.period()),
                                          Word(rep.x) + rep.y, rep.tail.period()};
                    return classify_doubly(dep, span, radius, std::move(evidence));
                }
                window_condition_check(s, span, radius, evidence);
                evidence.push_back("mirror cut at index 0: both sides replay the generator");
                evidence.push_back("generator is a continued-fraction cutting sequence (aperiodic), "
                                   "so the mirror cut is unique by construction");
                return ClassLabel{WordClass::M3, std::move(evidence)};
            } else {
                window_condition_check(s, span, radius, evidence);
                if (rep.line.intercept.is_integer()) {
                    evidence.push_back("irrational slope with integer intercept: the line meets "
                                       "exactly one lattice point");
                    return ClassLabel{WordClass::M3, std::move(evidence)};
                }
                evidence.push_back("irrational slope with non-integer rational intercept: the line "
                                   "avoids every lattice point");
                return ClassLabel{WordClass::M2, std::move(evidence)};
            }
        },
        s.rep());
}

}  // namespace chrlab
