// biinfinite.hpp -- finitely represented bi-infinite words, exact and
// windowed scans for the cut condition, and the M1..M4 classification.

#pragma once

#include "chrlab/christoffel.hpp"
#include "chrlab/word.hpp"

#include <cstdint>
#include <set>
#include <string>
#include <variant>
#include <vector>

namespace chrlab {

/// Generator of a right-infinite word: either a repeated finite word or
/// the cutting sequence of a line, read from step index 0 upward.
class RightTail {
public:
    static RightTail periodic(Word period);
    static RightTail line(LineSpec spec);

    Letter at(std::int64_t k) const;  // k >= 0
    bool is_periodic() const { return kind_ == Kind::Periodic; }
    const Word& period() const { return period_; }
    const LineSpec& line_spec() const { return line_; }
    std::size_t description_size() const;
    std::string to_text() const;

private:
    enum class Kind { Periodic, Line };
    Kind kind_ = Kind::Periodic;
    Word period_;
    LineSpec line_{LineSlope::rational(1, 0), Rational(0)};
};

struct PeriodicRep {
    Word period;            // non-empty
    std::int64_t phase = 0; // letter at index i is period[(i - phase) mod |period|]
};

/// s = reverse(u) x y u with u generated by tail; x sits at index 0.
struct SplicedRep {
    RightTail tail;
    Letter x;
    Letter y;
};

/// left^inf to the left, center on [0, |center|), right^inf after.
struct DoublyPeriodicRep {
    Word left_period;
    Word center;
    Word right_period;
};

/// Cutting sequence of a line over all integer step indices. offset and
/// hug keep the family closed under reversal: letter_at(i) reads the
/// hugging staircase at event i + offset.
struct LineCutRep {
    LineSpec line;
    std::int64_t offset = 0;
    PathSide hug = PathSide::Lower;
};

/// A bi-infinite word with one of four finite descriptions. Immutable;
/// every letter at any index is computable (line-backed variants may
/// demand more continued-fraction terms via insufficient_precision).
class BiInfiniteWord {
public:
    using Rep = std::variant<PeriodicRep, SplicedRep, DoublyPeriodicRep, LineCutRep>;

    static BiInfiniteWord periodic(Word period, std::int64_t phase = 0);
    static BiInfiniteWord spliced(RightTail tail, Letter x, Letter y);
    static BiInfiniteWord doubly_periodic(Word left, Word center, Word right);
    static BiInfiniteWord line_cut(LineSpec line);

    Letter at(std::int64_t i) const;
    Word window(std::int64_t from, std::int64_t to) const;

    const Rep& rep() const { return rep_; }
    std::size_t description_size() const;

    /// Round-trippable text form ("periodic:...", "splice:...",
    /// "b4:..." / "xxyxx:..." when the shape matches, "cut:...").
    std::string to_text() const;
    static BiInfiniteWord parse(std::string_view text);

private:
    explicit BiInfiniteWord(Rep rep) : rep_(std::move(rep)) {}
    friend BiInfiniteWord reversal(const BiInfiniteWord& s);
    Rep rep_;
};

enum class CutVerdictKind { Holds, FailsAt, Inconclusive };

/// Outcome of scanning one cut. FailsAt carries the core m of the
/// forbidden factor x reverse(m) x y m y straddling the cut.
struct CutVerdict {
    CutVerdictKind kind = CutVerdictKind::Inconclusive;
    std::int64_t cut_index = 0;
    Word witness_m;
};

/// Scans the cut at j (requires s[j] != s[j+1]): compares s[j-k] with
/// s[j+1+k] for k = 1..max_radius and decides at the first difference.
/// Holds when the difference has the admissible orientation, FailsAt
/// with the witness otherwise, Inconclusive when no difference appears
/// within the radius.
CutVerdict markoff_scan_at_cut(const BiInfiniteWord& s, std::int64_t j, std::size_t max_radius);

/// Exact decision of the cut condition for period^inf. Never
/// inconclusive: a scan that survives 2|period|+2 agreements is a
/// certified equality of the two sides.
bool satisfies_markoff_periodic(const Word& period);

/// All occurrences in w of a factor x reverse(m) x y m y with x != y.
/// Independent of the cut scan; used to cross-validate it.
std::vector<std::pair<std::size_t, Word>> forbidden_factor_scan(const Word& w);

/// Exact balance decision for period^inf: window spreads for lengths
/// 1..|period| over all phases decide every longer window as well.
bool is_balanced_periodic(const Word& period);

/// All m such that y reverse(m) x y m x occurs in w for {x,y} = {a,b}.
std::set<Word> markoff_factors(const Word& w);

/// Decision procedure over the periodic word (a m b)^inf: the condition
/// must hold there and the window of one tiling must exhibit m itself.
bool is_markoff_word(const Word& m);

/// The two-ray construction: left period y m x, center y m y, right
/// period x m y. Requires x != y and is_markoff_word(m).
BiInfiniteWord spliced_b4(const Word& m, Letter x, Letter y);

/// The companion form ... x x y x x ... (requires x != y).
BiInfiniteWord xxyxx_form(Letter x, Letter y);

/// Representation of the reversed word. Windows of the result equal
/// reversed windows of s up to the per-variant re-indexing constant:
/// 0 for periodic and line-cut forms, 1 for splices, |center|-1 for
/// doubly periodic forms.
BiInfiniteWord reversal(const BiInfiniteWord& s);

enum class WordClass { M1, M2, M3, M4 };

std::string to_string(WordClass c);

struct ClassLabel {
    WordClass value = WordClass::M1;
    std::vector<std::string> evidence;
};

struct ClassifyOptions {
    std::size_t span = 0;    // letters of condition checking around 0; 0 = 6 x description size
    std::size_t radius = 0;  // scan radius per cut; 0 = 2 x description size + 2
};

/// Assigns one of M1..M4 with a record of the decision path. Exact for
/// periodic and doubly periodic inputs; line-backed inputs get a
/// window-level condition check and are classified from their
/// construction parameters. Throws std::domain_error when the condition
/// check fails.
ClassLabel classify(const BiInfiniteWord& s, const ClassifyOptions& options = {});

}  // namespace chrlab
