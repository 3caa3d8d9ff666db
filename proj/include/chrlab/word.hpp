// word.hpp -- finite binary words over {a,b} and the primitive
// predicates the rest of the library is built on.

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>

namespace chrlab {

/// One of the two letters of the alphabet. 'a' sorts before 'b'.
enum class Letter : char { A = 'a', B = 'b' };

constexpr char to_char(Letter x) { return static_cast<char>(x); }

constexpr Letter other(Letter x) { return x == Letter::A ? Letter::B : Letter::A; }

/// Parses 'a' or 'b'; throws std::invalid_argument on anything else.
Letter letter_from_char(char c);

/// A finite word over {a,b}. Immutable value type; the empty word is
/// valid. The text form is exactly the ASCII string of its letters,
/// and construction rejects any other character.
class Word {
public:
    Word() = default;
    explicit Word(std::string_view text);
    explicit Word(Letter x) : text_(1, to_char(x)) {}

    /// The word x^n.
    static Word filled(std::size_t n, Letter x) { return Word(std::string(n, to_char(x))); }

    std::size_t size() const { return text_.size(); }
    bool empty() const { return text_.empty(); }
    Letter at(std::size_t i) const { return static_cast<Letter>(text_[i]); }
    const std::string& str() const { return text_; }

    Word subword(std::size_t pos, std::size_t len) const { return Word(text_.substr(pos, len)); }

    friend Word operator+(const Word& lhs, const Word& rhs) { return Word(lhs.text_ + rhs.text_); }
    friend Word operator+(const Word& lhs, Letter rhs) { return Word(lhs.text_ + to_char(rhs)); }
    friend Word operator+(Letter lhs, const Word& rhs) { return Word(to_char(lhs) + rhs.text_); }

    auto operator<=>(const Word&) const = default;

private:
    std::string text_;  // invariant: every char is 'a' or 'b'
};

Word reverse(const Word& w);

bool is_palindrome(const Word& w);

/// Number of occurrences of the letter x in w.
std::size_t count(const Word& w, Letter x);

/// All distinct length-n factors of w. Empty set when n > |w|; the set
/// {empty word} when n = 0.
std::set<Word> factors_of_length(const Word& w, std::size_t n);

/// True iff v occurs contiguously in w. Every word contains the empty
/// word.
bool contains_factor(const Word& w, const Word& v);

/// Exchanges the two letters everywhere; an involution.
Word swap_letters(const Word& w);

/// True iff any two equal-length factors of w have 'a'-counts within 1
/// of each other. Runs the O(n^2) sliding-window spread check over
/// every window length.
bool is_balanced(const Word& w);

/// A pair of equal-length factors whose 'a'-counts differ by at least
/// 2, if one exists; the witness reported alongside a false balance
/// verdict.
std::optional<std::pair<Word, Word>> unbalanced_pair(const Word& w);

/// The n-letter word whose i-th letter is 'b' exactly when bit i of
/// index is set. Enumerating index over [0, 2^n) visits every word of
/// length n.
Word word_from_index(std::size_t n, std::uint64_t index);

}  // namespace chrlab
