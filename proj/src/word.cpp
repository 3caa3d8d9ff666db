#include "chrlab/word.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace chrlab {

Letter letter_from_char(char c) {
    if (c == 'a') return Letter::A;
    if (c == 'b') return Letter::B;
    throw std::invalid_argument(std::string("not a letter over {a,b}: '") + c + "'");
}

Word::Word(std::string_view text) : text_(text) {
    for (char c : text_) {
        if (c != 'a' && c != 'b')
            throw std::invalid_argument(std::string("word contains a character outside {a,b}: '") + c + "'");
    }
}

Word reverse(const Word& w) {
    std::string t(w.str().rbegin(), w.str().rend());
    return Word(t);
}

bool is_palindrome(const Word& w) {
    const std::string& s = w.str();
    return std::equal(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(s.size() / 2), s.rbegin());
}

std::size_t count(const Word& w, Letter x) {
    return static_cast<std::size_t>(std::count(w.str().begin(), w.str().end(), to_char(x)));
}

std::set<Word> factors_of_length(const Word& w, std::size_t n) {
    std::set<Word> out;
    if (n > w.size()) return out;
    if (n == 0) {
        out.insert(Word());
        return out;
    }
    for (std::size_t i = 0; i + n <= w.size(); ++i)
        out.insert(w.subword(i, n));
    return out;
}

bool contains_factor(const Word& w, const Word& v) {
    return w.str().find(v.str()) != std::string::npos;
}

Word swap_letters(const Word& w) {
    std::string t = w.str();
    for (char& c : t) c = (c == 'a') ? 'b' : 'a';
    return Word(t);
}

namespace {

// Prefix sums of 'a'-counts: pre[i] = number of 'a' in w[0..i).
std::vector<std::size_t> a_prefix(const std::string& s) {
    std::vector<std::size_t> pre(s.size() + 1, 0);
    for (std::size_t i = 0; i < s.size(); ++i)
        pre[i + 1] = pre[i] + (s[i] == 'a' ? 1 : 0);
    return pre;
}

}  // namespace

bool is_balanced(const Word& w) {
    const std::string& s = w.str();
    const std::size_t n = s.size();
    auto pre = a_prefix(s);
    for (std::size_t len = 1; len <= n; ++len) {
        std::size_t lo = len + 1, hi = 0;
        for (std::size_t i = 0; i + len <= n; ++i) {
            std::size_t c = pre[i + len] - pre[i];
            lo = std::min(lo, c);
            hi = std::max(hi, c);
        }
        if (hi - lo > 1) return false;
    }
    return true;
}

std::optional<std::pair<Word, Word>> unbalanced_pair(const Word& w) {
    const std::string& s = w.str();
    const std::size_t n = s.size();
    auto pre = a_prefix(s);
    for (std::size_t len = 1; len <= n; ++len) {
        std::size_t lo_at = 0, hi_at = 0;
        for (std::size_t i = 0; i + len <= n; ++i) {
            std::size_t c = pre[i + len] - pre[i];
            if (c < pre[lo_at + len] - pre[lo_at]) lo_at = i;
            if (c > pre[hi_at + len] - pre[hi_at]) hi_at = i;
        }
        std::size_t spread = (pre[hi_at + len] - pre[hi_at]) - (pre[lo_at + len] - pre[lo_at]);
        if (spread > 1) return std::make_pair(w.subword(hi_at, len), w.subword(lo_at, len));
    }
    return std::nullopt;
}

Word word_from_index(std::size_t n, std::uint64_t index) {
    std::string t(n, 'a');
    for (std::size_t i = 0; i < n; ++i)
        if ((index >> i) & 1u) t[i] = 'b';
    return Word(t);
}

}  // namespace chrlab
