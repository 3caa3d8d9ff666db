#include "chrlab/parse.hpp"

#include <charconv>
#include <stdexcept>

namespace chrlab {

namespace {

std::int64_t parse_int(std::string_view text) {
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size())
        throw std::invalid_argument("not an integer: \"" + std::string(text) + "\"");
    return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        std::size_t at = text.find(sep, start);
        if (at == std::string_view::npos) {
            parts.push_back(text.substr(start));
            return parts;
        }
        parts.push_back(text.substr(start, at - start));
        start = at + 1;
    }
}

// "key=value" fields separated by commas; the field named tail_key, if
// present, swallows the rest of the string verbatim.
std::vector<std::pair<std::string_view, std::string_view>> parse_fields(std::string_view text,
                                                                        std::string_view tail_key) {
    std::vector<std::pair<std::string_view, std::string_view>> fields;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t eq = text.find('=', pos);
        if (eq == std::string_view::npos)
            throw std::invalid_argument("expected key=value in \"" + std::string(text) + "\"");
        std::string_view key = text.substr(pos, eq - pos);
        if (key == tail_key) {
            fields.emplace_back(key, text.substr(eq + 1));
            return fields;
        }
        std::size_t end = text.find(',', eq + 1);
        if (end == std::string_view::npos) end = text.size();
        fields.emplace_back(key, text.substr(eq + 1, end - eq - 1));
        pos = end + (end < text.size() ? 1 : 0);
    }
    return fields;
}

std::string_view field(const std::vector<std::pair<std::string_view, std::string_view>>& fields,
                       std::string_view key) {
    for (const auto& [k, v] : fields)
        if (k == key) return v;
    throw std::invalid_argument("missing field \"" + std::string(key) + "\"");
}

Letter parse_letter_field(std::string_view v) {
    if (v.size() != 1) throw std::invalid_argument("expected a single letter, got \"" + std::string(v) + "\"");
    return letter_from_char(v[0]);
}

LineSpec parse_line_fields(std::string_view text) {
    // "slope=...;intercept=..." with the intercept part optional.
    Rational intercept(0);
    std::string_view slope_text = text;
    std::size_t semi = text.find(';');
    if (semi != std::string_view::npos) {
        slope_text = text.substr(0, semi);
        std::string_view rest = text.substr(semi + 1);
        if (rest.substr(0, 10) != "intercept=")
            throw std::invalid_argument("expected intercept=... after ';'");
        intercept = parse_rational(rest.substr(10));
    }
    if (slope_text.substr(0, 6) != "slope=")
        throw std::invalid_argument("expected slope=... in line description");
    return LineSpec{parse_slope(slope_text.substr(6)), intercept};
}

}  // namespace

LineSlope parse_slope(std::string_view text) {
    if (text.substr(0, 3) == "cf:") {
        std::vector<std::int64_t> terms;
        for (std::string_view part : split(text.substr(3), ',')) {
            if (part == "..." || part.empty()) continue;
            terms.push_back(parse_int(part));
        }
        return LineSlope::continued_fraction(std::move(terms));
    }
    std::size_t slash = text.find('/');
    if (slash == std::string_view::npos) {
        std::int64_t q = parse_int(text);
        return LineSlope::rational(1, q);
    }
    std::int64_t q = parse_int(text.substr(0, slash));
    std::int64_t p = parse_int(text.substr(slash + 1));
    return LineSlope::rational(p, q);
}

Rational parse_rational(std::string_view text) {
    std::size_t slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text));
    return Rational(BigInt(parse_int(text.substr(0, slash))), BigInt(parse_int(text.substr(slash + 1))));
}

std::pair<std::int64_t, std::int64_t> parse_range(std::string_view text) {
    std::size_t dots = text.find("..", 1);  // a leading '-' is part of lo
    if (dots == std::string_view::npos)
        throw std::invalid_argument("expected a range lo..hi, got \"" + std::string(text) + "\"");
    std::int64_t lo = parse_int(text.substr(0, dots));
    std::int64_t hi = parse_int(text.substr(dots + 2));
    if (lo > hi) throw std::invalid_argument("range must satisfy lo <= hi");
    return {lo, hi};
}

std::vector<std::int64_t> parse_int_list(std::string_view text) {
    std::vector<std::int64_t> out;
    for (std::string_view part : split(text, ','))
        if (!part.empty()) out.push_back(parse_int(part));
    return out;
}

std::string to_text(const LineSpec& line) {
    std::string out = "slope=";
    if (line.slope.is_rational()) {
        out += line.slope.value().num().str() + "/" + line.slope.value().den().str();
    } else {
        out += "cf:";
        bool first = true;
        for (std::int64_t t : line.slope.terms()) {
            if (!first) out += ",";
            first = false;
            out += std::to_string(t);
        }
    }
    out += ";intercept=" + line.intercept.to_string();
    return out;
}

std::string BiInfiniteWord::to_text() const {
    return std::visit(
        [](const auto& rep) -> std::string {
            using T = std::decay_t<decltype(rep)>;
            if constexpr (std::is_same_v<T, PeriodicRep>) {
                std::string out = "periodic:" + rep.period.str();
                if (rep.phase != 0) out += ",phase=" + std::to_string(rep.phase);
                return out;
            } else if constexpr (std::is_same_v<T, SplicedRep>) {
                std::string u = rep.tail.is_periodic() ? "periodic:" + rep.tail.period().str()
                                                       : "cut:" + chrlab::to_text(rep.tail.line_spec());
                return std::string("splice:x=") + to_char(rep.x) + ",y=" + to_char(rep.y) + ",u=" + u;
            } else if constexpr (std::is_same_v<T, DoublyPeriodicRep>) {
                const Word &l = rep.left_period, &c = rep.center, &r = rep.right_period;
                if (l.size() == 1 && r.size() == 1 && c.size() == 1 && l == r && l.at(0) != c.at(0))
                    return std::string("xxyxx:x=") + to_char(l.at(0)) + ",y=" + to_char(c.at(0));
                // b4 shape: left = y m x, center = y m y, right = x m y
                if (c.size() >= 2 && l.size() == c.size() && r.size() == c.size()) {
                    Letter y = c.at(0), x = other(y);
                    Word m = c.subword(1, c.size() - 2);
                    if (c == y + m + y && l == y + m + x && r == x + m + y)
                        return "b4:m=" + m.str() + ",x=" + to_char(x) + ",y=" + to_char(y);
                }
                return "dep:left=" + l.str() + ",center=" + c.str() + ",right=" + r.str();
            } else {
                std::string out = "cut:" + chrlab::to_text(rep.line);
                if (rep.offset != 0) out += ",offset=" + std::to_string(rep.offset);
                if (rep.hug == PathSide::Upper) out += ",hug=upper";
                return out;
            }
        },
        rep_);
}

BiInfiniteWord BiInfiniteWord::parse(std::string_view text) {
    std::size_t colon = text.find(':');
    if (colon == std::string_view::npos)
        throw std::invalid_argument("expected kind:description, got \"" + std::string(text) + "\"");
    std::string_view kind = text.substr(0, colon);
    std::string_view body = text.substr(colon + 1);
    if (kind == "periodic") {
        std::size_t comma = body.find(',');
        std::int64_t phase = 0;
        std::string_view word_text = body;
        if (comma != std::string_view::npos) {
            word_text = body.substr(0, comma);
            std::string_view rest = body.substr(comma + 1);
            if (rest.substr(0, 6) != "phase=")
                throw std::invalid_argument("expected phase=... after the period");
            phase = parse_int(rest.substr(6));
        }
        return BiInfiniteWord::periodic(Word(word_text), phase);
    }
    if (kind == "b4") {
        auto fields = parse_fields(body, "");
        return spliced_b4(Word(field(fields, "m")), parse_letter_field(field(fields, "x")),
                          parse_letter_field(field(fields, "y")));
    }
    if (kind == "xxyxx") {
        auto fields = parse_fields(body, "");
        return xxyxx_form(parse_letter_field(field(fields, "x")), parse_letter_field(field(fields, "y")));
    }
    if (kind == "dep") {
        auto fields = parse_fields(body, "");
        return BiInfiniteWord::doubly_periodic(Word(field(fields, "left")), Word(field(fields, "center")),
                                               Word(field(fields, "right")));
    }
    if (kind == "splice") {
        auto fields = parse_fields(body, "u");
        std::string_view u = field(fields, "u");
        RightTail tail = u.substr(0, 9) == "periodic:" ? RightTail::periodic(Word(u.substr(9)))
                         : u.substr(0, 4) == "cut:"    ? RightTail::line(parse_line_fields(u.substr(4)))
                                                       : throw std::invalid_argument(
                                                             "tail must be periodic:... or cut:...");
        return BiInfiniteWord::spliced(std::move(tail), parse_letter_field(field(fields, "x")),
                                       parse_letter_field(field(fields, "y")));
    }
    if (kind == "cut") {
        return BiInfiniteWord::line_cut(parse_line_fields(body));
    }
    throw std::invalid_argument("unknown representation kind \"" + std::string(kind) + "\"");
}

}  // namespace chrlab
