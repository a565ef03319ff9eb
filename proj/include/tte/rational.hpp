#pragma once
#include <cstdint>
#include <numeric>
#include <string>

#include "codec.hpp"

namespace tte {

// Exact rational arithmetic on int64 (normalized, den > 0).  Magnitudes in
// this artifact stay tiny; any overflow is a bug, so narrowing is checked.
struct Rat {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rat() = default;
    Rat(std::int64_t n, std::int64_t d) {
        if (d == 0) throw std::invalid_argument("Rat: zero denominator");
        if (d < 0) {
            n = -n;
            d = -d;
        }
        std::int64_t g = std::gcd(n < 0 ? -n : n, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
        num = n;
        den = d;
    }
    explicit Rat(std::int64_t n) : num(n), den(1) {}

    friend bool operator==(const Rat& a, const Rat& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) {
        return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
    }
    friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
    friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
    friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

    friend Rat operator+(const Rat& a, const Rat& b) {
        return make(static_cast<__int128>(a.num) * b.den + static_cast<__int128>(b.num) * a.den,
                    static_cast<__int128>(a.den) * b.den);
    }
    friend Rat operator-(const Rat& a, const Rat& b) {
        return make(static_cast<__int128>(a.num) * b.den - static_cast<__int128>(b.num) * a.den,
                    static_cast<__int128>(a.den) * b.den);
    }
    friend Rat operator*(const Rat& a, const Rat& b) {
        return make(static_cast<__int128>(a.num) * b.num, static_cast<__int128>(a.den) * b.den);
    }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.num == 0) throw std::invalid_argument("Rat: division by zero");
        return make(static_cast<__int128>(a.num) * b.den, static_cast<__int128>(a.den) * b.num);
    }

    std::string str() const {
        std::string s = std::to_string(num);
        if (den != 1) s += "/" + std::to_string(den);
        return s;
    }

  private:
    static Rat make(__int128 n, __int128 d) {
        if (d < 0) {
            n = -n;
            d = -d;
        }
        __int128 an = n < 0 ? -n : n;
        __int128 g = gcd128(an, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
        constexpr __int128 lim = INT64_MAX;
        if (n > lim || n < -lim || d > lim)
            throw std::overflow_error("Rat: value out of range");
        Rat r;
        r.num = static_cast<std::int64_t>(n);
        r.den = static_cast<std::int64_t>(d);
        return r;
    }
    static __int128 gcd128(__int128 a, __int128 b) {
        while (b != 0) {
            __int128 t = a % b;
            a = b;
            b = t;
        }
        return a;
    }
};

// ----------------------------------------------------------------------
// Binary numerals (MSB first).  Decoding accepts leading zeros: distinct
// words may denote the same value, which is fine since codes need not be
// injective.
// ----------------------------------------------------------------------

inline Word numeral(std::uint64_t v) {
    if (v == 0) return "0";
    Word w;
    while (v) {
        w.push_back('0' + (v & 1));
        v >>= 1;
    }
    std::reverse(w.begin(), w.end());
    return w;
}

inline std::uint64_t numeral_value(const Word& w) {
    if (w.empty()) throw BadCode("empty numeral");
    std::uint64_t v = 0;
    for (char c : w) {
        if (c != '0' && c != '1') throw BadCode("non-binary numeral");
        if (v > (UINT64_MAX >> 1)) throw std::overflow_error("numeral too large");
        v = (v << 1) | static_cast<std::uint64_t>(c - '0');
    }
    return v;
}

// ----------------------------------------------------------------------
// Rational and interval codes.
//
// A rational code is the word triple <sign, numerator, denominator> with
// sign in {"0","1"} ("1" = negative) and nonempty binary numerals.  An
// interval code is the word pair of two rational codes.  Codes whose
// denominator is zero or whose endpoints satisfy a >= b lie outside dom.
// ----------------------------------------------------------------------

struct SynRat {
    bool neg;
    Word num, den;

    bool in_dom() const { return numeral_value(den) != 0; }
    Rat value() const {
        std::uint64_t n = numeral_value(num), d = numeral_value(den);
        if (d == 0) throw BadCode("rational code with zero denominator");
        if (n > INT64_MAX || d > INT64_MAX) throw std::overflow_error("rational code too large");
        auto sn = static_cast<std::int64_t>(n);
        return Rat(neg ? -sn : sn, static_cast<std::int64_t>(d));
    }
    Word code() const { return tuple_words({neg ? "1" : "0", num, den}); }
};

struct SynIval {
    SynRat a, b;
    Word code() const { return tuple_words({a.code(), b.code()}); }
};

// Open interval with rational endpoints, lo < hi.
struct Ival {
    Rat lo, hi;
};

inline bool is_numeral_word(const Word& w) {
    if (w.empty()) return false;
    for (char c : w)
        if (c != '0' && c != '1') return false;
    return true;
}

inline std::optional<SynRat> parse_rational_code(const Word& w) {
    std::vector<Word> parts;
    try {
        parts = untuple_words(w);
    } catch (const MalformedName&) {
        return std::nullopt;
    }
    if (parts.size() != 3) return std::nullopt;
    if (parts[0] != "0" && parts[0] != "1") return std::nullopt;
    if (!is_numeral_word(parts[1]) || !is_numeral_word(parts[2])) return std::nullopt;
    return SynRat{parts[0] == "1", parts[1], parts[2]};
}

inline std::optional<SynIval> parse_interval_code(const Word& w) {
    std::vector<Word> parts;
    try {
        parts = untuple_words(w);
    } catch (const MalformedName&) {
        return std::nullopt;
    }
    if (parts.size() != 2) return std::nullopt;
    auto a = parse_rational_code(parts[0]);
    auto b = parse_rational_code(parts[1]);
    if (!a || !b) return std::nullopt;
    return SynIval{*a, *b};
}

inline bool is_syntactic_interval_code(const Word& w) {
    return parse_interval_code(w).has_value();
}

// dom membership: syntactically well-formed, both denominators nonzero,
// and the coded endpoints satisfy a < b.
inline bool interval_code_in_dom(const Word& w) {
    auto iv = parse_interval_code(w);
    return iv && iv->a.in_dom() && iv->b.in_dom() && iv->a.value() < iv->b.value();
}

// Extent of a dom code.
inline Ival interval_extent(const Word& w) {
    auto iv = parse_interval_code(w);
    if (!iv || !iv->a.in_dom() || !iv->b.in_dom()) throw BadCode("code outside dom: " + w);
    Ival e{iv->a.value(), iv->b.value()};
    if (!(e.lo < e.hi)) throw BadCode("code outside dom: " + w);
    return e;
}

// Canonical (leading-zero-free, reduced) codes for values.
inline Word rational_code(const Rat& r) {
    return SynRat{r.num < 0, numeral(static_cast<std::uint64_t>(r.num < 0 ? -r.num : r.num)),
                  numeral(static_cast<std::uint64_t>(r.den))}
        .code();
}

inline Word interval_code(const Rat& lo, const Rat& hi) {
    return tuple_words({rational_code(lo), rational_code(hi)});
}

inline Word interval_code(const Ival& iv) { return interval_code(iv.lo, iv.hi); }

}  // namespace tte
