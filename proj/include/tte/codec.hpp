#pragma once
#include <cmath>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "word.hpp"

namespace tte {

// ======================================================================
// Block wrapping.
//
// A word u = a1...ak is shipped inside an infinite stream as the block
//     wrap(u) = 110 a1 0 a2 0 ... ak 0 11
// of length 2|u|+5.  Blocks never overlap, so occurrence of wrap(u) as a
// subword is unambiguous and a stream made of blocks and "11" fillers can
// be parsed deterministically from left to right.
// ======================================================================

inline std::string wrap(const Word& u) {
    std::string out;
    out.reserve(2 * u.size() + 5);
    out += "110";
    for (char c : u) {
        out.push_back(c);
        out.push_back('0');
    }
    out += "11";
    return out;
}

inline Word unwrap(std::string_view block) {
    if (block.size() < 5 || block.substr(0, 3) != "110" ||
        block.substr(block.size() - 2) != "11" || block.size() % 2 == 0)
        throw MalformedName("unwrap: not a wrapped block");
    Word u;
    for (std::size_t i = 3; i + 2 < block.size(); i += 2) {
        char c = block[i], d = block[i + 1];
        if ((c != '0' && c != '1') || d != '0')
            throw MalformedName("unwrap: bad symbol pair inside block");
        u.push_back(c);
    }
    return u;
}

// ======================================================================
// Deterministic left-to-right token parser.
//
// Grammar of a well-formed stream:   ( "11" filler | wrap(u) block )*
// After "11" one more symbol decides: '0' opens a block, '1' means the
// "11" was a filler and the '1' starts the next item.  Inside a block,
// symbol pairs (c,d) follow: (1,1) closes the block, d='0' appends c to
// the payload, and (0,1) is a grammar violation.
// ======================================================================

class TokenScanner {
  public:
    // Feed one symbol; yields the payload word when a block completes.
    std::optional<Word> feed(char sym) {
        if (sym != '0' && sym != '1') throw MalformedName("scan: symbol outside {0,1}");
        std::optional<Word> done;
        switch (st_) {
            case St::top:
                if (sym == '0') throw MalformedName("scan: '0' at item boundary");
                start_ = pos_;
                st_ = St::one;
                break;
            case St::one:
                if (sym == '0') throw MalformedName("scan: \"10\" at item boundary");
                st_ = St::two;
                break;
            case St::two:
                if (sym == '0') {  // "110" opens a block
                    payload_.clear();
                    st_ = St::block_c;
                } else {  // "11" was a filler; this '1' starts the next item
                    start_ = pos_;
                    st_ = St::one;
                }
                break;
            case St::block_c:
                c_ = sym;
                st_ = St::block_d;
                break;
            case St::block_d:
                if (c_ == '1' && sym == '1') {
                    done = payload_;
                    st_ = St::top;
                } else if (sym == '0') {
                    payload_.push_back(c_);
                    st_ = St::block_c;
                } else {
                    throw MalformedName("scan: pair (0,1) inside block");
                }
                break;
        }
        ++pos_;
        return done;
    }

    bool mid_item() const { return st_ != St::top; }
    std::size_t item_start() const { return start_; }
    std::size_t consumed() const { return pos_; }

  private:
    enum class St { top, one, two, block_c, block_d };
    St st_ = St::top;
    std::size_t pos_ = 0;
    std::size_t start_ = 0;
    char c_ = 0;
    Word payload_;
};

struct ScanResult {
    std::vector<Word> tokens;
    std::string residue;  // trailing symbols of an item not yet complete
};

inline ScanResult scan_tokens(std::string_view prefix) {
    TokenScanner sc;
    ScanResult r;
    for (char c : prefix)
        if (auto t = sc.feed(c)) r.tokens.push_back(std::move(*t));
    if (sc.mid_item()) r.residue = std::string(prefix.substr(sc.item_start()));
    return r;
}

inline bool has_token(std::string_view prefix, const Word& u) {
    for (const Word& t : scan_tokens(prefix).tokens)
        if (t == u) return true;
    return false;
}

// ======================================================================
// Cantor pairing on naturals:  pair(i,j) = (i+j)(i+j+1)/2 + j.
// ======================================================================

inline std::uint64_t pair_nat(std::uint64_t i, std::uint64_t j) {
    std::uint64_t s = i + j;
    return s * (s + 1) / 2 + j;
}

inline std::pair<std::uint64_t, std::uint64_t> unpair_nat(std::uint64_t n) {
    // largest s with s(s+1)/2 <= n
    auto s = static_cast<std::uint64_t>((std::sqrt(8.0L * static_cast<long double>(n) + 1.0L) - 1.0L) / 2.0L);
    while (s * (s + 1) / 2 > n) --s;
    while ((s + 1) * (s + 2) / 2 <= n) ++s;
    std::uint64_t j = n - s * (s + 1) / 2;
    return {s - j, j};
}

// Square-shell pairing: cells ordered by max(i,j), so both coordinates of
// the n-th cell stay within ~sqrt(n).  Used wherever two slowly-produced
// sequences must be combined without starving large indices.
inline std::pair<std::uint64_t, std::uint64_t> shell_cell(std::uint64_t n) {
    auto s = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
    while (s * s > n) --s;
    while ((s + 1) * (s + 1) <= n) ++s;
    std::uint64_t r = n - s * s;
    if (r <= s) return {r, s};
    return {s, 2 * s - r};
}

inline std::uint64_t shell_index(std::uint64_t i, std::uint64_t j) {
    std::uint64_t s = std::max(i, j);
    return s * s + (j == s ? i : s + (s - j));
}

// Bijection between naturals and finite lists of naturals via iterated
// unpairing: 0 <-> [],  n+ <-> head:tail with (head, t) = unpair(n-1).
inline std::vector<std::uint64_t> nat_to_list(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    while (n != 0) {
        auto [h, t] = unpair_nat(n - 1);
        out.push_back(h);
        n = t;
    }
    return out;
}

// ======================================================================
// Word tuples:  <u1,...,un> = wrap(u1) ... wrap(un), strict (no fillers).
// ======================================================================

inline std::string tuple_words(const std::vector<Word>& us) {
    std::string out;
    for (const Word& u : us) out += wrap(u);
    return out;
}

inline std::vector<Word> untuple_words(std::string_view w) {
    std::vector<Word> out;
    std::size_t i = 0;
    while (i < w.size()) {
        if (w.size() - i < 5 || w.substr(i, 3) != "110")
            throw MalformedName("untuple: expected wrapped block");
        std::size_t j = i + 3;
        Word u;
        for (;;) {
            if (j + 1 >= w.size()) throw MalformedName("untuple: truncated block");
            char c = w[j], d = w[j + 1];
            j += 2;
            if (c == '1' && d == '1') break;
            if (d != '0') throw MalformedName("untuple: pair (0,1) inside block");
            u.push_back(c);
        }
        out.push_back(std::move(u));
        i = j;
    }
    return out;
}

inline bool is_tuple_of_arity(std::string_view w, std::size_t n) {
    try {
        return untuple_words(w).size() == n;
    } catch (const MalformedName&) {
        return false;
    }
}

// Tuple of arity >= 1?  (Every word in the domain of a product notation
// has this shape; arity 0 would be the empty word.)
inline std::optional<std::vector<Word>> try_untuple(std::string_view w) {
    try {
        return untuple_words(w);
    } catch (const MalformedName&) {
        return std::nullopt;
    }
}

// ======================================================================
// Arity tags and nesting.
//
// tag(n) = 1^n 0 marks which summand / arity a stream or word belongs to.
// nest_word turns a flat tuple <u1,...,un> into the left-nested pair form
// <...<u1,u2>,...,un> (for n = 1 just u1); unnest_word inverts it given
// the arity tag in front.
// ======================================================================

inline std::string arity_tag(std::uint64_t n) {
    return std::string(static_cast<std::size_t>(n), '1') + "0";
}

inline std::pair<std::uint64_t, std::string_view> split_arity_tag(std::string_view w) {
    std::size_t n = 0;
    while (n < w.size() && w[n] == '1') ++n;
    if (n == 0 || n >= w.size() || w[n] != '0')
        throw MalformedName("arity tag: expected 1^n 0 with n >= 1");
    return {n, w.substr(n + 1)};
}

inline Word nest_word(std::string_view flat) {
    std::vector<Word> us = untuple_words(flat);
    if (us.empty()) throw MalformedName("nest: empty tuple");
    Word acc = us[0];
    for (std::size_t i = 1; i < us.size(); ++i) acc = tuple_words({acc, us[i]});
    return acc;
}

inline Word unnest_word(std::string_view tagged) {
    auto [n, rest] = split_arity_tag(tagged);
    Word w(rest);
    std::vector<Word> parts;
    for (std::uint64_t i = n; i >= 2; --i) {
        std::vector<Word> pq = untuple_words(w);
        if (pq.size() != 2) throw MalformedName("unnest: arity tag disagrees with nesting");
        parts.push_back(std::move(pq[1]));
        w = std::move(pq[0]);
    }
    parts.push_back(std::move(w));
    std::vector<Word> us(parts.rbegin(), parts.rend());
    return tuple_words(us);
}

}  // namespace tte
