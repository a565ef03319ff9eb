#pragma once
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace tte {

// A finite word over the alphabet {'0','1'}.  Kept as a plain string; validity
// is enforced at the boundaries where untrusted data enters (files, CLI).
using Word = std::string;

struct MalformedName : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct InvalidModel : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct SpecMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct BadCode : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline bool is_word(std::string_view s) {
    for (char c : s)
        if (c != '0' && c != '1') return false;
    return true;
}

inline Word require_word(std::string_view s, const char* what = "word") {
    if (!is_word(s)) throw MalformedName(std::string(what) + ": symbol outside {0,1}");
    return Word(s);
}

// Length-lexicographic enumeration of all words:
//   0 -> "", 1 -> "0", 2 -> "1", 3 -> "00", 4 -> "01", ...
// (index+1 written in binary, most significant bit dropped)
inline Word lengthlex_word(std::uint64_t index) {
    std::uint64_t k = index + 1;
    int msb = 63;
    while (msb > 0 && !(k >> msb & 1)) --msb;
    Word w;
    w.reserve(static_cast<std::size_t>(msb));
    for (int b = msb - 1; b >= 0; --b) w.push_back((k >> b & 1) ? '1' : '0');
    return w;
}

inline std::uint64_t lengthlex_index(const Word& w) {
    if (w.size() >= 63) throw std::overflow_error("lengthlex_index: word too long");
    std::uint64_t k = 1;
    for (char c : w) k = (k << 1) | static_cast<std::uint64_t>(c == '1');
    return k - 1;
}

}  // namespace tte
