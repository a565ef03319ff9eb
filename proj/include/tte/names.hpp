#pragma once
#include <array>
#include <memory>

#include "stream.hpp"

namespace tte {

// Object name kinds.  ASCII tags double as the CLI / name-file vocabulary.
enum class Kind { point, open, subset, cover, min_cover };

inline const char* kind_tag(Kind k) {
    switch (k) {
        case Kind::point: return "delta";
        case Kind::open: return "theta";
        case Kind::subset: return "psi";
        case Kind::cover: return "kappa";
        case Kind::min_cover: return "ktilde";
    }
    throw std::logic_error("kind_tag: bad kind");
}

inline Kind parse_kind_tag(const std::string& s) {
    if (s == "delta") return Kind::point;
    if (s == "theta") return Kind::open;
    if (s == "psi") return Kind::subset;
    if (s == "kappa") return Kind::cover;
    if (s == "ktilde") return Kind::min_cover;
    throw MalformedName("unknown kind tag: " + s);
}

struct ObjectName {
    Kind kind;
    OmegaName stream;
};

// A space name is the pair <r, s>: r enumerates the graph of the code-set
// membership predicate (every word exactly once, with verdict bit), s
// enumerates intersection witness triples.
struct SpaceName {
    OmegaName r, s;

    OmegaName combined() const { return interleave_streams({r, s}); }

    static SpaceName from_combined(OmegaName p) {
        return {deinterleave_stream(p, 0, 2), deinterleave_stream(p, 1, 2)};
    }
};

// r-stream tokens are <w, b> with verdict bit b; s-stream tokens <u, v, w>.
struct RTok {
    Word w;
    bool b;
};

inline RTok parse_r_token(const Word& t) {
    auto parts = untuple_words(t);
    if (parts.size() != 2 || (parts[1] != "0" && parts[1] != "1"))
        throw MalformedName("bad membership token: " + t);
    return {parts[0], parts[1] == "1"};
}

inline std::array<Word, 3> parse_s_token(const Word& t) {
    auto parts = untuple_words(t);
    if (parts.size() != 3) throw MalformedName("bad witness token: " + t);
    return {parts[0], parts[1], parts[2]};
}

// Shared incremental token logs over one space name, so several engines
// reading the same name advance a single pair of scanners.
struct SpaceView {
    SpaceName name;
    std::shared_ptr<TokenLog> rlog, slog;

    explicit SpaceView(SpaceName t)
        : name(t),
          rlog(std::make_shared<TokenLog>(t.r)),
          slog(std::make_shared<TokenLog>(t.s)) {}
};

}  // namespace tte
