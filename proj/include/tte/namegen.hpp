#pragma once
#include "ground.hpp"

namespace tte {

// ======================================================================
// Name generation for ground models.
//
// Space names: r decides every word exactly once (length-lex for the
// finite model; for the rational line a 1:7 alternation of length-lex
// words that are not syntactic interval codes with the structured code
// enumeration, so dom codes are reached at useful indices).  s lists the
// canonical witness set {(u,v,w) : ν(w) ⊆ ν(u)∩ν(v)} — exhaustively for
// the finite model, and for the rational line as a fair triple cube over
// structured codes merged with accelerated quarter-inset chain witnesses
// over structured and value-graded code pairs.
// ======================================================================

namespace detail {

// Lazily extended list of structured dom code pairs with intersecting
// extents, in shell order over structured interval indices.
struct StructuredPairCache {
    std::vector<std::pair<Word, Word>> pairs;
    std::uint64_t shell = 0;
    void grow_one() {
        auto [i, j] = shell_cell(shell++);
        Word u = structured_interval_code(i), v = structured_interval_code(j);
        if (interval_code_in_dom(u) && interval_code_in_dom(v)) {
            Ival a = interval_extent(u), b = interval_extent(v);
            if (std::max(a.lo, b.lo) < std::min(a.hi, b.hi)) pairs.emplace_back(u, v);
        }
    }
};

// Same for value-graded canonical interval pairs.
struct GradedPairCache {
    std::vector<std::pair<Word, Word>> pairs;
    std::uint64_t shell = 0;
    void grow_one() {
        auto [i, j] = shell_cell(shell++);
        const Ival &a = graded_interval(i), &b = graded_interval(j);
        if (std::max(a.lo, b.lo) < std::min(a.hi, b.hi))
            pairs.emplace_back(interval_code(a), interval_code(b));
    }
};

inline std::optional<Word> chain_witness_triple(const std::pair<Word, Word>& uv, std::uint64_t t) {
    if (t > 40) return std::nullopt;  // deep insets are covered by the cube source
    Ival a = interval_extent(uv.first), b = interval_extent(uv.second);
    Rat lo = std::max(a.lo, b.lo), hi = std::min(a.hi, b.hi);
    Rat d = (hi - lo) / Rat(std::int64_t(1) << (t + 1));
    return tuple_words({uv.first, uv.second, interval_code(lo + d, hi - d)});
}

// Witness chain over a lazily discovered pair list: requests are served
// strictly in Cantor order (pair index, inset depth); when the pair is
// not discovered yet, one discovery step is taken instead.
template <class Cache>
CandidateSource chain_source(std::shared_ptr<Cache> cache) {
    auto c = std::make_shared<std::uint64_t>(0);
    return [cache, c]() -> std::optional<Word> {
        auto [m, t] = unpair_nat(*c);
        if (m >= cache->pairs.size()) {
            cache->grow_one();
            return std::nullopt;
        }
        ++*c;
        return chain_witness_triple(cache->pairs[m], t + 1);
    };
}

inline CandidateSource structured_triple_cube() {
    auto c = std::make_shared<std::uint64_t>(0);
    return [c]() -> std::optional<Word> {
        auto [i, rest] = unpair_nat((*c)++);
        auto [j, k] = unpair_nat(rest);
        Word u = structured_interval_code(i), v = structured_interval_code(j),
             w = structured_interval_code(k);
        if (!interval_code_in_dom(u) || !interval_code_in_dom(v) || !interval_code_in_dom(w))
            return std::nullopt;
        return tuple_words({u, v, w});
    };
}

}  // namespace detail

inline SpaceName space_name(ModelPtr mp) {
    const Model& m = *mp;
    if (auto* fd = as_fd(m)) {
        auto n = std::make_shared<std::uint64_t>(0);
        OmegaName r([mp, fd, n](std::string& buf) {
            Word w = lengthlex_word((*n)++);
            buf += "11";
            buf += wrap(tuple_words({w, fd->extent(w) ? "1" : "0"}));
        });
        auto codes = std::make_shared<std::vector<Word>>(fd->dom_codes());
        auto t = std::make_shared<std::uint64_t>(0);
        OmegaName s([mp, codes, t](std::string& buf) {
            buf += "11";
            std::uint64_t d = codes->size(), i = (*t)++;
            if (d == 0 || i >= d * d * d) return;
            const Word &u = (*codes)[i / (d * d)], &v = (*codes)[(i / d) % d],
                       &w = (*codes)[i % d];
            if (extent_subset_inter(*mp, w, u, v)) buf += wrap(tuple_words({u, v, w}));
        });
        return {r, s};
    }
    if (as_rl(m)) {
        struct RlR {
            std::uint64_t n = 0, ll = 0, st = 0;
        };
        auto rr = std::make_shared<RlR>();
        OmegaName r([rr](std::string& buf) {
            buf += "11";
            if (rr->n++ % 8 == 0) {
                Word w;
                do {
                    w = lengthlex_word(rr->ll++);
                } while (is_syntactic_interval_code(w));
                buf += wrap(tuple_words({w, "0"}));
            } else {
                Word w = structured_interval_code(rr->st++);
                buf += wrap(tuple_words({w, interval_code_in_dom(w) ? "1" : "0"}));
            }
        });
        auto spc = std::make_shared<detail::StructuredPairCache>();
        auto gpc = std::make_shared<detail::GradedPairCache>();
        CandidateSource cands = merge_sources({detail::structured_triple_cube(),
                                               detail::chain_source(spc),
                                               detail::chain_source(gpc)});
        OmegaName s = emit_decided(std::move(cands), [mp](const Word& w) {
            std::vector<Word> p;
            try {
                p = untuple_words(w);
            } catch (const MalformedName&) {
                return false;
            }
            return p.size() == 3 && model_in_dom(*mp, p[0]) && model_in_dom(*mp, p[1]) &&
                   model_in_dom(*mp, p[2]) && extent_subset_inter(*mp, p[2], p[0], p[1]);
        });
        return {r, s};
    }
    throw SpecMismatch("space names are generated for ground models only");
}

// ----------------------------------------------------------------------
// Object names.  Candidates are chosen per model and kind so that every
// word with the defining property is enumerated (and nothing else could
// ever satisfy it), then decided by the exact oracle.
// ----------------------------------------------------------------------

namespace detail {

inline CandidateSource fd_cover_words(std::shared_ptr<std::vector<Word>> codes) {
    auto n = std::make_shared<std::uint64_t>(0);
    return [codes, n]() -> std::optional<Word> {
        std::vector<std::uint64_t> lst = nat_to_list((*n)++);
        std::vector<Word> members;
        for (std::uint64_t i : lst) {
            if (i >= codes->size()) return std::nullopt;
            members.push_back((*codes)[i]);
        }
        return tuple_words(members);
    };
}

inline CandidateSource structured_interval_singles() {
    auto n = std::make_shared<std::uint64_t>(0);
    return [n]() -> std::optional<Word> {
        return tuple_words({structured_interval_code((*n)++)});
    };
}

inline CandidateSource graded_interval_pairs() {
    auto n = std::make_shared<std::uint64_t>(0);
    return [n]() -> std::optional<Word> {
        auto [i, j] = shell_cell((*n)++);
        return tuple_words({interval_code(graded_interval(i)), interval_code(graded_interval(j))});
    };
}

inline CandidateSource structured_cover_lists() {
    auto n = std::make_shared<std::uint64_t>(0);
    return [n]() -> std::optional<Word> {
        std::vector<std::uint64_t> lst = nat_to_list((*n)++);
        std::vector<Word> members;
        for (std::uint64_t i : lst) members.push_back(structured_interval_code(i));
        return tuple_words(members);
    };
}

inline CandidateSource structured_intervals() {
    auto n = std::make_shared<std::uint64_t>(0);
    return [n]() -> std::optional<Word> { return structured_interval_code((*n)++); };
}

inline CandidateSource object_candidates(const Model& m, Kind kind) {
    if (auto* fd = as_fd(m)) {
        if (kind == Kind::cover || kind == Kind::min_cover)
            return fd_cover_words(std::make_shared<std::vector<Word>>(fd->dom_codes()));
        return lengthlex_words();
    }
    if (as_rl(m)) {
        if (kind == Kind::cover || kind == Kind::min_cover)
            return merge_sources({structured_interval_singles(), graded_interval_pairs(),
                                  structured_cover_lists()});
        return structured_intervals();
    }
    throw SpecMismatch("object names are generated for ground models only");
}

}  // namespace detail

inline ObjectName object_name(ModelPtr mp, Kind kind, const ObjectSpec& spec) {
    check_spec(*mp, kind, spec);
    auto sp = std::make_shared<const ObjectSpec>(spec);
    OmegaName stream = emit_decided_unique(
        detail::object_candidates(*mp, kind),
        [mp, kind, sp](const Word& w) { return token_satisfies(*mp, kind, *sp, w); });
    return {kind, stream};
}

// Valid name whose first tokens are the given seeds; useful when a test
// wants specific tokens available within a small prefix.  Seeds must
// themselves satisfy the kind's property.
inline ObjectName object_name_seeded(ModelPtr mp, Kind kind, const ObjectSpec& spec,
                                     const std::vector<Word>& seeds) {
    ObjectName base = object_name(mp, kind, spec);
    std::string prefix;
    for (auto& w : seeds) {
        if (!token_satisfies(*mp, kind, spec, w))
            throw SpecMismatch("seed token does not satisfy the kind's property: " + w);
        prefix += wrap(w);
    }
    return {kind, with_prefix(prefix, base.stream)};
}

}  // namespace tte
