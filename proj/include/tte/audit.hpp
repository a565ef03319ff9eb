#pragma once
#include <sstream>

#include "ground.hpp"

namespace tte {

// ======================================================================
// Budgeted audits.
//
// A name is run for a fixed number of producer rounds, its prefix is
// parsed, and the tokens are judged against the exact oracles: every
// token must satisfy the kind's defining property (soundness), and every
// word of a documented finite family that satisfies the property must
// have shown up (completeness up to the budget).
// ======================================================================

struct AuditBounds {
    std::uint64_t rounds = 20000;
    std::size_t max_code_len = 0;     // length-lex completeness sweep (0 = off)
    std::vector<Word> required;       // tokens that must appear (r-stream for spaces)
    std::vector<Word> forbidden;      // tokens that must not appear
    std::vector<Word> required_s;     // witness triples that must appear
    bool check_open_union = false;    // kind open: token extents must union to the target
    bool exhaustive_witnesses = false;  // finite model: full Eq-style witness closure
    std::vector<std::pair<Word, Word>> witness_pairs;  // rational model: resolution check
};

struct AuditReport {
    bool pass = true;
    std::string detail = "ok";
    std::size_t token_count = 0;
};

namespace detail {
inline AuditReport fail(std::string d) { return {false, std::move(d), 0}; }
}  // namespace detail

inline AuditReport audit_object_name(ModelPtr mp, Kind kind, const ObjectSpec& spec,
                                     ObjectName name, const AuditBounds& b) {
    check_spec(*mp, kind, spec);
    if (name.kind != kind) return detail::fail("name kind does not match audited kind");
    std::vector<Word> toks;
    try {
        const std::string& buf = name.stream.run_rounds(b.rounds);
        toks = scan_tokens(buf).tokens;
    } catch (const std::exception& e) {
        return detail::fail(std::string("name stream failed: ") + e.what());
    }
    std::set<Word> seen(toks.begin(), toks.end());
    for (auto& w : toks)
        if (!token_satisfies(*mp, kind, spec, w))
            return detail::fail("unsound token: \"" + w + "\"");
    for (auto& w : b.required)
        if (!seen.count(w)) return detail::fail("missing required token: \"" + w + "\"");
    for (auto& w : b.forbidden)
        if (seen.count(w)) return detail::fail("forbidden token present: \"" + w + "\"");
    if (b.max_code_len > 0)
        for (std::uint64_t i = 0;; ++i) {
            Word w = lengthlex_word(i);
            if (w.size() > b.max_code_len) break;
            if (token_satisfies(*mp, kind, spec, w) && !seen.count(w))
                return detail::fail("completeness: missing token \"" + w + "\"");
        }
    if (b.check_open_union) {
        if (kind != Kind::open) return detail::fail("open-union check needs kind open");
        auto& codes = std::get<OpenSpec>(spec.payload).codes;
        std::vector<Word> uniq(seen.begin(), seen.end());
        if (!opens_equal(*mp, uniq, codes))
            return detail::fail("union of token extents differs from the target open set");
    }
    AuditReport r;
    r.token_count = toks.size();
    return r;
}

inline AuditReport audit_space_name(ModelPtr mp, SpaceName t, const AuditBounds& b) {
    std::vector<Word> rtoks, stoks;
    try {
        rtoks = scan_tokens(t.r.run_rounds(b.rounds)).tokens;
        stoks = scan_tokens(t.s.run_rounds(b.rounds)).tokens;
    } catch (const std::exception& e) {
        return detail::fail(std::string("space name stream failed: ") + e.what());
    }

    std::set<Word> decided;
    std::set<Word> rset(rtoks.begin(), rtoks.end());
    for (auto& tok : rtoks) {
        RTok rt;
        try {
            rt = parse_r_token(tok);
        } catch (const MalformedName& e) {
            return detail::fail(std::string("bad membership token: ") + e.what());
        }
        if (rt.b != model_in_dom(*mp, rt.w))
            return detail::fail("wrong membership verdict for \"" + rt.w + "\"");
        if (!decided.insert(rt.w).second)
            return detail::fail("word decided twice: \"" + rt.w + "\"");
    }
    if (b.max_code_len > 0)
        for (std::uint64_t i = 0;; ++i) {
            Word w = lengthlex_word(i);
            if (w.size() > b.max_code_len) break;
            if (!decided.count(w)) return detail::fail("word not decided: \"" + w + "\"");
        }
    for (auto& w : b.required)
        if (!rset.count(w)) return detail::fail("missing membership token: \"" + w + "\"");

    // s-stream: witnesses must be sound; collect them per dom pair.
    std::map<std::pair<Word, Word>, std::vector<Word>> wit;
    std::set<Word> sset(stoks.begin(), stoks.end());
    for (auto& tok : stoks) {
        std::array<Word, 3> tr;
        try {
            tr = parse_s_token(tok);
        } catch (const MalformedName& e) {
            return detail::fail(std::string("bad witness token: ") + e.what());
        }
        try {
            if (!extent_subset_inter(*mp, tr[2], tr[0], tr[1]))
                return detail::fail("witness not inside intersection: \"" + tok + "\"");
        } catch (const BadCode& e) {
            return detail::fail(std::string("witness outside dom: ") + e.what());
        }
        wit[{tr[0], tr[1]}].push_back(tr[2]);
    }
    for (auto& w : b.required_s)
        if (!sset.count(w)) return detail::fail("missing witness token: \"" + w + "\"");

    if (b.exhaustive_witnesses) {
        auto codes = finite_dom_codes(*mp);
        if (!codes) return detail::fail("exhaustive witness check needs a finite model");
        for (auto& cu : *codes)
            for (auto& cv : *codes)
                // soundness above gives ⊆, so coverage of the intersection is equality
                if (!covers(*mp, finite_inter_spec(*mp, cu, cv), wit[{cu, cv}]))
                    return detail::fail("witness closure incomplete for pair (" + cu + "," + cv +
                                        ")");
    }
    for (auto& [u, v] : b.witness_pairs) {
        Ival a = interval_extent(u), c = interval_extent(v);
        Rat lo = std::max(a.lo, c.lo), hi = std::min(a.hi, c.hi);
        if (!(lo < hi)) return detail::fail("witness pair with empty intersection");
        Rat d = (hi - lo) / Rat(3);
        if (!covers(*mp, interval_set({{lo + d, hi - d}}), wit[{u, v}]))
            return detail::fail("witnesses for (" + u + "," + v +
                                ") do not reach one-third resolution");
    }
    AuditReport r;
    r.token_count = rtoks.size() + stoks.size();
    return r;
}

}  // namespace tte
