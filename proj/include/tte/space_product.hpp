#pragma once

#include <array>
#include <deque>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "names.hpp"

namespace tte {

namespace detail {

// ======================================================================
// Feeds.
//
// An engine round advances each input by one producer round, with a
// 32-symbol floor so per-symbol adapters (deinterleaved components) still
// move at a useful rate, then hands every newly parsed token to the
// engine exactly once.
// ======================================================================

struct LogFeed {
    std::shared_ptr<TokenLog> log;
    std::size_t next = 0;

    explicit LogFeed(OmegaName p) : log(std::make_shared<TokenLog>(std::move(p))) {}

    template <class F>
    void pump(F&& on_token) {
        OmegaName& src = log->source();
        src.run_rounds(src.rounds() + 1);
        src.pull(log->consumed() + 32);
        log->drain_available();
        while (next < log->size()) on_token(log->at(next++));
    }
};

// Membership feed: parses verdict tokens, rejects double decisions, and
// keeps both the map and the confirmation order.
struct VerdictFeed {
    LogFeed feed;
    std::map<Word, bool> verdict;
    std::vector<RTok> order;

    explicit VerdictFeed(OmegaName r) : feed(std::move(r)) {}

    template <class F>
    void pump(F&& on_confirm) {
        feed.pump([&](const Word& tok) {
            RTok t = parse_r_token(tok);
            if (!verdict.emplace(t.w, t.b).second)
                throw MalformedName("membership stream decides a word twice: \"" + t.w + "\"");
            order.push_back(t);
            on_confirm(order.back());
        });
    }
    void pump() {
        pump([](const RTok&) {});
    }
};

inline Word verdict_token(const Word& w, bool b) { return tuple_words({w, b ? "1" : "0"}); }

// Fair enumeration of all index pairs over two growing token lists.  Each
// left index starts a chain (i,0),(i,1),...; a chain parks while its next
// right index is missing and resumes, in arrival order, once it exists.
// When one side stops producing, the live chains still drain completely.
struct PairSchedule {
    std::size_t nl = 0, nr = 0;
    std::deque<std::pair<std::size_t, std::size_t>> ready;
    std::map<std::size_t, std::vector<std::size_t>> parked;

    void grow(std::size_t left_count, std::size_t right_count) {
        while (nr < right_count) {
            auto it = parked.find(nr);
            if (it != parked.end()) {
                for (std::size_t i : it->second) ready.emplace_back(i, nr);
                parked.erase(it);
            }
            ++nr;
        }
        while (nl < left_count) {
            if (nr > 0)
                ready.emplace_back(nl, 0);
            else
                parked[0].push_back(nl);
            ++nl;
        }
    }
    std::optional<std::pair<std::size_t, std::size_t>> take() {
        if (ready.empty()) return std::nullopt;
        auto cell = ready.front();
        ready.pop_front();
        std::size_t j = cell.second + 1;
        if (j < nr)
            ready.emplace_back(cell.first, j);
        else
            parked[j].push_back(cell.first);
        return cell;
    }
};

}  // namespace detail

// ======================================================================
// Binary product.
//
// Membership: words that are not coded pairs are re-enumerated with
// verdict 0; coded pairs <u1,u2> are decided on the diagonal over the two
// factors' confirmation orders, so every word is decided exactly once.
// Witnesses: componentwise pairs of factor witnesses, every index pair
// eventually, a few cells per round.
// ======================================================================

inline SpaceName product_space_2(const SpaceName& t1, const SpaceName& t2) {
    struct RState {
        detail::VerdictFeed a, b;
        std::uint64_t lex = 0, cell = 0;
        RState(OmegaName x, OmegaName y) : a(std::move(x)), b(std::move(y)) {}
    };
    auto rs = std::make_shared<RState>(t1.r, t2.r);
    OmegaName r([rs](std::string& buf) {
        buf += "11";
        rs->a.pump();
        rs->b.pump();
        Word w = lengthlex_word(rs->lex++);
        if (!is_tuple_of_arity(w, 2)) buf += wrap(detail::verdict_token(w, false));
        for (int k = 0; k < 2; ++k) {
            auto [i, j] = shell_cell(rs->cell);
            if (i >= rs->a.order.size() || j >= rs->b.order.size()) break;
            ++rs->cell;
            const RTok &x = rs->a.order[i], &y = rs->b.order[j];
            buf += wrap(detail::verdict_token(tuple_words({x.w, y.w}), x.b && y.b));
        }
    });

    struct SState {
        detail::LogFeed a, b;
        std::vector<std::array<Word, 3>> ta, tb;
        detail::PairSchedule sched;
        SState(OmegaName x, OmegaName y) : a(std::move(x)), b(std::move(y)) {}
    };
    auto ss = std::make_shared<SState>(t1.s, t2.s);
    OmegaName s([ss](std::string& buf) {
        buf += "11";
        ss->a.pump([&](const Word& tok) { ss->ta.push_back(parse_s_token(tok)); });
        ss->b.pump([&](const Word& tok) { ss->tb.push_back(parse_s_token(tok)); });
        ss->sched.grow(ss->ta.size(), ss->tb.size());
        for (int k = 0; k < 8; ++k) {
            auto cell = ss->sched.take();
            if (!cell) break;
            const auto& x = ss->ta[cell->first];
            const auto& y = ss->tb[cell->second];
            buf += wrap(tuple_words({tuple_words({x[0], y[0]}), tuple_words({x[1], y[1]}),
                                     tuple_words({x[2], y[2]})}));
        }
    });
    return {r, s};
}

// Left-nested finite product; a single factor is returned as is.
inline SpaceName product_space_n(const std::vector<SpaceName>& ts) {
    if (ts.empty()) throw SpecMismatch("product of zero spaces");
    SpaceName acc = ts[0];
    for (std::size_t i = 1; i < ts.size(); ++i) acc = product_space_2(acc, ts[i]);
    return acc;
}

// ======================================================================
// Countable product.
//
// The input carries the factor names <t1,t2,...> as one stream, component
// i at the positions pair_nat(i,.).  Domain words are the flat tuples
// <u1..uk>, k >= 1, with every component accepted by its factor.
// ======================================================================

inline OmegaName omega_space_input(std::function<SpaceName(std::size_t)> f) {
    return interleave_family([f = std::move(f)](std::size_t i) { return f(i).combined(); });
}

inline SpaceName omega_component(const OmegaName& q, std::size_t i) {
    return SpaceName::from_combined(deinterleave_family(q, i));
}

inline SpaceName product_space_omega(const OmegaName& q) {
    // Membership.  Non-tuple words (including the empty word) get verdict
    // 0 from the word enumeration; tuple words come from the list coding
    // of index vectors, one per round, and wait on the factor verdicts of
    // their components.  Factor i is pumped on the rounds with
    // unpair_nat(round).first == i.
    struct Pending {
        Word w;
        std::size_t missing = 0;
        bool verdict = true;
    };
    struct RState {
        OmegaName q;
        std::vector<detail::VerdictFeed> feeds;
        std::vector<Pending> pend;
        std::map<std::pair<std::size_t, Word>, std::vector<std::size_t>> waiting;
        std::vector<std::size_t> ripe;
        std::uint64_t lex = 0, tup = 0, round = 0;

        explicit RState(OmegaName qq) : q(std::move(qq)) {}

        detail::VerdictFeed& feed(std::size_t i) {
            while (feeds.size() <= i) feeds.emplace_back(omega_component(q, feeds.size()).r);
            return feeds[i];
        }
        void settle(std::size_t fi, const RTok& t) {
            auto it = waiting.find({fi, t.w});
            if (it == waiting.end()) return;
            for (std::size_t id : it->second) {
                Pending& p = pend[id];
                p.verdict = p.verdict && t.b;
                if (--p.missing == 0) ripe.push_back(id);
            }
            waiting.erase(it);
        }
        void add_candidate(std::uint64_t m) {
            std::vector<std::uint64_t> idx = nat_to_list(m);
            std::vector<Word> parts;
            for (std::uint64_t a : idx) parts.push_back(lengthlex_word(a));
            std::size_t id = pend.size();
            pend.push_back({tuple_words(parts), 0, true});
            for (std::size_t i = 0; i < parts.size(); ++i) {
                auto& vf = feed(i);
                auto known = vf.verdict.find(parts[i]);
                if (known != vf.verdict.end()) {
                    pend[id].verdict = pend[id].verdict && known->second;
                } else {
                    ++pend[id].missing;
                    waiting[{i, parts[i]}].push_back(id);
                }
            }
            if (pend[id].missing == 0) ripe.push_back(id);
        }
    };
    auto rs = std::make_shared<RState>(q);
    OmegaName r([rs](std::string& buf) {
        buf += "11";
        std::size_t fi = static_cast<std::size_t>(unpair_nat(rs->round++).first);
        rs->feed(fi).pump([&](const RTok& t) { rs->settle(fi, t); });
        Word w = lengthlex_word(rs->lex++);
        auto parts = try_untuple(w);
        if (!parts || parts->empty()) buf += wrap(detail::verdict_token(w, false));
        rs->add_candidate(++rs->tup);
        for (std::size_t id : rs->ripe)
            buf += wrap(detail::verdict_token(rs->pend[id].w, rs->pend[id].verdict));
        rs->ripe.clear();
    });

    // Witnesses.  Block (m,n) reads the witness stream of the finite
    // product of the first max(m,n) factors; an entry whose shorter side
    // agrees with the longer one beyond its arity projects to a witness
    // triple of flat tuples of arities (m, n, max(m,n)).  The blocks are
    // disjoint, so the diagonal over them lists the whole union.
    struct Block {
        std::size_t m, n;
        detail::LogFeed feed;
        Block(std::size_t mm, std::size_t nn, OmegaName src)
            : m(mm), n(nn), feed(std::move(src)) {}
    };
    struct SState {
        OmegaName q;
        std::vector<SpaceName> finite;  // finite[k] = product of factors 0..k
        std::map<std::uint64_t, Block> blocks;
        std::uint64_t round = 0;

        explicit SState(OmegaName qq) : q(std::move(qq)) {}

        const SpaceName& finite_product(std::size_t n) {  // first n factors
            if (finite.empty()) finite.push_back(omega_component(q, 0));
            while (finite.size() < n)
                finite.push_back(
                    product_space_2(finite.back(), omega_component(q, finite.size())));
            return finite[n - 1];
        }
        Block& block(std::uint64_t e) {
            auto it = blocks.find(e);
            if (it != blocks.end()) return it->second;
            auto [m0, n0] = unpair_nat(e);
            std::size_t m = static_cast<std::size_t>(m0) + 1,
                        n = static_cast<std::size_t>(n0) + 1;
            OmegaName src = finite_product(std::max(m, n)).s;
            return blocks.emplace(e, Block(m, n, std::move(src))).first->second;
        }
    };
    auto ss = std::make_shared<SState>(q);
    OmegaName s([ss](std::string& buf) {
        buf += "11";
        Block& blk = ss->block(unpair_nat(ss->round++).first);
        std::size_t big = std::max(blk.m, blk.n), small = std::min(blk.m, blk.n);
        blk.feed.pump([&](const Word& tok) {
            std::array<Word, 3> tr = parse_s_token(tok);
            std::array<std::vector<Word>, 3> flat;
            for (int k = 0; k < 3; ++k)
                flat[k] = untuple_words(unnest_word(arity_tag(big) + tr[k]));
            const auto &longer = blk.m <= blk.n ? flat[1] : flat[0],
                       &shorter = blk.m <= blk.n ? flat[0] : flat[1];
            for (std::size_t i = small; i < big; ++i)
                if (shorter[i] != longer[i]) return;
            std::vector<Word> head(shorter.begin(), shorter.begin() + small);
            const auto& u = blk.m <= blk.n ? head : flat[0];
            const auto& v = blk.m <= blk.n ? flat[1] : head;
            buf += wrap(
                tuple_words({tuple_words(u), tuple_words(v), tuple_words(flat[2])}));
        });
    });
    return {r, s};
}

// ======================================================================
// Factor extraction.
//
// The anchor is the first confirmed coded pair; slicing the product
// through it recovers one factor.  Membership tokens and witness triples
// seen before the anchor is known are replayed afterwards, so nothing is
// lost.
// ======================================================================

inline SpaceName factor_2(const SpaceName& t, std::size_t i) {
    if (i != 1 && i != 2) throw SpecMismatch("factor index must be 1 or 2");

    struct RState {
        detail::LogFeed feed;
        std::size_t idx;
        std::optional<std::pair<Word, Word>> anchor;
        std::vector<RTok> backlog;
        RState(OmegaName r, std::size_t i_) : feed(std::move(r)), idx(i_) {}
    };
    auto rs = std::make_shared<RState>(t.r, i);
    OmegaName r([rs](std::string& buf) {
        buf += "11";
        rs->feed.pump([&](const Word& tok) {
            RTok k = parse_r_token(tok);
            if (!rs->anchor && k.b) {
                auto parts = try_untuple(k.w);
                if (parts && parts->size() == 2) rs->anchor = {{(*parts)[0], (*parts)[1]}};
            }
            rs->backlog.push_back(std::move(k));
        });
        if (!rs->anchor) return;
        for (const RTok& k : rs->backlog) {
            auto parts = try_untuple(k.w);
            if (!parts || parts->size() != 2) continue;
            if (rs->idx == 1 && (*parts)[1] == rs->anchor->second)
                buf += wrap(detail::verdict_token((*parts)[0], k.b));
            if (rs->idx == 2 && (*parts)[0] == rs->anchor->first)
                buf += wrap(detail::verdict_token((*parts)[1], k.b));
        }
        rs->backlog.clear();
    });

    struct SState {
        detail::LogFeed rfeed, sfeed;
        std::size_t idx;
        std::optional<std::pair<Word, Word>> anchor;
        std::vector<std::array<Word, 3>> backlog;
        SState(OmegaName r, OmegaName s, std::size_t i_)
            : rfeed(std::move(r)), sfeed(std::move(s)), idx(i_) {}
    };
    auto st = std::make_shared<SState>(t.r, t.s, i);
    OmegaName s([st](std::string& buf) {
        buf += "11";
        if (!st->anchor)
            st->rfeed.pump([&](const Word& tok) {
                RTok k = parse_r_token(tok);
                if (st->anchor || !k.b) return;
                auto parts = try_untuple(k.w);
                if (parts && parts->size() == 2) st->anchor = {{(*parts)[0], (*parts)[1]}};
            });
        st->sfeed.pump([&](const Word& tok) { st->backlog.push_back(parse_s_token(tok)); });
        if (!st->anchor) return;
        for (const auto& tr : st->backlog) {
            std::array<std::vector<Word>, 3> p;
            for (int k = 0; k < 3; ++k) {
                auto parts = try_untuple(tr[k]);
                if (!parts || parts->size() != 2)
                    throw MalformedName("product witness is not a triple of coded pairs");
                p[k] = *parts;
            }
            if (st->idx == 1) {
                if (p[0][1] == st->anchor->second && p[1][1] == st->anchor->second)
                    buf += wrap(tuple_words({p[0][0], p[1][0], p[2][0]}));
            } else {
                if (p[0][0] == st->anchor->first && p[1][0] == st->anchor->first)
                    buf += wrap(tuple_words({p[0][1], p[1][1], p[2][1]}));
            }
        }
        st->backlog.clear();
    });
    return {r, s};
}

// Factor i of a left-nested n-fold product: peel the outer pairs off the
// left until the wanted factor is the right component (or all that is
// left).
inline SpaceName factor_n(const SpaceName& t, std::size_t i, std::size_t n) {
    if (n == 0 || i == 0 || i > n) throw SpecMismatch("factor index out of range");
    if (n == 1) return t;
    if (i == n) return factor_2(t, 2);
    return factor_n(factor_2(t, 1), i, n - 1);
}

// ======================================================================
// Head and tail of a countable product.  The nonempty base guarantee of
// the deeper factors makes the coordinate slices sound.
// ======================================================================

inline SpaceName head_omega(const SpaceName& t) {
    // anchor: tail component of the first confirmed arity-2 tuple
    struct RState {
        detail::LogFeed feed;
        std::optional<Word> tail;
        std::vector<RTok> backlog;
        explicit RState(OmegaName r) : feed(std::move(r)) {}
    };
    auto rs = std::make_shared<RState>(t.r);
    OmegaName r([rs](std::string& buf) {
        buf += "11";
        rs->feed.pump([&](const Word& tok) {
            RTok k = parse_r_token(tok);
            if (!rs->tail && k.b) {
                auto parts = try_untuple(k.w);
                if (parts && parts->size() == 2) rs->tail = (*parts)[1];
            }
            rs->backlog.push_back(std::move(k));
        });
        if (!rs->tail) return;
        for (const RTok& k : rs->backlog) {
            auto parts = try_untuple(k.w);
            if (parts && parts->size() == 2 && (*parts)[1] == *rs->tail)
                buf += wrap(detail::verdict_token((*parts)[0], k.b));
        }
        rs->backlog.clear();
    });

    struct SState {
        detail::LogFeed rfeed, sfeed;
        std::optional<Word> tail;
        std::vector<std::array<Word, 3>> backlog;
        SState(OmegaName r, OmegaName s) : rfeed(std::move(r)), sfeed(std::move(s)) {}
    };
    auto st = std::make_shared<SState>(t.r, t.s);
    OmegaName s([st](std::string& buf) {
        buf += "11";
        if (!st->tail)
            st->rfeed.pump([&](const Word& tok) {
                RTok k = parse_r_token(tok);
                if (st->tail || !k.b) return;
                auto parts = try_untuple(k.w);
                if (parts && parts->size() == 2) st->tail = (*parts)[1];
            });
        st->sfeed.pump([&](const Word& tok) { st->backlog.push_back(parse_s_token(tok)); });
        if (!st->tail) return;
        for (const auto& tr : st->backlog) {
            std::array<std::vector<Word>, 3> p;
            for (int k = 0; k < 3; ++k) {
                auto parts = try_untuple(tr[k]);
                if (!parts || parts->empty())
                    throw MalformedName("witness component is not a coded tuple");
                p[k] = *parts;
            }
            if (p[0].size() == 2 && p[0][1] == *st->tail && p[1].size() == 2 &&
                p[1][1] == *st->tail)
                buf += wrap(tuple_words({p[0][0], p[1][0], p[2][0]}));
        }
        st->backlog.clear();
    });
    return {r, s};
}

inline SpaceName tail_omega(const SpaceName& t) {
    // anchor: head component of the first confirmed tuple
    struct RState {
        detail::LogFeed feed;
        std::optional<Word> head;
        std::vector<RTok> backlog;
        explicit RState(OmegaName r) : feed(std::move(r)) {}
    };
    auto rs = std::make_shared<RState>(t.r);
    OmegaName r([rs](std::string& buf) {
        buf += "11";
        rs->feed.pump([&](const Word& tok) {
            RTok k = parse_r_token(tok);
            if (!rs->head && k.b) {
                auto parts = try_untuple(k.w);
                if (parts && !parts->empty()) rs->head = (*parts)[0];
            }
            rs->backlog.push_back(std::move(k));
        });
        if (!rs->head) return;
        for (const RTok& k : rs->backlog) {
            auto parts = try_untuple(k.w);
            if (!parts || parts->empty()) {
                // non-tuple words (and the empty word) are shared between
                // the product and its tail, with the same verdict 0
                buf += wrap(detail::verdict_token(k.w, k.b));
            } else if (parts->size() >= 2 && (*parts)[0] == *rs->head) {
                buf += wrap(detail::verdict_token(
                    tuple_words({parts->begin() + 1, parts->end()}), k.b));
            }
        }
        rs->backlog.clear();
    });

    struct SState {
        detail::LogFeed rfeed, sfeed;
        std::optional<Word> head;
        std::vector<std::array<Word, 3>> backlog;
        SState(OmegaName r, OmegaName s) : rfeed(std::move(r)), sfeed(std::move(s)) {}
    };
    auto st = std::make_shared<SState>(t.r, t.s);
    OmegaName s([st](std::string& buf) {
        buf += "11";
        if (!st->head)
            st->rfeed.pump([&](const Word& tok) {
                RTok k = parse_r_token(tok);
                if (st->head || !k.b) return;
                auto parts = try_untuple(k.w);
                if (parts && !parts->empty()) st->head = (*parts)[0];
            });
        st->sfeed.pump([&](const Word& tok) { st->backlog.push_back(parse_s_token(tok)); });
        if (!st->head) return;
        for (const auto& tr : st->backlog) {
            std::array<std::vector<Word>, 3> p;
            for (int k = 0; k < 3; ++k) {
                auto parts = try_untuple(tr[k]);
                if (!parts || parts->empty())
                    throw MalformedName("witness component is not a coded tuple");
                p[k] = *parts;
            }
            // a witness whose third tuple has arity 1 names no tail base
            // element (its tail extent is the whole space), so it is
            // skipped; triples produced here always carry longer thirds
            if (p[0].size() < 2 || p[0][0] != *st->head || p[1].size() < 2 ||
                p[1][0] != *st->head || p[2].size() < 2)
                continue;
            buf += wrap(tuple_words({tuple_words({p[0].begin() + 1, p[0].end()}),
                                     tuple_words({p[1].begin() + 1, p[1].end()}),
                                     tuple_words({p[2].begin() + 1, p[2].end()})}));
        }
        st->backlog.clear();
    });
    return {r, s};
}

// ======================================================================
// Coordinate recodings.  dom_map is a bijection from the input's coded
// shape onto the output's; everything outside the output shape is
// re-enumerated with verdict 0, so membership stays exactly-once.
// ======================================================================

namespace detail {

inline SpaceName recode_space(const SpaceName& t,
                              std::function<std::optional<Word>(const Word&)> dom_map,
                              std::function<bool(const Word&)> out_shape) {
    struct RState {
        LogFeed feed;
        std::function<std::optional<Word>(const Word&)> map;
        std::function<bool(const Word&)> shape;
        std::uint64_t lex = 0;
        RState(OmegaName r, std::function<std::optional<Word>(const Word&)> m,
               std::function<bool(const Word&)> sh)
            : feed(std::move(r)), map(std::move(m)), shape(std::move(sh)) {}
    };
    auto rs = std::make_shared<RState>(t.r, dom_map, out_shape);
    OmegaName r([rs](std::string& buf) {
        buf += "11";
        rs->feed.pump([&](const Word& tok) {
            RTok k = parse_r_token(tok);
            if (auto z = rs->map(k.w)) buf += wrap(verdict_token(*z, k.b));
        });
        Word w = lengthlex_word(rs->lex++);
        if (!rs->shape(w)) buf += wrap(verdict_token(w, false));
    });

    struct SState {
        LogFeed feed;
        std::function<std::optional<Word>(const Word&)> map;
        SState(OmegaName s, std::function<std::optional<Word>(const Word&)> m)
            : feed(std::move(s)), map(std::move(m)) {}
    };
    auto st = std::make_shared<SState>(t.s, std::move(dom_map));
    OmegaName s([st](std::string& buf) {
        buf += "11";
        st->feed.pump([&](const Word& tok) {
            std::array<Word, 3> tr = parse_s_token(tok);
            std::array<Word, 3> out;
            for (int k = 0; k < 3; ++k) {
                auto z = st->map(tr[k]);
                if (!z) throw MalformedName("witness outside the coded domain: \"" + tr[k] + "\"");
                out[k] = std::move(*z);
            }
            buf += wrap(tuple_words({out[0], out[1], out[2]}));
        });
    });
    return {r, s};
}

}  // namespace detail

inline SpaceName swap_2(const SpaceName& t) {
    auto f = [](const Word& w) -> std::optional<Word> {
        auto p = try_untuple(w);
        if (!p || p->size() != 2) return std::nullopt;
        return tuple_words({(*p)[1], (*p)[0]});
    };
    auto shape = [](const Word& w) { return is_tuple_of_arity(w, 2); };
    return detail::recode_space(t, f, shape);
}

// <<a,b>,c>  ->  <a,<b,c>>
inline SpaceName assoc_right(const SpaceName& t) {
    auto f = [](const Word& w) -> std::optional<Word> {
        auto p = try_untuple(w);
        if (!p || p->size() != 2) return std::nullopt;
        auto q = try_untuple((*p)[0]);
        if (!q || q->size() != 2) return std::nullopt;
        return tuple_words({(*q)[0], tuple_words({(*q)[1], (*p)[1]})});
    };
    auto shape = [](const Word& w) {
        auto p = try_untuple(w);
        return p && p->size() == 2 && is_tuple_of_arity((*p)[1], 2);
    };
    return detail::recode_space(t, f, shape);
}

// <a,<b,c>>  ->  <<a,b>,c>
inline SpaceName assoc_left(const SpaceName& t) {
    auto f = [](const Word& w) -> std::optional<Word> {
        auto p = try_untuple(w);
        if (!p || p->size() != 2) return std::nullopt;
        auto q = try_untuple((*p)[1]);
        if (!q || q->size() != 2) return std::nullopt;
        return tuple_words({tuple_words({(*p)[0], (*q)[0]}), (*q)[1]});
    };
    auto shape = [](const Word& w) {
        auto p = try_untuple(w);
        return p && p->size() == 2 && is_tuple_of_arity((*p)[0], 2);
    };
    return detail::recode_space(t, f, shape);
}

inline SpaceName duplicate(const SpaceName& t) { return product_space_2(t, t); }

}  // namespace tte
