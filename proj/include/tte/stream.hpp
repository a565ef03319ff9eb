#pragma once
#include <exception>
#include <functional>
#include <memory>
#include <optional>
#include <set>
#include <vector>

#include "codec.hpp"

namespace tte {

// ======================================================================
// OmegaName: a demand-driven infinite symbol stream.
//
// The producer is a step function appending at least one symbol per call
// (engines append a "11" filler every round, so consumers can always make
// progress).  The produced prefix is cached, which makes pulls idempotent
// and lets several consumers share one upstream deterministically.
// ======================================================================

class OmegaName {
  public:
    using Step = std::function<void(std::string&)>;

    explicit OmegaName(Step step) : st_(std::make_shared<State>()) {
        st_->step = std::move(step);
    }

    // Constant stream: the given prefix, then "11" fillers.  The prefix
    // must end on an item boundary for the result to stay well-formed.
    static OmegaName from_prefix_then_filler(std::string prefix) {
        auto first = std::make_shared<bool>(true);
        return OmegaName([first, prefix = std::move(prefix)](std::string& buf) {
            if (*first) {
                *first = false;
                buf += prefix;
            }
            buf += "11";
        });
    }

    static OmegaName fillers() { return from_prefix_then_filler(""); }

    // Grow the cached prefix to at least n symbols.
    const std::string& pull(std::size_t n) {
        while (st_->buf.size() < n) round();
        return st_->buf;
    }

    // Run the producer for at least n total rounds.
    const std::string& run_rounds(std::uint64_t n) {
        while (st_->rounds < n) round();
        return st_->buf;
    }

    const std::string& buffer() const { return st_->buf; }
    std::uint64_t rounds() const { return st_->rounds; }
    std::size_t size() const { return st_->buf.size(); }

    char at(std::size_t i) {
        pull(i + 1);
        return st_->buf[i];
    }

  private:
    struct State {
        std::string buf;
        Step step;
        std::uint64_t rounds = 0;
        std::exception_ptr failure;
    };
    std::shared_ptr<State> st_;

    void round() {
        if (st_->failure) std::rethrow_exception(st_->failure);
        std::size_t before = st_->buf.size();
        try {
            st_->step(st_->buf);
        } catch (...) {
            st_->failure = std::current_exception();
            throw;
        }
        if (st_->buf.size() == before) {
            st_->failure = std::make_exception_ptr(
                std::logic_error("stream step made no progress"));
            std::rethrow_exception(st_->failure);
        }
        ++st_->rounds;
    }
};

// ======================================================================
// TokenLog: incremental token view of a well-formed stream.
// ======================================================================

class TokenLog {
  public:
    explicit TokenLog(OmegaName src) : src_(std::move(src)) {}

    std::size_t size() const { return toks_.size(); }
    const Word& at(std::size_t i) const { return toks_[i]; }
    const std::vector<Word>& tokens() const { return toks_; }
    std::size_t consumed() const { return fed_; }
    OmegaName& source() { return src_; }

    void advance_to(std::size_t target_symbols) {
        const std::string& buf = src_.pull(target_symbols);
        while (fed_ < buf.size() && fed_ < target_symbols) {
            if (auto t = sc_.feed(buf[fed_])) toks_.push_back(std::move(*t));
            ++fed_;
        }
    }

    void advance_by(std::size_t delta) { advance_to(fed_ + delta); }

    // Parse whatever the source has already produced without forcing it.
    void drain_available() {
        const std::string& buf = src_.buffer();
        while (fed_ < buf.size()) {
            if (auto t = sc_.feed(buf[fed_])) toks_.push_back(std::move(*t));
            ++fed_;
        }
    }

  private:
    OmegaName src_;
    TokenScanner sc_;
    std::size_t fed_ = 0;
    std::vector<Word> toks_;
};

// All tokens in the first n symbols of a stream.
inline std::vector<Word> tokens_in_prefix(OmegaName p, std::size_t n) {
    return scan_tokens(p.pull(n).substr(0, n)).tokens;
}

// ======================================================================
// Semidecision: a monotone accept/pending process advanced in unit steps.
// ======================================================================

class Semidecision {
  public:
    using Step = std::function<bool()>;

    explicit Semidecision(Step step) : st_(std::make_shared<State>()) {
        st_->step = std::move(step);
    }

    static Semidecision immediate(bool accept) {
        Semidecision sd([accept] { return accept; });
        if (accept) sd.step();
        return sd;
    }

    bool accepted() const { return st_->accepted; }
    std::uint64_t steps() const { return st_->steps; }

    bool step() {
        if (!st_->accepted) {
            ++st_->steps;
            if (st_->step()) st_->accepted = true;
        }
        return st_->accepted;
    }

  private:
    struct State {
        Step step;
        bool accepted = false;
        std::uint64_t steps = 0;
    };
    std::shared_ptr<State> st_;
};

enum class Verdict { accepted, pending };

inline Verdict run(Semidecision sd, std::uint64_t budget) {
    for (std::uint64_t i = 0; i < budget && !sd.accepted(); ++i) sd.step();
    return sd.accepted() ? Verdict::accepted : Verdict::pending;
}

// ======================================================================
// Candidate sources and emission engines.
// ======================================================================

// Deterministic stateful word source; a call may yield nothing this round
// (e.g. the source is waiting on upstream input).
using CandidateSource = std::function<std::optional<Word>()>;

inline CandidateSource lengthlex_words() {
    auto n = std::make_shared<std::uint64_t>(0);
    return [n]() -> std::optional<Word> { return lengthlex_word((*n)++); };
}

inline CandidateSource lengthlex_words_if(std::function<bool(const Word&)> keep) {
    auto n = std::make_shared<std::uint64_t>(0);
    return [n, keep = std::move(keep)]() -> std::optional<Word> {
        Word w = lengthlex_word((*n)++);
        if (keep(w)) return w;
        return std::nullopt;
    };
}

inline CandidateSource source_from_list(std::vector<Word> ws) {
    auto i = std::make_shared<std::size_t>(0);
    return [i, ws = std::move(ws)]() -> std::optional<Word> {
        if (*i < ws.size()) return ws[(*i)++];
        return std::nullopt;
    };
}

// Round-robin merge; one underlying call per call.
inline CandidateSource merge_sources(std::vector<CandidateSource> srcs) {
    auto k = std::make_shared<std::size_t>(0);
    return [k, srcs = std::move(srcs)]() -> std::optional<Word> {
        if (srcs.empty()) return std::nullopt;
        std::size_t i = (*k)++ % srcs.size();
        return srcs[i]();
    };
}

// One candidate per round, decided on the spot.  Every round emits a "11"
// filler first, then the block of the candidate if the predicate holds.
inline OmegaName emit_decided(CandidateSource cands, std::function<bool(const Word&)> pred) {
    return OmegaName([cands = std::move(cands), pred = std::move(pred)](std::string& buf) {
        buf += "11";
        if (auto w = cands())
            if (pred(*w)) buf += wrap(*w);
    });
}

// As emit_decided, but each accepted word is emitted at most once even if
// the source yields it repeatedly (overlapping merged sources).
inline OmegaName emit_decided_unique(CandidateSource cands,
                                     std::function<bool(const Word&)> pred) {
    auto seen = std::make_shared<std::set<Word>>();
    return emit_decided(std::move(cands), [seen, pred = std::move(pred)](const Word& w) {
        return pred(w) && seen->insert(w).second;
    });
}

// The given symbols, then the inner stream; one inner round per round.
inline OmegaName with_prefix(std::string prefix, OmegaName rest) {
    struct St {
        bool first = true;
        std::size_t cur = 0;
        OmegaName rest;
        std::string prefix;
        St(OmegaName r, std::string p) : rest(std::move(r)), prefix(std::move(p)) {}
    };
    auto st = std::make_shared<St>(std::move(rest), std::move(prefix));
    return OmegaName([st](std::string& buf) {
        if (st->first) {
            st->first = false;
            buf += st->prefix;
        }
        const std::string& ib = st->rest.run_rounds(st->rest.rounds() + 1);
        buf.append(ib, st->cur, ib.size() - st->cur);
        st->cur = ib.size();
    });
}

// Dovetailed verified emission.  Round n looks at (i, j) = unpair(n): if
// candidate i is already materialized its semidecision advances one step
// (emitting its block on acceptance, exactly once); otherwise one more
// candidate is requested from the source.  A candidate materialized with
// index c and accepting after b check steps is emitted within O((b+c)^2)
// rounds; each round appends a "11" filler, so the stream is productive.
inline OmegaName emit_verified(CandidateSource cands,
                               std::function<Semidecision(const Word&)> check) {
    struct EV {
        CandidateSource cands;
        std::function<Semidecision(const Word&)> check;
        std::vector<Word> words;
        std::vector<Semidecision> active;
        std::vector<bool> emitted;
        std::uint64_t n = 0;
    };
    auto ev = std::make_shared<EV>();
    ev->cands = std::move(cands);
    ev->check = std::move(check);
    return OmegaName([ev](std::string& buf) {
        buf += "11";
        auto [i, j] = unpair_nat(ev->n++);
        (void)j;
        if (i < ev->active.size()) {
            if (!ev->emitted[i] && ev->active[i].step()) {
                ev->emitted[i] = true;
                buf += wrap(ev->words[i]);
            }
        } else if (auto w = ev->cands()) {
            ev->words.push_back(*w);
            ev->active.push_back(ev->check(*w));
            ev->emitted.push_back(false);
            if (ev->active.back().accepted()) {
                ev->emitted.back() = true;
                buf += wrap(ev->words.back());
            }
        }
    });
}

// ======================================================================
// Stream tupling.
//
// Finitely many streams interleave symbol-wise round robin; countably
// many via the Cantor pairing on positions.
// ======================================================================

inline OmegaName interleave_streams(std::vector<OmegaName> ps) {
    if (ps.empty()) throw std::invalid_argument("interleave: no streams");
    auto k = std::make_shared<std::size_t>(0);
    return OmegaName([k, ps = std::move(ps)](std::string& buf) mutable {
        for (auto& p : ps) buf.push_back(p.at(*k));
        ++*k;
    });
}

inline OmegaName deinterleave_stream(OmegaName p, std::size_t i, std::size_t n) {
    if (i >= n) throw std::invalid_argument("deinterleave: index out of range");
    auto j = std::make_shared<std::size_t>(0);
    return OmegaName([j, i, n, p = std::move(p)](std::string& buf) mutable {
        buf.push_back(p.at((*j)++ * n + i));
    });
}

inline OmegaName interleave_family(std::function<OmegaName(std::size_t)> f) {
    struct Fam {
        std::function<OmegaName(std::size_t)> f;
        std::vector<OmegaName> cache;
        std::uint64_t m = 0;
        OmegaName& get(std::size_t i) {
            while (cache.size() <= i) cache.push_back(f(cache.size()));
            return cache[i];
        }
    };
    auto fam = std::make_shared<Fam>();
    fam->f = std::move(f);
    return OmegaName([fam](std::string& buf) {
        auto [i, j] = unpair_nat(fam->m++);
        buf.push_back(fam->get(i).at(j));
    });
}

inline OmegaName deinterleave_family(OmegaName p, std::size_t i) {
    auto j = std::make_shared<std::uint64_t>(0);
    return OmegaName([j, i, p = std::move(p)](std::string& buf) mutable {
        buf.push_back(p.at(pair_nat(i, (*j)++)));
    });
}

// Sum tagging at stream level: 1^n 0 then the payload stream.
inline OmegaName tag_union_stream(std::uint64_t n, OmegaName p) {
    auto first = std::make_shared<bool>(true);
    auto k = std::make_shared<std::size_t>(0);
    return OmegaName([first, k, n, p = std::move(p)](std::string& buf) mutable {
        if (*first) {
            *first = false;
            buf += arity_tag(n);
        }
        buf.push_back(p.at((*k)++));
    });
}

// Reads the 1^n 0 tag off the front; returns (n, payload stream).
inline std::pair<std::uint64_t, OmegaName> untag_union_stream(OmegaName p) {
    std::uint64_t n = 0;
    while (p.at(n) == '1') ++n;
    if (n == 0) throw MalformedName("untag: stream does not start 1^n 0 with n >= 1");
    auto k = std::make_shared<std::size_t>(n + 1);
    return {n, OmegaName([k, p = std::move(p)](std::string& buf) mutable {
                buf.push_back(p.at((*k)++));
            })};
}

}  // namespace tte
