#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <map>

#include "tte/names.hpp"
#include "tte/stream.hpp"

using namespace tte;

namespace {

std::map<Word, int> token_counts(OmegaName p, std::size_t n) {
    std::map<Word, int> m;
    for (auto& t : tokens_in_prefix(p, n)) ++m[t];
    return m;
}

// Raw (non-grammar) synthetic stream with symbol j = bit(i ^ j).
OmegaName raw_stream(std::size_t i) {
    auto j = std::make_shared<std::size_t>(0);
    return OmegaName([i, j](std::string& buf) {
        buf.push_back(((i ^ (*j)++) & 1) ? '1' : '0');
    });
}

}  // namespace

TEST_CASE("pull is monotone, deterministic, and chunking-independent") {
    auto mk = [] {
        auto n = std::make_shared<int>(0);
        return OmegaName([n](std::string& buf) {
            buf += "11";
            if (*n % 3 == 0) buf += wrap(lengthlex_word(*n / 3));
            ++*n;
        });
    };
    OmegaName a = mk(), b = mk();
    std::string big = a.pull(500).substr(0, 500);
    std::string acc;
    for (std::size_t n = 1; acc.size() < 500; n = n * 2 + 1) acc = b.pull(n);
    REQUIRE(acc.substr(0, 500) == big);
    REQUIRE(a.pull(100).substr(0, 100) == big.substr(0, 100));
}

TEST_CASE("prefix-then-filler stream") {
    OmegaName p = OmegaName::from_prefix_then_filler(wrap("01"));
    std::string got = p.pull(20).substr(0, 20);
    REQUIRE(got == "110001011" + std::string("11111111111"));
    REQUIRE(tokens_in_prefix(p, 64) == std::vector<Word>{"01"});
}

TEST_CASE("unproductive steps poison the stream") {
    OmegaName p([](std::string&) {});
    REQUIRE_THROWS_AS(p.pull(1), std::logic_error);
    REQUIRE_THROWS_AS(p.pull(1), std::logic_error);

    auto n = std::make_shared<int>(0);
    OmegaName q([n](std::string& buf) {
        if (++*n > 3) throw MalformedName("upstream died");
        buf += "11";
    });
    REQUIRE(q.pull(6).substr(0, 6) == "111111");
    REQUIRE_THROWS_AS(q.pull(7), MalformedName);
    REQUIRE_THROWS_AS(q.pull(7), MalformedName);
}

TEST_CASE("token view of names") {
    SECTION("filler-only name has no tokens") {
        REQUIRE(tokens_in_prefix(OmegaName::fillers(), 512).empty());
    }
    SECTION("blocks surface in stream order") {
        OmegaName p = OmegaName::from_prefix_then_filler("11" + wrap("0") + "11" + wrap("00"));
        REQUIRE(tokens_in_prefix(p, 64) == std::vector<Word>{"0", "00"});
    }
    SECTION("raw interleaved stream is rejected by the parser") {
        OmegaName raw = interleave_streams(
            {OmegaName::fillers(), OmegaName::from_prefix_then_filler(wrap("0") + wrap("0"))});
        TokenLog log(raw);
        REQUIRE_THROWS_AS(log.advance_to(16), MalformedName);
    }
    SECTION("incremental log equals batch scan") {
        OmegaName p = emit_decided(lengthlex_words(),
                                   [](const Word& w) { return w.size() % 2 == 0; });
        TokenLog log(p);
        for (int i = 0; i < 40; ++i) log.advance_by(7);
        auto batch = scan_tokens(p.pull(280).substr(0, 280)).tokens;
        REQUIRE(log.tokens() == batch);
        REQUIRE(log.consumed() == 280);
    }
}

TEST_CASE("budgeted semidecision runs") {
    auto accept_at = [](int k) {
        auto c = std::make_shared<int>(0);
        return Semidecision([c, k] { return ++*c >= k; });
    };
    SECTION("accepts inside budget") {
        REQUIRE(run(accept_at(3), 10) == Verdict::accepted);
    }
    SECTION("pending when budget too small") {
        REQUIRE(run(accept_at(3), 2) == Verdict::pending);
    }
    SECTION("false property stays pending") {
        REQUIRE(run(Semidecision([] { return false; }), 100000) == Verdict::pending);
    }
    SECTION("acceptance is monotone and shared") {
        Semidecision sd = accept_at(2);
        Semidecision alias = sd;
        REQUIRE(!sd.accepted());
        sd.step();
        sd.step();
        REQUIRE(alias.accepted());
        alias.step();
        REQUIRE(alias.steps() == 2);  // steps after acceptance are no-ops
        REQUIRE(run(sd, 0) == Verdict::accepted);
    }
}

TEST_CASE("length-lex word source") {
    CandidateSource src = lengthlex_words();
    std::vector<Word> first;
    for (int i = 0; i < 15; ++i) first.push_back(*src());
    REQUIRE(std::vector<Word>(first.begin(), first.begin() + 5) ==
            std::vector<Word>{"", "0", "1", "00", "01"});
    REQUIRE(first[6] == "11");
    for (unsigned len = 0; len <= 3; ++len)
        for (unsigned v = 0; v < (1u << len); ++v) {
            Word w;
            for (unsigned b = len; b-- > 0;) w.push_back((v >> b) & 1 ? '1' : '0');
            REQUIRE(std::find(first.begin(), first.end(), w) != first.end());
        }
}

TEST_CASE("decided emission filters candidates in order") {
    auto in_d = [](const Word& w) { return w == "0" || w == "110" || w == "0001"; };
    OmegaName p = emit_decided(lengthlex_words(), in_d);
    REQUIRE(tokens_in_prefix(p, p.run_rounds(40).size()) ==
            std::vector<Word>{"0", "110", "0001"});
    OmegaName q = emit_decided(lengthlex_words(), in_d);
    REQUIRE(q.pull(300).substr(0, 300) == p.pull(300).substr(0, 300));
}

TEST_CASE("verified emission") {
    SECTION("token set of an accepting check over a finite source") {
        auto mk = [] {
            return emit_verified(
                source_from_list({"", "0", "1", "00", "01", "10", "11"}),
                [](const Word& w) {
                    return Semidecision([w] { return w.find('1') != std::string::npos; });
                });
        };
        OmegaName p = mk();
        p.run_rounds(200);
        auto counts = token_counts(p, p.size());
        REQUIRE(counts == std::map<Word, int>{{"1", 1}, {"01", 1}, {"10", 1}, {"11", 1}});
        OmegaName q = mk();
        REQUIRE(q.pull(400).substr(0, 400) == p.pull(400).substr(0, 400));
    }
    SECTION("never-accepting check yields a filler-only name") {
        OmegaName p = emit_verified(lengthlex_words(),
                                    [](const Word&) { return Semidecision::immediate(false); });
        const std::string& buf = p.run_rounds(100);
        REQUIRE(buf == std::string(200, '1'));
        REQUIRE(tokens_in_prefix(p, 200).empty());
    }
    SECTION("membership in a finite set accepted after |w| steps") {
        std::vector<Word> d = {"0", "110", "0001"};
        OmegaName p = emit_verified(lengthlex_words(), [d](const Word& w) {
            auto c = std::make_shared<std::size_t>(0);
            bool member = std::find(d.begin(), d.end(), w) != d.end();
            return Semidecision([c, member, len = w.size()] {
                return member && ++*c >= std::max<std::size_t>(len, 1);
            });
        });
        // Worst candidate index 16 ("0001"); pair(16, 4) bounds its accept round.
        p.run_rounds(400);
        auto counts = token_counts(p, p.size());
        REQUIRE(counts == std::map<Word, int>{{"0", 1}, {"110", 1}, {"0001", 1}});
    }
    SECTION("immediately accepted candidates are emitted at materialization") {
        OmegaName p = emit_verified(source_from_list({"01"}),
                                    [](const Word&) { return Semidecision::immediate(true); });
        REQUIRE(tokens_in_prefix(p, p.run_rounds(1).size()) == std::vector<Word>{"01"});
    }
}

TEST_CASE("round-robin interleaving of finitely many streams") {
    OmegaName p0 = raw_stream(0), p1 = raw_stream(1), p2 = raw_stream(2);
    OmegaName q = interleave_streams({p0, p1, p2});
    for (std::size_t k = 0; k < 50; ++k) {
        REQUIRE(q.at(3 * k + 0) == raw_stream(0).at(k));
        REQUIRE(q.at(3 * k + 1) == raw_stream(1).at(k));
        REQUIRE(q.at(3 * k + 2) == raw_stream(2).at(k));
    }
    OmegaName back = deinterleave_stream(q, 1, 3);
    REQUIRE(back.pull(40).substr(0, 40) == raw_stream(1).pull(40).substr(0, 40));
    REQUIRE_THROWS_AS(interleave_streams({}), std::invalid_argument);
    REQUIRE_THROWS_AS(deinterleave_stream(q, 3, 3), std::invalid_argument);
}

TEST_CASE("pair-position interleaving of a stream family") {
    OmegaName q = interleave_family([](std::size_t i) { return raw_stream(i); });
    for (std::size_t i = 0; i < 12; ++i)
        for (std::size_t j = 0; j < 12; ++j)
            REQUIRE(q.at(pair_nat(i, j)) == raw_stream(i).at(j));
    for (std::size_t i = 0; i < 5; ++i) {
        OmegaName back = deinterleave_family(q, i);
        REQUIRE(back.pull(40).substr(0, 40) == raw_stream(i).pull(40).substr(0, 40));
    }
}

TEST_CASE("space names split and recombine") {
    SpaceName t{emit_decided(lengthlex_words(), [](const Word& w) { return w.size() < 2; }),
                OmegaName::fillers()};
    SpaceName u = SpaceName::from_combined(t.combined());
    REQUIRE(u.r.pull(120).substr(0, 120) == t.r.pull(120).substr(0, 120));
    REQUIRE(u.s.pull(120).substr(0, 120) == t.s.pull(120).substr(0, 120));
}

TEST_CASE("union tagging on streams") {
    OmegaName payload = OmegaName::from_prefix_then_filler(wrap("10"));
    OmegaName tagged = tag_union_stream(3, payload);
    REQUIRE(tagged.pull(4).substr(0, 4) == "1110");
    auto [n, rest] = untag_union_stream(tagged);
    REQUIRE(n == 3);
    REQUIRE(rest.pull(30).substr(0, 30) == payload.pull(30).substr(0, 30));
    REQUIRE_THROWS_AS(untag_union_stream(OmegaName::from_prefix_then_filler("0")),
                      MalformedName);
}

TEST_CASE("membership and witness token shapes") {
    REQUIRE(parse_r_token(tuple_words({"01", "1"})).w == "01");
    REQUIRE(parse_r_token(tuple_words({"01", "1"})).b);
    REQUIRE_FALSE(parse_r_token(tuple_words({"", "0"})).b);
    REQUIRE_THROWS_AS(parse_r_token(tuple_words({"01", "10"})), MalformedName);
    REQUIRE_THROWS_AS(parse_r_token(tuple_words({"01"})), MalformedName);
    auto tr = parse_s_token(tuple_words({"0", "1", "00"}));
    REQUIRE(tr == std::array<Word, 3>{"0", "1", "00"});
    REQUIRE_THROWS_AS(parse_s_token(tuple_words({"0", "1"})), MalformedName);
    REQUIRE(kind_tag(parse_kind_tag("ktilde")) == std::string("ktilde"));
    REQUIRE_THROWS_AS(parse_kind_tag("gamma"), MalformedName);
}
