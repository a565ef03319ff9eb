#include <catch2/catch_amalgamated.hpp>

#include "tte/audit.hpp"
#include "tte/namegen.hpp"

using namespace tte;

namespace {

ModelPtr d2() {
    return make_model(FiniteDiscrete{2, {{"0", {0}}, {"1", {1}}, {"00", {0, 1}}}});
}

ModelPtr rl() { return make_model(RationalLine{}); }

Word ic(std::int64_t a, std::int64_t b) { return interval_code(Rat(a), Rat(b)); }
Word icr(Rat a, Rat b) { return interval_code(a, b); }

std::set<Word> token_set(OmegaName p, std::uint64_t rounds) {
    auto toks = scan_tokens(p.run_rounds(rounds)).tokens;
    return {toks.begin(), toks.end()};
}

}  // namespace

TEST_CASE("model validation") {
    SECTION("two-point model with separating base is valid") {
        REQUIRE_NOTHROW(validate_model(*d2()));
    }
    SECTION("single all-points base element fails T0") {
        Model m{FiniteDiscrete{2, {{"00", {0, 1}}}}};
        REQUIRE_THROWS_MATCHES(validate_model(m), InvalidModel,
                               Catch::Matchers::MessageMatches(
                                   Catch::Matchers::ContainsSubstring("T0")));
    }
    SECTION("rational line is valid") { REQUIRE_NOTHROW(validate_model(*rl())); }
    SECTION("unwitnessed base intersection is rejected") {
        Model m{FiniteDiscrete{3, {{"0", {0, 1}}, {"1", {1, 2}}}}};
        REQUIRE_THROWS_MATCHES(validate_model(m), InvalidModel,
                               Catch::Matchers::MessageMatches(
                                   Catch::Matchers::ContainsSubstring("intersection")));
    }
    SECTION("base must cover the points") {
        Model m{FiniteDiscrete{2, {{"0", {0}}}}};
        REQUIRE_THROWS_AS(validate_model(m), InvalidModel);
    }
    SECTION("duplicate codes are rejected") {
        Model m{FiniteDiscrete{1, {{"0", {0}}, {"0", {0}}}}};
        REQUIRE_THROWS_AS(validate_model(m), InvalidModel);
    }
    SECTION("products validate factor-wise") {
        REQUIRE_NOTHROW(validate_model(*product_model(d2(), rl())));
    }
}

TEST_CASE("cover oracle") {
    SECTION("finite model") {
        REQUIRE(covers(*d2(), finite_set({0, 1}), {"0", "1"}));
        REQUIRE_FALSE(covers(*d2(), finite_set({0, 1}), {"0"}));
        REQUIRE(covers(*d2(), finite_set({}), {}));
        REQUIRE_THROWS_AS(covers(*d2(), finite_set({0}), {"0111"}), BadCode);
    }
    SECTION("rational sweep") {
        SetSpec k01 = interval_set({{Rat(0), Rat(1)}});
        REQUIRE_FALSE(covers(*rl(), k01, {ic(-1, 1) /* stops at 1 */}));
        REQUIRE_FALSE(covers(*rl(), k01, {icr(Rat(-1), Rat(1, 2))}));
        REQUIRE(covers(*rl(), k01, {ic(-1, 2)}));
        REQUIRE_FALSE(covers(*rl(), k01, {ic(0, 2)}));  // left endpoint uncovered
        REQUIRE(covers(*rl(), k01, {icr(Rat(-1), Rat(1, 2)), icr(Rat(1, 4), Rat(2))}));
        REQUIRE_FALSE(covers(*rl(), k01,
                             {icr(Rat(-1), Rat(1, 2)), icr(Rat(1, 2), Rat(2))}));  // 1/2 missed
        REQUIRE(covers(*rl(), interval_set({}), {}));
        REQUIRE(covers(*rl(), interval_set({{Rat(1), Rat(1)}}), {ic(0, 2)}));
        REQUIRE_THROWS_AS(covers(*rl(), k01, {ic(2, 1)}), BadCode);
    }
    SECTION("product of rational lines, rectangle grid") {
        ModelPtr m = product_model(rl(), rl());
        SetSpec k = pair_set(interval_set({{Rat(0), Rat(1)}}), interval_set({{Rat(0), Rat(1)}}));
        Word lo = icr(Rat(-1), Rat(3, 5)), hi = icr(Rat(2, 5), Rat(2));
        std::vector<Word> grid = {tuple_words({lo, lo}), tuple_words({hi, lo}),
                                  tuple_words({lo, hi}), tuple_words({hi, hi})};
        REQUIRE(covers(*m, k, grid));
        for (std::size_t drop = 0; drop < 4; ++drop) {
            std::vector<Word> partial;
            for (std::size_t i = 0; i < 4; ++i)
                if (i != drop) partial.push_back(grid[i]);
            REQUIRE_FALSE(covers(*m, k, partial));
        }
    }
    SECTION("mixed finite x rational product") {
        ModelPtr m = product_model(d2(), rl());
        SetSpec k = pair_set(finite_set({0, 1}), interval_set({{Rat(0), Rat(1)}}));
        std::vector<Word> f = {tuple_words({"0", ic(-1, 2)}),
                               tuple_words({"1", icr(Rat(-1), Rat(1, 2))}),
                               tuple_words({"1", icr(Rat(1, 4), Rat(2))})};
        REQUIRE(covers(*m, k, f));
        REQUIRE_FALSE(covers(*m, k, {f[0], f[1]}));
    }
    SECTION("left-nested triple product") {
        ModelPtr m = product_model(product_model(d2(), d2()), d2());
        SetSpec k = pair_set(pair_set(finite_set({0}), finite_set({0, 1})), finite_set({0, 1}));
        REQUIRE(covers(*m, k, {tuple_words({tuple_words({"0", "00"}), "00"})}));
        REQUIRE_FALSE(covers(*m, k, {tuple_words({tuple_words({"0", "0"}), "00"})}));
    }
}

TEST_CASE("open-set oracle") {
    REQUIRE(open_subset_of_union(*rl(), ic(0, 1), {ic(0, 1)}));
    REQUIRE_FALSE(open_subset_of_union(*rl(), ic(0, 1),
                                       {icr(Rat(0), Rat(1, 2)), icr(Rat(1, 2), Rat(1))}));
    REQUIRE(open_subset_of_union(
        *rl(), ic(0, 1),
        {icr(Rat(0), Rat(1, 2)), icr(Rat(1, 2), Rat(1)), icr(Rat(1, 4), Rat(3, 4))}));
    REQUIRE(opens_equal(*rl(), {icr(Rat(0), Rat(1)), icr(Rat(1, 2), Rat(3, 2))},
                        {icr(Rat(0), Rat(3, 2))}));
    REQUIRE_FALSE(opens_equal(*rl(), {icr(Rat(0), Rat(1)), icr(Rat(1), Rat(3, 2))},
                              {icr(Rat(0), Rat(3, 2))}));
    REQUIRE(open_subset_of_union(*d2(), "00", {"0", "1"}));
    ModelPtr m2 = product_model(rl(), rl());
    REQUIRE(open_subset_of_union(*m2, tuple_words({ic(0, 1), ic(0, 1)}),
                                 {tuple_words({ic(-1, 2), ic(-1, 2)})}));
    REQUIRE_FALSE(open_subset_of_union(*m2, tuple_words({ic(0, 2), ic(0, 2)}),
                                       {tuple_words({ic(0, 2), ic(0, 1)}),
                                        tuple_words({ic(0, 1), ic(0, 2)})}));
}

TEST_CASE("membership and intersection oracles") {
    REQUIRE(point_in_extent(*d2(), fd_point(0), "00"));
    REQUIRE_FALSE(point_in_extent(*d2(), fd_point(0), "1"));
    REQUIRE(point_in_extent(*rl(), rl_point(Rat(1, 2)), ic(0, 1)));
    REQUIRE_FALSE(point_in_extent(*rl(), rl_point(Rat(0)), ic(0, 1)));
    ModelPtr m = product_model(d2(), rl());
    REQUIRE(point_in_extent(*m, pair_point(fd_point(1), rl_point(Rat(1, 2))),
                            tuple_words({"00", ic(0, 1)})));
    REQUIRE(set_intersects_extent(*rl(), interval_set({{Rat(1), Rat(2)}, {Rat(3), Rat(3)}}),
                                  icr(Rat(5, 2), Rat(7, 2))));
    REQUIRE_FALSE(set_intersects_extent(*rl(), interval_set({{Rat(1), Rat(2)}}), ic(2, 3)));
    REQUIRE(set_intersects_extent(*d2(), finite_set({1}), "00"));
    REQUIRE_THROWS_AS(point_in_extent(*d2(), rl_point(Rat(0)), "0"), SpecMismatch);
}

TEST_CASE("structured and graded enumerations") {
    SECTION("structured rational codes are pairwise distinct") {
        std::set<Word> seen;
        for (std::size_t i = 0; i < 2000; ++i)
            REQUIRE(seen.insert(structured_rational(i).code()).second);
    }
    SECTION("tier boundary") {
        REQUIRE(structured_rational(7).code() == tuple_words({"1", "1", "1"}));
        REQUIRE(structured_rational(8).code() == tuple_words({"0", "0", "00"}));
    }
    SECTION("structured interval codes are pairwise distinct") {
        std::set<Word> seen;
        for (std::size_t i = 0; i < 1000; ++i)
            REQUIRE(seen.insert(structured_interval_code(i)).second);
    }
    SECTION("graded rationals walk small values first") {
        std::vector<Rat> want = {Rat(-1),    Rat(0),     Rat(1),    Rat(-2),   Rat(2),
                                 Rat(-1, 2), Rat(1, 2),  Rat(-3),   Rat(3),    Rat(-3, 2),
                                 Rat(3, 2),  Rat(-2, 3), Rat(-1, 3), Rat(1, 3), Rat(2, 3)};
        for (std::size_t i = 0; i < want.size(); ++i) REQUIRE(graded_rational(i) == want[i]);
    }
    SECTION("graded intervals") {
        REQUIRE(graded_interval(0).lo == Rat(-1));
        REQUIRE(graded_interval(0).hi == Rat(0));
        REQUIRE(graded_interval(8).lo == Rat(1));
        REQUIRE(graded_interval(8).hi == Rat(2));
    }
}

TEST_CASE("space name of the finite model") {
    SpaceName t = space_name(d2());
    auto rset = token_set(t.r, 300);
    REQUIRE(rset.count(tuple_words({"0", "1"})));
    REQUIRE(rset.count(tuple_words({"01", "0"})));
    AuditBounds b;
    b.rounds = 2000;
    b.max_code_len = 6;
    b.exhaustive_witnesses = true;
    b.required_s = {tuple_words({"00", "0", "0"})};
    AuditReport rep = audit_space_name(d2(), t, b);
    INFO(rep.detail);
    REQUIRE(rep.pass);
}

TEST_CASE("space name of the rational line") {
    SpaceName t = space_name(rl());
    AuditBounds b;
    b.rounds = 20000;
    b.required = {tuple_words({ic(0, 1), "1"}), tuple_words({"", "0"})};
    b.required_s = {tuple_words({ic(1, 2), ic(1, 2), icr(Rat(5, 4), Rat(7, 4))})};
    b.witness_pairs = {{ic(1, 2), ic(1, 2)}};
    AuditReport rep = audit_space_name(rl(), t, b);
    INFO(rep.detail);
    REQUIRE(rep.pass);
}

TEST_CASE("point names in the finite model") {
    ObjectSpec spec = spec_point(fd_point(0));
    ObjectName n = object_name(d2(), Kind::point, spec);
    REQUIRE(token_set(n.stream, 300) == std::set<Word>{"0", "00"});
    AuditBounds b;
    b.rounds = 300;
    b.max_code_len = 6;
    REQUIRE(audit_object_name(d2(), Kind::point, spec, n, b).pass);

    SECTION("spurious token is reported") {
        ObjectName bad{Kind::point, with_prefix(wrap("1"), n.stream)};
        AuditReport rep = audit_object_name(d2(), Kind::point, spec, bad, b);
        REQUIRE_FALSE(rep.pass);
        REQUIRE(rep.detail.find("\"1\"") != std::string::npos);
    }
    SECTION("insufficient budget is a completeness failure") {
        ObjectName fresh = object_name(d2(), Kind::point, spec);
        AuditBounds tiny;
        tiny.rounds = 2;
        tiny.max_code_len = 6;
        AuditReport rep = audit_object_name(d2(), Kind::point, spec, fresh, tiny);
        REQUIRE_FALSE(rep.pass);
        REQUIRE(rep.detail.find("missing") != std::string::npos);
    }
}

TEST_CASE("open and subset names in the finite model") {
    ObjectSpec w01 = spec_open({"0", "1"});
    ObjectName n = object_name(d2(), Kind::open, w01);
    REQUIRE(token_set(n.stream, 400) == std::set<Word>{"0", "1", "00"});
    AuditBounds b;
    b.rounds = 400;
    b.max_code_len = 6;
    b.check_open_union = true;
    REQUIRE(audit_object_name(d2(), Kind::open, w01, n, b).pass);

    ObjectSpec w0 = spec_open({"0"});
    REQUIRE(token_set(object_name(d2(), Kind::open, w0).stream, 400) == std::set<Word>{"0"});

    ObjectSpec b1 = spec_set(Kind::subset, finite_set({1}));
    REQUIRE(token_set(object_name(d2(), Kind::subset, b1).stream, 400) ==
            std::set<Word>{"1", "00"});
}

TEST_CASE("cover names in the finite model") {
    ObjectSpec kempty = spec_set(Kind::cover, finite_set({}));
    auto toks = token_set(object_name(d2(), Kind::cover, kempty).stream, 50);
    REQUIRE(toks.count(""));  // the empty cover word covers the empty set

    ObjectSpec kememp = spec_set(Kind::min_cover, finite_set({}));
    REQUIRE(token_set(object_name(d2(), Kind::min_cover, kememp).stream, 5000) ==
            std::set<Word>{""});

    ObjectSpec kfull = spec_set(Kind::cover, finite_set({0, 1}));
    auto full = token_set(object_name(d2(), Kind::cover, kfull).stream, 2000);
    REQUIRE(full.count(tuple_words({"0", "1"})));
    REQUIRE(full.count(tuple_words({"1", "0"})));
    REQUIRE(full.count(tuple_words({"00"})));
    REQUIRE_FALSE(full.count(tuple_words({"0"})));
    REQUIRE_FALSE(full.count(""));

    ObjectSpec k0cov = spec_set(Kind::cover, finite_set({0}));
    ObjectSpec k0min = spec_set(Kind::min_cover, finite_set({0}));
    auto kc = token_set(object_name(d2(), Kind::cover, k0cov).stream, 2000);
    auto km = token_set(object_name(d2(), Kind::min_cover, k0min).stream, 2000);
    REQUIRE(kc.count(tuple_words({"0", "1"})));
    REQUIRE_FALSE(km.count(tuple_words({"0", "1"})));  // member "1" misses K
    for (auto& w : km) REQUIRE(kc.count(w));

    AuditBounds b;
    b.rounds = 2000;
    b.max_code_len = 6;
    REQUIRE(audit_object_name(d2(), Kind::min_cover, k0min,
                              object_name(d2(), Kind::min_cover, k0min), b)
                .pass);
}

TEST_CASE("object names on the rational line") {
    SECTION("point name") {
        ObjectSpec spec = spec_point(rl_point(Rat(1, 2)));
        ObjectName n = object_name(rl(), Kind::point, spec);
        AuditBounds b;
        b.rounds = 20000;
        b.required = {ic(0, 1), ic(-1, 1)};
        b.forbidden = {ic(1, 2)};
        REQUIRE(audit_object_name(rl(), Kind::point, spec, n, b).pass);
    }
    SECTION("open name with union check") {
        ObjectSpec spec = spec_open({ic(0, 1), icr(Rat(1, 2), Rat(3, 2))});
        ObjectName n = object_name(rl(), Kind::open, spec);
        AuditBounds b;
        b.rounds = 20000;
        b.required = {ic(0, 1), icr(Rat(1, 2), Rat(3, 2))};
        b.check_open_union = true;
        REQUIRE(audit_object_name(rl(), Kind::open, spec, n, b).pass);
    }
    SECTION("subset name") {
        ObjectSpec spec = spec_set(Kind::subset, interval_set({{Rat(1), Rat(2)}, {Rat(3), Rat(3)}}));
        ObjectName n = object_name(rl(), Kind::subset, spec);
        AuditBounds b;
        b.rounds = 60000;  // (5/2,7/2) is candidate 53122 in the structured order
        b.required = {icr(Rat(1, 2), Rat(3, 2)), icr(Rat(5, 2), Rat(7, 2))};
        b.forbidden = {ic(0, 1), ic(2, 3)};
        REQUIRE(audit_object_name(rl(), Kind::subset, spec, n, b).pass);
    }
    SECTION("cover and minimal cover names") {
        ObjectSpec kc = spec_set(Kind::cover, interval_set({{Rat(0), Rat(1)}}));
        ObjectName n = object_name(rl(), Kind::cover, kc);
        AuditBounds b;
        b.rounds = 20000;
        b.required = {tuple_words({ic(-1, 2)})};
        b.forbidden = {tuple_words({ic(0, 2)})};
        REQUIRE(audit_object_name(rl(), Kind::cover, kc, n, b).pass);

        ObjectSpec km = spec_set(Kind::min_cover, interval_set({{Rat(0), Rat(1)}}));
        ObjectName nm = object_name(rl(), Kind::min_cover, km);
        Word good = tuple_words(
            {icr(Rat(-1, 2), Rat(3, 4)), icr(Rat(1, 2), Rat(3, 2))});
        Word bad = tuple_words({ic(2, 3), ic(0, 2)});
        auto toks = token_set(nm.stream, 400000);
        REQUIRE(toks.count(good));
        REQUIRE_FALSE(toks.count(bad));
    }
}

TEST_CASE("seeded names") {
    ObjectSpec spec = spec_point(fd_point(0));
    ObjectName n = object_name_seeded(d2(), Kind::point, spec, {"00"});
    auto toks = scan_tokens(n.stream.run_rounds(40)).tokens;
    REQUIRE(toks.front() == "00");
    AuditBounds b;
    b.rounds = 300;
    b.max_code_len = 6;
    REQUIRE(audit_object_name(d2(), Kind::point, spec, n, b).pass);
    REQUIRE_THROWS_AS(object_name_seeded(d2(), Kind::point, spec, {"1"}), SpecMismatch);
}
