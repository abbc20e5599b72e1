#include "rectwalk/error.hpp"
#include "rectwalk/walk.hpp"
#include "support/oracles.hpp"

#include <doctest.h>

#include <set>

using namespace rectwalk;

namespace {
const Walk kSample = parse_walk("0,0,b;1,0,g;1,1,r;1,0,r;1,1,r;1,0,w;0,0,w");

std::vector<std::string> texts(int n, WalkClass cls) {
    std::vector<std::string> out;
    for_each_walk(n, cls, [&](const Walk& w) { out.push_back(format_walk(w)); });
    return out;
}
}  // namespace

TEST_CASE("delta") {
    CHECK(delta(Color::b) == 1);
    CHECK(delta(Color::r) == 0);
    CHECK(delta(Color::g) == 0);
    CHECK(delta(Color::w) == -1);
}

TEST_CASE("history walk predicate") {
    CHECK(is_history_walk(Walk{}));
    CHECK(is_history_walk(parse_walk("0,0,b;1,0,w")));
    CHECK_FALSE(is_history_walk(parse_walk("0,0,b;0,0,w")));
    CHECK_FALSE(is_history_walk(parse_walk("0,1,r")));
}

TEST_CASE("leftmost predicate") {
    CHECK(is_leftmost(kSample));
    CHECK(is_leftmost(parse_walk("0,0,r;0,0,g")));
    CHECK(is_leftmost(parse_walk("0,0,b;1,1,b;2,0,w")));
    CHECK_FALSE(is_leftmost(parse_walk("1,1,r;1,0,g")));
    CHECK_THROWS_AS(is_leftmost(parse_walk("0,0,b;0,0,w")), NotHistoryWalk);
}

TEST_CASE("admissible and excursion predicates") {
    CHECK(is_admissible(parse_walk("0,0,r")));
    CHECK_FALSE(is_admissible(parse_walk("0,0,w")));
    CHECK(is_admissible(star(kSample)));
    CHECK(is_admissible(Walk{}));
    CHECK(is_excursion(parse_walk("0,0,w")));
    CHECK(is_excursion(kSample));
    CHECK_FALSE(is_excursion(parse_walk("0,0,b;1,0,w")));
    CHECK_FALSE(is_excursion(Walk{}));
}

TEST_CASE("star and bar") {
    CHECK(star(parse_walk("0,0,w")).empty());
    CHECK(star(kSample) == kSample.slice(0, 6));
    CHECK(star(parse_walk("0,0,g;0,0,w")) == parse_walk("0,0,g"));
    CHECK(bar(Walk{}) == parse_walk("0,0,w"));
    CHECK(bar(parse_walk("0,0,r")) == parse_walk("0,0,r;0,0,w"));
    CHECK(bar(star(kSample)) == kSample);
    CHECK_THROWS_AS(star(parse_walk("0,0,b;1,0,w")), DomainError);
    CHECK_THROWS_AS(bar(parse_walk("0,0,w")), DomainError);
}

TEST_CASE("star and bar are inverse bijections between LHQE(n) and LHQWadm(n-1)") {
    for (int n = 1; n <= 7; ++n) {
        const auto e = enumerate_walks(n, WalkClass::lhqe);
        const auto a = enumerate_walks(n - 1, WalkClass::lhqwadm);
        REQUIRE(e.size() == a.size());
        std::set<Walk> image;
        for (const Walk& w : e) {
            const Walk s = star(w);
            CHECK(is_admissible(s));
            CHECK(bar(s) == w);
            image.insert(s);
        }
        CHECK(image == std::set<Walk>(a.begin(), a.end()));
    }
}

TEST_CASE("translate") {
    CHECK(translate(parse_walk("0,0,r"), 2, 1) == parse_walk("2,1,r"));
    CHECK(translate(kSample, 0, 0) == kSample);
    CHECK(translate(translate(kSample, 3, -2), -3, 2) == kSample);
    CHECK(translate(translate(kSample, 1, 2), 3, 4) == translate(kSample, 4, 6));
    const Walk below = translate(parse_walk("0,0,r"), -1, 0);
    CHECK(below[0].h == -1);
}

TEST_CASE("walk text format") {
    CHECK(parse_walk("0,0,b;1,0,w") == Walk{Vertex{0, 0, Color::b}, Vertex{1, 0, Color::w}});
    CHECK(parse_walk("").empty());
    CHECK(format_walk(kSample) == "0,0,b;1,0,g;1,1,r;1,0,r;1,1,r;1,0,w;0,0,w");
    CHECK(parse_walk(format_walk(kSample)) == kSample);
    CHECK_THROWS_AS(parse_walk("0,0,q"), ParseError);
    CHECK_THROWS_AS(parse_walk("0,0,b;"), ParseError);
    CHECK_THROWS_AS(parse_walk("0, 0,b"), ParseError);
    CHECK_THROWS_AS(parse_walk("99999999999999999999,0,b"), ParseError);
    try {
        parse_walk("0,0,b;1,0,x");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.position() == 10);
    }
}

TEST_CASE("small enumerations") {
    CHECK(texts(2, WalkClass::lhqe) == std::vector<std::string>{"0,0,r;0,0,w", "0,0,g;0,0,w"});
    CHECK(texts(1, WalkClass::lhqwadm) == std::vector<std::string>{"0,0,r", "0,0,g"});
    CHECK(texts(0, WalkClass::lhqwadm) == std::vector<std::string>{""});
    CHECK(texts(0, WalkClass::lhqe).empty());
    CHECK(texts(1, WalkClass::lhqe) == std::vector<std::string>{"0,0,w"});
}

TEST_CASE("excursion enumeration agrees with the brute-force oracle") {
    const std::vector<std::uint64_t> expected{1, 2, 6, 24, 116, 642, 3938};
    for (int n = 1; n <= 7; ++n) {
        auto ours = texts(n, WalkClass::lhqe);
        CHECK(ours.size() == expected[static_cast<std::size_t>(n - 1)]);
        std::sort(ours.begin(), ours.end());
        CHECK(ours == oracle::excursions(n));
    }
}

TEST_CASE("admissible enumeration agrees with the oracle") {
    for (int n = 0; n <= 5; ++n) {
        auto ours = texts(n, WalkClass::lhqwadm);
        std::sort(ours.begin(), ours.end());
        CHECK(ours == oracle::admissible_walks(n));
    }
}

TEST_CASE("rooted history and leftmost walks agree with the oracle") {
    for (int n = 0; n <= 5; ++n) {
        std::vector<std::string> all, left;
        if (n == 0) all = left = {""};
        else {
            oracle::for_each_rooted(n, -1, [&](const oracle::Seq& s) {
                all.push_back(oracle::text(s));
                if (oracle::leftmost(s)) left.push_back(oracle::text(s));
            });
        }
        std::sort(all.begin(), all.end());
        std::sort(left.begin(), left.end());
        auto h = texts(n, WalkClass::hqw);
        auto l = texts(n, WalkClass::lhqw);
        std::sort(h.begin(), h.end());
        std::sort(l.begin(), l.end());
        CHECK(h == all);
        CHECK(l == left);
    }
}

TEST_CASE("enumeration soundness and order") {
    for (int n = 1; n <= 8; ++n) {
        std::optional<Walk> previous;
        for_each_walk(n, WalkClass::lhqe, [&](const Walk& w) {
            REQUIRE(is_history_walk(w));
            REQUIRE(is_leftmost(w));
            REQUIRE(is_excursion(w));
            if (previous) REQUIRE(*previous < w);
            previous = w;
            int h = w[0].h;
            for (std::size_t m = 0; m < w.size(); ++m) {
                REQUIRE(w[m].h == h);
                h += delta(w[m].c);
            }
        });
    }
}

TEST_CASE("sharded enumeration reproduces the serial stream") {
    for (WalkClass cls : {WalkClass::lhqe, WalkClass::lhqwadm, WalkClass::lhqw}) {
        const auto serial = enumerate_walks(6, cls);
        for (int k : {0, 1, 2, 3, 6}) {
            std::vector<Walk> merged;
            for (const Walk& p : enumeration_prefixes(6, cls, k)) {
                for_each_walk_extending(p, 6, cls, [&](const Walk& w) { merged.push_back(w); });
            }
            CHECK(merged == serial);
        }
        CHECK(count_walks(6, cls, 1) == serial.size());
        CHECK(count_walks(6, cls, 4) == serial.size());
    }
}

TEST_CASE("walk class names") {
    for (WalkClass cls : {WalkClass::hqw, WalkClass::lhqw, WalkClass::lhqwadm, WalkClass::lhqe}) {
        CHECK(walk_class_from_string(to_string(cls)) == cls);
    }
    CHECK_FALSE(walk_class_from_string("LHQE").has_value());
}
