#include "rectwalk/error.hpp"
#include "rectwalk/factor.hpp"
#include "support/oracles.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace rectwalk;

namespace {
const Walk kSample = parse_walk("0,0,b;1,0,g;1,1,r;1,0,r;1,1,r;1,0,w;0,0,w");
FactorPattern pat(const char* text) { return FactorPattern(parse_walk(text)); }

std::vector<FactorPattern> test_patterns() {
    return {pat("0,0,r"), pat("0,0,b;1,0,w"), pat("1,1,r;1,0,r"), FactorPattern(star(kSample)), pat("0,0,g;0,0,g")};
}

std::uint64_t filtered_count(int n, WalkClass cls, const FactorPattern& p) {
    std::uint64_t count = 0;
    for_each_walk(n, cls, [&](const Walk& w) { count += avoids(w, p) ? 1 : 0; });
    return count;
}
}  // namespace

TEST_CASE("factor keys") {
    const FactorKey k = factor_key(parse_walk("1,1,r;1,0,r"));
    CHECK(k.colors == std::vector<Color>{Color::r, Color::r});
    CHECK(k.x_steps == std::vector<int>{-1});
    CHECK(factor_key(translate(kSample, 2, 1)) == factor_key(kSample));
    CHECK_THROWS_AS(FactorPattern(Walk{}), DomainError);
}

TEST_CASE("occurrence examples") {
    CHECK(find_occurrences(parse_walk("0,0,g;0,0,r;0,0,g"), pat("0,0,r")) == std::vector<Occurrence>{{2, 0, 0}});
    CHECK(find_occurrences(kSample, pat("1,1,r;1,0,r")) == std::vector<Occurrence>{{3, 0, 0}});
    CHECK(find_occurrences(parse_walk("0,0,b;1,0,w"), pat("0,0,r")).empty());
    CHECK(find_occurrences(kSample, pat("0,0,r")) == std::vector<Occurrence>{{3, 1, 1}, {4, 1, 0}, {5, 1, 1}});
    CHECK_THROWS_AS(find_occurrences(parse_walk("0,0,b;0,0,w"), pat("0,0,r")), DomainError);
}

TEST_CASE("avoidance examples") {
    CHECK(avoids(parse_walk("0,0,g;0,0,g"), pat("0,0,r")));
    CHECK_FALSE(avoids(kSample, pat("0,0,b")));
    CHECK(avoids(parse_walk("0,0,r"), pat("0,0,r;0,0,g")));
}

TEST_CASE("automaton and naive matching agree on every window") {
    for (const FactorPattern& p : test_patterns()) {
        for (int n = 1; n <= 7; ++n) {
            for_each_walk(n, WalkClass::lhqw, [&](const Walk& w) {
                REQUIRE(find_occurrences(w, p) == find_occurrences_naive(w, p));
            });
        }
    }
}

TEST_CASE("avoidance counts by hand") {
    CHECK(count_avoiding(1, WalkClass::lhqwadm, pat("0,0,r")) == 1);
    CHECK(count_avoiding(2, WalkClass::lhqwadm, pat("0,0,r")) == 3);
    const auto a = count_sequence(6, WalkClass::lhqwadm);
    const FactorPattern long_red = pat("0,0,r;0,0,r;0,0,r;0,0,r;0,0,r;0,0,r;0,0,r");
    const auto b = count_sequence(6, WalkClass::lhqwadm, &long_red);
    CHECK(a == b);
}

TEST_CASE("DP matches filtered enumeration") {
    for (const FactorPattern& p : test_patterns()) {
        for (WalkClass cls : {WalkClass::lhqwadm, WalkClass::lhqe, WalkClass::lhqw}) {
            const int n_max = cls == WalkClass::lhqw ? 7 : 9;
            const auto dp = count_sequence(n_max, cls, &p);
            for (int n = 0; n <= n_max; ++n) {
                REQUIRE(dp[static_cast<std::size_t>(n)] == filtered_count(n, cls, p));
            }
        }
    }
}

TEST_CASE("unrestricted DP matches enumeration") {
    for (WalkClass cls : {WalkClass::hqw, WalkClass::lhqw, WalkClass::lhqwadm, WalkClass::lhqe}) {
        const auto dp = count_sequence(8, cls);
        for (int n = 0; n <= 8; ++n) CHECK(dp[static_cast<std::size_t>(n)] == count_walks(n, cls));
    }
}

TEST_CASE("overlap-freeness") {
    CHECK(is_overlap_free(pat("0,0,r")));
    CHECK_FALSE(is_overlap_free(pat("0,0,r;0,0,r")));
    CHECK(is_overlap_free(pat("0,0,b;1,0,w")));
    CHECK(is_overlap_free(FactorPattern(star(kSample))));
}

TEST_CASE("extension to an overlap-free factor") {
    CHECK(extend_overlap_free(pat("0,0,b;1,0,w"), 2) == pat("0,0,b;1,0,w"));
    CHECK(extend_overlap_free(pat("0,0,r;0,0,r"), 2) == pat("0,0,r;0,0,r;0,0,g"));
    CHECK(extend_overlap_free(pat("0,0,g"), 1) == pat("0,0,g"));
    CHECK_THROWS_AS(extend_overlap_free(pat("0,0,r;0,0,r"), 0), InvariantError);
    CHECK_THROWS_AS(extend_overlap_free(pat("1,1,r;1,0,r"), 2), DomainError);
}

TEST_CASE("every admissible factor up to length 5 extends within its length") {
    for (int n = 1; n <= 5; ++n) {
        for_each_walk(n, WalkClass::lhqwadm, [&](const Walk& w) {
            const FactorPattern p(w);
            const FactorPattern e = extend_overlap_free(p, n);
            REQUIRE(is_admissible(e.walk()));
            REQUIRE(is_overlap_free(e));
            REQUIRE(!find_occurrences(e.walk(), p).empty());
        });
    }
}

TEST_CASE("avoidance is monotone under factor extension") {
    for (const char* text : {"0,0,r;0,0,r", "0,0,g;0,0,g", "0,0,b;1,0,w;0,0,r"}) {
        const FactorPattern p = pat(text);
        const FactorPattern e = extend_overlap_free(p, 3);
        const auto bp = count_sequence(10, WalkClass::lhqwadm, &p);
        const auto be = count_sequence(10, WalkClass::lhqwadm, &e);
        for (int n = 0; n <= 10; ++n) CHECK(bp[static_cast<std::size_t>(n)] <= be[static_cast<std::size_t>(n)]);
    }
}

TEST_CASE("insertion examples") {
    const Walk w = parse_walk("0,0,g");
    const FactorPattern p = pat("0,0,r");
    CHECK(insert_copies(w, p, {0}) == parse_walk("0,0,r;0,0,g"));
    CHECK(insert_copies(w, p, {1}) == parse_walk("0,0,g;0,0,r"));
    CHECK(insertion_set(w, p, 1).size() == 2);
    CHECK(insert_copies(w, p, {}) == w);
    CHECK(remove_copies(parse_walk("0,0,r;0,0,g"), p, 1) == w);
    CHECK(remove_copies(w, p, 0) == w);
    CHECK_THROWS_AS(remove_copies(w, p, 1), DomainError);
    CHECK_THROWS_AS(insert_copies(w, pat("0,0,r;0,0,r"), {0}), DomainError);
}

TEST_CASE("insertion uses the smallest feasible offset") {
    const Walk w = parse_walk("0,0,b;1,1,b;2,1,w;1,0,w");
    CHECK(insertion_offset(w, pat("0,0,r"), 2) == 0);
    CHECK(insertion_offset(w, pat("0,0,g"), 2) == 1);
    CHECK(insert_copies(w, pat("0,0,g"), {2}) == parse_walk("0,0,b;1,1,b;2,1,g;2,1,w;1,0,w"));
}

TEST_CASE("insertion can be infeasible for factors ending at (1,1,w)") {
    const Walk w = parse_walk("0,0,b;1,1,r;1,0,r;1,0,w");
    const FactorPattern p = pat("0,0,b;1,1,w");
    REQUIRE(is_overlap_free(p));
    REQUIRE(avoids(w, p));
    CHECK_FALSE(insertion_offset(w, p, 2).has_value());
    CHECK_THROWS_AS(insert_copies(w, p, {2}), InvariantError);
    // Padding the factor with a red and a green step makes the same gap usable.
    const FactorPattern padded = pat("0,0,r;0,0,b;1,1,w;0,0,g");
    REQUIRE(is_overlap_free(padded));
    CHECK(insertion_offset(w, padded, 2).has_value());
}

TEST_CASE("S(W, q) for the sample walk") {
    const FactorPattern p = extend_overlap_free(FactorPattern(star(kSample)), 6);
    CHECK(p == FactorPattern(star(kSample)));
    // W must avoid P; a length-6 admissible walk avoiding star(E) works.
    const Walk w = parse_walk("0,0,g;0,0,b;1,1,r;1,0,r;1,1,r;1,0,w");
    REQUIRE(avoids(w, p));
    const auto set = insertion_set(w, p, 2);
    CHECK(set.size() == 28);
    for (const Walk& s : set) {
        CHECK(is_admissible(s));
        CHECK(remove_copies(s, p, 2) == w);
    }
    // With W = P the gap multisets {0,0}, {0,6} and {6,6} all give PPP.
    CHECK(insertion_set(star(kSample), p, 2).size() == 26);
}

TEST_CASE("random insertion round trips") {
    std::mt19937 rng(20261019);
    std::vector<Walk> walks;
    for (int n = 0; n <= 8; ++n) {
        for (const Walk& w : enumerate_walks(n, WalkClass::lhqwadm)) walks.push_back(w);
    }
    const std::vector<FactorPattern> patterns{pat("0,0,r"), pat("0,0,g"), pat("0,0,b;1,0,w"), pat("0,0,r;0,0,g"),
                                              pat("0,0,g;0,0,r"), FactorPattern(star(kSample)),
                                              pat("0,0,r;0,0,b;1,1,w;0,0,g")};
    int done = 0;
    while (done < 200) {
        const Walk& w = walks[rng() % walks.size()];
        const FactorPattern& p = patterns[rng() % patterns.size()];
        if (!avoids(w, p)) continue;
        const int q = static_cast<int>(rng() % 4);
        std::vector<std::size_t> gaps;
        for (int i = 0; i < q; ++i) gaps.push_back(rng() % (w.size() + 1));
        std::sort(gaps.begin(), gaps.end());
        const Walk s = insert_copies(w, p, gaps);
        REQUIRE(is_admissible(s));
        REQUIRE(s.size() == w.size() + static_cast<std::size_t>(q) * p.length());
        REQUIRE(remove_copies(s, p, q) == w);
        ++done;
    }
}

TEST_CASE("gap multisets") {
    std::vector<std::vector<std::size_t>> seen;
    for_each_gap_multiset(3, 2, [&](const std::vector<std::size_t>& g) { seen.push_back(g); });
    CHECK(seen == std::vector<std::vector<std::size_t>>{{0, 0}, {0, 1}, {0, 2}, {1, 1}, {1, 2}, {2, 2}});
    int count = 0;
    for_each_gap_multiset(7, 3, [&](const std::vector<std::size_t>&) { ++count; });
    CHECK(count == 84);
}
