// String profiles (orientation-dependent run matching), star classification
// and star-level configuration packing, canonical codes.

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "hpd/core.hpp"
#include "hpd/enumerate.hpp"
#include "hpd/fixtures.hpp"
#include "hpd/invariants.hpp"

using namespace hpd;
using hpdtest::cycle;
using hpdtest::has_adjacent_closed;
using hpdtest::hg;
using hpdtest::mask;
using hpdtest::path;

TEST_CASE("shape predicates") {
    CHECK(is_string(fixture("seven-string").hypergraph));
    CHECK(is_string(hg(1, {{0}})));
    CHECK(!is_string(fixture("six-cycle").hypergraph));
    CHECK(!is_string(fixture("nine-face").hypergraph));  // a joint
    CHECK(!is_string(fixture("figure1").hypergraph));    // higher faces

    CHECK(is_cycle(fixture("six-cycle").hypergraph));
    CHECK(is_cycle(fixture("seven-cycle").hypergraph));
    CHECK(!is_cycle(fixture("seven-string").hypergraph));
    CHECK(!is_cycle(fixture("nine-face").hypergraph));

    CHECK(string_endpoints(fixture("seven-string").hypergraph) ==
          std::vector<int>{0, 6});
    CHECK(string_endpoints(hg(1, {{0}})) == std::vector<int>{0});
}

TEST_CASE("profiles of the orientation example string") {
    const Hypergraph& s = fixture("seven-string").hypergraph;  // closed 0,4,6

    StringProfile from_far = string_profile(s, 0);
    CHECK(from_far.vertices.front() == 6);
    CHECK(from_far.vertices.back() == 0);
    CHECK(from_far.runs == std::vector<int>{1, 3});
    CHECK(from_far.run_use == std::vector<int>{0, 0});
    CHECK(from_far.m_count == 0);
    CHECK(from_far.o_count == 0);
    CHECK(from_far.w_count == 1);  // the run of three is free and = 0 (mod 3)
    CHECK(from_far.q == 2);
    CHECK(from_far.nr == 0);

    StringProfile from_near = string_profile(s, 6);
    CHECK(from_near.runs == std::vector<int>{3, 1});
    CHECK(from_near.run_use == std::vector<int>{2, 2});  // one 1-0 configuration
    CHECK(from_near.m_count == 0);
    CHECK(from_near.o_count == 1);
    CHECK(from_near.w_count == 0);
    CHECK(from_near.q == 2);
    CHECK(from_near.nr == 1);

    CHECK_THROWS_AS(string_profile(s, 3), UnsupportedShape);  // not an endpoint
    CHECK_THROWS_AS(string_profile(fixture("six-cycle").hypergraph, 0),
                    UnsupportedShape);
    CHECK_THROWS_AS(string_profile(path(3, mask({0, 1, 2})), 0),
                    UnsupportedShape);  // adjacent closed vertices
}

TEST_CASE("configuration matching claims nearest-to-anchor runs first") {
    // Path 0..11 closed at {0,4,7,9,11}; anchored at 11 the open runs read
    // (3,2,1,1) and the greedy matching pairs the two trailing 1-runs into a
    // 1-1 configuration, leaving the leading 0 (mod 3) run free for W.
    Hypergraph s = path(12, mask({0, 4, 7, 9, 11}));
    StringProfile p = string_profile(s, 11);
    CHECK(p.runs == std::vector<int>{3, 2, 1, 1});
    CHECK(p.run_use == std::vector<int>{0, 0, 1, 1});
    CHECK(p.m_count == 1);
    CHECK(p.o_count == 0);
    CHECK(p.w_count == 1);
    CHECK(p.q == 3);
    CHECK(p.nr == 1);
}

TEST_CASE("special run sequences") {
    using Runs = std::vector<int>;
    CHECK(is_11_special(Runs{1, 1}));
    CHECK(is_11_special(Runs{1, 2, 1}));
    CHECK(is_11_special(Runs{4, 1}));  // residues mod 3 are what matters
    CHECK(!is_11_special(Runs{1}));
    CHECK(!is_11_special(Runs{1, 3}));
    CHECK(!is_11_special(Runs{1, 1, 1}));  // middle run must be 2 (mod 3)

    CHECK(is_10_special(Runs{3, 1}));
    CHECK(is_10_special(Runs{3, 2, 1}));
    CHECK(is_10_special(Runs{3, 2, 2, 1}));
    CHECK(!is_10_special(Runs{1, 3}));
    CHECK(!is_10_special(Runs{3, 1, 1}));

    CHECK(is_11_special(path(5, mask({0, 2, 4}))));  // runs (1,1)
    CHECK(!is_11_special(fixture("seven-string").hypergraph));
    CHECK(is_10_special(fixture("seven-string").hypergraph, 6));
    CHECK(!is_10_special(fixture("seven-string").hypergraph, 0));
}

TEST_CASE("greedy matching is optimal on every small string") {
    for (int n = 2; n <= 9; ++n) {
        for (const Hypergraph& s : all_strings(n)) {
            if (has_adjacent_closed(s)) continue;
            for (int anchor : string_endpoints(s)) {
                CAPTURE(n);
                CAPTURE(anchor);
                StringProfile p = string_profile(s, anchor);
                CHECK(p.m_count == max_disjoint_11(p.runs));
            }
        }
    }
}

TEST_CASE("max_disjoint_11 on explicit run vectors") {
    CHECK(max_disjoint_11({}) == 0);
    CHECK(max_disjoint_11({3}) == 0);
    CHECK(max_disjoint_11({1, 1}) == 1);
    CHECK(max_disjoint_11({1, 1, 1, 1}) == 2);
    CHECK(max_disjoint_11({1, 2, 1}) == 1);
    CHECK(max_disjoint_11({1, 2, 1, 1}) == 1);  // one config either way
    CHECK(max_disjoint_11({3, 2, 1, 1}) == 1);
    CHECK(max_disjoint_11({1, 3, 1}) == 0);
}

TEST_CASE("star classification of the worked cycle of stars") {
    const Hypergraph& h = fixture("figure6").hypergraph;
    StarDecomposition d = classify_stars(h);
    REQUIRE(d.ok());
    CHECK(d.topology == StarTopology::CycleOfStars);
    CHECK(d.stars.size() == 15);
    CHECK(d.t_proper2 == 4);
    CHECK(d.max_d() == 2);
    CHECK(!d.all_open());

    std::set<std::string> centers;
    for (const Star& s : d.stars)
        if (s.proper2()) centers.insert(h.label(s.center));
    CHECK(centers ==
          std::set<std::string>{"(2,0)", "(3,0)", "(2,1)", "(5,1)"});

    // The proper 2-star centers are red in the drawing; all but (2,0) closed.
    for (const Star& s : d.stars) {
        if (!s.proper2()) continue;
        CHECK(s.open_center == (h.label(s.center) == "(2,0)"));
    }

    StarRuns r = star_runs(d);
    CHECK(r.cycle);
    std::vector<int> runs = r.runs;
    std::sort(runs.begin(), runs.end());
    CHECK(runs == std::vector<int>{2, 2, 2, 5});
    CHECK(r.gaps == std::vector<int>{1, 1, 1});
    CHECK(r.gap_wrap == 1);
    CHECK(max_star_configs(r) == 0);  // no run is 1 (mod 3)
}

TEST_CASE("star classification of trees and plain chains") {
    StarDecomposition nine = classify_stars(fixture("nine-face").hypergraph);
    REQUIRE(nine.ok());
    CHECK(nine.topology == StarTopology::TreeOfStars);
    CHECK(nine.stars.size() == 1);
    CHECK(nine.max_d() == 4);
    CHECK(nine.t_proper2 == 0);

    StarDecomposition sixc = classify_stars(fixture("six-cycle").hypergraph);
    REQUIRE(sixc.ok());
    CHECK(sixc.topology == StarTopology::CycleOfStars);
    CHECK(sixc.stars.size() == 6);
    StarRuns r = star_runs(sixc);
    CHECK(r.runs == std::vector<int>{2, 2});
    CHECK(r.gaps == std::vector<int>{1});
    CHECK(r.gap_wrap == 1);

    StarDecomposition sstr = classify_stars(fixture("seven-string").hypergraph);
    REQUIRE(sstr.ok());
    CHECK(sstr.topology == StarTopology::StringOfStars);
    CHECK(sstr.stars.size() == 7);

    CHECK(!classify_stars(fixture("figure1").hypergraph).ok());
    CHECK(!classify_stars(fixture("figure3-ferrers").hypergraph).ok());
}

TEST_CASE("star runs of the reduced chain and its packing count") {
    // The big component of figure7 is a string of six stars whose center
    // flags read closed/open alternating: three open runs of one star each.
    const Hypergraph& h = fixture("figure7").hypergraph;
    bool found = false;
    for (const Hypergraph& c : components(h)) {
        if (c.mu != 14) continue;
        found = true;
        StarDecomposition d = classify_stars(c);
        REQUIRE(d.ok());
        CHECK(d.topology == StarTopology::StringOfStars);
        CHECK(d.stars.size() == 6);
        CHECK(d.t_proper2 == 0);
        StarRuns r = star_runs(d);
        CHECK(r.runs == std::vector<int>{1, 1, 1});
        CHECK(r.gaps == std::vector<int>{1, 1});
        CHECK(max_star_configs(r) == 1);
    }
    CHECK(found);
    CHECK(star_modularity(h) == 1);
    CHECK(star_modularity(fixture("figure6").hypergraph) == 0);
}

TEST_CASE("packing counts on explicit star runs") {
    auto linear = [](std::vector<int> runs, std::vector<int> gaps) {
        StarRuns r;
        r.runs = std::move(runs);
        r.gaps = std::move(gaps);
        return r;
    };
    CHECK(max_star_configs(linear({1, 1}, {1})) == 1);
    CHECK(max_star_configs(linear({1, 1}, {2})) == 0);  // gap must be exactly 1
    CHECK(max_star_configs(linear({1, 1, 1}, {1, 1})) == 1);
    CHECK(max_star_configs(linear({1, 1, 1, 1}, {1, 1, 1})) == 2);
    CHECK(max_star_configs(linear({1, 2, 1}, {1, 1})) == 1);
    CHECK(max_star_configs(linear({1, 3, 1}, {1, 1})) == 0);
    CHECK(max_star_configs(linear({2, 2}, {1})) == 0);

    StarRuns wrap;  // two 1-runs on a cycle: both pairings give one config
    wrap.runs = {1, 1};
    wrap.gaps = {1};
    wrap.cycle = true;
    wrap.gap_wrap = 1;
    CHECK(max_star_configs(wrap) == 1);
}

TEST_CASE("star modularity refuses branching trees of stars") {
    // A central chain vertex joined to three 2-star joints: a tree of four
    // stars, which the chain formulas do not cover.
    Hypergraph t = hg(10, {{0, 1},
                           {0, 2},
                           {0, 3},
                           {1, 4},
                           {1, 5},
                           {2, 6},
                           {2, 7},
                           {3, 8},
                           {3, 9},
                           {4},
                           {5},
                           {6},
                           {7},
                           {8},
                           {9}});
    StarDecomposition d = classify_stars(t);
    REQUIRE(d.ok());
    CHECK(d.topology == StarTopology::TreeOfStars);
    CHECK(d.stars.size() == 4);
    CHECK_THROWS_AS(star_modularity(t), UnsupportedShape);
}

TEST_CASE("canonical codes decide isomorphism") {
    Hypergraph a = path(4, mask({0, 3}));
    // The same path written backwards.
    Hypergraph b = hg(4, {{3}, {3, 2}, {2, 1}, {1, 0}, {0}});
    CHECK(canonical_code(a) == canonical_code(b));

    Hypergraph star = hg(4, {{0, 1}, {0, 2}, {0, 3}, {1}, {2}, {3}});
    CHECK(canonical_code(a) != canonical_code(star));

    // Rotating a cycle's labels does not change the code; moving the closed
    // vertices relative to each other does.
    CHECK(canonical_code(cycle(6, mask({0, 3}))) ==
          canonical_code(cycle(6, mask({1, 4}))));
    CHECK(canonical_code(cycle(6, mask({0, 3}))) !=
          canonical_code(cycle(6, mask({0, 2}))));
}
