// Reduction engine: the string/cycle closed forms, the pd-preserving
// surgeries (branch trims, short-branch removal, attach cuts), the
// ascending-scan algorithm, the branch-peeling driver, the recursive
// evaluator, the star dispatch, and the auto driver.

#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "hpd/core.hpp"
#include "hpd/enumerate.hpp"
#include "hpd/fixtures.hpp"
#include "hpd/invariants.hpp"
#include "hpd/oracle.hpp"
#include "hpd/reduce.hpp"

using namespace hpd;
using hpdtest::cycle;
using hpdtest::disjoint_union;
using hpdtest::hg;
using hpdtest::mask;
using hpdtest::path;

namespace {

int vertex_named(const Hypergraph& g, const std::string& name) {
    for (int v = 0; v < g.mu; ++v)
        if (g.label(v) == name) return v;
    return -1;
}

Face edge_named(const Hypergraph& g, const char* a, const char* b) {
    return face_of({vertex_named(g, a), vertex_named(g, b)});
}

// All-open two-hub theta graph: three internally disjoint 0-1 paths. No
// closed vertex to branch on, not a cycle — outside every closed form.
Hypergraph theta() {
    return hg(5, {{0, 2}, {2, 1}, {0, 3}, {3, 1}, {0, 4}, {4, 1}});
}

bool rules_within(const ReductionTrace& t, std::initializer_list<const char*> allowed) {
    for (const auto& s : t.steps) {
        bool found = false;
        for (const char* a : allowed)
            if (s.rule == a) found = true;
        if (!found) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("string closed form on small paths") {
    CHECK(pd_string(hg(1, {{0}})) == 1);            // isolated closed vertex
    CHECK(pd_string(path(3, mask({0, 2}))) == 2);   // c-o-c
    CHECK(pd_string(path(4, mask({0, 3}))) == 3);   // c-o-o-c
    CHECK(pd_string(path(5, mask({0, 4}))) == 4);   // c-o-o-o-c
    CHECK(pd_string(path(5, mask({0, 2, 4}))) == 4);

    const Hypergraph& seven = fixture("seven-string").hypergraph;
    CHECK(pd_string(seven) == 5);
    CHECK(pd_string(seven, 0) == 5);  // the value is anchor-independent
    CHECK(pd_string(seven, 6) == 5);

    ReductionTrace trace;
    CHECK(pd_string(seven, 0, &trace) == 5);
    REQUIRE(trace.steps.size() == 1);
    CHECK(trace.steps[0].rule == "string-formula");
    CHECK(trace.total == 5);
}

TEST_CASE("string closed form agrees with the homology oracle on a 12-path") {
    Hypergraph p = path(12, mask({0, 4, 7, 9, 11}));
    CHECK(pd_string(p) == 9);
    CHECK(pd_string(p, 0) == 9);
    CHECK(pd_string(p, 11) == 9);
    CHECK(pd_bruteforce(p) == 9);
}

TEST_CASE("string closed form delegates open endpoints and rejects non-strings") {
    // Open endpoint (a legal intermediate after colon operations, never a
    // separated input): handled by the recursive evaluator.
    Hypergraph open_end = hg(3, {{0, 1}, {1, 2}, {2}});
    ReductionTrace trace;
    CHECK(pd_string(open_end, &trace) == 2);
    REQUIRE(trace.steps.size() == 1);
    CHECK(trace.steps[0].rule == "recursive-split");

    CHECK_THROWS_AS(pd_string(cycle(6, mask({0, 3}))), UnsupportedShape);
    CHECK_THROWS_AS(pd_string(path(4, mask({0, 1, 3}))), UnsupportedShape);
    CHECK_THROWS_AS(pd_string(path(4, mask({0, 3})), 1), UnsupportedShape);
    CHECK_THROWS_AS(pd_string(fixture("nine-face").hypergraph), UnsupportedShape);
}

TEST_CASE("cycle closed form") {
    CHECK(pd_cycle(fixture("six-cycle").hypergraph) == 4);
    CHECK(pd_cycle(fixture("seven-cycle").hypergraph) == 5);

    const int expected_all_open[] = {2, 3, 3, 4, 5, 5, 6};  // n = 3..9
    for (int n = 3; n <= 9; ++n)
        CHECK(pd_cycle(cycle(n, 0)) == expected_all_open[n - 3]);

    ReductionTrace trace;
    CHECK(pd_cycle(fixture("six-cycle").hypergraph, &trace) == 4);
    REQUIRE(trace.steps.size() == 1);
    CHECK(trace.steps[0].rule == "cycle-formula");
    CHECK(trace.total == 4);

    CHECK_THROWS_AS(pd_cycle(cycle(5, mask({0, 1, 3}))), UnsupportedShape);
    CHECK_THROWS_AS(pd_cycle(path(4, mask({0, 3}))), UnsupportedShape);
}

TEST_CASE("cycle values match the oracle for every closed pattern up to 7") {
    for (int n = 3; n <= 7; ++n) {
        for (const Hypergraph& c : all_cycles(n)) {
            const int expect = pd_bruteforce(c);
            CHECK(pd_recursive(c) == expect);
            if (!hpdtest::has_adjacent_closed(c)) CHECK(pd_cycle(c) == expect);
        }
    }
}

TEST_CASE("branch trimming at a closed endpoint") {
    // Open neighbour: three vertices go, the next one closes, pd drops by 2.
    Hypergraph p = path(5, mask({0, 4}));
    auto [rest, drop] = branch_trim(p, 0);
    CHECK(drop == 2);
    CHECK(rest == hg(2, {{0}, {0, 1}, {1}}));
    CHECK(pd_string(p) == pd_string(rest) + drop);

    // Closed neighbour: only the endpoint goes, pd drops by 1.
    Hypergraph q = path(5, mask({0, 1, 4}));
    auto [rest1, drop1] = branch_trim(q, 0);
    CHECK(drop1 == 1);
    CHECK(rest1 == path(4, mask({0, 3})));
    CHECK(pd_bruteforce(q) == pd_string(rest1) + drop1);

    CHECK_THROWS_AS(branch_trim(p, 1), std::invalid_argument);  // not an endpoint
    CHECK_THROWS_AS(branch_trim(cycle(6, mask({0, 3})), 0), std::invalid_argument);
    CHECK_THROWS_AS(branch_trim(hg(3, {{0, 1}, {1, 2}, {2}}), 0),
                    std::invalid_argument);  // open endpoint
    CHECK_THROWS_AS(branch_trim(hg(1, {{0}}), 0), std::invalid_argument);
    CHECK_THROWS_AS(branch_trim(p, 9), std::out_of_range);
}

TEST_CASE("short branch removal keeps pd") {
    const Hypergraph& nine = fixture("nine-face").hypergraph;

    // Length 1 (closed leaf on a joint): cancel the joining edge.
    Hypergraph len1 = cut_tree_step(nine, 0, {5});
    CHECK(len1 == cancel_face(nine, mask({0, 5})));
    CHECK(pd_recursive(len1) == 5);

    // Length 2 with an open inner vertex: remove the joint itself.
    Hypergraph spider =
        hg(5, {{0, 1}, {1, 2}, {0, 3}, {0, 4}, {2}, {3}, {4}});
    Hypergraph len2 = cut_tree_step(spider, 0, {1, 2});
    CHECK(len2 == remove_vertex(spider, 0));
    CHECK(pd_bruteforce(spider) == pd_bruteforce(len2));

    // Rejections: long branches, non-joints, wrong flags, non-branches.
    CHECK_THROWS_AS(cut_tree_step(nine, 0, {1, 2, 3}), std::invalid_argument);
    CHECK_THROWS_AS(cut_tree_step(path(5, mask({0, 4})), 1, {0}),
                    std::invalid_argument);
    CHECK_THROWS_AS(cut_tree_step(nine, 0, {1}), std::invalid_argument);
    Hypergraph closed_inner =
        hg(5, {{0, 1}, {1, 2}, {0, 3}, {0, 4}, {1}, {2}, {3}, {4}});
    CHECK_THROWS_AS(cut_tree_step(closed_inner, 0, {1, 2}),
                    std::invalid_argument);
    CHECK_THROWS_AS(cut_tree_step(spider, 0, {}), std::invalid_argument);
    CHECK_THROWS_AS(cut_tree_step(spider, 0, {3, 1}), std::invalid_argument);
}

TEST_CASE("attach-string cut on the nine-face fixture") {
    const Hypergraph& nine = fixture("nine-face").hypergraph;
    AttachCut ac = attach_string_cut(nine, 0, {1, 2, 3, 4});
    CHECK(ac.case_i);
    CHECK(ac.cut_a == 1);
    CHECK(ac.cut_b == 2);
    CHECK(ac.pd_s_prime == 2);
    CHECK(pd_recursive(ac.h_tilde) == 3);
    CHECK(pd_recursive(nine) == pd_recursive(ac.h_tilde) + ac.pd_s_prime);
}

TEST_CASE("attach-string cuts pick the drawn edges on figure4") {
    const Hypergraph& fig4 = fixture("figure4").hypergraph;

    // The long C-tail: first run open of length 3, unclaimed by the matching.
    int c6 = vertex_named(fig4, "C6");
    AttachCut tail = attach_string_cut(
        fig4, c6,
        {vertex_named(fig4, "C7"), vertex_named(fig4, "C8"),
         vertex_named(fig4, "C9"), vertex_named(fig4, "C10")});
    CHECK(tail.case_i);
    CHECK(tail.cut_a == vertex_named(fig4, "C7"));
    CHECK(tail.cut_b == vertex_named(fig4, "C8"));
    CHECK(tail.pd_s_prime == 2);

    // The B-arm off A4: first run of length 2, so the cut hugs the joint.
    int a4 = vertex_named(fig4, "A4");
    AttachCut arm = attach_string_cut(
        fig4, a4,
        {vertex_named(fig4, "B6"), vertex_named(fig4, "B7"),
         vertex_named(fig4, "B8")});
    CHECK_FALSE(arm.case_i);
    CHECK(arm.cut_a == a4);
    CHECK(arm.cut_b == vertex_named(fig4, "B6"));
    CHECK(arm.pd_s_prime == 2);
}

TEST_CASE("attach-string cut splits pd additively on a mixed-run branch") {
    // Joint 0 carries two closed leaves and an eight-vertex branch whose runs
    // (from the joint) are 3, 1, 1; the far pair of runs forms the one
    // matched configuration, leaving the joint-side run free, so the cut is
    // one step in.
    Hypergraph h = hg(11, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6},
                           {6, 7}, {7, 8}, {0, 9}, {0, 10},
                           {4}, {6}, {8}, {9}, {10}});
    AttachCut ac = attach_string_cut(h, 0, {1, 2, 3, 4, 5, 6, 7, 8});
    CHECK(ac.case_i);
    CHECK(ac.cut_a == 1);
    CHECK(ac.cut_b == 2);
    CHECK(ac.pd_s_prime == 5);
    CHECK(pd_recursive(ac.h_tilde) == 3);
    CHECK(pd_bruteforce(h) == 8);
    CHECK(pd_recursive(ac.h_tilde) + ac.pd_s_prime == 8);

    CHECK_THROWS_AS(attach_string_cut(h, 0, {1, 2}), std::invalid_argument);
    Hypergraph adj = path(6, mask({0, 3, 4, 5}));
    CHECK_THROWS_AS(attach_string_cut(adj, 5, {4, 3, 2, 1, 0}),
                    std::invalid_argument);
}

TEST_CASE("cutting the wrong edge changes the answer") {
    const Hypergraph& nine = fixture("nine-face").hypergraph;
    CHECK(pd_recursive(nine) == 5);
    // One edge over from the correct cut: the pieces cost 3 + 3.
    Hypergraph wrong = cut_face(nine, mask({0, 1}));
    CHECK(pd_recursive(wrong) == 6);
}

TEST_CASE("ascending scan evaluates strings, trees and one-cycle graphs") {
    auto run = [](const Hypergraph& h) {
        auto [value, trace] = algpd_connected(h);
        CHECK(trace.total == value);
        CHECK(rules_within(trace, {"isolated", "red", "ref2b", "cutTree-a",
                                   "cycle-formula"}));
        return value;
    };
    CHECK(run(fixture("nine-face").hypergraph) == 5);
    CHECK(run(fixture("seven-string").hypergraph) == 5);
    CHECK(run(fixture("six-cycle").hypergraph) == 4);
    CHECK(run(fixture("seven-cycle").hypergraph) == 5);
    CHECK(run(path(12, mask({0, 4, 7, 9, 11}))) == 9);
    CHECK(run(fixture("figure4").hypergraph) == 28);
    CHECK(run(fixture("figure5").hypergraph) == 28);

    CHECK_THROWS_AS(algpd_connected(fixture("figure1").hypergraph),
                    std::invalid_argument);  // higher faces
    CHECK_THROWS_AS(algpd_connected(hg(2, {{0, 1}, {1}})),
                    std::invalid_argument);  // not separated
    CHECK_THROWS_AS(algpd_connected(theta()), UnsupportedShape);
}

TEST_CASE("branch-peeling driver reproduces every 1-dimensional fixture") {
    auto run = [](const Hypergraph& h) {
        auto [value, trace] = pd_unique_cycle(h);
        CHECK(trace.total == value);
        return value;
    };
    CHECK(run(fixture("nine-face").hypergraph) == 5);
    CHECK(run(fixture("seven-string").hypergraph) == 5);
    CHECK(run(fixture("six-cycle").hypergraph) == 4);
    CHECK(run(fixture("seven-cycle").hypergraph) == 5);
    CHECK(run(fixture("figure4").hypergraph) == 28);
    CHECK(run(fixture("figure5").hypergraph) == 28);
    CHECK(run(path(5, mask({0, 1, 2, 3, 4}))) == 5);  // all closed
    CHECK(run(disjoint_union(fixture("nine-face").hypergraph,
                             fixture("seven-cycle").hypergraph)) == 10);

    CHECK_THROWS_AS(pd_unique_cycle(fixture("figure1").hypergraph),
                    std::invalid_argument);
    CHECK_THROWS_AS(pd_unique_cycle(theta()), UnsupportedShape);
}

TEST_CASE("figure4 reduces to figure5 by the drawn operations") {
    const Hypergraph& fig4 = fixture("figure4").hypergraph;
    const Hypergraph& fig5 = fixture("figure5").hypergraph;

    Hypergraph replay = fig4;
    replay = cut_face(replay, edge_named(replay, "C7", "C8"));
    replay = cut_face(replay, edge_named(replay, "A4", "B6"));
    // Cancelling A2-C1 leaves C1 with only the variable it shares with C2;
    // C2's generator becomes redundant and is absorbed on the spot.
    replay = cancel_face(replay, edge_named(replay, "A2", "C1"));
    CHECK(replay.mu == fig4.mu - 1);
    CHECK(vertex_named(replay, "C2") == -1);
    replay = cancel_face(replay, edge_named(replay, "A6", "B9"));
    for (const char* red : {"A3", "C2", "C6", "D6"})
        if (int v = vertex_named(replay, red); v >= 0)
            replay = remove_vertex(replay, v);

    CHECK(replay == fig5);
    CHECK(replay.labels == fig5.labels);
    CHECK(pd_unique_cycle(replay).first == 28);
}

TEST_CASE("figure6 minus its proper 2-star centers is figure7") {
    const Hypergraph& fig6 = fixture("figure6").hypergraph;
    const Hypergraph& fig7 = fixture("figure7").hypergraph;
    Face centers = 0;
    for (const char* name : {"(2,0)", "(3,0)", "(2,1)", "(5,1)"})
        centers |= bit(vertex_named(fig6, name));
    CHECK(centers == mask({9, 23, 30, 33}));
    Hypergraph removed = remove_vertices(fig6, centers);
    CHECK(removed == fig7);
    CHECK(removed.labels == fig7.labels);
}

TEST_CASE("recursive evaluator handles every fixture it can reach") {
    CHECK(pd_recursive(fixture("nine-face").hypergraph) == 5);
    CHECK(pd_recursive(fixture("seven-string").hypergraph) == 5);
    CHECK(pd_recursive(fixture("six-cycle").hypergraph) == 4);
    CHECK(pd_recursive(fixture("seven-cycle").hypergraph) == 5);

    const Hypergraph& fig1 = fixture("figure1").hypergraph;
    const Hypergraph& fig2 = fixture("figure2").hypergraph;
    CHECK(pd_recursive(fig1) == pd_bruteforce(fig1));
    CHECK(pd_recursive(fig2) == pd_bruteforce(fig2));

    CHECK_THROWS_AS(pd_recursive(theta()), NeedsOracle);
}

TEST_CASE("star dispatch evaluates chains of stars and declines the rest") {
    const Hypergraph& fig6 = fixture("figure6").hypergraph;
    ReductionTrace trace;
    auto v6 = pd_stars(fig6, &trace);
    REQUIRE(v6.has_value());
    CHECK(*v6 == 31);
    CHECK(trace.total == 31);
    CHECK(rules_within(trace, {"star-formula"}));

    auto v7 = pd_stars(fixture("figure7").hypergraph);
    REQUIRE(v7.has_value());
    CHECK(*v7 == 31);

    CHECK(pd_stars(fixture("six-cycle").hypergraph) == 4);
    CHECK(pd_stars(fixture("seven-cycle").hypergraph) == 5);
    CHECK(pd_stars(fixture("seven-string").hypergraph) == 5);
    CHECK(pd_stars(path(12, mask({0, 4, 7, 9, 11}))) == 9);

    CHECK_FALSE(pd_stars(fixture("nine-face").hypergraph).has_value());
    CHECK_FALSE(pd_stars(fixture("figure1").hypergraph).has_value());
    CHECK_FALSE(pd_stars(fixture("figure3-ferrers").hypergraph).has_value());
    CHECK_FALSE(pd_stars(fixture("figure4").hypergraph).has_value());
}

TEST_CASE("proper 2-star chains drop exactly one per star") {
    // Triangle of three proper 2-stars: 9 vertices, T = 3.
    Hypergraph tri = hg(9, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {3, 4}, {1, 5},
                            {5, 6}, {2, 7}, {7, 8}, {4}, {6}, {8}});
    auto vt = pd_stars(tri);
    REQUIRE(vt.has_value());
    CHECK(*vt == 6);
    CHECK(pd_bruteforce(tri) == 6);

    // String of two proper 2-stars, two branches each: 10 vertices, T = 2.
    Hypergraph two = hg(10, {{0, 1}, {0, 2}, {2, 3}, {0, 4}, {4, 5}, {1, 6},
                             {6, 7}, {1, 8}, {8, 9}, {3}, {5}, {7}, {9}});
    auto v2 = pd_stars(two);
    REQUIRE(v2.has_value());
    CHECK(*v2 == 8);
    CHECK(pd_bruteforce(two) == 8);

    // Branching tree of four proper 2-stars: 18 vertices, T = 4. The
    // ascending scan is exact on trees and serves as the cross-check.
    Hypergraph tree = hg(18, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {4, 5},
                              {1, 6}, {6, 7}, {1, 12}, {12, 13},
                              {2, 8}, {8, 9}, {2, 14}, {14, 15},
                              {3, 10}, {10, 11}, {3, 16}, {16, 17},
                              {5}, {7}, {9}, {11}, {13}, {15}, {17}});
    auto d = classify_stars(tree);
    REQUIRE(d.ok());
    CHECK(d.topology == StarTopology::TreeOfStars);
    CHECK(d.stars.size() == 4);
    auto vtree = pd_stars(tree);
    REQUIRE(vtree.has_value());
    CHECK(*vtree == 14);
    CHECK(algpd_connected(tree).first == 14);
}

TEST_CASE("star dispatch covers higher faces confined to one star") {
    // All-open 4-cycle of stars; the star at 0 has two closed leaves and one
    // triangle face inside its own mask.
    Hypergraph ok = hg(6, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 4}, {0, 5},
                           {0, 4, 5}, {4}, {5}});
    auto v = pd_stars(ok);
    REQUIRE(v.has_value());
    CHECK(*v == 5);
    CHECK(pd_bruteforce(ok) == 5);

    // The same skeleton with the triangle spanning two stars is declined.
    Hypergraph bad = hg(6, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 4}, {0, 5},
                            {0, 1, 4}, {4}, {5}});
    CHECK_FALSE(pd_stars(bad).has_value());
}

TEST_CASE("auto driver picks the cheapest applicable method") {
    AutoResult stars = pd_auto(fixture("figure6").hypergraph);
    CHECK(stars.pd == 31);
    CHECK(stars.method == "stars");
    CHECK(stars.trace.total == 31);

    AutoResult reduce = pd_auto(fixture("figure4").hypergraph);
    CHECK(reduce.pd == 28);
    CHECK(reduce.method == "reduce");
    CHECK(reduce.trace.total == 28);

    AutoResult rec = pd_auto(fixture("figure1").hypergraph);
    CHECK(rec.method == "recursive");
    CHECK(rec.pd == pd_bruteforce(fixture("figure1").hypergraph));

    CHECK_THROWS_AS(pd_auto(theta()), NeedsOracle);
    AutoResult fb = pd_auto(theta(), true);
    CHECK(fb.method == "oracle");
    CHECK(fb.pd == pd_bruteforce(theta()));
}
