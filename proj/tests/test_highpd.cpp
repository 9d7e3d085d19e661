// Top-of-range conditions: the pd = |V|-1 test, its complement, the
// partition criterion for pd = |V|-2, the bipartite cut construction,
// generalized Ferrers graphs, and the equivalence scanner.

#include <stdexcept>

#include "doctest.h"
#include "helpers.hpp"
#include "hpd/core.hpp"
#include "hpd/enumerate.hpp"
#include "hpd/fixtures.hpp"
#include "hpd/highpd.hpp"
#include "hpd/oracle.hpp"
#include "hpd/reduce.hpp"

using namespace hpd;
using hpdtest::cycle;
using hpdtest::hg;
using hpdtest::mask;
using hpdtest::path;

namespace {

// Star with three closed leaves: pd = |V| - 1 via the dominating vertex.
Hypergraph k13() { return hg(4, {{0, 1}, {0, 2}, {0, 3}, {1}, {2}, {3}}); }

}  // namespace

TEST_CASE("pd = |V|-1 condition: dominator and bipartite routes") {
    StarEvidence dom = check_star(k13());
    CHECK(dom.holds);
    CHECK(dom.dominator >= 0);
    CHECK(!dom.describe(k13()).empty());
    CHECK(pd_recursive(k13()) == 3);

    // The all-open 4-cycle is spanning complete bipartite on its own W.
    Hypergraph k22 = cycle(4, 0);
    StarEvidence bip = check_star(k22);
    CHECK(bip.holds);
    CHECK(bip.via_bipartite);
    CHECK(bip.side1 == mask({0, 2}));
    CHECK(bip.side2 == mask({1, 3}));
    CHECK(!bip.describe(k22).empty());
    CHECK(pd_recursive(k22) == 3);

    CHECK_FALSE(check_star(fixture("six-cycle").hypergraph).holds);
    // Empty W: both conditions are vacuously off.
    Hypergraph closed2 = hg(2, {{0}, {0, 1}, {1}});
    CHECK_FALSE(check_star(closed2).holds);
    CHECK_FALSE(check_star_star(closed2));

    CHECK(check_star_star(fixture("six-cycle").hypergraph));
    CHECK_FALSE(check_star_star(k13()));
}

TEST_CASE("star conditions decide pd = |V|-1 on every small instance") {
    auto sweep = [](const std::vector<Hypergraph>& pop) {
        for (const Hypergraph& h : pop) {
            const int p = pd_bruteforce(h);
            if (h.open_set() == 0) {
                CHECK(p == h.mu);
                continue;
            }
            CHECK(p <= h.mu - 1);
            CHECK(check_star(h).holds == (p == h.mu - 1));
            CHECK(check_star_star(h) == (p <= h.mu - 2));
        }
    };
    sweep(separated_any_dim(3));
    sweep(separated_any_dim(4));
    sweep(separated_one_dim(5));
}

TEST_CASE("partition witness for pd = |V|-2 on the six-cycle") {
    auto w = check_sharp(fixture("six-cycle").hypergraph);
    REQUIRE(w.has_value());
    CHECK(w->v1 == mask({0, 1, 2}));
    CHECK(w->v2 == mask({3, 4, 5}));
    CHECK(w->e1.holds);
    CHECK(w->e2.holds);

    // The all-open seven-cycle has pd = |V|-2 but no partition witness: the
    // bipartite equivalence genuinely needs bipartiteness.
    const Hypergraph& seven = fixture("seven-cycle").hypergraph;
    CHECK(pd_cycle(seven) == seven.mu - 2);
    CHECK_FALSE(check_sharp(seven).has_value());

    // The all-open eight-cycle is bipartite with pd < |V|-2: no witness.
    Hypergraph eight = cycle(8, 0);
    CHECK(pd_cycle(eight) == 5);
    CHECK_FALSE(check_sharp(eight).has_value());
}

TEST_CASE("bipartite cut construction") {
    auto w6 = bipartite_cut_witness(fixture("six-cycle").hypergraph);
    REQUIRE(w6.has_value());
    CHECK(w6->v1 == mask({1, 2, 3}));
    CHECK(w6->v2 == mask({0, 4, 5}));
    CHECK((w6->v1 | w6->v2) == full_mask(6));
    CHECK((w6->v1 & w6->v2) == 0);
    CHECK(w6->e1.holds);
    CHECK(w6->e2.holds);

    auto wp = bipartite_cut_witness(path(6, mask({0, 5})));
    REQUIRE(wp.has_value());
    CHECK(wp->v1 == mask({3, 4, 5}));
    CHECK(wp->v2 == mask({0, 1, 2}));
    CHECK(wp->e1.holds);
    CHECK(wp->e2.holds);

    // Every open cross pair of the complete bipartite 4-cycle is adjacent;
    // no witness, matching pd = |V|-1 rather than |V|-2.
    CHECK_FALSE(bipartite_cut_witness(cycle(4, 0)).has_value());
    CHECK_FALSE(bipartite_cut_witness(path(4, mask({0, 3}))).has_value());

    CHECK_THROWS_AS(bipartite_cut_witness(fixture("seven-cycle").hypergraph),
                    std::invalid_argument);
    CHECK_THROWS_AS(bipartite_cut_witness(fixture("figure1").hypergraph),
                    std::invalid_argument);
}

TEST_CASE("Ferrers shapes validate and generate") {
    FerrersShape good{{3, 2, 2}, {0, 0, 1}};
    CHECK_NOTHROW(good.validate());
    CHECK(good.rows() == 3);
    CHECK(good.cols() == 3);

    CHECK_THROWS_AS((FerrersShape{{2, 3}, {0, 0}}.validate()),
                    std::invalid_argument);  // lambda must not increase
    CHECK_THROWS_AS((FerrersShape{{3, 2}, {1, 0}}.validate()),
                    std::invalid_argument);  // tau must start at 0
    CHECK_THROWS_AS((FerrersShape{{3, 3}, {0, 3}}.validate()),
                    std::invalid_argument);  // tau[i] < lambda[i]
    CHECK_THROWS_AS((FerrersShape{{3, 2}, {0}}.validate()),
                    std::invalid_argument);  // length mismatch
    CHECK_THROWS_AS((FerrersShape{{}, {}}.validate()), std::invalid_argument);

    Hypergraph small = ferrers_generate({{2, 1}, {0, 0}});
    CHECK(small == hg(4, {{0, 2}, {0, 3}, {1, 2}}));
    Hypergraph extras = ferrers_generate({{2, 1}, {0, 0}}, 2);
    CHECK(extras.mu == 6);
    CHECK(extras.is_closed(4));
    CHECK(extras.is_closed(5));
}

TEST_CASE("spanning Ferrers detection and the |V|-2 value") {
    Hypergraph baby = ferrers_generate({{2, 1}, {0, 0}});
    CHECK(detect_spanning_ferrers(baby));
    auto vb = pd_via_babyF(baby);
    REQUIRE(vb.has_value());
    CHECK(*vb == 2);
    CHECK(pd_bruteforce(baby) == 2);

    // Staircase with a closed extra: the isolated vertex raises mu and pd
    // together, keeping the |V|-2 value.
    Hypergraph stairs = ferrers_generate({{3, 2, 2}, {0, 0, 1}}, 1);
    CHECK(detect_spanning_ferrers(stairs));
    auto vs = pd_via_babyF(stairs);
    REQUIRE(vs.has_value());
    CHECK(*vs == 5);
    CHECK(pd_bruteforce(stairs) == 5);

    const Hypergraph& fig3 = fixture("figure3-ferrers").hypergraph;
    CHECK(detect_spanning_ferrers(fig3));
    auto v3 = pd_via_babyF(fig3);
    REQUIRE(v3.has_value());
    CHECK(*v3 == 10);
    CHECK(pd_bruteforce(fig3) == 10);

    const Hypergraph& figFL = fixture("figureFL").hypergraph;
    CHECK(detect_spanning_ferrers(figFL));
    auto vFL = pd_via_babyF(figFL);
    REQUIRE(vFL.has_value());
    CHECK(*vFL == 12);

    // K2,2 carries a spanning Ferrers subgraph but fails the |V|-2
    // precondition (its pd is |V|-1): both signals are needed.
    CHECK(detect_spanning_ferrers(cycle(4, 0)));
    CHECK_FALSE(pd_via_babyF(cycle(4, 0)).has_value());
    CHECK_FALSE(detect_spanning_ferrers(fixture("six-cycle").hypergraph));
    CHECK_FALSE(pd_via_babyF(fixture("six-cycle").hypergraph).has_value());
    CHECK_FALSE(detect_spanning_ferrers(fixture("seven-cycle").hypergraph));
    CHECK_FALSE(pd_via_babyF(k13()).has_value());
}

TEST_CASE("bipartite equivalence scan stays clean at small sizes") {
    ConjectureReport r = conjecture_scan(6);
    CHECK(r.ok());
    CHECK(r.max_vertices == 6);
    CHECK(r.graphs > 0);
    CHECK(r.instances > 0);
    CHECK(r.eligible > 0);   // the six-cycle itself is eligible
    CHECK(r.boundary > 0);   // ... and sits exactly at pd = |V|-2
    CHECK(r.oracle_checked == r.eligible);  // all of them fit under the cap
    CHECK(r.boundary <= r.eligible);
    CHECK(r.eligible <= r.instances);
}
