// reduce.hpp — the reduction engine. Closed-form projective dimension for
// strings, cycles and chains of stars; the pd-preserving surgery steps
// (branch trimming, cut-tree moves, attach-string cuts); the literal
// ascending-scan algorithm for trees plus one cycle; a driver that composes
// the surgeries; and a general recursive evaluator.
//
// Throughout, "pd" is the projective dimension of the quotient by the
// standard ideal of the hypergraph.

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hpd/core.hpp"

namespace hpd {

/// Thrown by pd_recursive when the recursion strands a component it has no
/// rule for (an all-open higher-dimensional component); the caller may
/// consult the brute-force evaluator instead.
struct NeedsOracle : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Traces
// ---------------------------------------------------------------------------

/// One reduction event. Formula steps ("string-formula", "cycle-formula",
/// "star-formula") carry the whole component value as their delta; surgery
/// steps carry their pd increment (0 for pd-preserving moves).
struct TraceStep {
    std::string rule;  // isolated | red | ref2a | ref2b | eq-cancel |
                       // cutTree-a | cutTree-b | attach-cut-i | attach-cut-ii |
                       // string-formula | cycle-formula | star-formula |
                       // recursive-split | oracle-fallback
    std::vector<std::string> vertices;               // original labels
    std::vector<std::vector<std::string>> faces;     // original labels
    int delta = 0;
};

struct ReductionTrace {
    std::vector<TraceStep> steps;
    int total = 0;

    void add(TraceStep step) {
        total += step.delta;
        steps.push_back(std::move(step));
    }
    void absorb(const ReductionTrace& other) {
        for (const auto& s : other.steps) add(s);
    }
};

// ---------------------------------------------------------------------------
// Closed forms
// ---------------------------------------------------------------------------

/// pd of a string: |V| - s - sum_i floor((n_i - 1)/3) + M over the open runs
/// n_1..n_s, M the maximal number of disjoint 1-1 special configurations.
/// The anchor picks the endpoint the configuration matching starts from; the
/// value is anchor-independent. Requires no adjacent closed vertices (cancel
/// those edges first); a string with an open endpoint (legal internal value
/// after colon operations) is evaluated by pd_recursive instead.
/// Throws UnsupportedShape when S is not a string.
int pd_string(const Hypergraph& s, int anchor, ReductionTrace* trace = nullptr);
int pd_string(const Hypergraph& s, ReductionTrace* trace = nullptr);

/// pd of a cycle: all-open on n vertices -> n - 1 - floor((n-2)/3);
/// otherwise reduce at the first closed vertex v via
/// max(pd(H_v), pd(Q_v) + 1), both arguments being unions of strings.
/// Requires no adjacent closed vertices. Throws UnsupportedShape otherwise.
int pd_cycle(const Hypergraph& c, ReductionTrace* trace = nullptr);

// ---------------------------------------------------------------------------
// Surgery steps
// ---------------------------------------------------------------------------

/// Trims a branch at its closed endpoint v1 (edge-degree 1):
///   (a) neighbour v2 closed  -> (H_{v1}, +1)
///   (b) neighbour v2 open    -> (H_{v1,v2,v3}, +2), v3 the next vertex on.
/// Throws std::invalid_argument when v1 is not a closed endpoint of a branch
/// with at least two vertices.
std::pair<Hypergraph, int> branch_trim(const Hypergraph& h, int v1);

/// Removes a short branch without changing pd:
///   length 1 -> cancel the edge joining w to the branch vertex (H:E);
///   length 2 -> remove the joint w itself (H_w); the inner branch vertex
///               must be open.
/// `branch` lists the branch vertices from the joint outward. Throws
/// std::invalid_argument on longer branches or unmet conditions.
Hypergraph cut_tree_step(const Hypergraph& h, int w,
                         const std::vector<int>& branch);

/// Cutting a long branch (>= 3 vertices) off its joint w at the pd-neutral
/// edge. With runs counted from the w end and nr = n - M - W (mod 3 residue
/// of the reduced length), the cut edge is {v_{nr+1}, v_{nr+2}} when the
/// branch starts open with its first run = 0 (mod 3) and that run is in no
/// 1-0 configuration (case i), else {v_nr, v_{nr+1}}, where v_0 = w.
/// pd(H) = pd(h_tilde) + pd_s_prime.
struct AttachCut {
    Hypergraph h_tilde;   // the component keeping the joint
    Hypergraph s_prime;   // the detached tail
    int pd_s_prime = 0;
    bool case_i = false;
    int cut_a = -1, cut_b = -1;  // cut edge endpoints in h's indexing
};
AttachCut attach_string_cut(const Hypergraph& h, int w,
                            const std::vector<int>& branch);

// ---------------------------------------------------------------------------
// Whole-hypergraph evaluators
// ---------------------------------------------------------------------------

/// The literal ascending-scan algorithm for a separated 1-dimensional
/// hypergraph with at most one cycle: repeatedly removes degree-0 and
/// degree-1 vertices (with their pd increments) scanning vertex indices in
/// ascending order with wrap-around; a remnant where every live vertex has
/// degree >= 2 must be a single cycle, evaluated by pd_cycle.
/// Throws UnsupportedShape when the remnant is not one cycle.
std::pair<int, ReductionTrace> algpd_connected(const Hypergraph& h);

/// Driver for 1-dimensional hypergraphs whose components keep at most one
/// cycle (extra cycles may unfold through the surgeries): cancels edges
/// between adjacent closed vertices, splits components, peels branches
/// (attach cuts for length >= 3, joint removal for length 2, edge
/// cancellation for length 1), counts isolated vertices, and finishes with
/// the string/cycle closed forms. Throws UnsupportedShape when stuck.
std::pair<int, ReductionTrace> pd_unique_cycle(const Hypergraph& h);

/// General evaluator: minimalize, split components, all-closed -> |V|,
/// all-open cycle -> closed form, otherwise branch on the first closed
/// vertex v with max(pd(H_v), pd(Q_v) + 1). Memoizes on canonical forms for
/// components with <= 12 vertices. Throws NeedsOracle when stranded on an
/// all-open component that is not a cycle, where there is no closed vertex
/// to branch on (e.g. an all-open theta graph, or any all-open complex of
/// dimension above 1).
int pd_recursive(const Hypergraph& h);

/// Closed forms for chains of stars, per component:
///   - trees and cycles made entirely of proper 2-stars: |V| - T;
///   - strings/cycles of 2-stars: |V| - T - s* - sum floor((n_i-1)/3) + M*,
///     computed on the hypergraph left by removing the proper-2 centers;
///   - all-open cycles of (at most) 1-stars: |V| - 1 - floor((n_1-2)/3);
///   - higher-dimensional inputs whose 1-skeleton is a string/cycle of
///     1-stars covering all vertices, with every higher face inside a single
///     star: the same formulas on the skeleton.
/// Returns nullopt when some component matches no hypothesis.
std::optional<int> pd_stars(const Hypergraph& h, ReductionTrace* trace = nullptr);

/// Tries pd_stars, then pd_unique_cycle, then pd_recursive; optionally falls
/// back to the brute-force evaluator. `method` names the winner ("stars",
/// "reduce", "recursive", "oracle").
struct AutoResult {
    int pd = 0;
    std::string method;
    ReductionTrace trace;
};
AutoResult pd_auto(const Hypergraph& h, bool oracle_fallback = false);

}  // namespace hpd
