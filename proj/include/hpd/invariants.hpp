// invariants.hpp — orientation-aware string invariants (open runs and the
// correction counts M, O, W, q, nr) and star-level structure: classification
// of a 1-dimensional hypergraph into stars joined at their centers, the
// proper-2-star count T, and star modularity M*.

#pragma once

#include <optional>
#include <vector>

#include "hpd/core.hpp"

namespace hpd {

// ---------------------------------------------------------------------------
// Shape predicates
// ---------------------------------------------------------------------------

/// Connected, 1-dimensional, every vertex on at most two edges, acyclic.
/// Includes the single-vertex hypergraph.
bool is_string(const Hypergraph& h);

/// Connected, 1-dimensional, every vertex on exactly two edges (>= 3 vertices).
bool is_cycle(const Hypergraph& h);

/// The (one or two) vertices of edge-degree <= 1 of a string, ascending.
std::vector<int> string_endpoints(const Hypergraph& h);

// ---------------------------------------------------------------------------
// String profiles
// ---------------------------------------------------------------------------

/// Run decomposition of a string read toward the anchor endpoint.
struct StringProfile {
    std::vector<int> vertices;  // v1..vn in order; vn is the anchor
    std::vector<int> runs;      // open-run lengths; runs[0] farthest from the
                                // anchor, runs.back() adjacent to it
    std::vector<int> run_use;   // per run: 0 free, 1 claimed by a 1-1
                                // configuration, 2 claimed by a 1-0 one
    int m_count = 0;            // M(S;v): disjoint 1-1 special configurations
    int o_count = 0;            // O(S;v): disjoint 1-0 special configurations
    int w_count = 0;            // W(S;v) = #{i : runs[i] % 3 == 0} - O
    int q = 0;                  // n - M - W = 3q + nr
    int nr = 0;                 // the remainder, 0..2

    int n() const { return static_cast<int>(vertices.size()); }
    int s() const { return static_cast<int>(runs.size()); }
};

/// Computes the profile of string S anchored at endpoint `anchor`. M and O
/// are matched greedily from the anchor outward (nearest valid configuration
/// first); O only among runs the 1-1 configurations left free. Throws
/// UnsupportedShape when S is not a string, `anchor` not an endpoint, or two
/// closed vertices are adjacent (callers cancel those edges first).
StringProfile string_profile(const Hypergraph& s, int anchor);

/// Whole-sequence tests on a run decomposition ordered far-to-near-anchor.
/// 1-1: at least two runs, both end runs = 1 (mod 3), middles = 2 (mod 3).
/// 1-0: far run = 0, near-anchor run = 1, middles = 2 (mod 3).
bool is_11_special(const std::vector<int>& runs);
bool is_10_special(const std::vector<int>& runs);

/// Convenience forms taking the string itself.
bool is_11_special(const Hypergraph& s);
bool is_10_special(const Hypergraph& s, int anchor);

/// Exact maximum number of pairwise-disjoint 1-1 special configurations by
/// dynamic programming — the greedy count must equal this (tested).
int max_disjoint_11(const std::vector<int>& runs);

// ---------------------------------------------------------------------------
// Stars
// ---------------------------------------------------------------------------

/// One star of a decomposition: its center and the branches hanging off it
/// (each branch listed from the vertex adjacent to the center outward).
struct Star {
    int center = -1;
    std::vector<std::vector<int>> branches;
    bool open_center = false;

    int d() const {  // a d-star: the longest branch
        std::size_t m = 0;
        for (const auto& b : branches) m = std::max(m, b.size());
        return static_cast<int>(m);
    }
    bool proper2() const { return d() == 2; }
    int size() const {
        int n = 1;
        for (const auto& b : branches) n += static_cast<int>(b.size());
        return n;
    }
};

enum class StarTopology { None, StringOfStars, CycleOfStars, TreeOfStars };

struct StarDecomposition {
    StarTopology topology = StarTopology::None;
    std::vector<Star> stars;  // chain order for string/cycle topologies
    int t_proper2 = 0;        // T(H): number of proper 2-stars

    bool ok() const { return topology != StarTopology::None; }
    int max_d() const {
        int m = 0;
        for (const auto& s : stars) m = std::max(m, s.d());
        return m;
    }
    bool all_open() const {
        for (const auto& s : stars)
            if (!s.open_center) return false;
        return true;
    }
};

/// Decomposes a CONNECTED 1-dimensional hypergraph into stars joined at
/// centers. Branches are the maximal leaf walks into the first vertex of
/// edge-degree >= 3; the remaining vertices must form a path, cycle or tree
/// (the center chain; chain vertices without branches are 0-stars). Returns
/// topology None when the component is not such a decomposition (e.g. higher
/// dimensional, more than one cycle, or empty).
StarDecomposition classify_stars(const Hypergraph& h);

/// Open-star run structure of one star chain: run lengths (consecutive open
/// stars) plus the number of closed stars between consecutive runs, for the
/// configuration-packing rules.
struct StarRuns {
    std::vector<int> runs;
    std::vector<int> gaps;  // gaps[i] = closed stars between runs i and i+1
    bool cycle = false;
    int gap_wrap = 0;       // cycle only: closed stars between last and first run
};

StarRuns star_runs(const StarDecomposition& d);

/// Maximum number of pairwise-disjoint 1-1 special star configurations of
/// one chain (runs with both ends = 1 and middles = 2 mod 3, every two runs
/// inside a configuration separated by exactly one closed star).
int max_star_configs(const StarRuns& r);

/// M*(H): sum of max_star_configs over the components of H (a disjoint union
/// of strings/cycles of stars). Components that fail to classify raise
/// UnsupportedShape.
int star_modularity(const Hypergraph& h);

// ---------------------------------------------------------------------------
// Canonical forms
// ---------------------------------------------------------------------------

/// Lexicographically least sorted face list over all vertex relabelings,
/// found by backtracking with prefix pruning. Two hypergraphs on the same
/// number of vertices are isomorphic (faces, hence open/closed structure,
/// match under some relabeling) iff their codes are equal. Intended for
/// small instances (<= 12 vertices or so).
std::vector<Face> canonical_code(const Hypergraph& h);

}  // namespace hpd
