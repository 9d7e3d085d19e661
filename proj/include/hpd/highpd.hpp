#pragma once

// Top-of-range projective dimension: the spanning-complete-bipartite /
// dominating-vertex conditions, the partition criterion for pd = |V| - 2 with
// both constructive directions, generalized Ferrers graphs, and the
// bipartite-equivalence scanner.

#include <optional>
#include <string>
#include <vector>

#include "hpd/core.hpp"

namespace hpd {

/// Outcome of the pd = |V|-1 condition on the open set W(H): W nonempty and
/// (the skeleton on W carries a spanning complete bipartite subgraph —
/// equivalently its complement on W is disconnected — or some vertex is
/// edge-adjacent to every open vertex).
struct StarEvidence {
    bool holds = false;
    bool via_bipartite = false;  // complement on W split into side1 | side2
    Face side1 = 0, side2 = 0;
    int dominator = -1;          // vertex adjacent to all of W, -1 if none
    std::string describe(const Hypergraph& h) const;
};

StarEvidence check_star(const Hypergraph& h);

/// The complementary condition: W nonempty, no spanning complete bipartite on
/// W, no dominating vertex. Equivalent to pd <= |V| - 2.
bool check_star_star(const Hypergraph& h);

/// A certified partition for pd = |V| - 2: closing the complement of either
/// side leaves a hypergraph satisfying the pd = |V|-1 condition.
struct PartitionWitness {
    Face v1 = 0, v2 = 0;
    StarEvidence e1, e2;
};

/// Searches all bipartitions (each side must meet W(H)) once the pd <= |V|-2
/// condition holds; first witness in ascending mask order, vertex 0 on side 1.
std::optional<PartitionWitness> check_sharp(const Hypergraph& h);

/// Constructive converse for 1-dimensional bipartite hypergraphs certified to
/// have pd = |V| - 2: picks a non-adjacent open pair (v, w) across the parts,
/// forms V1 = {v} + (part of w minus w), V2 = {w} + (part of v minus v), cuts
/// every crossing edge and returns both sides (they satisfy the pd = |V|-1
/// condition by construction). Returns nothing when no non-adjacent open
/// cross pair exists (that is exactly a pd <= |V|-2 failure).
struct BipartiteCutWitness {
    Face v1 = 0, v2 = 0;
    Hypergraph g1, g2;
    StarEvidence e1, e2;
};

std::optional<BipartiteCutWitness> bipartite_cut_witness(const Hypergraph& h);

/// Staircase bipartite shape: row i is joined to columns tau[i]+1 .. lambda[i]
/// (1-based). lambda non-increasing positive, tau non-decreasing from 0,
/// tau[i] < lambda[i].
struct FerrersShape {
    std::vector<int> lambda;
    std::vector<int> tau;
    int rows() const { return static_cast<int>(lambda.size()); }
    int cols() const { return lambda.empty() ? 0 : lambda.front(); }
    /// Throws std::invalid_argument with the violated constraint.
    void validate() const;
};

/// The shape's bipartite hypergraph: rows 0..s-1 then columns s..s+cols-1,
/// all open, plus `closed_extras` isolated closed vertices after them.
Hypergraph ferrers_generate(const FerrersShape& shape, int closed_extras = 0);

/// True iff the skeleton on W(H) contains a spanning generalized Ferrers
/// subgraph; equivalently some edge {a,b} inside W has W within
/// N(a) | N(b) | {a,b}.
bool detect_spanning_ferrers(const Hypergraph& h);

/// |V| - 2 when the pd <= |V|-2 condition and a spanning Ferrers subgraph on
/// W both hold; nothing otherwise.
std::optional<int> pd_via_babyF(const Hypergraph& h);

/// Bipartite equivalence sweep: enumerates separated 1-dimensional bipartite
/// hypergraphs on <= max_vertices vertices and tests, for every instance with
/// pd <= |V|-2, that pd = |V|-2 holds exactly when a partition witness
/// exists. Evaluator values are cross-checked against the homology oracle on
/// every instance with <= oracle_all_up_to vertices (and a 1-in-97 sample
/// above).
struct ConjectureReport {
    int max_vertices = 0;
    long long graphs = 0;          // bipartite graphs up to isomorphism
    long long instances = 0;       // separated closed patterns laid on them
    long long eligible = 0;        // instances with pd <= |V|-2
    long long boundary = 0;        // instances with pd == |V|-2
    long long oracle_checked = 0;  // evaluator values verified by the oracle
    std::vector<std::string> counterexamples;
    bool ok() const { return counterexamples.empty(); }
};

ConjectureReport conjecture_scan(int max_vertices, int oracle_all_up_to = 6);

}  // namespace hpd
