#pragma once

// Instance populations for the verification harness: graphs up to
// isomorphism (extend-by-vertex with canonical-form rejection), closed-vertex
// pattern layering with separation filters, exhaustive small hypergraph
// enumeration, and seeded random instances.

#include <random>
#include <vector>

#include "hpd/core.hpp"

namespace hpd {

/// Connected simple graphs on exactly n >= 1 vertices, one per isomorphism
/// class, as lists of 2-element faces.
std::vector<std::vector<Face>> connected_graphs(int n);

/// All simple graphs on exactly n >= 1 vertices (disconnected included), one
/// per isomorphism class.
std::vector<std::vector<Face>> all_graphs(int n);

/// True when the graph is acyclic (#edges = n - #components).
bool graph_is_forest(int n, const std::vector<Face>& edges);

/// True when the graph is 2-colorable.
bool graph_is_bipartite(int n, const std::vector<Face>& edges);

/// The hypergraph with the given edges plus singletons for `closed`.
Hypergraph graph_instance(int n, const std::vector<Face>& edges, Face closed);

/// Every closed-vertex mask making (n, edges) a separated hypergraph,
/// ascending. Vertices of edge-degree <= 1 are forced closed, the rest
/// searched exhaustively.
std::vector<Face> separated_closed_masks(int n, const std::vector<Face>& edges);

/// Exhaustive separated hypergraphs of ANY dimension on exactly n vertices,
/// one per isomorphism class. Cost 2^(2^n - 1); feasible for n <= 4.
std::vector<Hypergraph> separated_any_dim(int n);

/// Exhaustive separated 1-dimensional hypergraphs on exactly n vertices, one
/// per isomorphism class.
std::vector<Hypergraph> separated_one_dim(int n);

/// Paths on n >= 1 vertices with every separated closed pattern (both
/// endpoints forced closed; every interior pattern is separated).
std::vector<Hypergraph> all_strings(int n);

/// Cycles on n >= 3 vertices with every closed pattern (all separated).
std::vector<Hypergraph> all_cycles(int n);

/// Random separated hypergraph on mu vertices: uniform random faces, coverage
/// repaired with singletons, then singletons added until separated.
Hypergraph random_separated(int mu, std::mt19937_64& rng, int extra_faces = 3);

}  // namespace hpd
