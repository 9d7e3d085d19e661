// Small builders shared by the unit tests.
#pragma once

#include <initializer_list>
#include <vector>

#include "hpd/core.hpp"

namespace hpdtest {

using hpd::Face;
using hpd::Hypergraph;

/// Hypergraph from explicit faces: hg(3, {{0}, {0,1}, {1,2}, {2}}).
inline Hypergraph hg(int mu,
                     std::initializer_list<std::initializer_list<int>> faces) {
    std::vector<Face> fs;
    for (const auto& f : faces) {
        Face m = 0;
        for (int v : f) m |= hpd::bit(v);
        fs.push_back(m);
    }
    return hpd::make_hypergraph(mu, std::move(fs));
}

/// Path 0-1-...-(n-1) with singletons for every vertex in `closed`.
inline Hypergraph path(int n, Face closed) {
    std::vector<Face> fs;
    for (int v = 0; v + 1 < n; ++v) fs.push_back(hpd::bit(v) | hpd::bit(v + 1));
    for (int v = 0; v < n; ++v)
        if (hpd::has_bit(closed, v)) fs.push_back(hpd::bit(v));
    return hpd::make_hypergraph(n, std::move(fs));
}

/// Cycle 0-1-...-(n-1)-0 with singletons for every vertex in `closed`.
inline Hypergraph cycle(int n, Face closed) {
    std::vector<Face> fs;
    for (int v = 0; v < n; ++v) fs.push_back(hpd::bit(v) | hpd::bit((v + 1) % n));
    for (int v = 0; v < n; ++v)
        if (hpd::has_bit(closed, v)) fs.push_back(hpd::bit(v));
    return hpd::make_hypergraph(n, std::move(fs));
}

inline Face mask(std::initializer_list<int> vs) { return hpd::face_of(vs); }

/// Two closed vertices joined by an edge somewhere?
inline bool has_adjacent_closed(const Hypergraph& h) {
    for (Face f : h.faces)
        if (hpd::popcount(f) == 2) {
            auto vs = hpd::face_vertices(f);
            if (h.is_closed(vs[0]) && h.is_closed(vs[1])) return true;
        }
    return false;
}

/// Disjoint union (block diagonal) of two hypergraphs.
inline Hypergraph disjoint_union(const Hypergraph& a, const Hypergraph& b) {
    std::vector<Face> fs = a.faces;
    for (Face f : b.faces) fs.push_back(f << a.mu);
    std::vector<std::string> labels;
    for (int v = 0; v < a.mu; ++v) labels.push_back("a" + a.label(v));
    for (int v = 0; v < b.mu; ++v) labels.push_back("b" + b.label(v));
    return hpd::make_hypergraph(a.mu + b.mu, std::move(fs), std::move(labels));
}

}  // namespace hpdtest
