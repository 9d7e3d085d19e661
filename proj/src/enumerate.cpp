#include "hpd/enumerate.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "hpd/invariants.hpp"

namespace hpd {

namespace {

std::vector<Face> canonical_edges(int n, std::vector<Face> edges) {
    return canonical_code(make_hypergraph(n, std::move(edges)));
}

// Extend-by-vertex generation: every graph on k+1 vertices is some graph on
// k vertices (delete a vertex — a non-cutvertex when connectivity must be
// kept) plus a new vertex wired to a neighbour subset. Trying all subsets on
// one representative per class covers every class one level up.
std::vector<std::vector<Face>> grow_graphs(int n, bool connected_only) {
    if (n < 1) throw std::invalid_argument("graph enumeration needs n >= 1");
    std::vector<std::vector<Face>> level = {{}};  // the 1-vertex graph
    for (int k = 1; k < n; ++k) {
        std::set<std::vector<Face>> seen;
        std::vector<std::vector<Face>> next;
        for (const auto& g : level) {
            const Face north = Face{1} << k;
            for (Face nb = connected_only ? 1 : 0; nb < north; ++nb) {
                std::vector<Face> edges = g;
                for (int v : face_vertices(nb)) edges.push_back(bit(v) | north);
                auto canon = canonical_edges(k + 1, edges);
                if (seen.insert(canon).second) next.push_back(std::move(edges));
            }
        }
        level = std::move(next);
    }
    return level;
}

int component_count(int n, const std::vector<Face>& edges) {
    std::vector<int> parent(n);
    for (int v = 0; v < n; ++v) parent[v] = v;
    auto find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    int comps = n;
    for (Face e : edges) {
        auto vs = face_vertices(e);
        int a = find(vs[0]), b = find(vs[1]);
        if (a != b) {
            parent[a] = b;
            --comps;
        }
    }
    return comps;
}

}  // namespace

std::vector<std::vector<Face>> connected_graphs(int n) {
    return grow_graphs(n, true);
}

std::vector<std::vector<Face>> all_graphs(int n) {
    return grow_graphs(n, false);
}

bool graph_is_forest(int n, const std::vector<Face>& edges) {
    return static_cast<int>(edges.size()) == n - component_count(n, edges);
}

bool graph_is_bipartite(int n, const std::vector<Face>& edges) {
    std::vector<int> color(n, -1);
    std::vector<Face> adj(n, 0);
    for (Face e : edges) {
        auto vs = face_vertices(e);
        adj[vs[0]] |= bit(vs[1]);
        adj[vs[1]] |= bit(vs[0]);
    }
    for (int root = 0; root < n; ++root) {
        if (color[root] >= 0) continue;
        color[root] = 0;
        std::vector<int> queue = {root};
        while (!queue.empty()) {
            int v = queue.back();
            queue.pop_back();
            for (int u : face_vertices(adj[v])) {
                if (color[u] < 0) {
                    color[u] = 1 - color[v];
                    queue.push_back(u);
                } else if (color[u] == color[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

Hypergraph graph_instance(int n, const std::vector<Face>& edges, Face closed) {
    std::vector<Face> faces = edges;
    for (int v : face_vertices(closed)) faces.push_back(bit(v));
    return make_hypergraph(n, std::move(faces));
}

std::vector<Face> separated_closed_masks(int n, const std::vector<Face>& edges) {
    std::vector<int> degree(n, 0);
    for (Face e : edges)
        for (int v : face_vertices(e)) ++degree[v];
    Face forced = 0;
    for (int v = 0; v < n; ++v)
        if (degree[v] <= 1) forced |= bit(v);
    std::vector<int> free;
    for (int v = 0; v < n; ++v)
        if (!has_bit(forced, v)) free.push_back(v);

    std::vector<Face> out;
    const Face top = Face{1} << free.size();
    for (Face pick = 0; pick < top; ++pick) {
        Face closed = forced;
        for (std::size_t i = 0; i < free.size(); ++i)
            if (has_bit(pick, static_cast<int>(i))) closed |= bit(free[i]);
        if (is_separated(graph_instance(n, edges, closed))) out.push_back(closed);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Hypergraph> separated_any_dim(int n) {
    if (n < 1 || n > 4)
        throw std::invalid_argument(
            "separated_any_dim: exhaustive any-dimension enumeration is "
            "feasible for 1..4 vertices only");
    std::vector<Face> all_faces;
    for (Face f = 1; f < (Face{1} << n); ++f) all_faces.push_back(f);
    const std::size_t m = all_faces.size();

    std::set<std::vector<Face>> seen;
    std::vector<Hypergraph> out;
    for (std::uint64_t pick = 1; pick < (std::uint64_t{1} << m); ++pick) {
        std::vector<Face> faces;
        for (std::size_t i = 0; i < m; ++i)
            if ((pick >> i) & 1) faces.push_back(all_faces[i]);
        Hypergraph h = make_hypergraph(n, std::move(faces));
        if (h.covered() != full_mask(n) || !is_separated(h)) continue;
        if (seen.insert(canonical_code(h)).second) out.push_back(std::move(h));
    }
    return out;
}

std::vector<Hypergraph> separated_one_dim(int n) {
    std::set<std::vector<Face>> seen;
    std::vector<Hypergraph> out;
    for (const auto& edges : all_graphs(n))
        for (Face closed : separated_closed_masks(n, edges)) {
            Hypergraph h = graph_instance(n, edges, closed);
            if (seen.insert(canonical_code(h)).second)
                out.push_back(std::move(h));
        }
    return out;
}

std::vector<Hypergraph> all_strings(int n) {
    if (n < 1) return {};
    std::vector<Hypergraph> out;
    if (n == 1) {
        out.push_back(make_hypergraph(1, {bit(0)}));
        return out;
    }
    std::vector<Face> edges;
    for (int v = 0; v + 1 < n; ++v) edges.push_back(bit(v) | bit(v + 1));
    const Face ends = bit(0) | bit(n - 1);
    const Face top = n > 2 ? (Face{1} << (n - 2)) : 1;
    for (Face pick = 0; pick < top; ++pick)
        out.push_back(graph_instance(n, edges, ends | (pick << 1)));
    return out;
}

std::vector<Hypergraph> all_cycles(int n) {
    if (n < 3)
        throw std::invalid_argument("all_cycles: a cycle needs >= 3 vertices");
    std::vector<Face> edges;
    for (int v = 0; v < n; ++v) edges.push_back(bit(v) | bit((v + 1) % n));
    std::vector<Hypergraph> out;
    for (Face closed = 0; closed < (Face{1} << n); ++closed)
        out.push_back(graph_instance(n, edges, closed));
    return out;
}

Hypergraph random_separated(int mu, std::mt19937_64& rng, int extra_faces) {
    if (mu < 1 || mu > kMaxVertices)
        throw std::invalid_argument("random_separated: bad vertex count");
    const Face full = full_mask(mu);
    std::uniform_int_distribution<int> extra(0, std::max(0, extra_faces));
    const int want = mu + extra(rng);

    std::vector<Face> faces;
    for (int i = 0; i < want; ++i) {
        Face f = 0;
        while (f == 0) {
            f = static_cast<Face>(rng()) & full;
            if (rng() & 1) f &= static_cast<Face>(rng()) & full;  // bias smaller
        }
        faces.push_back(f);
    }
    Face covered = 0;
    for (Face f : faces) covered |= f;
    for (int v = 0; v < mu; ++v)
        if (!has_bit(covered, v)) faces.push_back(bit(v));

    Hypergraph h = make_hypergraph(mu, std::move(faces));
    for (bool again = true; again;) {
        again = false;
        for (int j = 0; j < mu && !again; ++j)
            for (int k = 0; k < mu && !again; ++k) {
                if (j == k) continue;
                bool split = false;
                for (Face f : h.faces)
                    if (has_bit(f, j) && !has_bit(f, k)) {
                        split = true;
                        break;
                    }
                if (!split) {
                    std::vector<Face> fs = h.faces;
                    fs.push_back(bit(j));
                    h = make_hypergraph(mu, std::move(fs), h.labels);
                    again = true;
                }
            }
    }
    return h;
}

}  // namespace hpd
