// core.cpp — value types, ideal<->hypergraph duality, elementary operations.

#include "hpd/core.hpp"

#include <algorithm>

namespace hpd {

Face face_of(std::initializer_list<int> vs) {
    Face f = 0;
    for (int v : vs) f |= bit(v);
    return f;
}

Face face_of(const std::vector<int>& vs) {
    Face f = 0;
    for (int v : vs) f |= bit(v);
    return f;
}

std::vector<int> face_vertices(Face f) {
    std::vector<int> out;
    while (f) {
        int v = lowest_bit(f);
        out.push_back(v);
        f &= f - 1;
    }
    return out;
}

std::string MonomialIdeal::var_name(int i) const {
    if (i >= 0 && i < static_cast<int>(var_names.size())) return var_names[i];
    return "x" + std::to_string(i + 1);
}

std::string MonomialIdeal::gen_name(int j) const {
    if (j >= 0 && j < static_cast<int>(gen_names.size())) return gen_names[j];
    return "m" + std::to_string(j + 1);
}

bool Hypergraph::has_face(Face f) const {
    return std::binary_search(faces.begin(), faces.end(), f);
}

Face Hypergraph::open_set() const {
    Face w = full_mask(mu);
    for (Face f : faces)
        if (popcount(f) == 1) w &= ~f;
    return w;
}

Face Hypergraph::covered() const {
    Face u = 0;
    for (Face f : faces) u |= f;
    return u;
}

int Hypergraph::dim() const {
    int d = -1;
    for (Face f : faces) d = std::max(d, popcount(f) - 1);
    return d;
}

int Hypergraph::edge_degree(int v) const {
    int d = 0;
    for (Face f : faces)
        if (popcount(f) == 2 && has_bit(f, v)) ++d;
    return d;
}

Face Hypergraph::edge_neighbors(int v) const {
    Face nb = 0;
    for (Face f : faces)
        if (popcount(f) == 2 && has_bit(f, v)) nb |= f;
    return nb & ~bit(v);
}

Face Hypergraph::face_neighbors(int v) const {
    Face nb = 0;
    for (Face f : faces)
        if (has_bit(f, v)) nb |= f;
    return nb & ~bit(v);
}

std::string Hypergraph::label(int v) const {
    if (v >= 0 && v < static_cast<int>(labels.size())) return labels[v];
    return std::to_string(v);
}

std::string Hypergraph::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < faces.size(); ++i) {
        if (i) out += ",";
        out += "{";
        auto vs = face_vertices(faces[i]);
        for (std::size_t k = 0; k < vs.size(); ++k) {
            if (k) out += ",";
            out += label(vs[k]);
        }
        out += "}";
    }
    return out;
}

Hypergraph make_hypergraph(int mu, std::vector<Face> faces,
                           std::vector<std::string> labels) {
    if (mu < 0 || mu > kMaxVertices)
        throw std::invalid_argument("vertex count out of range (0..64): " +
                                    std::to_string(mu));
    Face range = full_mask(mu);
    for (Face f : faces) {
        if (f == 0) throw std::invalid_argument("empty face");
        if (!subset(f, range))
            throw std::invalid_argument("face contains a vertex outside 0.." +
                                        std::to_string(mu - 1));
    }
    std::sort(faces.begin(), faces.end());
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    if (static_cast<int>(faces.size()) > kMaxFaces)
        throw std::invalid_argument("more than 64 faces");
    Hypergraph h;
    h.mu = mu;
    h.faces = std::move(faces);
    if (labels.empty()) {
        labels.reserve(mu);
        for (int v = 0; v < mu; ++v) labels.push_back(std::to_string(v));
    }
    if (static_cast<int>(labels.size()) != mu)
        throw std::invalid_argument("label count does not match vertex count");
    h.labels = std::move(labels);
    return h;
}

// ---------------------------------------------------------------------------
// Duality
// ---------------------------------------------------------------------------

Hypergraph from_ideal(const MonomialIdeal& ideal) {
    if (ideal.num_vars < 0 || ideal.num_vars > 64)
        throw std::invalid_argument("variable count out of range (0..64)");
    const int mu = static_cast<int>(ideal.gens.size());
    if (mu > kMaxVertices) throw std::invalid_argument("more than 64 generators");
    Face var_range = full_mask(ideal.num_vars);
    for (Face g : ideal.gens) {
        if (g == 0) throw MinimalityError("unit generator (empty support)");
        if (!subset(g, var_range))
            throw std::invalid_argument("generator uses a variable out of range");
    }
    for (int j = 0; j < mu; ++j)
        for (int k = 0; k < mu; ++k)
            if (j != k && subset(ideal.gens[j], ideal.gens[k]))
                throw MinimalityError("generator " + ideal.gen_name(j) +
                                      " divides generator " + ideal.gen_name(k));
    std::vector<Face> faces;
    for (int i = 0; i < ideal.num_vars; ++i) {
        Face f = 0;
        for (int j = 0; j < mu; ++j)
            if (has_bit(ideal.gens[j], i)) f |= bit(j);
        if (f) faces.push_back(f);
    }
    std::vector<std::string> labels;
    for (int j = 0; j < mu; ++j) labels.push_back(ideal.gen_name(j));
    return make_hypergraph(mu, std::move(faces), std::move(labels));
}

MonomialIdeal to_standard_ideal(const Hypergraph& h) {
    if (h.covered() != full_mask(h.mu))
        throw std::invalid_argument(
            "hypergraph has a vertex in no face; its standard ideal would "
            "contain a unit generator");
    MonomialIdeal ideal;
    ideal.num_vars = static_cast<int>(h.faces.size());
    for (int i = 0; i < ideal.num_vars; ++i)
        ideal.var_names.push_back("x" + std::to_string(i + 1));
    for (int j = 0; j < h.mu; ++j) {
        Face supp = 0;
        for (int i = 0; i < ideal.num_vars; ++i)
            if (has_bit(h.faces[i], j)) supp |= bit(i);
        ideal.gens.push_back(supp);
        ideal.gen_names.push_back(h.label(j));
    }
    return ideal;
}

namespace {

// Per-vertex supports over face indices of h (bit i of supports[j] set iff
// face i contains vertex j).
std::vector<Face> face_supports(const Hypergraph& h) {
    std::vector<Face> supports(h.mu, 0);
    for (std::size_t i = 0; i < h.faces.size(); ++i)
        for (int j : face_vertices(h.faces[i]))
            supports[j] |= bit(static_cast<int>(i));
    return supports;
}

// Rebuilds a hypergraph from generator supports over `num_vars` variables:
// drops generators another generator divides, merges equal generators,
// recomputes faces from the survivors' incidences (empty faces vanish,
// duplicate variable supports merge). This is the shared minimalization step
// behind remotion, colon and cancellation.
Hypergraph rebuild_from_supports(std::vector<Face> supports,
                                 std::vector<std::string> labels,
                                 int num_vars) {
    const int n = static_cast<int>(supports.size());
    for (Face s : supports)
        if (s == 0)
            throw MinimalityError(
                "a generator became a unit; the operation presumes a minimal "
                "generating set");
    std::vector<bool> keep(n, true);
    for (int j = 0; j < n; ++j) {
        if (!keep[j]) continue;
        for (int k = 0; k < n; ++k) {
            if (j == k || !keep[k]) continue;
            if (subset(supports[k], supports[j]) &&
                (supports[k] != supports[j] || k < j)) {
                keep[j] = false;  // m_k divides m_j (ties keep the earlier)
                break;
            }
        }
    }
    std::vector<Face> kept;
    std::vector<std::string> kept_labels;
    for (int j = 0; j < n; ++j)
        if (keep[j]) {
            kept.push_back(supports[j]);
            kept_labels.push_back(j < static_cast<int>(labels.size())
                                      ? labels[j]
                                      : std::to_string(j));
        }
    std::vector<Face> faces;
    for (int i = 0; i < num_vars; ++i) {
        Face f = 0;
        for (std::size_t j = 0; j < kept.size(); ++j)
            if (has_bit(kept[j], i)) f |= bit(static_cast<int>(j));
        if (f) faces.push_back(f);
    }
    return make_hypergraph(static_cast<int>(kept.size()), std::move(faces),
                           std::move(kept_labels));
}

void check_vertex(const Hypergraph& h, int v) {
    if (v < 0 || v >= h.mu)
        throw std::out_of_range("vertex " + std::to_string(v) +
                                " out of range for mu=" + std::to_string(h.mu));
}

}  // namespace

bool is_separated(const Hypergraph& h) {
    auto supports = face_supports(h);
    for (int j = 0; j < h.mu; ++j)
        for (int k = 0; k < h.mu; ++k)
            if (j != k && subset(supports[j], supports[k])) return false;
    return true;
}

DegreeClass degree_class(const Hypergraph& h, int i) {
    check_vertex(h, i);
    int n = 0;
    for (int j = 0; j < h.mu; ++j) {
        if (j == i) continue;
        if (h.has_face(bit(i) | bit(j))) {
            ++n;
            if (n >= 3) return DegreeClass::MoreThanTwo;
        }
    }
    switch (n) {
        case 0: return DegreeClass::Zero;
        case 1: return DegreeClass::One;
        default: return DegreeClass::Two;
    }
}

Hypergraph remove_vertex(const Hypergraph& h, int v) {
    check_vertex(h, v);
    return remove_vertices(h, bit(v));
}

Hypergraph remove_vertices(const Hypergraph& h, Face vs) {
    if (!subset(vs, full_mask(h.mu)))
        throw std::out_of_range("vertex mask out of range");
    auto supports = face_supports(h);
    std::vector<Face> remaining;
    std::vector<std::string> labels;
    for (int j = 0; j < h.mu; ++j) {
        if (has_bit(vs, j)) continue;
        remaining.push_back(supports[j]);
        labels.push_back(h.label(j));
    }
    return rebuild_from_supports(std::move(remaining), std::move(labels),
                                 static_cast<int>(h.faces.size()));
}

Hypergraph colon_vertex(const Hypergraph& h, int v) {
    check_vertex(h, v);
    auto supports = face_supports(h);
    std::vector<Face> quotients;
    std::vector<std::string> labels;
    for (int j = 0; j < h.mu; ++j) {
        if (j == v) continue;
        quotients.push_back(supports[j] & ~supports[v]);
        labels.push_back(h.label(j));
    }
    return rebuild_from_supports(std::move(quotients), std::move(labels),
                                 static_cast<int>(h.faces.size()));
}

Hypergraph cancel_face(const Hypergraph& h, Face f) {
    auto it = std::lower_bound(h.faces.begin(), h.faces.end(), f);
    if (it == h.faces.end() || *it != f)
        throw std::invalid_argument("cancel_face: not a face of the hypergraph");
    if (popcount(f) == 1) return open_vertex(h, lowest_bit(f));
    Face fid = bit(static_cast<int>(it - h.faces.begin()));
    auto supports = face_supports(h);
    for (Face& s : supports) s &= ~fid;
    return rebuild_from_supports(std::move(supports), h.labels,
                                 static_cast<int>(h.faces.size()));
}

Hypergraph open_vertex(const Hypergraph& h, int v) {
    check_vertex(h, v);
    if (!h.is_closed(v))
        throw std::invalid_argument("open_vertex: vertex is already open");
    std::vector<Face> faces;
    Face still_covered = 0;
    for (Face f : h.faces)
        if (f != bit(v)) {
            faces.push_back(f);
            still_covered |= f;
        }
    if (!has_bit(still_covered, v))
        throw std::invalid_argument(
            "open_vertex: vertex lies in no other face; the result would be "
            "degenerate");
    return make_hypergraph(h.mu, std::move(faces), h.labels);
}

Hypergraph cut_face(const Hypergraph& h, Face f) {
    if (!h.has_face(f))
        throw std::invalid_argument("cut_face: not a face of the hypergraph");
    std::vector<Face> faces;
    for (Face g : h.faces)
        if (g != f) faces.push_back(g);
    for (int v : face_vertices(f)) faces.push_back(bit(v));
    return make_hypergraph(h.mu, std::move(faces), h.labels);
}

std::vector<Face> component_masks(const Hypergraph& h) {
    std::vector<int> comp(h.mu, -1);
    std::vector<Face> masks;
    for (int start = 0; start < h.mu; ++start) {
        if (comp[start] >= 0) continue;
        int id = static_cast<int>(masks.size());
        Face mask = bit(start);
        comp[start] = id;
        std::vector<int> stack{start};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (Face f : h.faces) {
                if (!has_bit(f, v)) continue;
                for (int w : face_vertices(f)) {
                    if (comp[w] < 0) {
                        comp[w] = id;
                        mask |= bit(w);
                        stack.push_back(w);
                    }
                }
            }
        }
        masks.push_back(mask);
    }
    return masks;
}

std::vector<Hypergraph> components(const Hypergraph& h) {
    std::vector<Hypergraph> out;
    for (Face mask : component_masks(h)) out.push_back(restrict(h, mask));
    return out;
}

Hypergraph restrict(const Hypergraph& h, Face u) {
    if (!subset(u, full_mask(h.mu)))
        throw std::out_of_range("restrict: mask out of range");
    std::vector<int> dense(h.mu, -1);
    std::vector<std::string> labels;
    int n = 0;
    for (int v = 0; v < h.mu; ++v)
        if (has_bit(u, v)) {
            dense[v] = n++;
            labels.push_back(h.label(v));
        }
    std::vector<Face> faces;
    for (Face f : h.faces) {
        if (!subset(f, u)) continue;
        Face g = 0;
        for (int v : face_vertices(f)) g |= bit(dense[v]);
        faces.push_back(g);
    }
    return make_hypergraph(n, std::move(faces), std::move(labels));
}

Hypergraph close_outside(const Hypergraph& h, Face u) {
    if (!subset(u, full_mask(h.mu)))
        throw std::out_of_range("close_outside: mask out of range");
    std::vector<Face> faces = h.faces;
    for (int v = 0; v < h.mu; ++v)
        if (!has_bit(u, v)) faces.push_back(bit(v));
    return make_hypergraph(h.mu, std::move(faces), h.labels);
}

Hypergraph skeleton(const Hypergraph& h, int i) {
    std::vector<Face> faces;
    for (Face f : h.faces)
        if (popcount(f) - 1 <= i) faces.push_back(f);
    return make_hypergraph(h.mu, std::move(faces), h.labels);
}

Hypergraph minimalize(const Hypergraph& h) {
    return rebuild_from_supports(face_supports(h), h.labels,
                                 static_cast<int>(h.faces.size()));
}

}  // namespace hpd
