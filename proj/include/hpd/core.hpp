// core.hpp — square-free monomial ideals, their dual hypergraphs, and the
// elementary hypergraph operations (remotion, colon, cancellation, cutting)
// everything else in this library is built from.
//
// Conventions: vertices are dense 0-based indices; a face is a 64-bit set
// (bit v set <=> vertex v belongs to the face). Supports of ideal generators
// use the same representation over variable indices. Hard cap: 64 vertices
// and 64 faces per hypergraph — every worked example fits comfortably.

#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace hpd {

using Face = std::uint64_t;

constexpr int kMaxVertices = 64;
constexpr int kMaxFaces = 64;

/// Thrown when an ideal claimed to be minimally generated is not (one
/// generator divides another, duplicates, or a generator degenerates to a
/// unit during an operation that presumes minimal input).
struct MinimalityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Thrown when a reduction routine meets a hypergraph outside the shape it
/// knows how to handle (e.g. an irreducibly multi-cyclic component).
struct UnsupportedShape : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Bit-set helpers
// ---------------------------------------------------------------------------

inline int popcount(Face f) { return std::popcount(f); }
inline Face bit(int v) { return Face{1} << v; }
inline bool has_bit(Face f, int v) { return (f >> v) & Face{1}; }
inline int lowest_bit(Face f) { return std::countr_zero(f); }
inline bool subset(Face a, Face b) { return (a & ~b) == 0; }

/// Face from explicit 0-based vertex indices: face_of({0, 2}).
Face face_of(std::initializer_list<int> vs);
Face face_of(const std::vector<int>& vs);

/// Ascending list of the vertices in a face.
std::vector<int> face_vertices(Face f);

/// Mask of the n lowest bits (all vertices of an n-vertex hypergraph).
inline Face full_mask(int n) { return n >= 64 ? ~Face{0} : (Face{1} << n) - 1; }

// ---------------------------------------------------------------------------
// Value types
// ---------------------------------------------------------------------------

/// A square-free monomial ideal: generators given by their variable supports.
struct MonomialIdeal {
    int num_vars = 0;
    std::vector<std::string> var_names;  // size num_vars
    std::vector<std::string> gen_names;  // size gens.size(); optional display names
    std::vector<Face> gens;              // supports over variable bits

    std::string var_name(int i) const;
    std::string gen_name(int j) const;
};

/// Degree of a vertex measured on 2-element faces only, classified with a
/// short-circuit at three — the classification the appendix scan algorithm
/// branches on. MoreThanTwo marks a joint.
enum class DegreeClass { Zero, One, Two, MoreThanTwo };

/// A hypergraph: mu vertices, a duplicate-free set of nonempty faces.
/// Vertex v is *closed* when the singleton {v} is a face, *open* otherwise.
struct Hypergraph {
    int mu = 0;
    std::vector<Face> faces;          // sorted ascending, unique, nonempty
    std::vector<std::string> labels;  // size mu; survive every reduction

    bool has_face(Face f) const;
    bool is_closed(int v) const { return has_face(bit(v)); }
    bool is_open(int v) const { return !is_closed(v); }

    /// W(H): the set of open vertices.
    Face open_set() const;
    /// Union of all faces (equals the full vertex set for well-formed input).
    Face covered() const;
    /// max |F| - 1 over faces; -1 when there are no faces.
    int dim() const;
    /// Number of 2-element faces containing v.
    int edge_degree(int v) const;
    /// Vertices sharing a 2-element face with v.
    Face edge_neighbors(int v) const;
    /// Vertices sharing any face with v (v excluded).
    Face face_neighbors(int v) const;

    std::string label(int v) const;
    std::string to_string() const;  // compact {..},{..} rendering, 0-based

    bool operator==(const Hypergraph& o) const {
        return mu == o.mu && faces == o.faces;
    }
};

/// Builds a hypergraph, sorting and deduplicating faces and validating the
/// representation caps. Labels default to "0".."mu-1". Faces must be nonempty
/// and inside the vertex range; coverage of every vertex is NOT enforced here
/// (restrictions legitimately strand vertices), callers that need it check
/// `covered()`.
Hypergraph make_hypergraph(int mu, std::vector<Face> faces,
                           std::vector<std::string> labels = {});

// ---------------------------------------------------------------------------
// Duality
// ---------------------------------------------------------------------------

/// Dual hypergraph of a minimally generated ideal: one vertex per generator,
/// one face per distinct variable support {j : x_i | m_j}. Unused variables
/// contribute nothing; duplicate variable supports merge into one face.
/// Throws MinimalityError when a generator divides another (or is repeated,
/// or is a unit).
Hypergraph from_ideal(const MonomialIdeal& ideal);

/// Standard ideal I(H): one fresh variable per face, generator
/// m_j = prod of x_F over faces F containing j. from_ideal(to_standard_ideal(H))
/// returns H itself for every hypergraph whose vertices are all covered.
MonomialIdeal to_standard_ideal(const Hypergraph& h);

/// True iff every ordered vertex pair is distinguished by faces: for all
/// j != k there is a face containing j but not k. Equivalent to minimality
/// of the standard ideal.
bool is_separated(const Hypergraph& h);

/// Appendix degree scan at vertex i (2-element faces only, short-circuits at
/// three neighbours). Throws std::out_of_range for a bad vertex.
DegreeClass degree_class(const Hypergraph& h, int i);

// ---------------------------------------------------------------------------
// Elementary operations
// ---------------------------------------------------------------------------

/// Remotion H_v: delete generator m_v from I(H), re-minimalize, rebuild.
/// Edge faces through v contract; v's neighbours typically become closed.
Hypergraph remove_vertex(const Hypergraph& h, int v);

/// Iterated remotion H_{v1..vr} for every vertex in the mask.
Hypergraph remove_vertices(const Hypergraph& h, Face vs);

/// Colon Q_v: the hypergraph of (I_v : m_v), fully minimalized. The vertex
/// count can drop below mu-1 when quotients absorb each other.
Hypergraph colon_vertex(const Hypergraph& h, int v);

/// Cancellation H:F for a face with >= 2 vertices: divide x_F out of every
/// generator containing it and minimalize. For a singleton face this
/// delegates to open_vertex (plain face deletion, no minimalization).
/// Throws std::invalid_argument when F is not a face.
Hypergraph cancel_face(const Hypergraph& h, Face f);

/// H with the singleton face {v} removed and nothing else — makes a closed
/// vertex open. The result may be non-separated; it is a legal internal
/// value. Throws std::invalid_argument when {v} is not a face or v would be
/// left in no face at all.
Hypergraph open_vertex(const Hypergraph& h, int v);

/// Cutting H^F: replace x_F by one fresh variable per vertex of F. The face
/// F disappears, every vertex of F becomes closed, connectivity through F is
/// severed; mu is unchanged. Cutting a singleton is the identity.
Hypergraph cut_face(const Hypergraph& h, Face f);

/// Vertex masks of the connected components under the share-a-face relation.
/// Faceless vertices (possible after restrict) come out as singleton masks.
std::vector<Face> component_masks(const Hypergraph& h);

/// Connected components as hypergraphs with dense vertex numbering.
std::vector<Hypergraph> components(const Hypergraph& h);

/// Restriction H_U: the faces contained in U, on the vertex set U (dense).
/// Vertices of U in no surviving face are kept — the result is then an
/// analysis value (its standard ideal would be degenerate).
Hypergraph restrict(const Hypergraph& h, Face u);

/// H_Ubar: H plus the singletons {i} for every i outside U (close everything
/// not in U). All original faces are kept; mu is unchanged.
Hypergraph close_outside(const Hypergraph& h, Face u);

/// i-skeleton H^i: faces of dimension <= i.
Hypergraph skeleton(const Hypergraph& h, int i);

/// The hypergraph of the minimalized standard ideal: drops vertices whose
/// standard generator another vertex's generator divides, merges equal ones.
/// Identity exactly on separated hypergraphs. Throws MinimalityError when a
/// vertex lies in no face.
Hypergraph minimalize(const Hypergraph& h);

}  // namespace hpd
