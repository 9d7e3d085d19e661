#include "hpd/fixtures.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hpd/highpd.hpp"

namespace hpd {

namespace {

struct V {
    const char* name;
    bool closed;
};

// Builds a hypergraph from a vertex table and name-pair edges. Unknown names,
// duplicated faces and uncovered vertices throw, so a transcription typo
// fails at startup instead of silently corrupting a fixture.
Hypergraph build_graph(const std::vector<V>& verts,
                       const std::vector<std::pair<const char*, const char*>>& edges,
                       const std::vector<std::vector<const char*>>& higher = {}) {
    std::map<std::string, int> index;
    std::vector<std::string> labels;
    for (const V& v : verts) {
        if (!index.emplace(v.name, static_cast<int>(labels.size())).second)
            throw std::logic_error(std::string("fixture: duplicate vertex ") +
                                   v.name);
        labels.push_back(v.name);
    }
    auto at = [&](const char* name) {
        auto it = index.find(name);
        if (it == index.end())
            throw std::logic_error(std::string("fixture: unknown vertex ") +
                                   name);
        return it->second;
    };
    std::vector<Face> faces;
    auto add = [&](Face f) {
        if (std::find(faces.begin(), faces.end(), f) != faces.end())
            throw std::logic_error("fixture: duplicate face");
        faces.push_back(f);
    };
    for (const V& v : verts)
        if (v.closed) add(bit(at(v.name)));
    for (const auto& [a, b] : edges) {
        if (at(a) == at(b))
            throw std::logic_error(std::string("fixture: degenerate edge at ") +
                                   a);
        add(bit(at(a)) | bit(at(b)));
    }
    for (const auto& f : higher) {
        Face face = 0;
        for (const char* name : f) face |= bit(at(name));
        if (popcount(face) != static_cast<int>(f.size()))
            throw std::logic_error("fixture: repeated vertex in a face");
        add(face);
    }
    Hypergraph h =
        make_hypergraph(static_cast<int>(verts.size()), faces, labels);
    if (h.faces.size() != faces.size())
        throw std::logic_error("fixture: faces collapsed unexpectedly");
    if (h.covered() != full_mask(h.mu))
        throw std::logic_error("fixture: uncovered vertex");
    return h;
}

Hypergraph nine_face() {
    // Seven vertices 0..6; tree with a degree-3 joint at vertex 0 and the
    // four-vertex branch 1-2-3-4 whose correct detachment cut is {1,2}.
    std::vector<Face> faces = {
        bit(6),          bit(6) | bit(0), bit(0) | bit(5),
        bit(5),          bit(0) | bit(1), bit(1) | bit(2),
        bit(2) | bit(3), bit(3) | bit(4), bit(4),
    };
    return make_hypergraph(
        7, std::move(faces), {"0", "1", "2", "3", "4", "5", "6"});
}

Hypergraph seven_string() {
    return build_graph(
        {{"v1", true},
         {"v2", false},
         {"v3", false},
         {"v4", false},
         {"v5", true},
         {"v6", false},
         {"v7", true}},
        {{"v1", "v2"},
         {"v2", "v3"},
         {"v3", "v4"},
         {"v4", "v5"},
         {"v5", "v6"},
         {"v6", "v7"}});
}

Hypergraph six_cycle() {
    return build_graph({{"1", true},
                        {"2", false},
                        {"3", false},
                        {"4", true},
                        {"5", false},
                        {"6", false}},
                       {{"1", "2"},
                        {"2", "3"},
                        {"3", "4"},
                        {"4", "5"},
                        {"5", "6"},
                        {"6", "1"}});
}

Hypergraph seven_cycle() {
    return build_graph({{"1", false},
                        {"2", false},
                        {"3", false},
                        {"4", false},
                        {"5", false},
                        {"6", false},
                        {"7", false}},
                       {{"1", "2"},
                        {"2", "3"},
                        {"3", "4"},
                        {"4", "5"},
                        {"5", "6"},
                        {"6", "7"},
                        {"7", "1"}});
}

Hypergraph figure1() {
    // Nine vertices; faces of every size from singleton to a 4-face. The
    // 4-face {P3,P4,P7,P8} is the cut target for figure2, the edge {P4,P5}
    // the cancellation example.
    return build_graph(
        {{"v", true},
         {"P1", false},
         {"P2", false},
         {"P3", false},
         {"P4", false},
         {"P5", true},
         {"P6", false},
         {"P7", false},
         {"P8", false}},
        {{"v", "P2"},
         {"P1", "P6"},
         {"P1", "P7"},
         {"P1", "P8"},
         {"P2", "P6"},
         {"P2", "P7"},
         {"P3", "P6"},
         {"P3", "P7"},
         {"P4", "P6"},
         {"P4", "P5"},
         {"P5", "P8"}},
        {{"v", "P1", "P2"}, {"P3", "P4", "P7", "P8"}});
}

Hypergraph figure2() {
    const Hypergraph h = figure1();
    // Indices in figure1's order: P3=3, P4=4, P7=7, P8=8.
    return cut_face(h, bit(3) | bit(4) | bit(7) | bit(8));
}

Hypergraph figure3_ferrers() {
    FerrersShape shape;
    shape.lambda = {7, 7, 6, 5, 4};
    shape.tau = {0, 0, 1, 1, 2};
    return ferrers_generate(shape, 0);
}

Hypergraph figure_fl() {
    // A Ferrers staircase enriched with two in-part edges, four higher faces
    // and closed extra vertices; the open set spans a Ferrers subgraph with
    // lambda = (6,5,4,3,2), tau = 0, so pd = |V| - 2 = 12.  The degree-one
    // vertex g7 must be closed: an open vertex whose lone face is one edge
    // could never be told apart from its neighbor.
    return build_graph(
        {{"f1", false},
         {"f2", false},
         {"f3", false},
         {"f4", false},
         {"f5", false},
         {"g1", false},
         {"g2", false},
         {"g3", false},
         {"g4", false},
         {"g5", false},
         {"g6", false},
         {"g7", true},
         {"z1", true},
         {"z2", true}},
        {{"f1", "g1"}, {"f1", "g2"}, {"f1", "g3"}, {"f1", "g4"},
         {"f1", "g5"}, {"f1", "g6"}, {"f1", "g7"}, {"f2", "g1"},
         {"f2", "g2"}, {"f2", "g3"}, {"f2", "g4"}, {"f2", "g5"},
         {"f3", "g1"}, {"f3", "g2"}, {"f3", "g3"}, {"f3", "g4"},
         {"f4", "g1"}, {"f4", "g2"}, {"f4", "g3"}, {"f5", "g1"},
         {"f5", "g2"}, {"f4", "f5"}, {"g2", "g3"}},
        {{"f1", "g2", "g4"},
         {"f2", "f3", "g1"},
         {"z1", "f4", "g4"},
         {"g4", "g6", "z2"}});
}

Hypergraph figure4() {
    // 37 vertices, 39 edges, three fused cycles around A3/C2 with strings and
    // small trees attached; the engine's reduction must reach 28.
    return build_graph(
        {// row A
         {"A1", true},  {"A2", false}, {"A3", false}, {"A4", true},
         {"A5", false}, {"A6", false}, {"A7", false}, {"A8", true},
         // row B
         {"B1", true},  {"B2", false}, {"B3", false}, {"B4", true},
         {"B5", true},  {"B6", false}, {"B7", false}, {"B8", true},
         {"B9", true},
         // row C
         {"C1", false}, {"C2", true},  {"C3", false}, {"C4", false},
         {"C5", true},  {"C6", false}, {"C7", false}, {"C8", false},
         {"C9", false}, {"C10", true},
         // row D
         {"D1", false}, {"D2", false}, {"D3", true},  {"D4", false},
         {"D5", true},  {"D6", false}, {"D7", false}, {"D8", true},
         {"D9", false}, {"D10", true}},
        {{"A1", "A2"}, {"A2", "A3"}, {"A3", "A4"}, {"A4", "A5"},
         {"A5", "A6"}, {"A7", "A8"}, {"A7", "C6"}, {"C9", "C10"},
         {"C8", "C9"}, {"C7", "C8"},  // blue cut edge
         {"C7", "C6"}, {"C5", "C6"}, {"C5", "A6"}, {"C5", "C4"},
         {"C3", "C4"}, {"C2", "C3"}, {"C1", "C2"}, {"C2", "A3"},
         {"A3", "C4"}, {"C1", "A2"},  // green cancel edge
         {"C2", "D1"}, {"D2", "D1"}, {"D3", "D2"}, {"C2", "D4"},
         {"D5", "D4"}, {"D5", "D6"}, {"D7", "D6"}, {"D7", "D8"},
         {"D6", "D9"}, {"D10", "D9"}, {"B2", "A3"}, {"B5", "A3"},
         {"B1", "A3"}, {"B2", "B3"}, {"B3", "B4"},
         {"B6", "A4"},  // blue cut edge
         {"B6", "B7"}, {"B7", "B8"},
         {"B9", "A6"}});  // green cancel edge
}

Hypergraph figure5() {
    // figure4 after cutting the blue edges, cancelling the green edges and
    // removing the red vertices A3, C2, C6, D6: fifteen plain components
    // whose values sum to 28.
    return build_graph(
        {{"A1", true},  {"A2", true},  {"A4", true},  {"A5", false},
         {"A6", false}, {"A7", true},  {"A8", true},
         {"B1", true},  {"B2", true},  {"B3", false}, {"B4", true},
         {"B5", true},  {"B6", true},  {"B7", false}, {"B8", true},
         {"B9", true},
         {"C1", true},  {"C3", true},  {"C4", true},  {"C5", true},
         {"C7", true},  {"C8", true},  {"C9", false}, {"C10", true},
         {"D1", true},  {"D2", false}, {"D3", true},  {"D4", true},
         {"D5", true},  {"D7", true},  {"D8", true},  {"D9", true},
         {"D10", true}},
        {{"A1", "A2"}, {"A4", "A5"}, {"A5", "A6"}, {"A7", "A8"},
         {"C9", "C10"}, {"C8", "C9"}, {"C5", "A6"}, {"C5", "C4"},
         {"C3", "C4"}, {"D2", "D1"}, {"D3", "D2"}, {"D5", "D4"},
         {"D7", "D8"}, {"D10", "D9"}, {"B2", "B3"}, {"B3", "B4"},
         {"B6", "B7"}, {"B7", "B8"}});
}

Hypergraph figure6() {
    // A cycle of fifteen stars: 37 vertices named by their drawing grid
    // position, 37 edges, twenty-one closed vertices. The four proper 2-star
    // centers are (2,0), (3,0), (2,1), (5,1); all but (2,0) are closed.
    return build_graph(
        {{"(-2,1)", true},    {"(-2,0)", true},    {"(0.5,-1)", true},
         {"(0,-1)", true},    {"(-1,1)", true},    {"(-1,0)", true},
         {"(0.5,0.5)", true}, {"(1.5,0.5)", true}, {"(1,0.5)", true},
         {"(3,0)", true},     {"(7,0)", true},     {"(1.5,-1)", true},
         {"(2,-1.5)", true},  {"(2.5,-1)", true},  {"(4.5,-1)", true},
         {"(7,1)", true},     {"(0.5,1.5)", true}, {"(3,1.5)", true},
         {"(6.5,-1)", true},
         {"(-1.5,0.5)", false}, {"(0,0)", false},  {"(0,1)", false},
         {"(1,0)", false},      {"(2,0)", false},  {"(4,0)", false},
         {"(5,0)", false},      {"(6,0)", false},  {"(2,-1)", false},
         {"(3.5,-1)", false},   {"(1,1)", false},  {"(2,1)", true},
         {"(3,1)", false},      {"(4,1)", false},  {"(5,1)", true},
         {"(6,1)", false},      {"(1.5,1.5)", false},
         {"(2.5,1.5)", false}},
        {{"(-1.5,0.5)", "(-2,0)"},  {"(-1.5,0.5)", "(-2,1)"},
         {"(0,0)", "(0.5,-1)"},     {"(0,0)", "(0,-1)"},
         {"(-1.5,0.5)", "(-1,0)"},  {"(-1.5,0.5)", "(-1,1)"},
         {"(0,0)", "(-1,0)"},       {"(0,1)", "(-1,1)"},
         {"(0,1)", "(1,1)"},        {"(0,0)", "(1,0)"},
         {"(1,0)", "(2,0)"},        {"(2,0)", "(3,0)"},
         {"(4,0)", "(3,0)"},        {"(4,0)", "(5,0)"},
         {"(6,0)", "(7,0)"},        {"(6,0)", "(5,1)"},
         {"(7,1)", "(6,1)"},        {"(5,1)", "(6,1)"},
         {"(1,1)", "(0.5,0.5)"},    {"(1,1)", "(1.5,0.5)"},
         {"(1,1)", "(1,0.5)"},      {"(5,1)", "(5,0)"},
         {"(5,1)", "(4,1)"},        {"(3,1)", "(4,1)"},
         {"(2,1)", "(3,1)"},        {"(1,1)", "(2,1)"},
         {"(2,1)", "(1.5,1.5)"},    {"(0.5,1.5)", "(1.5,1.5)"},
         {"(2,1)", "(2.5,1.5)"},    {"(3,1.5)", "(2.5,1.5)"},
         {"(2,-1)", "(2,0)"},       {"(2.5,-1)", "(2,0)"},
         {"(1.5,-1)", "(2,0)"},     {"(2,-1)", "(2,-1.5)"},
         {"(3.5,-1)", "(3,0)"},     {"(3.5,-1)", "(4.5,-1)"},
         {"(6.5,-1)", "(5,0)"}});
}

Hypergraph figure7() {
    // figure6 with the four proper 2-star centers removed: the remotions
    // close every former neighbor, leaving three open vertices, a fourteen-
    // vertex string of stars, a closed path, seven closed pairs and two
    // isolated closed vertices. Vertex order matches figure6 minus the
    // removed centers so that the cross-check against the engine's own
    // remotion is a plain equality.
    return build_graph(
        {{"(-2,1)", true},    {"(-2,0)", true},    {"(0.5,-1)", true},
         {"(0,-1)", true},    {"(-1,1)", true},    {"(-1,0)", true},
         {"(0.5,0.5)", true}, {"(1.5,0.5)", true}, {"(1,0.5)", true},
         {"(7,0)", true},     {"(1.5,-1)", true},  {"(2,-1.5)", true},
         {"(2.5,-1)", true},  {"(4.5,-1)", true},  {"(7,1)", true},
         {"(0.5,1.5)", true}, {"(3,1.5)", true},   {"(6.5,-1)", true},
         {"(-1.5,0.5)", false}, {"(0,0)", false},  {"(0,1)", false},
         {"(1,0)", true},       {"(4,0)", true},   {"(5,0)", true},
         {"(6,0)", true},       {"(2,-1)", true},  {"(3.5,-1)", true},
         {"(1,1)", true},       {"(3,1)", true},   {"(4,1)", true},
         {"(6,1)", true},       {"(1.5,1.5)", true},
         {"(2.5,1.5)", true}},
        {{"(1,1)", "(0.5,0.5)"},   {"(1,1)", "(1.5,0.5)"},
         {"(1,1)", "(1,0.5)"},     {"(-1.5,0.5)", "(-2,0)"},
         {"(-1.5,0.5)", "(-2,1)"}, {"(0,0)", "(0.5,-1)"},
         {"(0,0)", "(0,-1)"},      {"(-1.5,0.5)", "(-1,0)"},
         {"(-1.5,0.5)", "(-1,1)"}, {"(0,0)", "(-1,0)"},
         {"(0,1)", "(-1,1)"},      {"(0,1)", "(1,1)"},
         {"(0,0)", "(1,0)"},       {"(4,0)", "(5,0)"},
         {"(6,0)", "(7,0)"},       {"(7,1)", "(6,1)"},
         {"(3,1)", "(4,1)"},       {"(0.5,1.5)", "(1.5,1.5)"},
         {"(3,1.5)", "(2.5,1.5)"}, {"(2,-1)", "(2,-1.5)"},
         {"(3.5,-1)", "(4.5,-1)"}, {"(6.5,-1)", "(5,0)"}});
}

std::vector<Fixture> build_all() {
    std::vector<Fixture> out;
    out.push_back({"nine-face", nine_face(), 5,
                   "seven-vertex tree; the guided cut at {1,2} keeps the "
                   "total at 5 where the naive cut at {0,1} overshoots to 6"});
    out.push_back({"seven-string", seven_string(), 5,
                   "orientation example: W = 1 anchored at v1, W = 0 "
                   "anchored at v7"});
    out.push_back({"six-cycle", six_cycle(), 4,
                   "closed at two opposite-ish vertices; boundary witness "
                   "V1={1,2,3}, V2={4,5,6}"});
    out.push_back({"seven-cycle", seven_cycle(), 5,
                   "all-open cycle: pd = 7 - 1 - floor(5/3) = 5; no "
                   "boundary partition exists"});
    out.push_back({"figure1", figure1(), -1,
                   "mixed-dimension example used to pin the remotion, "
                   "colon, cancel and cut panels; no published value"});
    out.push_back({"figure2", figure2(), -1,
                   "figure1 after cutting the 4-face {P3,P4,P7,P8}; built "
                   "by the engine's own cut"});
    out.push_back({"figure3-ferrers", figure3_ferrers(), 10,
                   "Ferrers graph lambda=(7,7,6,5,4), tau=(0,0,1,1,2): "
                   "twelve open vertices, pd = |V| - 2"});
    out.push_back({"figureFL", figure_fl(), 12,
                   "Ferrers-spanning open set with higher faces and three "
                   "closed extras: pd = |V| - 2"});
    out.push_back({"figure4", figure4(), 28,
                   "37 vertices, 39 edges, three fused cycles; reduced by "
                   "cut/cancel/remove steps to figure5"});
    out.push_back({"figure5", figure5(), 28,
                   "the reduced form of figure4: fifteen components whose "
                   "string values sum to 28"});
    out.push_back({"figure6", figure6(), 31,
                   "cycle of fifteen stars, four proper 2-star centers: "
                   "pd = 37 - 4 - 3 - 0 + 1 = 31"});
    out.push_back({"figure7", figure7(), 31,
                   "figure6 with the proper 2-star centers removed; same "
                   "value via plain string/star sums"});
    return out;
}

}  // namespace

const std::vector<Fixture>& fixtures() {
    static const std::vector<Fixture> all = build_all();
    return all;
}

const Fixture& fixture(const std::string& name) {
    for (const Fixture& f : fixtures())
        if (f.name == name) return f;
    std::string names;
    for (const Fixture& f : fixtures()) {
        if (!names.empty()) names += ", ";
        names += f.name;
    }
    throw std::out_of_range("unknown fixture '" + name + "' (have: " + names +
                            ")");
}

}  // namespace hpd
