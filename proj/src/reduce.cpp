// reduce.cpp — closed forms, pd-preserving surgeries, the ascending-scan
// algorithm, the branch-peeling driver, the recursive evaluator, and the
// star dispatch.

#include "hpd/reduce.hpp"

#include <algorithm>
#include <map>

#include "hpd/invariants.hpp"
#include "hpd/oracle.hpp"

namespace hpd {

namespace {

std::vector<std::string> vertex_labels(const Hypergraph& h,
                                       const std::vector<int>& vs) {
    std::vector<std::string> out;
    out.reserve(vs.size());
    for (int v : vs) out.push_back(h.label(v));
    return out;
}

std::vector<std::string> face_labels(const Hypergraph& h, Face f) {
    return vertex_labels(h, face_vertices(f));
}

// First 2-element face joining two closed vertices, or 0.
Face closed_closed_edge(const Hypergraph& h) {
    for (Face f : h.faces) {
        if (popcount(f) != 2) continue;
        auto vs = face_vertices(f);
        if (h.is_closed(vs[0]) && h.is_closed(vs[1])) return f;
    }
    return 0;
}

void require_flat_at(const Hypergraph& h, Face region, const char* who) {
    for (Face f : h.faces)
        if ((f & region) && popcount(f) > 2)
            throw std::invalid_argument(std::string(who) +
                                        ": a face with more than two vertices "
                                        "touches the branch");
}

// Walks the branch hanging off `w` that starts with branch[0] and checks it
// really is one: consecutive vertices joined by edges, inner degrees 2, the
// far end a leaf.
void validate_branch(const Hypergraph& h, int w, const std::vector<int>& branch,
                     const char* who) {
    if (branch.empty())
        throw std::invalid_argument(std::string(who) + ": empty branch");
    if (w < 0 || w >= h.mu)
        throw std::out_of_range(std::string(who) + ": joint out of range");
    int prev = w;
    for (std::size_t t = 0; t < branch.size(); ++t) {
        int v = branch[t];
        if (v < 0 || v >= h.mu)
            throw std::out_of_range(std::string(who) + ": branch vertex out of range");
        if (!h.has_face(bit(prev) | bit(v)))
            throw std::invalid_argument(std::string(who) +
                                        ": branch vertices are not consecutive");
        const int want = (t + 1 == branch.size()) ? 1 : 2;
        if (h.edge_degree(v) != want)
            throw std::invalid_argument(std::string(who) +
                                        ": not a branch (wrong interior degree "
                                        "or the far end is not a leaf)");
        prev = v;
    }
    Face region = bit(w);
    for (int v : branch) region |= bit(v);
    require_flat_at(h, region & ~bit(w), who);
}

// pd of a disjoint union of isolated vertices, strings and cycles, cancelling
// closed-closed edges as needed. The workhorse behind pd_cycle's reduction
// arguments and the detached tails of attach cuts.
int pd_flat(const Hypergraph& h) {
    int total = 0;
    std::vector<Hypergraph> stack = components(h);
    while (!stack.empty()) {
        Hypergraph c = std::move(stack.back());
        stack.pop_back();
        if (c.mu == 0) continue;
        if (c.mu == 1) {
            total += 1;  // covered single vertex: its only face is {v}
            continue;
        }
        if (Face e = closed_closed_edge(c)) {
            c = cancel_face(c, e);
            for (auto& part : components(c)) stack.push_back(std::move(part));
            continue;
        }
        if (is_string(c)) {
            total += pd_string(c);
        } else if (is_cycle(c)) {
            total += pd_cycle(c);
        } else {
            throw UnsupportedShape(
                "pd_flat: component is neither a string nor a cycle");
        }
    }
    return total;
}

}  // namespace

// ---------------------------------------------------------------------------
// Closed forms
// ---------------------------------------------------------------------------

int pd_string(const Hypergraph& s, int anchor, ReductionTrace* trace) {
    if (!is_string(s)) throw UnsupportedShape("pd_string: not a string");
    for (Face f : s.faces) {
        if (popcount(f) != 2) continue;
        auto vs = face_vertices(f);
        if (s.is_closed(vs[0]) && s.is_closed(vs[1]))
            throw UnsupportedShape(
                "pd_string: adjacent closed vertices (cancel the edge first)");
    }
    for (int e : string_endpoints(s))
        if (s.is_open(e)) {
            // Open endpoint: outside the closed form's hypotheses.
            int value = pd_recursive(s);
            if (trace)
                trace->add({"recursive-split", vertex_labels(s, {e}), {}, value});
            return value;
        }
    StringProfile p = string_profile(s, anchor);
    int value = s.mu - p.s();
    for (int r : p.runs) value -= (r - 1) / 3;
    value += max_disjoint_11(p.runs);
    if (trace)
        trace->add({"string-formula", vertex_labels(s, p.vertices), {}, value});
    return value;
}

int pd_string(const Hypergraph& s, ReductionTrace* trace) {
    auto ends = string_endpoints(s);
    if (ends.empty()) throw UnsupportedShape("pd_string: not a string");
    return pd_string(s, ends.back(), trace);
}

int pd_cycle(const Hypergraph& c, ReductionTrace* trace) {
    if (!is_cycle(c)) throw UnsupportedShape("pd_cycle: not a cycle");
    if (closed_closed_edge(c))
        throw UnsupportedShape(
            "pd_cycle: adjacent closed vertices (cancel the edge first)");
    int value;
    if (c.open_set() == full_mask(c.mu)) {
        value = c.mu - 1 - (c.mu - 2) / 3;
    } else {
        int v = 0;
        while (c.is_open(v)) ++v;
        value = std::max(pd_flat(remove_vertex(c, v)),
                         pd_flat(colon_vertex(c, v)) + 1);
    }
    if (trace) {
        std::vector<int> all(c.mu);
        for (int i = 0; i < c.mu; ++i) all[i] = i;
        trace->add({"cycle-formula", vertex_labels(c, all), {}, value});
    }
    return value;
}

// ---------------------------------------------------------------------------
// Surgery steps
// ---------------------------------------------------------------------------

std::pair<Hypergraph, int> branch_trim(const Hypergraph& h, int v1) {
    if (v1 < 0 || v1 >= h.mu)
        throw std::out_of_range("branch_trim: vertex out of range");
    if (h.edge_degree(v1) != 1)
        throw std::invalid_argument("branch_trim: v1 is not a branch endpoint");
    if (h.is_open(v1))
        throw std::invalid_argument("branch_trim: the endpoint must be closed");
    require_flat_at(h, bit(v1), "branch_trim");
    const int v2 = lowest_bit(h.edge_neighbors(v1));
    if (h.is_closed(v2)) return {remove_vertex(h, v1), 1};
    require_flat_at(h, bit(v2), "branch_trim");
    Face onward = h.edge_neighbors(v2) & ~bit(v1);
    if (popcount(onward) != 1)
        throw std::invalid_argument(
            "branch_trim: the branch does not continue past an open v2");
    const int v3 = lowest_bit(onward);
    return {remove_vertices(h, bit(v1) | bit(v2) | bit(v3)), 2};
}

Hypergraph cut_tree_step(const Hypergraph& h, int w,
                         const std::vector<int>& branch) {
    validate_branch(h, w, branch, "cut_tree_step");
    if (branch.size() > 2)
        throw std::invalid_argument(
            "cut_tree_step: branch longer than two vertices (cut it first)");
    if (h.edge_degree(w) < 3)
        throw std::invalid_argument("cut_tree_step: w is not a joint");
    if (branch.size() == 1) {
        if (h.is_open(branch[0]))
            throw std::invalid_argument(
                "cut_tree_step: a length-1 branch vertex must be closed");
        return cancel_face(h, bit(w) | bit(branch[0]));
    }
    if (h.is_closed(branch[0]))
        throw std::invalid_argument(
            "cut_tree_step: the inner vertex of a length-2 branch must be open");
    return remove_vertex(h, w);
}

AttachCut attach_string_cut(const Hypergraph& h, int w,
                            const std::vector<int>& branch) {
    validate_branch(h, w, branch, "attach_string_cut");
    const int n = static_cast<int>(branch.size());
    if (n < 3)
        throw std::invalid_argument(
            "attach_string_cut: branch shorter than three vertices "
            "(use cut_tree_step)");
    for (int t = 0; t + 1 < n; ++t)
        if (h.is_closed(branch[t]) && h.is_closed(branch[t + 1]))
            throw std::invalid_argument(
                "attach_string_cut: adjacent closed vertices in the branch");

    // Profile of the branch as a standalone string, anchored at the far leaf;
    // runs[0] is then the run nearest the joint.
    Face bmask = 0;
    for (int v : branch) bmask |= bit(v);
    Hypergraph sub = restrict(h, bmask);
    std::vector<int> dense(h.mu, -1);
    {
        int k = 0;
        for (int v = 0; v < h.mu; ++v)
            if (has_bit(bmask, v)) dense[v] = k++;
    }
    StringProfile p = string_profile(sub, dense[branch.back()]);

    AttachCut out;
    const bool v1_open = h.is_open(branch[0]);
    // The joint-side run belongs to a 1-0 configuration only when the greedy
    // matching (1-1 configurations first, both from the far end) claims it;
    // a mere pattern of run lengths is not enough.
    const bool in_10 = !p.run_use.empty() && p.run_use[0] == 2;
    out.case_i = v1_open && !p.runs.empty() && p.runs[0] % 3 == 0 && !in_10;

    const int nr = p.nr;
    if (out.case_i) {
        if (nr + 1 >= n)
            throw std::invalid_argument(
                "attach_string_cut: branch too short for its run profile "
                "(is the far end closed?)");
        out.cut_a = branch[nr];      // v_{nr+1}
        out.cut_b = branch[nr + 1];  // v_{nr+2}
    } else if (nr == 0) {
        out.cut_a = w;               // v_0
        out.cut_b = branch[0];       // v_1
    } else {
        out.cut_a = branch[nr - 1];  // v_nr
        out.cut_b = branch[nr];      // v_{nr+1}
    }

    Hypergraph cut = cut_face(h, bit(out.cut_a) | bit(out.cut_b));
    Face detached = 0;
    for (Face m : component_masks(cut))
        if (has_bit(m, out.cut_b)) detached = m;
    if (has_bit(detached, out.cut_a))
        throw std::invalid_argument(
            "attach_string_cut: the cut edge did not disconnect the branch");
    out.s_prime = restrict(cut, detached);
    out.h_tilde = restrict(cut, full_mask(h.mu) & ~detached);
    out.pd_s_prime = pd_flat(out.s_prime);
    return out;
}

// ---------------------------------------------------------------------------
// The ascending-scan algorithm
// ---------------------------------------------------------------------------

namespace {

// Live face-set view with stable original indices.
struct ScanState {
    const Hypergraph& h;
    std::vector<Face> faces;
    std::vector<char> alive;
    int live = 0;

    explicit ScanState(const Hypergraph& g)
        : h(g), faces(g.faces), alive(g.mu, 1), live(g.mu) {}

    bool has(Face f) const {
        return std::find(faces.begin(), faces.end(), f) != faces.end();
    }
    void drop(Face f) {
        faces.erase(std::remove(faces.begin(), faces.end(), f), faces.end());
    }
    // Count of live edge-neighbours of i, short-circuiting at three.
    int deg3(int i) const {
        int n = 0;
        for (int j = 0; j < h.mu && n < 3; ++j)
            if (j != i && alive[j] && has(bit(i) | bit(j))) ++n;
        return n;
    }
    int first_neighbor(int i, int skip = -1) const {
        for (int j = 0; j < h.mu; ++j)
            if (j != i && j != skip && alive[j] && has(bit(i) | bit(j)))
                return j;
        return -1;
    }
    void kill(int i) {
        alive[i] = 0;
        --live;
    }
    Hypergraph materialize() const {
        Face keep = 0;
        for (int v = 0; v < h.mu; ++v)
            if (alive[v]) keep |= bit(v);
        Hypergraph dense = restrict(h, keep);
        // Replace the faces with the current live set, densified.
        std::vector<int> map(h.mu, -1);
        int k = 0;
        for (int v = 0; v < h.mu; ++v)
            if (alive[v]) map[v] = k++;
        std::vector<Face> dfaces;
        for (Face f : faces) {
            Face g = 0;
            for (int v : face_vertices(f)) g |= bit(map[v]);
            dfaces.push_back(g);
        }
        return make_hypergraph(k, std::move(dfaces), dense.labels);
    }
};

}  // namespace

std::pair<int, ReductionTrace> algpd_connected(const Hypergraph& h) {
    if (h.dim() > 1)
        throw std::invalid_argument("algpd_connected: 1-dimensional input required");
    if (!is_separated(h))
        throw std::invalid_argument("algpd_connected: input must be separated");

    ReductionTrace trace;
    if (h.mu == 0) return {0, trace};

    ScanState st(h);
    int P = 0;
    int i = 0;
    const int mu = h.mu;

    while (st.live > 0) {
        int c = 0;
        // Scan for a vertex of degree <= 1, counting consecutive failures.
        while (true) {
            if (i >= mu) i = 0;
            if (!st.alive[i]) {
                ++i;
                continue;
            }
            const int d = st.deg3(i);
            if (d == 0) {
                st.drop(bit(i));
                st.kill(i);
                trace.add({"isolated", vertex_labels(h, {i}), {}, 1});
                ++P;
                ++i;
                break;  // back to the outer loop (Step 1)
            }
            if (d == 1) {
                const int j = st.first_neighbor(i);
                if (st.has(bit(j))) {  // neighbour closed: plain remotion of i
                    st.drop(bit(i));
                    st.drop(bit(i) | bit(j));
                    st.kill(i);
                    trace.add({"red", vertex_labels(h, {i}), {}, 1});
                    ++P;
                    ++i;
                    break;
                }
                const int dj = st.deg3(j);
                if (dj <= 1)
                    throw UnsupportedShape(
                        "algpd_connected: two joined leaves (input was not "
                        "separated after all)");
                if (dj == 2) {  // drop i, j, k together
                    const int k = st.first_neighbor(j, i);
                    const Face gone = bit(i) | bit(j) | bit(k);
                    std::vector<Face> next;
                    for (Face f : st.faces) {
                        Face g = f & ~gone;
                        if (g) next.push_back(g);
                    }
                    std::sort(next.begin(), next.end());
                    next.erase(std::unique(next.begin(), next.end()), next.end());
                    st.faces = std::move(next);
                    st.kill(i);
                    st.kill(j);
                    st.kill(k);
                    trace.add({"ref2b", vertex_labels(h, {i, j, k}), {}, 2});
                    P += 2;
                    ++i;
                    break;
                }
                // Neighbour is a joint: cancel the edge, then count i alone.
                trace.add({"cutTree-a", {}, {face_labels(h, bit(i) | bit(j))}, 0});
                st.drop(bit(i) | bit(j));
                st.drop(bit(i));
                st.kill(i);
                trace.add({"isolated", vertex_labels(h, {i}), {}, 1});
                ++P;
                ++i;
                break;
            }
            // d >= 2: move on; a full sweep of such vertices is a cycle.
            ++c;
            if (c == st.live) {
                Hypergraph remnant = st.materialize();
                if (!is_cycle(remnant))
                    throw UnsupportedShape(
                        "algpd_connected: remnant is not a single cycle");
                P += pd_cycle(remnant, &trace);
                return {P, trace};
            }
            ++i;
        }
    }
    return {P, trace};
}

// ---------------------------------------------------------------------------
// Branch-peeling driver
// ---------------------------------------------------------------------------

namespace {

// Branch walks from every leaf of a connected component with a joint:
// returns (joint, branch listed joint-outward).
std::vector<std::pair<int, std::vector<int>>> leaf_branches(const Hypergraph& c) {
    std::vector<std::pair<int, std::vector<int>>> out;
    for (int leaf = 0; leaf < c.mu; ++leaf) {
        if (c.edge_degree(leaf) != 1) continue;
        std::vector<int> walk;
        int prev = -1, cur = leaf;
        while (c.edge_degree(cur) < 3) {
            walk.push_back(cur);
            Face nb = c.edge_neighbors(cur);
            if (prev >= 0) nb &= ~bit(prev);
            if (nb == 0) { walk.clear(); break; }  // a bare path: no joint
            prev = cur;
            cur = lowest_bit(nb);
        }
        if (walk.empty()) continue;
        std::reverse(walk.begin(), walk.end());  // joint-adjacent first
        out.emplace_back(cur, std::move(walk));
    }
    return out;
}

}  // namespace

std::pair<int, ReductionTrace> pd_unique_cycle(const Hypergraph& h) {
    if (h.dim() > 1)
        throw std::invalid_argument("pd_unique_cycle: 1-dimensional input required");
    if (h.mu > 0 && h.covered() != full_mask(h.mu))
        throw std::invalid_argument("pd_unique_cycle: every vertex must lie in a face");

    ReductionTrace trace;
    int total = 0;
    std::vector<Hypergraph> stack = components(minimalize(h));

    while (!stack.empty()) {
        Hypergraph c = std::move(stack.back());
        stack.pop_back();
        if (c.mu == 0) continue;
        if (c.mu == 1) {
            trace.add({"isolated", vertex_labels(c, {0}), {}, 1});
            total += 1;
            continue;
        }
        if (Face e = closed_closed_edge(c)) {
            trace.add({"eq-cancel", {}, {face_labels(c, e)}, 0});
            c = cancel_face(c, e);
            for (auto& part : components(c)) stack.push_back(std::move(part));
            continue;
        }
        if (is_string(c)) {
            total += pd_string(c, &trace);
            continue;
        }
        if (is_cycle(c)) {
            total += pd_cycle(c, &trace);
            continue;
        }
        auto branches = leaf_branches(c);
        if (branches.empty())
            throw UnsupportedShape(
                "pd_unique_cycle: component with no leaves is not a single cycle");
        auto& longest = *std::max_element(
            branches.begin(), branches.end(),
            [](const auto& a, const auto& b) {
                return a.second.size() < b.second.size();
            });
        const int w = longest.first;
        const auto& br = longest.second;
        Hypergraph next;
        if (br.size() >= 3) {
            AttachCut ac = attach_string_cut(c, w, br);
            trace.add({ac.case_i ? "attach-cut-i" : "attach-cut-ii",
                       vertex_labels(c, br),
                       {face_labels(c, bit(ac.cut_a) | bit(ac.cut_b))},
                       ac.pd_s_prime});
            total += ac.pd_s_prime;
            next = std::move(ac.h_tilde);
        } else if (br.size() == 2) {
            trace.add({"cutTree-b", vertex_labels(c, {w}), {}, 0});
            next = cut_tree_step(c, w, br);
        } else {
            trace.add(
                {"cutTree-a", {}, {face_labels(c, bit(w) | bit(br[0]))}, 0});
            next = cut_tree_step(c, w, br);
        }
        for (auto& part : components(next)) stack.push_back(std::move(part));
    }
    return {total, trace};
}

// ---------------------------------------------------------------------------
// Recursive evaluator
// ---------------------------------------------------------------------------

namespace {

// Keyed on the exact face list — the recursion revisits identically labelled
// subproblems constantly, and exact lookups stay cheap at every size.
using Memo = std::map<std::pair<int, std::vector<Face>>, int>;

int pd_rec_comp(const Hypergraph& c, Memo& memo);

int pd_rec_sum(const Hypergraph& h, Memo& memo) {
    int total = 0;
    for (const auto& c : components(h)) total += pd_rec_comp(c, memo);
    return total;
}

int pd_rec_comp(const Hypergraph& c, Memo& memo) {
    if (c.mu == 0) return 0;
    std::pair<int, std::vector<Face>> key{c.mu, c.faces};
    {
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
    }
    int value;
    const Face open = c.open_set();
    if (open == 0) {
        value = c.mu;  // every generator contributes, as for a regular sequence
    } else if (open == full_mask(c.mu)) {
        if (is_cycle(c))
            value = c.mu - 1 - (c.mu - 2) / 3;
        else
            throw NeedsOracle(
                "pd_recursive: all-open component with no vertex to branch on");
    } else {
        int v = 0;
        while (c.is_open(v)) ++v;
        value = std::max(pd_rec_sum(remove_vertex(c, v), memo),
                         pd_rec_sum(colon_vertex(c, v), memo) + 1);
    }
    memo[key] = value;
    return value;
}

}  // namespace

int pd_recursive(const Hypergraph& h) {
    Memo memo;
    return pd_rec_sum(minimalize(h), memo);
}

// ---------------------------------------------------------------------------
// Star dispatch
// ---------------------------------------------------------------------------

namespace {

struct StarTally {
    int s_star = 0;
    int run_terms = 0;  // sum of floor((n_i - 1)/3)
    int m_star = 0;
};

// Accumulates the open-run statistics of one chain of stars.
void tally_chain(const StarDecomposition& d, StarTally& t) {
    StarRuns r = star_runs(d);
    t.s_star += static_cast<int>(r.runs.size());
    for (int n : r.runs) t.run_terms += (n - 1) / 3;
    t.m_star += max_star_configs(r);
}

// Star statistics of a leftover hypergraph (a disjoint union of chains of
// stars). Returns false when some component is not such a chain.
bool tally_leftover(const Hypergraph& h, StarTally& t) {
    for (const auto& frag : components(h)) {
        auto d = classify_stars(frag);
        if (!d.ok()) return false;
        if (d.topology == StarTopology::TreeOfStars && d.stars.size() > 1)
            return false;
        tally_chain(d, t);
    }
    return true;
}

std::optional<int> pd_stars_component(const Hypergraph& c) {
    if (c.mu == 0) return 0;

    if (c.dim() > 1) {
        // Higher faces allowed when the 1-skeleton is a string/cycle of
        // 1-stars covering every vertex and each higher face sits inside a
        // single star.
        Hypergraph sk = skeleton(c, 1);
        if (sk.covered() != full_mask(c.mu)) return std::nullopt;
        if (!is_separated(sk)) return std::nullopt;
        auto d = classify_stars(sk);
        if (!d.ok()) return std::nullopt;
        if (d.topology == StarTopology::TreeOfStars && d.stars.size() > 1)
            return std::nullopt;
        if (d.max_d() > 1) return std::nullopt;
        std::vector<Face> star_masks;
        for (const auto& s : d.stars) {
            Face m = bit(s.center);
            for (const auto& b : s.branches)
                for (int v : b) m |= bit(v);
            star_masks.push_back(m);
        }
        for (Face f : c.faces) {
            if (popcount(f) <= 2) continue;
            bool inside_one = false;
            for (Face m : star_masks)
                if (subset(f, m)) {
                    inside_one = true;
                    break;
                }
            if (!inside_one) return std::nullopt;
        }
        if (d.topology == StarTopology::CycleOfStars && d.all_open())
            return c.mu - 1 -
                   (static_cast<int>(d.stars.size()) - 2) / 3;
        StarTally t;
        tally_chain(d, t);
        return c.mu - t.s_star - t.run_terms + t.m_star;
    }

    if (!is_separated(c)) return std::nullopt;
    auto d = classify_stars(c);
    if (!d.ok()) return std::nullopt;

    if (d.topology == StarTopology::TreeOfStars && d.stars.size() > 1) {
        // Trees are covered only when every star is a proper 2-star.
        for (const auto& s : d.stars)
            if (!s.proper2()) return std::nullopt;
        return c.mu - d.t_proper2;
    }

    if (d.max_d() > 2) return std::nullopt;

    if (d.topology == StarTopology::CycleOfStars && d.all_open() &&
        d.max_d() <= 1)
        return c.mu - 1 - (static_cast<int>(d.stars.size()) - 2) / 3;

    const int T = d.t_proper2;
    StarTally t;
    if (T == 0) {
        tally_chain(d, t);
    } else {
        Face centers = 0;
        for (const auto& s : d.stars)
            if (s.proper2()) centers |= bit(s.center);
        Hypergraph leftover = remove_vertices(c, centers);
        if (!tally_leftover(leftover, t)) return std::nullopt;
    }
    return c.mu - T - t.s_star - t.run_terms + t.m_star;
}

}  // namespace

std::optional<int> pd_stars(const Hypergraph& h, ReductionTrace* trace) {
    if (h.mu > 0 && h.covered() != full_mask(h.mu)) return std::nullopt;
    int total = 0;
    ReductionTrace local;
    for (const auto& c : components(h)) {
        auto value = pd_stars_component(c);
        if (!value) return std::nullopt;
        std::vector<int> all(c.mu);
        for (int i = 0; i < c.mu; ++i) all[i] = i;
        local.add({"star-formula", vertex_labels(c, all), {}, *value});
        total += *value;
    }
    if (trace) trace->absorb(local);
    return total;
}

// ---------------------------------------------------------------------------
// Composition
// ---------------------------------------------------------------------------

AutoResult pd_auto(const Hypergraph& h, bool oracle_fallback) {
    {
        ReductionTrace trace;
        if (auto v = pd_stars(h, &trace)) return {*v, "stars", std::move(trace)};
    }
    if (h.dim() <= 1) {
        try {
            auto [v, trace] = pd_unique_cycle(h);
            return {v, "reduce", std::move(trace)};
        } catch (const UnsupportedShape&) {
        } catch (const std::invalid_argument&) {
        }
    }
    try {
        int v = pd_recursive(h);
        ReductionTrace trace;
        trace.add({"recursive-split", {}, {}, v});
        return {v, "recursive", std::move(trace)};
    } catch (const NeedsOracle&) {
        if (!oracle_fallback) throw;
    }
    int v = pd_bruteforce(h);
    ReductionTrace trace;
    trace.add({"oracle-fallback", {}, {}, v});
    return {v, "oracle", std::move(trace)};
}

}  // namespace hpd
