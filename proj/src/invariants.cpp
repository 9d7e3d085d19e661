// invariants.cpp — string run profiles with their correction counts, and the
// star-chain classification used by the star-based closed forms.

#include "hpd/invariants.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace hpd {

namespace {

Face vbit(int v) { return Face(1) << v; }

int edge_count(const Hypergraph& h) {
    int e = 0;
    for (Face f : h.faces)
        if (std::popcount(f) == 2) ++e;
    return e;
}

// Single vertex of `mask`; mask must have exactly one bit.
int only_vertex(Face mask) { return std::countr_zero(mask); }

}  // namespace

bool is_string(const Hypergraph& h) {
    if (h.mu == 0) return false;
    if (h.covered() != full_mask(h.mu)) return false;
    if (h.dim() > 1) return false;
    for (int v = 0; v < h.mu; ++v)
        if (h.edge_degree(v) > 2) return false;
    if (edge_count(h) != h.mu - 1) return false;
    return component_masks(h).size() == 1;
}

bool is_cycle(const Hypergraph& h) {
    if (h.mu < 3) return false;
    if (h.covered() != full_mask(h.mu)) return false;
    if (h.dim() != 1) return false;
    for (int v = 0; v < h.mu; ++v)
        if (h.edge_degree(v) != 2) return false;
    if (edge_count(h) != h.mu) return false;
    return component_masks(h).size() == 1;
}

std::vector<int> string_endpoints(const Hypergraph& h) {
    std::vector<int> ends;
    for (int v = 0; v < h.mu; ++v)
        if (h.edge_degree(v) <= 1) ends.push_back(v);
    return ends;
}

StringProfile string_profile(const Hypergraph& s, int anchor) {
    if (!is_string(s)) throw UnsupportedShape("string_profile: not a string");
    if (anchor < 0 || anchor >= s.mu || s.edge_degree(anchor) > 1)
        throw UnsupportedShape("string_profile: anchor is not an endpoint");

    StringProfile p;
    if (s.mu == 1) {
        p.vertices = {anchor};
    } else {
        auto ends = string_endpoints(s);
        int start = (ends[0] == anchor) ? ends[1] : ends[0];
        int prev = -1, cur = start;
        while (true) {
            p.vertices.push_back(cur);
            if (cur == anchor) break;
            Face nb = s.edge_neighbors(cur);
            if (prev >= 0) nb &= ~vbit(prev);
            if (nb == 0 || std::popcount(nb) != 1)
                throw UnsupportedShape("string_profile: broken walk");
            prev = cur;
            cur = only_vertex(nb);
        }
    }

    const int n = p.n();
    std::vector<char> open(n);
    for (int i = 0; i < n; ++i) open[i] = !s.is_closed(p.vertices[i]);
    for (int i = 0; i + 1 < n; ++i)
        if (!open[i] && !open[i + 1])
            throw UnsupportedShape("string_profile: adjacent closed vertices");

    for (int i = 0; i < n;) {
        if (!open[i]) {
            ++i;
            continue;
        }
        int j = i;
        while (j < n && open[j]) ++j;
        p.runs.push_back(j - i);
        i = j;
    }

    const int sct = p.s();
    p.run_use.assign(sct, 0);
    // 1-1 configurations, greedily from the anchor end. The middles of a
    // configuration must be = 2 (mod 3), so each right end determines at most
    // one candidate.
    for (int b = sct - 1; b >= 1; --b) {
        if (p.runs[b] % 3 != 1) continue;
        int a = b - 1;
        while (a >= 0 && p.runs[a] % 3 == 2) --a;
        if (a >= 0 && p.runs[a] % 3 == 1) {
            for (int t = a; t <= b; ++t) p.run_use[t] = 1;
            ++p.m_count;
            b = a;  // loop decrement moves past a
        }
    }
    // 1-0 configurations among the remaining runs, again from the anchor end:
    // the run nearer the anchor is = 1, the far one = 0, middles = 2 (mod 3).
    for (int b = sct - 1; b >= 1; --b) {
        if (p.run_use[b] || p.runs[b] % 3 != 1) continue;
        int a = b - 1;
        while (a >= 0 && !p.run_use[a] && p.runs[a] % 3 == 2) --a;
        if (a >= 0 && !p.run_use[a] && p.runs[a] % 3 == 0) {
            for (int t = a; t <= b; ++t) p.run_use[t] = 2;
            ++p.o_count;
            b = a;
        }
    }

    int zero_runs = 0;
    for (int r : p.runs)
        if (r % 3 == 0) ++zero_runs;
    p.w_count = zero_runs - p.o_count;

    int rem = n - p.m_count - p.w_count;
    if (rem < 0) throw std::logic_error("string_profile: negative remainder");
    p.q = rem / 3;
    p.nr = rem % 3;
    return p;
}

bool is_11_special(const std::vector<int>& runs) {
    const int s = static_cast<int>(runs.size());
    if (s < 2) return false;
    if (runs.front() % 3 != 1 || runs.back() % 3 != 1) return false;
    for (int i = 1; i + 1 < s; ++i)
        if (runs[i] % 3 != 2) return false;
    return true;
}

bool is_10_special(const std::vector<int>& runs) {
    const int s = static_cast<int>(runs.size());
    if (s < 2) return false;
    if (runs.front() % 3 != 0 || runs.back() % 3 != 1) return false;
    for (int i = 1; i + 1 < s; ++i)
        if (runs[i] % 3 != 2) return false;
    return true;
}

bool is_11_special(const Hypergraph& s) {
    auto ends = string_endpoints(s);
    if (ends.empty()) return false;
    return is_11_special(string_profile(s, ends.back()).runs);
}

bool is_10_special(const Hypergraph& s, int anchor) {
    return is_10_special(string_profile(s, anchor).runs);
}

int max_disjoint_11(const std::vector<int>& runs) {
    const int s = static_cast<int>(runs.size());
    std::vector<int> dp(s + 1, 0);
    for (int b = 1; b <= s; ++b) {
        dp[b] = dp[b - 1];
        if (runs[b - 1] % 3 != 1) continue;
        int a = b - 1;  // 1-based scan for the unique left end
        while (a >= 1 && runs[a - 1] % 3 == 2) --a;
        if (a >= 1 && a < b && runs[a - 1] % 3 == 1)
            dp[b] = std::max(dp[b], dp[a - 1] + 1);
    }
    return dp[s];
}

// ---------------------------------------------------------------------------
// Star classification
// ---------------------------------------------------------------------------

StarDecomposition classify_stars(const Hypergraph& h) {
    StarDecomposition d;
    const int n = h.mu;
    if (n == 0) return d;
    if (h.covered() != full_mask(n)) return d;
    if (h.dim() > 1) return d;
    if (component_masks(h).size() != 1) return d;

    auto make_star = [&](int c, std::vector<std::vector<int>> br) {
        Star s;
        s.center = c;
        s.branches = std::move(br);
        std::sort(s.branches.begin(), s.branches.end(),
                  [](const auto& x, const auto& y) { return x.front() < y.front(); });
        s.open_center = !h.is_closed(c);
        return s;
    };

    if (n == 1) {
        d.topology = StarTopology::TreeOfStars;
        d.stars.push_back(make_star(0, {}));
        return d;
    }

    std::vector<int> deg(n);
    bool has_joint = false;
    for (int v = 0; v < n; ++v) {
        deg[v] = h.edge_degree(v);
        if (deg[v] >= 3) has_joint = true;
    }
    const int edges = edge_count(h);

    if (!has_joint) {
        if (edges == n - 1) {  // bare path: a string of 0-stars
            int start = -1;
            for (int v = 0; v < n && start < 0; ++v)
                if (deg[v] <= 1) start = v;
            int prev = -1, cur = start;
            for (int step = 0; step < n; ++step) {
                d.stars.push_back(make_star(cur, {}));
                Face nb = h.edge_neighbors(cur);
                if (prev >= 0) nb &= ~vbit(prev);
                if (nb == 0) break;
                prev = cur;
                cur = only_vertex(nb);
            }
            if (static_cast<int>(d.stars.size()) != n) return StarDecomposition{};
            d.topology = StarTopology::StringOfStars;
        } else if (edges == n) {  // bare cycle of 0-stars
            int prev = -1, cur = 0;
            for (int step = 0; step < n; ++step) {
                d.stars.push_back(make_star(cur, {}));
                Face nb = h.edge_neighbors(cur);
                if (prev >= 0) nb &= ~vbit(prev);
                if (step == 0) nb &= nb - 1;  // pick the larger neighbor last
                prev = cur;
                cur = only_vertex(nb);
            }
            if (cur != 0) return StarDecomposition{};
            d.topology = StarTopology::CycleOfStars;
        }
        return d;
    }

    // Branches: maximal walks from each leaf into the first joint.
    std::vector<char> in_branch(n, 0);
    std::vector<std::vector<std::vector<int>>> branches_of(n);
    for (int leaf = 0; leaf < n; ++leaf) {
        if (deg[leaf] != 1) continue;
        std::vector<int> path;
        int prev = -1, cur = leaf;
        while (deg[cur] < 3) {
            path.push_back(cur);
            if (static_cast<int>(path.size()) > n) return StarDecomposition{};
            Face nb = h.edge_neighbors(cur);
            if (prev >= 0) nb &= ~vbit(prev);
            if (nb == 0) return StarDecomposition{};  // dead end off the chain
            prev = cur;
            cur = only_vertex(nb);
        }
        std::reverse(path.begin(), path.end());  // adjacent-to-center first
        for (int u : path) in_branch[u] = 1;
        branches_of[cur].push_back(std::move(path));
    }

    std::vector<int> chain;
    for (int v = 0; v < n; ++v)
        if (!in_branch[v]) chain.push_back(v);
    const int cn = static_cast<int>(chain.size());

    std::vector<Face> cnb(n, 0);
    int cedges = 0;
    for (Face f : h.faces) {
        if (std::popcount(f) != 2) continue;
        int a = std::countr_zero(f);
        int b = std::countr_zero(f & (f - 1));
        if (in_branch[a] || in_branch[b]) continue;
        cnb[a] |= vbit(b);
        cnb[b] |= vbit(a);
        ++cedges;
    }

    // The chain must be connected (it always is when H is, but verify).
    {
        std::vector<char> seen(n, 0);
        std::vector<int> stack = {chain[0]};
        seen[chain[0]] = 1;
        int cnt = 0;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            ++cnt;
            for (int u : face_vertices(cnb[v]))
                if (!seen[u]) {
                    seen[u] = 1;
                    stack.push_back(u);
                }
        }
        if (cnt != cn) return StarDecomposition{};
    }

    int max_cdeg = 0;
    for (int v : chain) max_cdeg = std::max(max_cdeg, std::popcount(cnb[v]));

    if (cn == 1) {
        d.topology = StarTopology::TreeOfStars;
        d.stars.push_back(make_star(chain[0], branches_of[chain[0]]));
    } else if (max_cdeg <= 2 && cedges == cn - 1) {
        int start = -1;
        for (int v : chain)
            if (std::popcount(cnb[v]) <= 1) {
                start = v;
                break;
            }
        int prev = -1, cur = start;
        for (int step = 0; step < cn; ++step) {
            d.stars.push_back(make_star(cur, branches_of[cur]));
            Face nb = cnb[cur];
            if (prev >= 0) nb &= ~vbit(prev);
            if (nb == 0) break;
            prev = cur;
            cur = only_vertex(nb);
        }
        if (static_cast<int>(d.stars.size()) != cn) return StarDecomposition{};
        d.topology = StarTopology::StringOfStars;
    } else if (max_cdeg == 2 && cedges == cn) {
        int prev = -1, cur = chain[0];
        for (int step = 0; step < cn; ++step) {
            d.stars.push_back(make_star(cur, branches_of[cur]));
            Face nb = cnb[cur];
            if (prev >= 0) nb &= ~vbit(prev);
            if (step == 0) nb &= nb - 1;
            prev = cur;
            cur = only_vertex(nb);
        }
        if (cur != chain[0]) return StarDecomposition{};
        d.topology = StarTopology::CycleOfStars;
    } else if (cedges == cn - 1) {
        d.topology = StarTopology::TreeOfStars;
        for (int v : chain) d.stars.push_back(make_star(v, branches_of[v]));
    } else {
        return d;  // more than one chain cycle
    }

    for (const auto& s : d.stars)
        if (s.proper2()) ++d.t_proper2;
    return d;
}

StarRuns star_runs(const StarDecomposition& d) {
    StarRuns r;
    r.cycle = (d.topology == StarTopology::CycleOfStars);
    const int k = static_cast<int>(d.stars.size());
    std::vector<char> open(k);
    for (int i = 0; i < k; ++i) open[i] = d.stars[i].open_center;

    int first = 0;
    if (r.cycle) {
        int start = -1;
        for (int i = 0; i < k; ++i)
            if (!open[i]) {
                start = i;
                break;
            }
        if (start < 0) {  // all-open cycle: one circular run
            r.runs = {k};
            return r;
        }
        std::rotate(open.begin(), open.begin() + start, open.end());
        first = 0;
    }

    int leading = 0, trailing = 0, i = first;
    while (i < k && !open[i]) {
        ++leading;
        ++i;
    }
    while (i < k) {
        int j = i;
        while (j < k && open[j]) ++j;
        r.runs.push_back(j - i);
        int g = 0;
        i = j;
        while (i < k && !open[i]) {
            ++g;
            ++i;
        }
        if (i < k)
            r.gaps.push_back(g);
        else
            trailing = g;
    }
    if (r.cycle) r.gap_wrap = leading + trailing;
    return r;
}

int max_star_configs(const StarRuns& r) {
    const int k = static_cast<int>(r.runs.size());
    if (k < 2) return 0;

    auto gap_after = [&](int i) {  // closed stars between run i and run i+1 (mod k)
        if (i < k - 1) return r.gaps[i];
        return r.gap_wrap;  // cycle seam; never queried in the linear case
    };

    // Each start determines at most one candidate configuration: extend
    // through runs = 2 (mod 3) separated by exactly one closed star until the
    // first run = 1 (mod 3).
    std::vector<std::uint64_t> arcs;
    const int reach = r.cycle ? k - 1 : 0;
    for (int a = 0; a < k; ++a) {
        if (r.runs[a] % 3 != 1) continue;
        const int limit = r.cycle ? a + reach : k - 1;
        for (int b = a + 1; b <= limit; ++b) {
            if (gap_after((b - 1) % k) != 1) break;
            int rb = r.runs[b % k] % 3;
            if (rb == 1) {
                std::uint64_t m = 0;
                for (int t = a; t <= b; ++t) m |= std::uint64_t(1) << (t % k);
                arcs.push_back(m);
                break;
            }
            if (rb != 2) break;
        }
    }

    int best = 0;
    auto rec = [&](auto&& self, std::size_t idx, std::uint64_t used, int cnt) -> void {
        best = std::max(best, cnt);
        for (std::size_t j = idx; j < arcs.size(); ++j)
            if (!(arcs[j] & used)) self(self, j + 1, used | arcs[j], cnt + 1);
    };
    rec(rec, 0, 0, 0);
    return best;
}

int star_modularity(const Hypergraph& h) {
    int total = 0;
    for (const auto& c : components(h)) {
        auto d = classify_stars(c);
        if (!d.ok())
            throw UnsupportedShape("star_modularity: component is not a chain of stars");
        if (d.topology == StarTopology::TreeOfStars && d.stars.size() > 1)
            throw UnsupportedShape("star_modularity: tree of stars");
        total += max_star_configs(star_runs(d));
    }
    return total;
}

// ---------------------------------------------------------------------------
// Canonical forms
// ---------------------------------------------------------------------------

namespace {

// Backtracking state for the minimal-code search. Positions are filled in
// order; once positions 0..k-1 are fixed, the faces lying entirely inside
// them form a fixed prefix of the final sorted face list (every face touching
// a later position has a bit >= k, hence a strictly larger mask).
struct CanonSearch {
    const Hypergraph& h;
    std::vector<int> pos_of;  // old vertex -> new position, -1 if unassigned
    std::vector<Face> best;

    explicit CanonSearch(const Hypergraph& g) : h(g), pos_of(g.mu, -1) {}

    std::vector<Face> relabel_all() const {
        std::vector<Face> out;
        out.reserve(h.faces.size());
        for (Face f : h.faces) {
            Face g = 0;
            for (int v : face_vertices(f)) g |= vbit(pos_of[v]);
            out.push_back(g);
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    // -1: prefix strictly beats best, 0: tied, 1: prunable.
    int compare_prefix(int k) const {
        std::vector<Face> prefix;
        for (Face f : h.faces) {
            Face g = 0;
            bool inside = true;
            for (int v : face_vertices(f)) {
                if (pos_of[v] < 0 || pos_of[v] >= k) {
                    inside = false;
                    break;
                }
                g |= vbit(pos_of[v]);
            }
            if (inside) prefix.push_back(g);
        }
        std::sort(prefix.begin(), prefix.end());
        for (std::size_t i = 0; i < prefix.size(); ++i) {
            if (i >= best.size() || prefix[i] > best[i]) return 1;
            if (prefix[i] < best[i]) return -1;
        }
        if (best.size() > prefix.size() &&
            best[prefix.size()] < (Face(1) << k))
            return 1;  // best has one more small face; candidate cannot match
        return 0;
    }

    // Assigns the unassigned vertices in index order, offers the resulting
    // full code as a new bound, and backs the assignments out again.
    void greedy_complete(int k) {
        std::vector<int> fills;
        for (int v = 0; v < h.mu; ++v)
            if (pos_of[v] < 0) {
                pos_of[v] = k++;
                fills.push_back(v);
            }
        auto code = relabel_all();
        if (code < best) best = std::move(code);
        for (int v : fills) pos_of[v] = -1;
    }

    void dive(int k) {
        if (k == h.mu) {
            auto code = relabel_all();
            if (code < best) best = std::move(code);
            return;
        }
        for (int v = 0; v < h.mu; ++v) {
            if (pos_of[v] >= 0) continue;
            pos_of[v] = k;
            int cmp = compare_prefix(k + 1);
            if (cmp < 0) {
                // This prefix beats the bound outright; refresh the bound with
                // a completion sharing it so deeper pruning works again.
                greedy_complete(k + 1);
                cmp = compare_prefix(k + 1);
            }
            if (cmp <= 0) dive(k + 1);
            pos_of[v] = -1;
        }
    }
};

}  // namespace

std::vector<Face> canonical_code(const Hypergraph& h) {
    if (h.mu == 0 || h.faces.empty()) return {};
    CanonSearch s(h);
    s.best = h.faces;  // identity labeling as the initial bound
    s.dive(0);
    return s.best;
}

}  // namespace hpd
