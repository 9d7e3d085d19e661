// oracle.cpp — Betti numbers by simplicial homology over GF(2)/GF(p),
// via the lcm-lattice strand complexes and via restricted Stanley-Reisner
// complexes; minimal transversal enumeration for big height.

#include "hpd/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <unordered_map>
#include <unordered_set>

namespace hpd {

int oracle_cap() {
    if (const char* env = std::getenv("HPD_ORACLE_CAP")) {
        int cap = std::atoi(env);
        if (cap > 0) return cap;
    }
    return 22;
}

long long BettiTable::rank(int i, Face sigma) const {
    auto it = entries.find({i, sigma});
    return it == entries.end() ? 0 : it->second;
}

long long BettiTable::total(int i) const {
    long long t = 0;
    for (const auto& [key, r] : entries)
        if (key.first == i) t += r;
    return t;
}

namespace {

// --- exact rank computation -------------------------------------------------

// Rank over GF(2); each row is a bit-packed vector of `cols` columns.
long long rank_gf2(std::vector<std::vector<std::uint64_t>>& rows, int cols) {
    const int words = (cols + 63) / 64;
    std::vector<const std::vector<std::uint64_t>*> pivots;
    std::vector<int> pivot_col;
    long long rank = 0;
    for (auto& row : rows) {
        for (std::size_t k = 0; k < pivots.size(); ++k) {
            int c = pivot_col[k];
            if ((row[c >> 6] >> (c & 63)) & 1)
                for (int w = 0; w < words; ++w) row[w] ^= (*pivots[k])[w];
        }
        int lead = -1;
        for (int w = 0; w < words && lead < 0; ++w)
            if (row[w]) lead = w * 64 + std::countr_zero(row[w]);
        if (lead >= 0) {
            pivots.push_back(&row);
            pivot_col.push_back(lead);
            ++rank;
        }
    }
    return rank;
}

// Rank over GF(p), dense row echelon.
long long rank_gfp(std::vector<std::vector<std::int64_t>>& rows, int cols,
                   std::int64_t p) {
    long long rank = 0;
    int row_at = 0;
    const int n = static_cast<int>(rows.size());
    for (int col = 0; col < cols && row_at < n; ++col) {
        int piv = -1;
        for (int r = row_at; r < n; ++r)
            if (rows[r][col] % p != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(rows[row_at], rows[piv]);
        std::int64_t a = ((rows[row_at][col] % p) + p) % p;
        // inverse of a mod p by Fermat
        std::int64_t inv = 1, base = a, e = p - 2;
        while (e) {
            if (e & 1) inv = inv * base % p;
            base = base * base % p;
            e >>= 1;
        }
        for (int c = col; c < cols; ++c)
            rows[row_at][c] = ((rows[row_at][c] % p) + p) % p * inv % p;
        for (int r = 0; r < n; ++r) {
            if (r == row_at) continue;
            std::int64_t f = ((rows[r][col] % p) + p) % p;
            if (!f) continue;
            for (int c = col; c < cols; ++c)
                rows[r][c] = ((rows[r][c] - f * rows[row_at][c]) % p + p) % p;
        }
        ++row_at;
        ++rank;
    }
    return rank;
}

// Boundary-map rank from faces of cardinality c to cardinality c-1.
long long boundary_rank(const std::vector<Face>& upper,
                        const std::vector<Face>& lower, int p) {
    if (upper.empty() || lower.empty()) return 0;
    std::unordered_map<Face, int> index;
    index.reserve(lower.size() * 2);
    for (std::size_t i = 0; i < lower.size(); ++i)
        index.emplace(lower[i], static_cast<int>(i));
    const int cols = static_cast<int>(lower.size());
    if (p == 2) {
        const int words = (cols + 63) / 64;
        std::vector<std::vector<std::uint64_t>> rows(
            upper.size(), std::vector<std::uint64_t>(words, 0));
        for (std::size_t r = 0; r < upper.size(); ++r) {
            Face f = upper[r];
            Face rest = f;
            while (rest) {
                Face t = rest & (~rest + 1);
                rest &= rest - 1;
                int c = index.at(f & ~t);
                rows[r][c >> 6] ^= std::uint64_t{1} << (c & 63);
            }
        }
        return rank_gf2(rows, cols);
    }
    std::vector<std::vector<std::int64_t>> rows(
        upper.size(), std::vector<std::int64_t>(cols, 0));
    for (std::size_t r = 0; r < upper.size(); ++r) {
        Face f = upper[r];
        int pos = 0;
        Face rest = f;
        while (rest) {
            Face t = rest & (~rest + 1);
            rest &= rest - 1;
            int c = index.at(f & ~t);
            rows[r][c] = (pos % 2 == 0) ? 1 : p - 1;
            ++pos;
        }
    }
    return rank_gfp(rows, cols, p);
}

// --- generator plumbing ------------------------------------------------------

// The oracle tolerates redundant generating sets (they arise from opened
// vertices); Betti numbers of R/I only depend on the ideal, so reduce to the
// minimal generators up front.
std::vector<Face> minimal_generators(const std::vector<Face>& gens) {
    std::vector<Face> out;
    for (Face g : gens) {
        if (g == 0) throw MinimalityError("unit generator");
        bool redundant = false;
        for (Face h : gens)
            if (h != g && subset(h, g)) {
                redundant = true;
                break;
            }
        if (!redundant && std::find(out.begin(), out.end(), g) == out.end())
            out.push_back(g);
    }
    return out;
}

}  // namespace

std::vector<long long> reduced_homology_ranks(
    const std::vector<std::vector<Face>>& faces_by_card, int p) {
    const int top = static_cast<int>(faces_by_card.size());
    std::vector<long long> dcard(top + 1, 0);  // rank of boundary from card c
    for (int c = 1; c < top; ++c)
        dcard[c] = boundary_rank(faces_by_card[c], faces_by_card[c - 1], p);
    std::vector<long long> h(top, 0);
    for (int c = 0; c < top; ++c) {
        long long f = static_cast<long long>(faces_by_card[c].size());
        long long below = dcard[c];
        long long above = c + 1 < top ? dcard[c + 1] : 0;
        h[c] = f - below - above;
    }
    return h;
}

namespace {

void betti_lcm_lattice(const std::vector<Face>& gens, int p, BettiTable& out) {
    const int mu = static_cast<int>(gens.size());
    if (mu > oracle_cap())
        throw OracleTooLarge("lattice route: " + std::to_string(mu) +
                             " generators exceed cap " +
                             std::to_string(oracle_cap()));
    // All joins of generator supports.
    std::unordered_set<Face> sigmas;
    {
        std::vector<Face> frontier(gens.begin(), gens.end());
        for (Face g : gens) sigmas.insert(g);
        while (!frontier.empty()) {
            Face s = frontier.back();
            frontier.pop_back();
            for (Face g : gens) {
                Face u = s | g;
                if (sigmas.insert(u).second) frontier.push_back(u);
            }
        }
    }
    out.entries[{0, 0}] = 1;
    for (Face sigma : sigmas) {
        std::vector<int> g_sigma;
        for (int j = 0; j < mu; ++j)
            if (subset(gens[j], sigma)) g_sigma.push_back(j);
        const int g = static_cast<int>(g_sigma.size());
        // Faces of the strand complex: subsets of g_sigma whose support
        // union stays strictly inside sigma, grouped by cardinality.
        std::vector<std::vector<Face>> by_card(g + 1);
        const std::uint64_t limit = std::uint64_t{1} << g;
        std::vector<Face> unions(limit);
        unions[0] = 0;
        by_card[0].push_back(0);
        for (std::uint64_t m = 1; m < limit; ++m) {
            int t = std::countr_zero(m);
            unions[m] = unions[m & (m - 1)] | gens[g_sigma[t]];
            if (unions[m] != sigma)
                by_card[std::popcount(m)].push_back(static_cast<Face>(m));
        }
        auto h = reduced_homology_ranks(by_card, p);
        // beta_{i,sigma} = dim H~_{i-2} = h[card i-1]
        for (int c = 0; c < static_cast<int>(h.size()); ++c)
            if (h[c] > 0) out.entries[{c + 1, sigma}] = h[c];
    }
}

void betti_hochster(const std::vector<Face>& gens, int num_vars, int p,
                    BettiTable& out) {
    if (num_vars > oracle_cap())
        throw OracleTooLarge("hochster route: " + std::to_string(num_vars) +
                             " variables exceed cap " +
                             std::to_string(oracle_cap()));
    const Face all = full_mask(num_vars);
    // Stream sigma over all variable subsets; restrict the Stanley-Reisner
    // complex (tau is a face iff no generator support fits inside tau).
    for (Face sigma = 0;; ++sigma) {
        std::vector<int> verts = face_vertices(sigma);
        const int n = static_cast<int>(verts.size());
        std::vector<std::vector<Face>> by_card(n + 2);
        for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
            Face tau = 0;
            std::uint64_t rest = m;
            while (rest) {
                int t = std::countr_zero(rest);
                rest &= rest - 1;
                tau |= bit(verts[t]);
            }
            bool is_face = true;
            for (Face gsupp : gens)
                if (subset(gsupp, tau)) {
                    is_face = false;
                    break;
                }
            if (is_face) by_card[std::popcount(tau)].push_back(tau);
        }
        if (!by_card[0].empty()) {
            auto h = reduced_homology_ranks(by_card, p);
            // dim H~_d contributes to beta_{i,sigma} with i = |sigma|-d-1.
            for (int c = 0; c < static_cast<int>(h.size()); ++c) {
                if (h[c] <= 0) continue;
                int i = n - (c - 1) - 1;
                if (i >= 0) out.entries[{i, sigma}] = h[c];
            }
        }
        if (sigma == all) break;
    }
}

}  // namespace

BettiTable betti_table(const MonomialIdeal& ideal, int p, BettiRoute route) {
    BettiTable out;
    out.characteristic = p;
    auto gens = minimal_generators(ideal.gens);
    if (route == BettiRoute::LcmLattice)
        betti_lcm_lattice(gens, p, out);
    else
        betti_hochster(gens, ideal.num_vars, p, out);
    out.pd = 0;
    for (const auto& [key, r] : out.entries)
        if (r > 0) out.pd = std::max(out.pd, key.first);
    return out;
}

namespace {
long long g_bruteforce_calls = 0;
}

long long bruteforce_calls() { return g_bruteforce_calls; }

int pd_bruteforce(const Hypergraph& h) {
    ++g_bruteforce_calls;
    MonomialIdeal ideal = to_standard_ideal(h);
    BettiTable t2 = betti_table(ideal, 2);
    BettiTable tp = betti_table(ideal, 32003);
    if (t2.pd != tp.pd)
        throw CharacteristicDisagreement(
            "pd over GF(2) = " + std::to_string(t2.pd) +
            " but over GF(32003) = " + std::to_string(tp.pd) + " for " +
            h.to_string());
    return t2.pd;
}

std::vector<Face> minimal_covers(const MonomialIdeal& ideal) {
    auto gens = minimal_generators(ideal.gens);
    std::vector<Face> covers;
    std::unordered_set<Face> seen;
    std::vector<Face> stack{0};
    while (!stack.empty()) {
        Face chosen = stack.back();
        stack.pop_back();
        if (!seen.insert(chosen).second) continue;
        Face uncovered = 0;
        bool complete = true;
        for (Face g : gens)
            if ((g & chosen) == 0) {
                uncovered = g;
                complete = false;
                break;
            }
        if (complete) {
            // Minimal iff every chosen variable privately covers some gen.
            bool minimal = true;
            for (int v : face_vertices(chosen)) {
                bool priv = false;
                for (Face g : gens)
                    if ((g & chosen) == bit(v)) {
                        priv = true;
                        break;
                    }
                if (!priv) {
                    minimal = false;
                    break;
                }
            }
            if (minimal) covers.push_back(chosen);
            continue;
        }
        for (int v : face_vertices(uncovered)) stack.push_back(chosen | bit(v));
    }
    std::sort(covers.begin(), covers.end());
    covers.erase(std::unique(covers.begin(), covers.end()), covers.end());
    return covers;
}

int big_height(const MonomialIdeal& ideal) {
    int best = 0;
    for (Face c : minimal_covers(ideal)) best = std::max(best, popcount(c));
    return best;
}

}  // namespace hpd
