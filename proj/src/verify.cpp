#include "hpd/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "hpd/enumerate.hpp"
#include "hpd/fixtures.hpp"
#include "hpd/highpd.hpp"
#include "hpd/invariants.hpp"
#include "hpd/oracle.hpp"
#include "hpd/reduce.hpp"

namespace hpd {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Collects at most `cap` failure descriptions; keeps an exact total count.
struct Failures {
    long long count = 0;
    std::vector<std::string> first;
    std::size_t cap = 6;

    void add(const std::string& msg) {
        ++count;
        if (first.size() < cap) first.push_back(msg);
    }
    std::string render() const {
        std::string out;
        for (const auto& m : first) out += " | " + m;
        if (count > static_cast<long long>(first.size()))
            out += " | ... " +
                   std::to_string(count - static_cast<long long>(first.size())) +
                   " more";
        return out;
    }
};

bool has_adjacent_closed(const Hypergraph& h) {
    for (Face f : h.faces)
        if (popcount(f) == 2) {
            auto vs = face_vertices(f);
            if (h.is_closed(vs[0]) && h.is_closed(vs[1])) return true;
        }
    return false;
}

std::string fmt_seconds(double s) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3fs", s);
    return buf;
}

// ---------------------------------------------------------------------------
// Check 1: the five pinned fixture values, each under one second, plus the
// structural cross-validation of the two transcriptions the oracle cannot
// reach (figure4 against figure5 via the drawn operation replay, figure7
// against figure6 via remotion of the proper 2-star centers).
// ---------------------------------------------------------------------------

CheckResult check_fixture_values() {
    CheckResult r{"fixture-values", true, "", 0};
    std::string detail;

    auto timed = [&](const char* name, int expect, auto&& fn) {
        Clock::time_point t0 = Clock::now();
        int got = -1;
        try {
            got = fn();
        } catch (const std::exception& e) {
            r.pass = false;
            detail += std::string(name) + " threw (" + e.what() + "); ";
            return;
        }
        double s = seconds_since(t0);
        bool ok = got == expect && s < 1.0;
        if (!ok) r.pass = false;
        detail += std::string(name) + "=" + std::to_string(got) + " (" +
                  fmt_seconds(s) + (ok ? ") " : ") MISMATCH ");
    };

    const Hypergraph& nine = fixture("nine-face").hypergraph;
    const Hypergraph& six = fixture("six-cycle").hypergraph;
    const Hypergraph& seven = fixture("seven-cycle").hypergraph;
    const Hypergraph& fig4 = fixture("figure4").hypergraph;
    const Hypergraph& fig5 = fixture("figure5").hypergraph;
    const Hypergraph& fig6 = fixture("figure6").hypergraph;
    const Hypergraph& fig7 = fixture("figure7").hypergraph;

    timed("nine-face", 5, [&] { return pd_unique_cycle(nine).first; });
    timed("six-cycle", 4, [&] { return pd_cycle(six); });
    timed("seven-cycle", 5, [&] { return pd_cycle(seven); });
    timed("figure4", 28, [&] { return pd_unique_cycle(fig4).first; });
    timed("figure6(stars)", 31, [&] {
        auto v = pd_stars(fig6);
        return v ? *v : -1;
    });

    // Structural validation of the hand-transcribed 28/31 fixtures. figure5
    // must be exactly what the drawn operations produce from figure4: cut the
    // two marked edges, cancel the two marked edges, remove the four marked
    // vertices. figure7 must be exactly figure6 minus its proper 2-star
    // centers. Vertices are resolved by label at every step: cancelling
    // A2-C1 leaves C1 with only the variable it shares with C2, so C2's
    // generator becomes redundant and is absorbed immediately, renumbering
    // everything after it (and covering one of the four marked removals).
    auto by_label = [](const Hypergraph& g, const std::string& name) {
        for (int v = 0; v < g.mu; ++v)
            if (g.label(v) == name) return v;
        return -1;
    };
    auto edge = [&](const Hypergraph& g, const char* a, const char* b) {
        return face_of({by_label(g, a), by_label(g, b)});
    };
    Hypergraph replay = fig4;
    replay = cut_face(replay, edge(replay, "C7", "C8"));
    replay = cut_face(replay, edge(replay, "A4", "B6"));
    replay = cancel_face(replay, edge(replay, "A2", "C1"));
    replay = cancel_face(replay, edge(replay, "A6", "B9"));
    for (const char* red : {"A3", "C2", "C6", "D6"})
        if (int v = by_label(replay, red); v >= 0)
            replay = remove_vertex(replay, v);
    const bool replay_ok = replay == fig5 && replay.labels == fig5.labels;
    if (!replay_ok) r.pass = false;
    detail += replay_ok ? "replay(figure4)==figure5 "
                        : "replay(figure4)!=figure5 MISMATCH ";

    Hypergraph centers_removed =
        remove_vertices(fig6, face_of({9, 23, 30, 33}));
    const bool fig7_ok = centers_removed == fig7 &&
                         centers_removed.labels == fig7.labels;
    if (!fig7_ok) r.pass = false;
    detail += fig7_ok ? "remotion(figure6)==figure7 "
                      : "remotion(figure6)!=figure7 MISMATCH ";

    timed("figure5", 28, [&] { return pd_unique_cycle(fig5).first; });
    timed("figure7(stars)", 31, [&] {
        auto v = pd_stars(fig7);
        return v ? *v : -1;
    });

    // The three small fixtures sit well inside the oracle cap; cross-check.
    timed("oracle:nine-face", 5, [&] { return pd_bruteforce(nine); });
    timed("oracle:six-cycle", 4, [&] { return pd_bruteforce(six); });
    timed("oracle:seven-cycle", 5, [&] { return pd_bruteforce(seven); });

    r.detail = detail;
    return r;
}

// ---------------------------------------------------------------------------
// Check 2: the wrong-cut regression on the nine-face fixture. Cutting the
// 0-1 edge splits off an all-closed triple and a closed-open-open-closed
// string, 3 + 3 = 6; the engine's guided cut keeps the value at 5.
// ---------------------------------------------------------------------------

CheckResult check_wrong_cut() {
    CheckResult r{"wrong-cut-regression", true, "", 0};
    const Hypergraph& nine = fixture("nine-face").hypergraph;

    Hypergraph wrong = cut_face(nine, face_of({0, 1}));
    auto parts = components(wrong);
    std::string part_pds;
    int total = 0;
    for (const auto& part : parts) {
        int v = pd_recursive(part);
        total += v;
        if (!part_pds.empty()) part_pds += "+";
        part_pds += std::to_string(v);
    }
    int engine = pd_unique_cycle(nine).first;
    int wrong_oracle = pd_bruteforce(wrong);
    int right_oracle = pd_bruteforce(nine);

    r.pass = parts.size() == 2 && total == 6 && wrong_oracle == 6 &&
             engine == 5 && right_oracle == 5;
    r.detail = "naive cut at {0,1}: " + part_pds + "=" + std::to_string(total) +
               " (oracle " + std::to_string(wrong_oracle) +
               "); engine on the uncut fixture: " + std::to_string(engine) +
               " (oracle " + std::to_string(right_oracle) + ")";
    return r;
}

// ---------------------------------------------------------------------------
// Check 3: orientation-dependence of the correction count W on the 7-string
// closed at {v1, v5, v7}: W anchored at v1 is 1, anchored at v7 is 0.
// ---------------------------------------------------------------------------

CheckResult check_orientation_counts() {
    CheckResult r{"orientation-counts", true, "", 0};
    const Hypergraph& s = fixture("seven-string").hypergraph;
    StringProfile at_v1 = string_profile(s, 0);
    StringProfile at_v7 = string_profile(s, 6);
    r.pass = at_v1.w_count == 1 && at_v7.w_count == 0;
    r.detail = "W anchored at v1 = " + std::to_string(at_v1.w_count) +
               " (want 1), at v7 = " + std::to_string(at_v7.w_count) +
               " (want 0); runs toward v1 = " + std::to_string(at_v1.s()) +
               ", toward v7 = " + std::to_string(at_v7.s());
    return r;
}

// ---------------------------------------------------------------------------
// Check 4: exhaustive four-way agreement on connected 1-dimensional
// hypergraphs with at most one cycle, up to 7 vertices, up to isomorphism:
// scan algorithm = reduction driver = recursive evaluator = homology oracle.
// ---------------------------------------------------------------------------

CheckResult check_unicyclic_agreement() {
    CheckResult r{"unicyclic-oracle-agreement", true, "", 0};
    Failures bad;
    long long graphs = 0, instances = 0;
    for (int n = 1; n <= 7; ++n) {
        for (const auto& edges : connected_graphs(n)) {
            if (static_cast<int>(edges.size()) > n) continue;  // >1 cycle
            ++graphs;
            for (Face closed : separated_closed_masks(n, edges)) {
                Hypergraph h = graph_instance(n, edges, closed);
                ++instances;
                int want = pd_bruteforce(h);
                int a = algpd_connected(h).first;
                int b = pd_unique_cycle(h).first;
                int c = pd_recursive(h);
                if (a != want || b != want || c != want)
                    bad.add("scan " + std::to_string(a) + ", reduce " +
                            std::to_string(b) + ", recursive " +
                            std::to_string(c) + ", oracle " +
                            std::to_string(want) + " on " + h.to_string());
            }
        }
    }
    r.pass = bad.count == 0;
    r.detail = std::to_string(instances) + " instances over " +
               std::to_string(graphs) +
               " graph classes (n <= 7, at most one cycle), four-way "
               "agreement" +
               (bad.count ? bad.render() : "");
    return r;
}

// ---------------------------------------------------------------------------
// Check 5: string and cycle closed forms against the oracle, all instances
// up to 9 vertices without adjacent closed vertices.
// ---------------------------------------------------------------------------

CheckResult check_closed_forms() {
    CheckResult r{"string-cycle-closed-forms", true, "", 0};
    Failures bad;
    long long strings = 0, cycles = 0;
    for (int n = 1; n <= 9; ++n)
        for (const Hypergraph& s : all_strings(n)) {
            if (has_adjacent_closed(s)) continue;
            ++strings;
            int got = pd_string(s);
            int want = pd_bruteforce(s);
            if (got != want)
                bad.add("string formula " + std::to_string(got) + ", oracle " +
                        std::to_string(want) + " on " + s.to_string());
        }
    for (int n = 3; n <= 9; ++n)
        for (const Hypergraph& c : all_cycles(n)) {
            if (has_adjacent_closed(c)) continue;
            ++cycles;
            int got = pd_cycle(c);
            int want = pd_bruteforce(c);
            if (got != want)
                bad.add("cycle formula " + std::to_string(got) + ", oracle " +
                        std::to_string(want) + " on " + c.to_string());
        }
    r.pass = bad.count == 0;
    r.detail = std::to_string(strings) + " strings (n <= 9) and " +
               std::to_string(cycles) +
               " cycles (n <= 9) without adjacent closed vertices, closed "
               "form = oracle" +
               (bad.count ? bad.render() : "");
    return r;
}

// ---------------------------------------------------------------------------
// Check 6: the elementary inequality suite, every instance checked with
// oracle values on both sides.
//   remotion sandwich      pd(H_v) <= pd(H) <= pd(H_v) + 1
//   restriction monotone   pd(H - F) <= pd(H)   (coverage and generator
//                          count preserved)
//   cancellation bound     pd(H : F) <= pd(H)
//   cut bound              pd(H) <= pd(H^F)
//   opening sandwich       pd(H^0) <= pd(H) <= pd(H^0) + 1
//   disagreement equality  pd(H^0) != pd(H_v) forces
//                          pd(H) = max = min + 1
// Population: exhaustive any-dimension instances on 2..4 vertices, exhaustive
// 1-dimensional instances on 5, and 300 seeded random 5-vertex instances of
// any dimension (the full any-dimension space on 5 vertices is out of
// enumeration reach; the deviation is deliberate).
// ---------------------------------------------------------------------------

CheckResult check_inequality_suite() {
    CheckResult r{"reduction-inequality-suite", true, "", 0};
    Failures bad;
    long long remotion = 0, restriction = 0, cancellation = 0, cut = 0,
              opening = 0, disagreement = 0, skipped = 0;

    std::vector<Hypergraph> population;
    long long exhaustive_small = 0, exhaustive_five = 0;
    for (int n = 2; n <= 4; ++n)
        for (Hypergraph& h : separated_any_dim(n)) {
            population.push_back(std::move(h));
            ++exhaustive_small;
        }
    for (Hypergraph& h : separated_one_dim(5)) {
        population.push_back(std::move(h));
        ++exhaustive_five;
    }
    std::mt19937_64 rng(20260814u);
    for (int i = 0; i < 300; ++i) population.push_back(random_separated(5, rng));

    for (const Hypergraph& h : population) {
        const int P = pd_bruteforce(h);

        for (int v = 0; v < h.mu && h.mu >= 2; ++v) {
            int Pv = pd_bruteforce(remove_vertex(h, v));
            ++remotion;
            if (!(Pv <= P && P <= Pv + 1))
                bad.add("remotion sandwich: pd " + std::to_string(P) +
                        ", remotion " + std::to_string(Pv) + " at " +
                        std::to_string(v) + " on " + h.to_string());
        }

        for (std::size_t fi = 0; fi < h.faces.size(); ++fi) {
            std::vector<Face> rest = h.faces;
            rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(fi));
            Hypergraph sub = make_hypergraph(h.mu, rest, h.labels);
            if (sub.covered() != full_mask(sub.mu) || !is_separated(sub)) {
                ++skipped;  // generator count would drop: hypothesis fails
                continue;
            }
            int Q = pd_bruteforce(sub);
            ++restriction;
            if (Q > P)
                bad.add("restriction monotonicity: pd " + std::to_string(P) +
                        ", subhypergraph " + std::to_string(Q) + " on " +
                        h.to_string());
        }

        for (Face f : h.faces) {
            Hypergraph q;
            try {
                q = cancel_face(h, f);
            } catch (const MinimalityError&) {
                ++skipped;  // the quotient ideal degenerates to the unit ideal
                continue;
            } catch (const std::invalid_argument&) {
                ++skipped;  // opening would strand the vertex
                continue;
            }
            int Q = pd_bruteforce(q);
            ++cancellation;
            if (Q > P)
                bad.add("cancellation bound: pd " + std::to_string(P) +
                        ", cancelled " + std::to_string(Q) + " on " +
                        h.to_string());
        }

        for (Face f : h.faces) {
            if (popcount(f) < 2) continue;  // cutting a singleton is identity
            int Q = pd_bruteforce(cut_face(h, f));
            ++cut;
            if (Q < P)
                bad.add("cut bound: pd " + std::to_string(P) + ", cut " +
                        std::to_string(Q) + " on " + h.to_string());
        }

        for (int v = 0; v < h.mu; ++v) {
            if (!h.is_closed(v)) continue;
            Hypergraph h0;
            try {
                h0 = open_vertex(h, v);
            } catch (const std::invalid_argument&) {
                ++skipped;  // v lies in no other face
                continue;
            }
            int P0 = pd_bruteforce(h0);
            ++opening;
            if (!(P0 <= P && P <= P0 + 1))
                bad.add("opening sandwich: pd " + std::to_string(P) +
                        ", opened " + std::to_string(P0) + " at " +
                        std::to_string(v) + " on " + h.to_string());
            int Pv = pd_bruteforce(remove_vertex(h, v));
            if (P0 != Pv) {
                ++disagreement;
                if (!(P == std::max(P0, Pv) && P == std::min(P0, Pv) + 1))
                    bad.add("disagreement equality: pd " + std::to_string(P) +
                            ", opened " + std::to_string(P0) + ", remotion " +
                            std::to_string(Pv) + " on " + h.to_string());
            }
        }
    }

    r.pass = bad.count == 0;
    r.detail = std::to_string(population.size()) + " instances (" +
               std::to_string(exhaustive_small) +
               " exhaustive any-dim n<=4, " + std::to_string(exhaustive_five) +
               " exhaustive 1-dim n=5, 300 random 5-vertex any-dim); "
               "comparisons: remotion " +
               std::to_string(remotion) + ", restriction " +
               std::to_string(restriction) + ", cancellation " +
               std::to_string(cancellation) + ", cut " + std::to_string(cut) +
               ", opening " + std::to_string(opening) + ", disagreement " +
               std::to_string(disagreement) + "; degenerate skips " +
               std::to_string(skipped) + (bad.count ? bad.render() : "");
    return r;
}

// ---------------------------------------------------------------------------
// Check 7: the top-of-range equivalences, with oracle pd on one side
//   condition star       <=> pd = |V| - 1
//   condition star-star  <=> pd <= |V| - 2
//   partition witness     => pd = |V| - 2
// plus every generated Ferrers shape with rows + columns <= 10 satisfying the
// star-star condition having pd exactly |V| - 2 (and the babyF evaluator
// reporting it).
// ---------------------------------------------------------------------------

CheckResult check_boundary_equivalences() {
    CheckResult r{"boundary-condition-equivalences", true, "", 0};
    Failures bad;

    std::vector<Hypergraph> population;
    long long exhaustive_small = 0, exhaustive_onedim = 0;
    for (int n = 2; n <= 4; ++n)
        for (Hypergraph& h : separated_any_dim(n)) {
            population.push_back(std::move(h));
            ++exhaustive_small;
        }
    for (int n = 5; n <= 6; ++n)
        for (Hypergraph& h : separated_one_dim(n)) {
            population.push_back(std::move(h));
            ++exhaustive_onedim;
        }
    std::mt19937_64 rng(987123u);
    for (int n = 5; n <= 6; ++n)
        for (int i = 0; i < 250; ++i)
            population.push_back(random_separated(n, rng));

    long long witnesses = 0;
    for (const Hypergraph& h : population) {
        int P = pd_bruteforce(h);
        bool star = check_star(h).holds;
        if (star != (P == h.mu - 1))
            bad.add(std::string("star condition ") +
                    (star ? "holds" : "fails") + " but pd = " +
                    std::to_string(P) + " of |V| = " + std::to_string(h.mu) +
                    " on " + h.to_string());
        bool starstar = check_star_star(h);
        if (starstar != (P <= h.mu - 2))
            bad.add(std::string("star-star condition ") +
                    (starstar ? "holds" : "fails") + " but pd = " +
                    std::to_string(P) + " of |V| = " + std::to_string(h.mu) +
                    " on " + h.to_string());
        if (auto w = check_sharp(h)) {
            ++witnesses;
            if (P != h.mu - 2)
                bad.add("partition witness but pd = " + std::to_string(P) +
                        " of |V| = " + std::to_string(h.mu) + " on " +
                        h.to_string());
        }
    }

    // Ferrers sweep: every legal (lambda, tau) with rows + columns <= 10.
    long long shapes = 0, shapes_checked = 0, shapes_top = 0;
    for (int s = 1; s <= 8; ++s) {
        for (int c = 1; s + c <= 10; ++c) {
            std::vector<int> lambda(s), tau(s);
            // enumerate non-increasing lambda with lambda[0] = c, then
            // non-decreasing tau with tau[0] = 0 and tau[i] < lambda[i]
            std::function<void(int)> pick_tau = [&](int i) {
                if (i == s) {
                    ++shapes;
                    FerrersShape shape{lambda, tau};
                    shape.validate();
                    Hypergraph g = ferrers_generate(shape, 0);
                    int P = pd_bruteforce(g);
                    if (!check_star_star(g)) {
                        ++shapes_top;
                        if (P != g.mu - 1)
                            bad.add("Ferrers shape fails star-star but pd = " +
                                    std::to_string(P) + " != |V|-1 on " +
                                    g.to_string());
                        return;
                    }
                    ++shapes_checked;
                    if (P != g.mu - 2)
                        bad.add("Ferrers shape: oracle pd " +
                                std::to_string(P) + " != |V|-2 = " +
                                std::to_string(g.mu - 2) + " on " +
                                g.to_string());
                    auto b = pd_via_babyF(g);
                    if (!b || *b != g.mu - 2)
                        bad.add("babyF evaluator missed a Ferrers shape: " +
                                g.to_string());
                    return;
                }
                int lo = i == 0 ? 0 : tau[i - 1];
                for (int t = lo; t < lambda[i] && (i > 0 || t == 0); ++t) {
                    tau[i] = t;
                    pick_tau(i + 1);
                }
            };
            std::function<void(int)> pick_lambda = [&](int i) {
                if (i == s) {
                    pick_tau(0);
                    return;
                }
                int hi = i == 0 ? c : lambda[i - 1];
                int lo = i == 0 ? c : 1;
                for (int l = hi; l >= lo; --l) {
                    lambda[i] = l;
                    pick_lambda(i + 1);
                }
            };
            pick_lambda(0);
        }
    }

    r.pass = bad.count == 0;
    r.detail = std::to_string(population.size()) + " instances (" +
               std::to_string(exhaustive_small) +
               " exhaustive any-dim n<=4, " +
               std::to_string(exhaustive_onedim) +
               " exhaustive 1-dim n=5..6, 500 random n=5..6), " +
               std::to_string(witnesses) + " partition witnesses; Ferrers "
               "shapes rows+cols<=10: " +
               std::to_string(shapes) + " total, " +
               std::to_string(shapes_checked) + " at pd=|V|-2, " +
               std::to_string(shapes_top) + " at pd=|V|-1" +
               (bad.count ? bad.render() : "");
    return r;
}

// ---------------------------------------------------------------------------
// Check 8: on forests the projective dimension equals the big height of the
// standard ideal — every forest-shaped instance up to 7 vertices.
// ---------------------------------------------------------------------------

CheckResult check_forest_big_height() {
    CheckResult r{"forest-big-height", true, "", 0};
    Failures bad;
    long long forests = 0, instances = 0;
    for (int n = 1; n <= 7; ++n)
        for (const auto& edges : all_graphs(n)) {
            if (!graph_is_forest(n, edges)) continue;
            ++forests;
            for (Face closed : separated_closed_masks(n, edges)) {
                Hypergraph h = graph_instance(n, edges, closed);
                ++instances;
                int P = pd_bruteforce(h);
                int bh = big_height(to_standard_ideal(h));
                if (P != bh)
                    bad.add("pd " + std::to_string(P) + ", big height " +
                            std::to_string(bh) + " on " + h.to_string());
            }
        }
    r.pass = bad.count == 0;
    r.detail = std::to_string(instances) + " instances over " +
               std::to_string(forests) +
               " forest classes (n <= 7), oracle pd = big height" +
               (bad.count ? bad.render() : "");
    return r;
}

// ---------------------------------------------------------------------------
// Check 9: the bipartite boundary scan on up to 8 vertices. An evaluator/
// oracle mismatch fails the check; a genuine equivalence counterexample would
// be a mathematical discovery, so it is flagged loudly but separately.
// ---------------------------------------------------------------------------

CheckResult check_conjecture_scan() {
    CheckResult r{"bipartite-conjecture-scan", true, "", 0};
    ConjectureReport report = conjecture_scan(8, 6);
    long long evaluator_bugs = 0;
    std::string flagged;
    for (const std::string& c : report.counterexamples) {
        if (c.rfind("evaluator mismatch", 0) == 0) {
            ++evaluator_bugs;
            flagged += " | " + c;
        } else {
            flagged += " | EQUIVALENCE COUNTEREXAMPLE (check by hand): " + c;
        }
    }
    r.pass = evaluator_bugs == 0 && report.counterexamples.empty();
    r.detail = std::to_string(report.graphs) + " bipartite graph classes, " +
               std::to_string(report.instances) + " instances, " +
               std::to_string(report.eligible) + " eligible (pd <= |V|-2), " +
               std::to_string(report.boundary) + " at the boundary, " +
               std::to_string(report.oracle_checked) + " oracle-checked; " +
               std::to_string(report.counterexamples.size()) +
               " counterexamples" + flagged;
    return r;
}

// ---------------------------------------------------------------------------
// Check 10: characteristic stability. Every oracle call in checks 4..9
// evaluates GF(2) and GF(32003) and throws on disagreement, so those
// populations are covered by construction; this check re-verifies a
// deterministic subsample explicitly and reports the call count.
// ---------------------------------------------------------------------------

CheckResult check_characteristic_stability(long long calls_before) {
    CheckResult r{"characteristic-stability", true, "", 0};
    Failures bad;
    long long sampled = 0;

    auto probe = [&](const Hypergraph& h) {
        ++sampled;
        MonomialIdeal ideal = to_standard_ideal(h);
        BettiTable t2 = betti_table(ideal, 2);
        BettiTable tp = betti_table(ideal, 32003);
        if (t2.pd != tp.pd)
            bad.add("GF(2) pd " + std::to_string(t2.pd) + ", GF(32003) pd " +
                    std::to_string(tp.pd) + " on " + h.to_string());
    };

    for (int n = 1; n <= 8; ++n)
        for (const Hypergraph& s : all_strings(n)) probe(s);
    for (int n = 3; n <= 8; ++n)
        for (const Hypergraph& c : all_cycles(n)) probe(c);
    for (int n = 1; n <= 6; ++n)
        for (const auto& edges : connected_graphs(n)) {
            if (static_cast<int>(edges.size()) > n) continue;
            for (Face closed : separated_closed_masks(n, edges))
                probe(graph_instance(n, edges, closed));
        }
    for (int n = 2; n <= 4; ++n)
        for (const Hypergraph& h : separated_any_dim(n)) probe(h);

    long long dual_calls = bruteforce_calls() - calls_before;
    r.pass = bad.count == 0;
    r.detail = std::to_string(sampled) +
               " instances re-evaluated over both characteristics "
               "explicitly; " +
               std::to_string(dual_calls) +
               " dual-characteristic oracle calls made by the previous "
               "checks (each would have thrown on disagreement)" +
               (bad.count ? bad.render() : "");
    return r;
}

}  // namespace

std::vector<CheckResult> run_acceptance(
    const std::function<void(const CheckResult&)>& on_result) {
    std::vector<CheckResult> results;
    const long long calls_at_start = bruteforce_calls();

    auto run = [&](auto&& fn) {
        Clock::time_point t0 = Clock::now();
        CheckResult r;
        try {
            r = fn();
        } catch (const std::exception& e) {
            r.name = "check-" + std::to_string(results.size() + 1);
            r.pass = false;
            r.detail = std::string("unexpected exception: ") + e.what();
        }
        r.seconds = seconds_since(t0);
        results.push_back(r);
        if (on_result) on_result(results.back());
    };

    run([] { return check_fixture_values(); });
    run([] { return check_wrong_cut(); });
    run([] { return check_orientation_counts(); });
    run([] { return check_unicyclic_agreement(); });
    run([] { return check_closed_forms(); });
    run([] { return check_inequality_suite(); });
    run([] { return check_boundary_equivalences(); });
    run([] { return check_forest_big_height(); });
    run([] { return check_conjecture_scan(); });
    run([&] { return check_characteristic_stability(calls_at_start); });
    return results;
}

VerifyOutcome verify_population(const VerifyOptions& opts) {
    const int N = opts.max_vertices;
    const std::string& pop = opts.population;
    VerifyOutcome out;

    auto note_mismatch = [&](const std::string& tag, int got, int want,
                             const Hypergraph& h) {
        if (out.mismatches.size() < 25)
            out.mismatches.push_back(tag + ": engine " + std::to_string(got) +
                                     ", oracle " + std::to_string(want) +
                                     " on " + h.to_string());
    };

    auto sweep_strings = [&](int cap) {
        for (int n = 1; n <= cap; ++n)
            for (const Hypergraph& s : all_strings(n)) {
                ++out.instances;
                int want = pd_bruteforce(s);
                if (!has_adjacent_closed(s)) {
                    ++out.compared;
                    int got = pd_string(s);
                    if (got != want) note_mismatch("pd_string", got, want, s);
                }
                ++out.compared;
                int got = pd_unique_cycle(s).first;
                if (got != want) note_mismatch("pd_unique_cycle", got, want, s);
            }
    };
    auto sweep_cycles = [&](int cap) {
        for (int n = 3; n <= cap; ++n)
            for (const Hypergraph& c : all_cycles(n)) {
                ++out.instances;
                int want = pd_bruteforce(c);
                if (!has_adjacent_closed(c)) {
                    ++out.compared;
                    int got = pd_cycle(c);
                    if (got != want) note_mismatch("pd_cycle", got, want, c);
                }
                ++out.compared;
                int got = pd_unique_cycle(c).first;
                if (got != want) note_mismatch("pd_unique_cycle", got, want, c);
            }
    };
    auto sweep_unicyclic = [&](int cap) {
        for (int n = 1; n <= cap; ++n)
            for (const auto& edges : connected_graphs(n)) {
                if (static_cast<int>(edges.size()) > n) continue;
                for (Face closed : separated_closed_masks(n, edges)) {
                    Hypergraph h = graph_instance(n, edges, closed);
                    ++out.instances;
                    int want = pd_bruteforce(h);
                    out.compared += 3;
                    int a = algpd_connected(h).first;
                    if (a != want) note_mismatch("algpd_connected", a, want, h);
                    int b = pd_unique_cycle(h).first;
                    if (b != want) note_mismatch("pd_unique_cycle", b, want, h);
                    int c = pd_recursive(h);
                    if (c != want) note_mismatch("pd_recursive", c, want, h);
                }
            }
    };
    auto sweep_general = [&](const Hypergraph& h) {
        ++out.instances;
        int got;
        try {
            got = pd_auto(h).pd;
        } catch (const NeedsOracle&) {
            ++out.declined;
            return;
        } catch (const UnsupportedShape&) {
            ++out.declined;
            return;
        }
        ++out.compared;
        int want = pd_bruteforce(h);
        if (got != want) note_mismatch("pd_auto", got, want, h);
    };

    if (pop == "strings") {
        if (N < 1 || N > 10)
            throw std::invalid_argument("strings population supports 1..10");
        sweep_strings(N);
    } else if (pop == "cycles") {
        if (N < 3 || N > 10)
            throw std::invalid_argument("cycles population supports 3..10");
        sweep_cycles(N);
    } else if (pop == "unicyclic") {
        if (N < 1 || N > 8)
            throw std::invalid_argument("unicyclic population supports 1..8");
        sweep_unicyclic(N);
    } else if (pop == "bipartite") {
        if (N < 2 || N > 8)
            throw std::invalid_argument("bipartite population supports 2..8");
        ConjectureReport report = conjecture_scan(N);
        out.instances = report.instances;
        out.compared = report.oracle_checked;
        for (const std::string& c : report.counterexamples) {
            if (c.rfind("evaluator mismatch", 0) == 0)
                out.mismatches.push_back(c);
            else
                out.counterexamples.push_back(c);
        }
    } else if (pop == "all") {
        if (N < 1 || N > 8)
            throw std::invalid_argument("all population supports 1..8");
        sweep_strings(N);
        if (N >= 3) sweep_cycles(N);
        sweep_unicyclic(N);
        for (int n = 2; n <= std::min(N, 4); ++n)
            for (const Hypergraph& h : separated_any_dim(n)) sweep_general(h);
        for (int n = 5; n <= std::min(N, 6); ++n)
            for (const Hypergraph& h : separated_one_dim(n)) sweep_general(h);
    } else {
        throw std::invalid_argument(
            "unknown population '" + pop +
            "' (have strings, cycles, unicyclic, bipartite, all)");
    }
    return out;
}

}  // namespace hpd
