// hpd — projective dimension of square-free monomial ideals through their
// dual hypergraphs.
//
// Subcommands:
//   pd FILE        compute the projective dimension (methods: auto, algpd,
//                  reduce, recursive, stars, oracle)
//   check FILE     boundary conditions: star, starstar, sharp, ferrers, babyF
//   verify         enumerate a population and cross-check against the oracle
//   oracle FILE    homology oracle: pd and total Betti numbers per field
//   fixtures       list or dump the named built-in instances
//
// Exit codes: 0 ok, 1 parse/input error, 2 unsupported shape (no fallback),
// 3 oracle size cap exceeded, 4 verification mismatch.

#include <cstdio>
#include <exception>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hpd/core.hpp"
#include "hpd/fixtures.hpp"
#include "hpd/highpd.hpp"
#include "hpd/io.hpp"
#include "hpd/oracle.hpp"
#include "hpd/reduce.hpp"
#include "hpd/verify.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kParse = 1;
constexpr int kUnsupported = 2;
constexpr int kOracleCap = 3;
constexpr int kMismatch = 4;

using nlohmann::ordered_json;

std::string label_set(const hpd::Hypergraph& h, hpd::Face mask) {
    std::string out = "{";
    bool first = true;
    for (int v : hpd::face_vertices(mask)) {
        if (!first) out += ",";
        out += h.label(v);
        first = false;
    }
    return out + "}";
}

ordered_json trace_step_json(const hpd::TraceStep& step) {
    ordered_json j;
    j["rule"] = step.rule;
    j["vertices"] = step.vertices;
    j["faces"] = step.faces;
    j["delta"] = step.delta;
    return j;
}

int run_with_exit_codes(const std::function<int()>& body) {
    try {
        return body();
    } catch (const hpd::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kParse;
    } catch (const hpd::MinimalityError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kParse;
    } catch (const hpd::OracleTooLarge& e) {
        std::cerr << "oracle cap exceeded: " << e.what() << "\n";
        return kOracleCap;
    } catch (const hpd::CharacteristicDisagreement& e) {
        std::cerr << "characteristic disagreement: " << e.what() << "\n";
        return kMismatch;
    } catch (const hpd::NeedsOracle& e) {
        std::cerr << "unsupported shape (try --fallback oracle): " << e.what()
                  << "\n";
        return kUnsupported;
    } catch (const hpd::UnsupportedShape& e) {
        std::cerr << "unsupported shape: " << e.what() << "\n";
        return kUnsupported;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kParse;
    }
}

struct PdArgs {
    std::string file;
    std::string method = "auto";
    std::string fallback;
    bool trace = false;
    bool json = false;
    bool zero_based = false;
};

int cmd_pd(const PdArgs& a) {
    hpd::Hypergraph h =
        hpd::instance_hypergraph(hpd::parse_file(a.file, a.zero_based));

    int pd = 0;
    std::string method_used = a.method;
    hpd::ReductionTrace trace;
    auto oracle_result = [&] {
        pd = hpd::pd_bruteforce(h);
        method_used = "oracle";
        trace = {};
        trace.add({"oracle-fallback", {}, {}, pd});
    };

    try {
        if (a.method == "auto") {
            hpd::AutoResult r = hpd::pd_auto(h, a.fallback == "oracle");
            pd = r.pd;
            method_used = r.method;
            trace = std::move(r.trace);
        } else if (a.method == "algpd") {
            pd = 0;
            for (const hpd::Hypergraph& part : hpd::components(h)) {
                auto [v, t] = hpd::algpd_connected(part);
                pd += v;
                trace.absorb(t);
            }
        } else if (a.method == "reduce") {
            auto [v, t] = hpd::pd_unique_cycle(h);
            pd = v;
            trace = std::move(t);
        } else if (a.method == "recursive") {
            pd = hpd::pd_recursive(h);
            trace.add({"recursive-split", {}, {}, pd});
        } else if (a.method == "stars") {
            auto v = hpd::pd_stars(h, &trace);
            if (!v)
                throw hpd::UnsupportedShape(
                    "not a string/cycle of stars within the star formulas");
            pd = *v;
        } else if (a.method == "oracle") {
            oracle_result();
        } else {
            std::cerr << "unknown method '" << a.method << "'\n";
            return kParse;
        }
    } catch (const hpd::UnsupportedShape&) {
        if (a.fallback != "oracle") throw;
        oracle_result();
    } catch (const hpd::NeedsOracle&) {
        if (a.fallback != "oracle") throw;
        oracle_result();
    }

    if (a.json) {
        ordered_json out;
        out["pd"] = pd;
        out["method"] = method_used;
        out["mu"] = h.mu;
        out["faces"] = h.faces.size();
        if (a.trace) {
            out["trace"] = ordered_json::array();
            for (const auto& s : trace.steps)
                out["trace"].push_back(trace_step_json(s));
        }
        std::cout << out.dump() << "\n";
        return kOk;
    }
    if (a.trace)
        for (const auto& s : trace.steps)
            std::cout << trace_step_json(s).dump() << "\n";
    std::cout << "pd = " << pd << "\n";
    return kOk;
}

struct CheckArgs {
    std::string file;
    std::string condition;
    bool zero_based = false;
};

int cmd_check(const CheckArgs& a) {
    hpd::Hypergraph h =
        hpd::instance_hypergraph(hpd::parse_file(a.file, a.zero_based));

    if (a.condition == "star") {
        hpd::StarEvidence e = hpd::check_star(h);
        if (e.holds)
            std::cout << "true, " << e.describe(h) << "\n";
        else
            std::cout << "false\n";
    } else if (a.condition == "starstar") {
        std::cout << (hpd::check_star_star(h) ? "true" : "false") << "\n";
    } else if (a.condition == "sharp") {
        if (auto w = hpd::check_sharp(h))
            std::cout << "true, V1=" << label_set(h, w->v1)
                      << " V2=" << label_set(h, w->v2) << "\n";
        else
            std::cout << "false\n";
    } else if (a.condition == "ferrers") {
        std::cout << (hpd::detect_spanning_ferrers(h) ? "true" : "false")
                  << "\n";
    } else if (a.condition == "babyF") {
        if (auto v = hpd::pd_via_babyF(h))
            std::cout << "true, pd = " << *v << "\n";
        else
            std::cout << "false\n";
    } else {
        std::cerr << "unknown condition '" << a.condition << "'\n";
        return kParse;
    }
    return kOk;
}

struct VerifyArgs {
    int max_vertices = 6;
    std::string population = "all";
    std::string against = "oracle";
};

int cmd_verify(const VerifyArgs& a) {
    if (a.against != "oracle") {
        std::cerr << "only '--against oracle' is supported\n";
        return kParse;
    }
    hpd::VerifyOutcome o =
        hpd::verify_population({a.max_vertices, a.population});
    std::cout << "population " << a.population << ", max vertices "
              << a.max_vertices << "\n";
    std::cout << "instances " << o.instances << ", comparisons " << o.compared
              << ", declined " << o.declined << "\n";
    for (const std::string& c : o.counterexamples)
        std::cout << "EQUIVALENCE COUNTEREXAMPLE (check by hand): " << c
                  << "\n";
    if (!o.ok()) {
        for (const std::string& m : o.mismatches)
            std::cout << "MISMATCH " << m << "\n";
        std::cout << "FAIL: " << o.mismatches.size() << " mismatches\n";
        return kMismatch;
    }
    std::cout << "ok: zero mismatches\n";
    return kOk;
}

struct OracleArgs {
    std::string file;
    std::string chars = "2,32003";
    bool zero_based = false;
};

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

int cmd_oracle(const OracleArgs& a) {
    hpd::MonomialIdeal ideal =
        hpd::instance_ideal(hpd::parse_file(a.file, a.zero_based));

    std::vector<int> primes;
    std::string chunk;
    for (char c : a.chars + ",") {
        if (c == ',') {
            if (chunk.empty()) continue;
            int p = 0;
            try {
                p = std::stoi(chunk);
            } catch (const std::exception&) {
                p = 0;
            }
            if (!is_prime(p)) {
                std::cerr << "'" << chunk
                          << "' is not a prime field characteristic\n";
                return kParse;
            }
            primes.push_back(p);
            chunk.clear();
        } else {
            chunk += c;
        }
    }
    if (primes.empty()) {
        std::cerr << "no characteristics given\n";
        return kParse;
    }

    int first_pd = -1;
    bool disagree = false;
    for (int p : primes) {
        hpd::BettiTable t = hpd::betti_table(ideal, p);
        std::cout << "char " << p << ": pd = " << t.pd << ", total Betti";
        for (int i = 0; i <= t.pd; ++i) std::cout << " " << t.total(i);
        std::cout << "\n";
        if (first_pd < 0)
            first_pd = t.pd;
        else if (t.pd != first_pd)
            disagree = true;
    }
    if (disagree) {
        std::cout << "DISAGREEMENT: pd depends on the characteristic\n";
        return kMismatch;
    }
    return kOk;
}

struct FixturesArgs {
    bool list = false;
    std::string dump;
};

int cmd_fixtures(const FixturesArgs& a) {
    if (!a.dump.empty()) {
        const hpd::Fixture& f = hpd::fixture(a.dump);
        std::cout << hpd::to_text(f.hypergraph);
        return kOk;
    }
    for (const hpd::Fixture& f : hpd::fixtures()) {
        std::printf("%-16s mu=%2d faces=%2zu pd=%-3s %s\n", f.name.c_str(),
                    f.hypergraph.mu, f.hypergraph.faces.size(),
                    f.pd >= 0 ? std::to_string(f.pd).c_str() : "-",
                    f.note.c_str());
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "projective dimension of square-free monomial ideals via dual "
        "hypergraphs"};
    app.require_subcommand(1);

    PdArgs pd_args;
    CLI::App* pd = app.add_subcommand("pd", "compute projective dimension");
    pd->add_option("file", pd_args.file, "instance file")->required();
    pd->add_option("--method", pd_args.method, "evaluator")
        ->check(CLI::IsMember(
            {"auto", "algpd", "reduce", "recursive", "stars", "oracle"}));
    pd->add_flag("--trace", pd_args.trace, "emit reduction steps as json lines");
    pd->add_flag("--json", pd_args.json, "emit the result as one json object");
    pd->add_option("--fallback", pd_args.fallback,
                   "fall back to the oracle on unsupported shapes")
        ->check(CLI::IsMember({"oracle"}));
    pd->add_flag("--zero-based", pd_args.zero_based,
                 "vertex numbers in the file start at 0");

    CheckArgs check_args;
    CLI::App* check =
        app.add_subcommand("check", "test a boundary condition");
    check->add_option("file", check_args.file, "instance file")->required();
    check
        ->add_option("--condition", check_args.condition,
                     "condition to test")
        ->required()
        ->check(CLI::IsMember({"star", "starstar", "sharp", "ferrers",
                               "babyF"}));
    check->add_flag("--zero-based", check_args.zero_based,
                    "vertex numbers in the file start at 0");

    VerifyArgs verify_args;
    CLI::App* verify = app.add_subcommand(
        "verify", "cross-check evaluators against the homology oracle");
    verify->add_option("--max-vertices", verify_args.max_vertices,
                       "largest instance size");
    verify
        ->add_option("--population", verify_args.population,
                     "instance population")
        ->check(CLI::IsMember(
            {"strings", "cycles", "unicyclic", "bipartite", "all"}));
    verify->add_option("--against", verify_args.against, "reference oracle");

    OracleArgs oracle_args;
    CLI::App* oracle = app.add_subcommand(
        "oracle", "homology oracle: pd and total Betti numbers");
    oracle->add_option("file", oracle_args.file, "instance file")->required();
    oracle->add_option("--char", oracle_args.chars,
                       "comma-separated prime characteristics");
    oracle->add_flag("--zero-based", oracle_args.zero_based,
                     "vertex numbers in the file start at 0");

    FixturesArgs fixtures_args;
    CLI::App* fixtures =
        app.add_subcommand("fixtures", "built-in named instances");
    fixtures->add_flag("--list", fixtures_args.list, "list the fixtures");
    fixtures->add_option("--dump", fixtures_args.dump,
                         "print one fixture as hypergraph text");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kParse;
    }

    if (*pd) return run_with_exit_codes([&] { return cmd_pd(pd_args); });
    if (*check)
        return run_with_exit_codes([&] { return cmd_check(check_args); });
    if (*verify)
        return run_with_exit_codes([&] { return cmd_verify(verify_args); });
    if (*oracle)
        return run_with_exit_codes([&] { return cmd_oracle(oracle_args); });
    if (*fixtures)
        return run_with_exit_codes([&] { return cmd_fixtures(fixtures_args); });
    return kParse;
}
