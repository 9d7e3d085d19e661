#pragma once

// The verification harness: the release acceptance suite (ten checks, each
// reporting honest population counts) and the population sweeps behind the
// command-line `verify` subcommand.

#include <functional>
#include <string>
#include <vector>

#include "hpd/core.hpp"

namespace hpd {

/// One verification check. `detail` carries the population sizes and, on
/// failure, the first few offending instances.
struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

/// Runs the full acceptance suite in release order. Every check runs to
/// completion (a failure never aborts the rest); `on_result`, when set, is
/// invoked after each check for streaming progress output.
std::vector<CheckResult> run_acceptance(
    const std::function<void(const CheckResult&)>& on_result = {});

/// Options for the population sweep: which instances, how large, evaluated
/// against the homology oracle.
struct VerifyOptions {
    int max_vertices = 6;
    std::string population = "all";  // strings|cycles|unicyclic|bipartite|all
};

struct VerifyOutcome {
    long long instances = 0;  // instances enumerated
    long long compared = 0;   // evaluator/oracle comparisons performed
    long long declined = 0;   // instances the engine honestly declined
    std::vector<std::string> mismatches;       // evaluator != oracle
    std::vector<std::string> counterexamples;  // bipartite conjecture mode
    bool ok() const { return mismatches.empty(); }
};

/// Enumerates the selected population up to isomorphism and cross-checks the
/// matching evaluators against the oracle. Throws std::invalid_argument for
/// an unknown population name or an out-of-range vertex bound.
VerifyOutcome verify_population(const VerifyOptions& opts);

}  // namespace hpd
