#pragma once

// Named instances used across the tests, the acceptance gate and the CLI.

#include <string>
#include <vector>

#include "hpd/core.hpp"

namespace hpd {

struct Fixture {
    std::string name;
    Hypergraph hypergraph;
    int pd = -1;  // expected projective dimension; -1 when the source fixes none
    std::string note;
};

/// All fixtures, construction-validated, in a stable order.
const std::vector<Fixture>& fixtures();

/// Lookup by name; throws std::out_of_range with the available names.
const Fixture& fixture(const std::string& name);

}  // namespace hpd
