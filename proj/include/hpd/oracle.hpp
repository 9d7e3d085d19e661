// oracle.hpp — ground truth for projective dimension: multigraded Betti
// numbers of square-free monomial ideals computed from reduced simplicial
// homology over finite fields, plus the big height (largest minimal vertex
// cover of the generator supports).
//
// Two mathematically independent routes are implemented:
//   * LcmLattice (default): for each sigma in the lattice of support unions,
//     beta_{i,sigma}(R/I) = dim H~_{i-2} of the complex of generator subsets
//     whose support union is strictly inside sigma. Cost ~2^g per sigma,
//     g = number of generators dividing x^sigma.
//   * Hochster: for each subset sigma of the variables,
//     beta_{i,sigma}(R/I) = dim H~_{|sigma|-i-1} of the restricted
//     Stanley-Reisner complex. Cost ~3^n, n = number of variables.
// The two must agree entry-by-entry; the test suite checks this. Everything
// here is deliberately independent of the reduction machinery.

#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hpd/core.hpp"

namespace hpd {

/// Raised when an instance exceeds the oracle size cap (see oracle_cap()).
struct OracleTooLarge : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Raised by pd_bruteforce when GF(2) and GF(32003) disagree on pd — a
/// characteristic-dependent instance that must surface loudly, never be
/// averaged away.
struct CharacteristicDisagreement : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Size cap for oracle computations: HPD_ORACLE_CAP when set, else 22. The
/// Hochster route caps the variable count, the lattice route the generator
/// count (each route's exponential driver).
int oracle_cap();

enum class BettiRoute { LcmLattice, Hochster };

/// Multigraded Betti numbers of R/I over one field characteristic.
struct BettiTable {
    int characteristic = 0;
    /// (homological index i, variable subset sigma) -> rank; only nonzero
    /// ranks are stored. Contains (0, empty) -> 1 for every ideal.
    std::map<std::pair<int, Face>, long long> entries;
    int pd = 0;  // max i with a nonzero entry

    long long rank(int i, Face sigma) const;
    long long total(int i) const;  // sum over sigma of beta_{i,sigma}
};

/// Betti table of R/I over GF(p). Throws OracleTooLarge past the cap.
BettiTable betti_table(const MonomialIdeal& ideal, int p,
                       BettiRoute route = BettiRoute::LcmLattice);

/// pd(H) = pd(R/I(H)) computed over both GF(2) and GF(32003) via the lattice
/// route. Throws CharacteristicDisagreement when the two differ and
/// OracleTooLarge past the cap.
int pd_bruteforce(const Hypergraph& h);

/// Number of pd_bruteforce evaluations so far in this process — each one is a
/// dual-characteristic computation, so this counts characteristic-stability
/// checks performed as a side effect.
long long bruteforce_calls();

/// All minimal transversals of the generator supports, as variable masks.
std::vector<Face> minimal_covers(const MonomialIdeal& ideal);

/// Largest height of an associated prime = largest minimal-cover size.
int big_height(const MonomialIdeal& ideal);

/// Rank of the reduced homology groups of a simplicial complex over GF(p).
/// faces_by_card[c] lists the faces of cardinality c (dimension c-1);
/// faces_by_card[0] must be {0} (the empty face) for a nonvoid complex.
/// Returns r where r[c] = dim H~_{c-1}. Exposed for the test suite.
std::vector<long long> reduced_homology_ranks(
    const std::vector<std::vector<Face>>& faces_by_card, int p);

}  // namespace hpd
