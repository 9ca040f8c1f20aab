#pragma once

#include <utility>
#include <vector>

#include "clover/ints.hpp"
#include "clover/magnus.hpp"
#include "clover/milnor.hpp"
#include "clover/seq.hpp"
#include "clover/zlattice.hpp"

namespace clover {

// The affine integer lattice of reachable degree-(2k+1) coefficient vectors
// on non-repeated j-free monomials: base point plus the integer column span
// of one generator per unordered component pair {p, q}, p < q.
struct AffineLattice {
    std::vector<SequenceKey> basis;         // row coordinates, lexicographic
    std::vector<Int> base;                  // mu(S j) over the basis
    std::vector<std::pair<int, int>> pairs;  // column labels, p < q, lexicographic
    IntMatrix gens;                         // basis.size() x pairs.size()
};

// Core construction from a mu table; the table must contain every needed
// mu(S j) (|S| = 2k+1) and mu(J j), mu(I l) (|J| = |I| = k) entry.
AffineLattice hset_from_mu(const MuTable& mu, int n, int k, int j);

// Construction from longitude expansions at degree cap >= 2k+1.
AffineLattice hset_from_expansions(const std::vector<MagnusSeries>& expansions, int k, int j);

// Construction from a presentation. Requires the non-repeated vanishing
// hypothesis at level k (vacuous for k = 1).
AffineLattice hset_generators(const TanglePresentation& t, int k, int j);

// Whether v lies in the lattice: v - base in the column span of gens.
bool hset_member(const AffineLattice& lattice, const std::vector<Int>& v);

// Whether two lattices over the same basis meet.
bool hset_intersects(const AffineLattice& a, const AffineLattice& b);

}  // namespace clover
