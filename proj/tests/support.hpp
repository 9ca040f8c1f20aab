#pragma once

// Test-side oracles, deliberately independent of the library's computation
// paths: a map-based truncated multiplier, a fraction-free determinant, and
// the hand-coded 4-component lattice row table.

#include <map>
#include <vector>

#include "clover/ints.hpp"
#include "clover/magnus.hpp"
#include "clover/seq.hpp"
#include "clover/word.hpp"
#include "clover/zlattice.hpp"

namespace clover::testsupport {

// Sparse series on explicit monomial keys.
using BruteSeries = std::map<Monomial, Int, GradedLex>;

BruteSeries brute_one();
BruteSeries brute_letter(int index, int sign, int degree_cap);
BruteSeries brute_mul(const BruteSeries& a, const BruteSeries& b, int degree_cap);
BruteSeries brute_expand(const GroupWord& w, int degree_cap);

// Conversion for comparisons against MagnusSeries.
BruteSeries to_brute(const MagnusSeries& s);

// Exact determinant by fraction-free (Bareiss) elimination; square input.
Int bareiss_determinant(const IntMatrix& m);

// The six displayed coefficient rows of the 4-component lattice at
// (k, j) = (1, 4), as functions of the symmetric pair values mu2 (indexed
// [p][q], 1-based, p != q) and one generator column per pair {p, q} in
// lexicographic order. Row order: 123, 132, 213, 231, 312, 321.
IntMatrix example_lattice_rows(const std::vector<std::vector<Int>>& mu2);

}  // namespace clover::testsupport
