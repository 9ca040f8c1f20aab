#pragma once

#include <map>
#include <utility>
#include <vector>

#include "clover/ints.hpp"
#include "clover/magnus.hpp"
#include "clover/seq.hpp"
#include "clover/word.hpp"

namespace clover {

// A bottom tangle presented by its longitudes: one word per component in
// the meridian generators alpha_1..alpha_n. The constructor enforces the
// framing normalization exponent_sum(lambda_i, i) = 0 unless overridden.
class TanglePresentation {
public:
    TanglePresentation(int component_count, std::vector<GroupWord> longitudes,
                       bool allow_nonzero_framing = false);

    static TanglePresentation trivial(int component_count);

    int component_count() const { return n_; }
    const GroupWord& longitude(int i) const;  // 1-based
    const std::vector<GroupWord>& longitudes() const { return longitudes_; }

    // Strict reading of "trivial modulo the second lower central subgroup":
    // every exponent sum of every longitude is zero. Informational only;
    // never required by the operations below.
    bool trivial_mod_g2() const;

private:
    int n_;
    std::vector<GroupWord> longitudes_;
};

using MuTable = std::map<SequenceKey, Int, GradedLex>;

// mu(I) for I = i_1 ... i_{m-1} j: the coefficient of X_{i_1...i_{m-1}} in
// the expansion of lambda_j at degree cap |I|. mu of a length-1 sequence
// is 0 by definition.
Int milnor_number(const TanglePresentation& t, const SequenceKey& I);

// mu for every sequence of length <= max_len (non-repeated only when
// flagged), zeros included. Each longitude is expanded once at cap max_len.
MuTable mu_table(const TanglePresentation& t, int max_len, bool non_repeated_only);

// Distinct order-preserving subsequences J of I with 1 <= |J| <= |I|-(k+1),
// i.e. those obtained by removing at least k+1 indices. Graded-lex order.
std::vector<SequenceKey> admissible_subsequences(const SequenceKey& I, int k);

// gcd of |mu(J)| over admissible_subsequences(I, k); 0 when none survive.
// No cyclic permutations are taken.
Int delta_k(const TanglePresentation& t, const SequenceKey& I, int k);

// gcd of |mu(J)| over all cyclic permutations of all proper subsequences
// of I; the classical link modulus.
Int delta_link(const TanglePresentation& t, const SequenceKey& I);

// (residue, modulus) with modulus = delta_link(t, I); the residue is
// mu(I) reduced into [0, modulus) when the modulus is positive, and mu(I)
// itself when the modulus is 0 (exact integer).
std::pair<Int, Int> mu_bar(const TanglePresentation& t, const SequenceKey& I);

// True iff mu(J) = 0 for every sequence J of length <= k (restricted to
// non-repeated sequences when flagged).
bool check_vanishing(const TanglePresentation& t, int k, bool non_repeated_only);

// All non-repeated sequences of the given length over {1..n} \ {j} in
// lexicographic order; empty when length > n-1. This ordering is the shared
// coordinate basis for the affine lattices.
std::vector<SequenceKey> seq_basis(int n, int j, int length);

// Length-2 symmetry check mu(pq) = mu(qp); holds for presentations coming
// from genuine tangles, advisory for arbitrary longitude input.
bool linking_symmetric(const TanglePresentation& t);

}  // namespace clover
