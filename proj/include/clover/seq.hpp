#pragma once

#include <vector>

namespace clover {

// A finite sequence of 1-based generator/component indices. Used both as a
// noncommutative monomial (variable index string) and as a Milnor sequence.
using IndexSeq = std::vector<int>;
using Monomial = IndexSeq;
using SequenceKey = IndexSeq;

// Shorter sequences first, then lexicographic. This is the canonical key
// order for monomials, mu tables and all serialized output.
struct GradedLex {
    bool operator()(const IndexSeq& a, const IndexSeq& b) const {
        if (a.size() != b.size())
            return a.size() < b.size();
        return a < b;
    }
};

bool non_repeated(const IndexSeq& s);

// All sequences of the given length over {1..n}, lexicographic order.
std::vector<IndexSeq> all_sequences(int n, int length, bool non_repeated_only);

IndexSeq seq_join(const IndexSeq& a, const IndexSeq& b);
IndexSeq seq_append(IndexSeq a, int index);

}  // namespace clover
