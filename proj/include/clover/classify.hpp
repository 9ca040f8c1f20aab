#pragma once

#include <map>
#include <optional>
#include <utility>

#include "clover/hset.hpp"
#include "clover/ints.hpp"
#include "clover/milnor.hpp"
#include "clover/seq.hpp"

namespace clover {

// mu over every non-repeated sequence of length 2 or 3 on four components.
// Length-1 values are 0 by definition and omitted.
using Fingerprint = std::map<SequenceKey, Int, GradedLex>;

Fingerprint fingerprint(const TanglePresentation& t);

enum class Verdict { equivalent, inequivalent };

struct ClassifyReport {
    Verdict verdict = Verdict::inequivalent;
    // set when the fingerprints disagree
    std::optional<SequenceKey> differing_sequence;
    std::optional<std::pair<Int, Int>> differing_values;
    // set when the fingerprints agree but the lattices are disjoint
    bool lattices_checked = false;
    std::optional<SequenceKey> infeasible_row;
    std::optional<Int> infeasible_residual;
};

// Edge-homotopy decision for two 4-component presentations: equivalent iff
// the fingerprints coincide and the two affine lattices at (k, j) = (1, 4)
// meet. Both inputs must have exactly four components.
Verdict classify_4clover(const TanglePresentation& t1, const TanglePresentation& t2);

ClassifyReport classify_4clover_report(const TanglePresentation& t1,
                                       const TanglePresentation& t2);

}  // namespace clover
