#pragma once

#include <cstdint>

#include "clover/milnor.hpp"
#include "clover/word.hpp"

namespace clover {

// splitmix64; the fixed algorithm keeps seeded runs reproducible across
// platforms and standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, bound)
    int below(int bound) { return static_cast<int>(next() % static_cast<std::uint64_t>(bound)); }
    // uniform in [lo, hi]
    int range(int lo, int hi) { return lo + below(hi - lo + 1); }
    bool coin() { return (next() & 1) != 0; }

private:
    std::uint64_t state_;
};

GroupWord random_word(Rng& rng, int rank, int max_len);

// An iterated commutator of the given weight with random generator leaves,
// conjugated by a short random word. Expansions start at the given weight.
GroupWord random_deep_commutator(Rng& rng, int rank, int weight);

// Arbitrary presentation with framing normalized per component.
TanglePresentation random_tangle(Rng& rng, int n, int max_len);

// Presentation with all Milnor numbers of length <= k vanishing: longitudes
// are products of weight-k iterated commutators (for k = 1 an arbitrary
// framing-normalized presentation, since length-1 values always vanish).
TanglePresentation random_vanishing_tangle(Rng& rng, int n, int k, int factors);

// String link longitudes with symmetric linking numbers drawn from
// [-max_link, max_link]; commutator noise does not disturb the linking.
TanglePresentation random_string_link(Rng& rng, int n, int max_link, bool with_noise);

}  // namespace clover
