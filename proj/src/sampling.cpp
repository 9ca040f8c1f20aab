#include "clover/sampling.hpp"

#include <stdexcept>
#include <vector>

namespace clover {

GroupWord random_word(Rng& rng, int rank, int max_len) {
    const int len = rng.range(0, max_len);
    std::vector<Letter> letters;
    letters.reserve(static_cast<std::size_t>(len));
    for (int t = 0; t < len; ++t)
        letters.push_back(Letter{rng.range(1, rank), rng.coin() ? 1 : -1});
    return GroupWord(rank, std::move(letters));
}

GroupWord random_deep_commutator(Rng& rng, int rank, int weight) {
    if (weight < 2)
        throw std::invalid_argument("commutator weight must be >= 2");
    GroupWord w = GroupWord::generator(rank, rng.range(1, rank), rng.coin() ? 1 : -1);
    for (int t = 1; t < weight; ++t)
        w = commutator(w, GroupWord::generator(rank, rng.range(1, rank), rng.coin() ? 1 : -1));
    return conjugate(w, random_word(rng, rank, 2));
}

namespace {

GroupWord normalize_framing(const GroupWord& w, int component) {
    long long e = exponent_sum(w, component);
    std::vector<Letter> fix;
    const int sign = e > 0 ? -1 : 1;
    for (long long t = 0; t < (e < 0 ? -e : e); ++t)
        fix.push_back(Letter{component, sign});
    return reduce(concat(w, GroupWord(w.rank(), std::move(fix))));
}

}  // namespace

TanglePresentation random_tangle(Rng& rng, int n, int max_len) {
    std::vector<GroupWord> ls;
    ls.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i)
        ls.push_back(normalize_framing(random_word(rng, n, max_len), i));
    return TanglePresentation(n, std::move(ls));
}

TanglePresentation random_vanishing_tangle(Rng& rng, int n, int k, int factors) {
    if (k < 1)
        throw std::invalid_argument("vanishing level must be >= 1");
    if (k == 1)
        return random_tangle(rng, n, 8);
    std::vector<GroupWord> ls;
    ls.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        GroupWord w = GroupWord::identity(n);
        for (int f = 0; f < factors; ++f)
            w = concat(w, random_deep_commutator(rng, n, k));
        ls.push_back(reduce(w));
    }
    return TanglePresentation(n, std::move(ls));
}

TanglePresentation random_string_link(Rng& rng, int n, int max_link, bool with_noise) {
    std::vector<std::vector<int>> m(static_cast<std::size_t>(n) + 1,
                                    std::vector<int>(static_cast<std::size_t>(n) + 1, 0));
    for (int p = 1; p <= n; ++p)
        for (int q = p + 1; q <= n; ++q)
            m[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)] =
                m[static_cast<std::size_t>(q)][static_cast<std::size_t>(p)] =
                    rng.range(-max_link, max_link);
    std::vector<GroupWord> ls;
    ls.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        GroupWord w = GroupWord::identity(n);
        for (int l = 1; l <= n; ++l)
            if (l != i)
                w = concat(w, power(GroupWord::generator(n, l),
                                    m[static_cast<std::size_t>(l)][static_cast<std::size_t>(i)]));
        if (with_noise) {
            const int noise = rng.range(0, 2);
            for (int t = 0; t < noise; ++t)
                w = concat(w, random_deep_commutator(rng, n, 2));
        }
        ls.push_back(reduce(w));
    }
    return TanglePresentation(n, std::move(ls));
}

}  // namespace clover
