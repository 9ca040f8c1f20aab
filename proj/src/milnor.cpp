#include "clover/milnor.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>
#include <string>

namespace clover {

namespace {

void check_sequence(const SequenceKey& I, int n, std::size_t min_len) {
    if (I.size() < min_len)
        throw std::invalid_argument("sequence too short");
    for (int idx : I)
        if (idx < 1 || idx > n)
            throw std::invalid_argument("sequence index " + std::to_string(idx) +
                                        " out of range 1.." + std::to_string(n));
}

// Expansions of all longitudes at a common degree cap.
std::vector<MagnusSeries> expand_all(const TanglePresentation& t, int degree_cap) {
    std::vector<MagnusSeries> out;
    out.reserve(static_cast<std::size_t>(t.component_count()));
    for (int j = 1; j <= t.component_count(); ++j)
        out.push_back(expand(t.longitude(j), degree_cap));
    return out;
}

Int mu_from_expansions(const std::vector<MagnusSeries>& exps, const SequenceKey& I) {
    if (I.size() == 1)
        return 0;
    Monomial m(I.begin(), I.end() - 1);
    return exps[static_cast<std::size_t>(I.back() - 1)].coeff(m);
}

}  // namespace

TanglePresentation::TanglePresentation(int component_count, std::vector<GroupWord> longitudes,
                                       bool allow_nonzero_framing)
    : n_(component_count), longitudes_(std::move(longitudes)) {
    if (n_ < 1)
        throw std::invalid_argument("component count must be >= 1");
    if (static_cast<int>(longitudes_.size()) != n_)
        throw std::invalid_argument("expected exactly " + std::to_string(n_) + " longitudes");
    for (int i = 1; i <= n_; ++i) {
        const GroupWord& w = longitudes_[static_cast<std::size_t>(i - 1)];
        if (w.rank() != n_)
            throw std::invalid_argument("longitude " + std::to_string(i) +
                                        " has rank " + std::to_string(w.rank()) +
                                        ", expected " + std::to_string(n_));
        if (!allow_nonzero_framing && exponent_sum(w, i) != 0)
            throw std::invalid_argument(
                "longitude " + std::to_string(i) +
                " is not framing-normalized (nonzero self exponent sum); "
                "pass the framing override to accept it");
    }
}

TanglePresentation TanglePresentation::trivial(int component_count) {
    std::vector<GroupWord> ls(static_cast<std::size_t>(component_count),
                              GroupWord::identity(component_count));
    return TanglePresentation(component_count, std::move(ls));
}

const GroupWord& TanglePresentation::longitude(int i) const {
    if (i < 1 || i > n_)
        throw std::invalid_argument("component index out of range");
    return longitudes_[static_cast<std::size_t>(i - 1)];
}

bool TanglePresentation::trivial_mod_g2() const {
    for (const GroupWord& w : longitudes_)
        for (int l = 1; l <= n_; ++l)
            if (exponent_sum(w, l) != 0)
                return false;
    return true;
}

Int milnor_number(const TanglePresentation& t, const SequenceKey& I) {
    check_sequence(I, t.component_count(), 1);
    if (I.size() == 1)
        return 0;
    Monomial m(I.begin(), I.end() - 1);
    return coefficient(expand(t.longitude(I.back()), static_cast<int>(I.size())), m);
}

MuTable mu_table(const TanglePresentation& t, int max_len, bool non_repeated_only) {
    if (max_len < 1)
        throw std::invalid_argument("max_len must be >= 1");
    const int n = t.component_count();
    const std::vector<MagnusSeries> exps = expand_all(t, max_len);
    MuTable table;
    for (int m = 1; m <= max_len; ++m)
        for (const SequenceKey& I : all_sequences(n, m, non_repeated_only))
            table.emplace(I, mu_from_expansions(exps, I));
    return table;
}

std::vector<SequenceKey> admissible_subsequences(const SequenceKey& I, int k) {
    if (k < 0)
        throw std::invalid_argument("k must be >= 0");
    const int len = static_cast<int>(I.size());
    if (len > 20)
        throw std::invalid_argument("sequence too long for subsequence enumeration");
    const int max_keep = len - (k + 1);
    std::set<SequenceKey, GradedLex> out;
    if (max_keep >= 1) {
        for (unsigned mask = 1; mask < (1u << len); ++mask) {
            const int keep = static_cast<int>(std::popcount(mask));
            if (keep < 1 || keep > max_keep)
                continue;
            SequenceKey J;
            J.reserve(static_cast<std::size_t>(keep));
            for (int p = 0; p < len; ++p)
                if (mask & (1u << p))
                    J.push_back(I[static_cast<std::size_t>(p)]);
            out.insert(std::move(J));
        }
    }
    return {out.begin(), out.end()};
}

Int delta_k(const TanglePresentation& t, const SequenceKey& I, int k) {
    check_sequence(I, t.component_count(), 1);
    const std::vector<SequenceKey> subs = admissible_subsequences(I, k);
    if (subs.empty())
        return 0;
    const int cap = static_cast<int>(I.size()) - (k + 1);
    const std::vector<MagnusSeries> exps = expand_all(t, cap);
    Int g = 0;
    for (const SequenceKey& J : subs)
        g = gcd_nonneg(g, mu_from_expansions(exps, J));
    return g;
}

Int delta_link(const TanglePresentation& t, const SequenceKey& I) {
    check_sequence(I, t.component_count(), 2);
    const int len = static_cast<int>(I.size());
    if (len > 20)
        throw std::invalid_argument("sequence too long for subsequence enumeration");
    std::set<SequenceKey, GradedLex> subs;
    for (unsigned mask = 1; mask < (1u << len); ++mask) {
        const int keep = static_cast<int>(std::popcount(mask));
        if (keep >= len)
            continue;  // proper subsequences only
        SequenceKey J;
        J.reserve(static_cast<std::size_t>(keep));
        for (int p = 0; p < len; ++p)
            if (mask & (1u << p))
                J.push_back(I[static_cast<std::size_t>(p)]);
        for (int r = 0; r < keep; ++r) {
            SequenceKey rot(J.begin() + r, J.end());
            rot.insert(rot.end(), J.begin(), J.begin() + r);
            subs.insert(std::move(rot));
        }
    }
    const std::vector<MagnusSeries> exps = expand_all(t, len - 1);
    Int g = 0;
    for (const SequenceKey& J : subs)
        g = gcd_nonneg(g, mu_from_expansions(exps, J));
    return g;
}

std::pair<Int, Int> mu_bar(const TanglePresentation& t, const SequenceKey& I) {
    const Int modulus = delta_link(t, I);
    const Int value = milnor_number(t, I);
    if (modulus > 0)
        return {mod_floor(value, modulus), modulus};
    return {value, 0};
}

bool check_vanishing(const TanglePresentation& t, int k, bool non_repeated_only) {
    if (k < 1)
        throw std::invalid_argument("vanishing level k must be >= 1");
    if (k == 1)
        return true;  // length-1 values are 0 by definition
    const std::vector<MagnusSeries> exps = expand_all(t, k);
    for (int m = 2; m <= k; ++m)
        for (const SequenceKey& I : all_sequences(t.component_count(), m, non_repeated_only))
            if (mu_from_expansions(exps, I) != 0)
                return false;
    return true;
}

std::vector<SequenceKey> seq_basis(int n, int j, int length) {
    if (n < 1 || j < 1 || j > n)
        throw std::invalid_argument("invalid component index");
    if (length < 1)
        throw std::invalid_argument("basis sequence length must be >= 1");
    std::vector<SequenceKey> out;
    if (length > n - 1)
        return out;  // no non-repeated sequences of that length exist
    std::vector<int> alphabet;
    for (int i = 1; i <= n; ++i)
        if (i != j)
            alphabet.push_back(i);
    SequenceKey cur;
    std::vector<bool> used(alphabet.size(), false);
    // depth-first in alphabet order = lexicographic output
    auto rec = [&](auto&& self) -> void {
        if (static_cast<int>(cur.size()) == length) {
            out.push_back(cur);
            return;
        }
        for (std::size_t a = 0; a < alphabet.size(); ++a) {
            if (used[a])
                continue;
            used[a] = true;
            cur.push_back(alphabet[a]);
            self(self);
            cur.pop_back();
            used[a] = false;
        }
    };
    rec(rec);
    return out;
}

bool linking_symmetric(const TanglePresentation& t) {
    const std::vector<MagnusSeries> exps = expand_all(t, 2);
    for (int p = 1; p <= t.component_count(); ++p)
        for (int q = p + 1; q <= t.component_count(); ++q)
            if (exps[static_cast<std::size_t>(q - 1)].coeff({p}) !=
                exps[static_cast<std::size_t>(p - 1)].coeff({q}))
                return false;
    return true;
}

}  // namespace clover
