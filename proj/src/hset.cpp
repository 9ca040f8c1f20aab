#include "clover/hset.hpp"

#include <map>
#include <stdexcept>
#include <string>

namespace clover {

namespace {

int pair_column(int n, int p, int q) {
    // unordered pairs {p, q}, p < q, in lexicographic order
    if (p > q)
        std::swap(p, q);
    int col = 0;
    for (int a = 1; a < p; ++a)
        col += n - a;
    return col + (q - p - 1);
}

}  // namespace

AffineLattice hset_from_mu(const MuTable& mu, int n, int k, int j) {
    if (k < 1)
        throw std::invalid_argument("k must be >= 1");
    if (j < 1 || j > n)
        throw std::invalid_argument("component index j out of range");

    AffineLattice lattice;
    lattice.basis = seq_basis(n, j, 2 * k + 1);
    if (lattice.basis.empty())
        throw std::invalid_argument("k too large for component count: empty sequence basis");

    std::map<SequenceKey, int, GradedLex> row_of;
    for (std::size_t r = 0; r < lattice.basis.size(); ++r)
        row_of.emplace(lattice.basis[r], static_cast<int>(r));

    for (int p = 1; p <= n; ++p)
        for (int q = p + 1; q <= n; ++q)
            lattice.pairs.emplace_back(p, q);

    auto mu_at = [&](const SequenceKey& key) -> const Int& {
        auto it = mu.find(key);
        if (it == mu.end())
            throw std::invalid_argument("mu table is missing a required value");
        return it->second;
    };

    lattice.base.reserve(lattice.basis.size());
    for (const SequenceKey& S : lattice.basis)
        lattice.base.push_back(mu_at(seq_append(S, j)));

    lattice.gens = IntMatrix(static_cast<int>(lattice.basis.size()),
                             static_cast<int>(lattice.pairs.size()));
    auto add_entry = [&](const Monomial& mono, int p, int q, const Int& v) {
        lattice.gens.at(row_of.at(mono), pair_column(n, p, q)) += v;
    };

    const std::vector<SequenceKey> blocks = seq_basis(n, j, k);
    for (const SequenceKey& J : blocks) {
        const Int& mu_J = mu_at(seq_append(J, j));
        if (mu_J == 0)
            continue;
        for (const SequenceKey& I : blocks) {
            for (int l = 1; l <= n; ++l) {
                if (l == j)
                    continue;
                SequenceKey JIl = seq_join(J, seq_append(I, l));
                if (!non_repeated(JIl))
                    continue;
                Int c = mu_J * mu_at(seq_append(I, l));
                if (c == 0)
                    continue;
                for (int s = 1; s <= k; ++s) {
                    const int is = J[static_cast<std::size_t>(s - 1)];
                    const IndexSeq head(J.begin(), J.begin() + (s - 1));
                    const IndexSeq tail(J.begin() + s, J.end());
                    auto emit = [&](const IndexSeq& mid, int sign) {
                        Monomial mono = seq_join(head, mid);
                        mono.insert(mono.end(), tail.begin(), tail.end());
                        add_entry(mono, l, is, sign > 0 ? c : -c);
                    };
                    emit(seq_join(IndexSeq{is}, seq_append(I, l)), +1);   // i_s I l
                    emit(seq_join(IndexSeq{is, l}, I), -1);               // i_s l I
                    emit(seq_append(seq_append(I, l), is), -1);           // I l i_s
                    emit(seq_append(seq_join(IndexSeq{l}, I), is), +1);   // l I i_s
                }
                add_entry(seq_join(seq_append(I, l), J), l, j, c);            // I l J
                add_entry(seq_join(seq_join(IndexSeq{l}, I), J), l, j, -c);   // l I J
                add_entry(JIl, l, j, -c);                                      // J I l
                Monomial JlI = seq_join(seq_append(J, l), I);
                add_entry(JlI, l, j, c);                                       // J l I
            }
        }
    }
    return lattice;
}

AffineLattice hset_from_expansions(const std::vector<MagnusSeries>& expansions, int k, int j) {
    if (expansions.empty())
        throw std::invalid_argument("no expansions given");
    const int n = expansions[0].rank();
    if (static_cast<int>(expansions.size()) != n)
        throw std::invalid_argument("expected one expansion per component");
    if (expansions[0].degree_cap() < 2 * k + 1)
        throw std::invalid_argument("expansions truncated below degree 2k+1");

    // collect exactly the entries the construction reads
    MuTable mu;
    auto put = [&](const SequenceKey& I) {
        Monomial m(I.begin(), I.end() - 1);
        mu.emplace(I, expansions[static_cast<std::size_t>(I.back() - 1)].coeff(m));
    };
    for (const SequenceKey& S : seq_basis(n, j, 2 * k + 1))
        put(seq_append(S, j));
    for (const SequenceKey& J : seq_basis(n, j, k)) {
        put(seq_append(J, j));
        for (int l = 1; l <= n; ++l)
            if (l != j && non_repeated(seq_append(J, l)))
                put(seq_append(J, l));
    }
    return hset_from_mu(mu, n, k, j);
}

AffineLattice hset_generators(const TanglePresentation& t, int k, int j) {
    if (k < 1)
        throw std::invalid_argument("k must be >= 1");
    if (k > 1 && !check_vanishing(t, k, true))
        throw std::invalid_argument(
            "non-repeated Milnor numbers up to length k must vanish");
    std::vector<MagnusSeries> exps;
    exps.reserve(static_cast<std::size_t>(t.component_count()));
    for (int i = 1; i <= t.component_count(); ++i)
        exps.push_back(expand(t.longitude(i), 2 * k + 1));
    return hset_from_expansions(exps, k, j);
}

bool hset_member(const AffineLattice& lattice, const std::vector<Int>& v) {
    if (v.size() != lattice.base.size())
        throw std::invalid_argument("vector length must match the lattice basis");
    std::vector<Int> rhs(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        rhs[i] = v[i] - lattice.base[i];
    return member(lattice.gens, rhs).has_value();
}

bool hset_intersects(const AffineLattice& a, const AffineLattice& b) {
    if (a.basis != b.basis)
        throw std::invalid_argument("lattices use different bases");
    return affine_intersects(a.base, a.gens, b.base, b.gens);
}

}  // namespace clover
