#include "clover/slmove.hpp"

#include <iterator>
#include <stdexcept>
#include <string>
#include <utility>

namespace clover {

LinkingMatrix::LinkingMatrix(int n) : n_(n) {
    if (n < 1)
        throw std::invalid_argument("linking matrix size must be >= 1");
    m_.resize(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
}

const Int& LinkingMatrix::at(int p, int q) const {
    if (p < 1 || p > n_ || q < 1 || q > n_)
        throw std::invalid_argument("linking matrix index out of range");
    if (p == q)
        throw std::invalid_argument("linking matrix diagonal is not defined");
    return m_[static_cast<std::size_t>(p - 1) * static_cast<std::size_t>(n_) +
              static_cast<std::size_t>(q - 1)];
}

void LinkingMatrix::set(int p, int q, Int v) {
    if (p < 1 || p > n_ || q < 1 || q > n_ || p == q)
        throw std::invalid_argument("linking matrix index out of range");
    m_[static_cast<std::size_t>(p - 1) * static_cast<std::size_t>(n_) +
       static_cast<std::size_t>(q - 1)] = v;
    m_[static_cast<std::size_t>(q - 1) * static_cast<std::size_t>(n_) +
       static_cast<std::size_t>(p - 1)] = std::move(v);
}

LinkingMatrix linking_of(const TanglePresentation& u) {
    const int n = u.component_count();
    LinkingMatrix m(n);
    std::vector<MagnusSeries> exps;
    exps.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i)
        exps.push_back(expand(u.longitude(i), 2));
    for (int l = 1; l <= n; ++l) {
        for (int i = l + 1; i <= n; ++i) {
            const Int& li = exps[static_cast<std::size_t>(i - 1)].coeff({l});
            const Int& il = exps[static_cast<std::size_t>(l - 1)].coeff({i});
            if (li != il)
                throw std::invalid_argument(
                    "asymmetric linking data between components " + std::to_string(l) +
                    " and " + std::to_string(i) + ": not realizable by a string link");
            m.set(l, i, li);
        }
    }
    return m;
}

namespace {

void check_move_input(const TanglePresentation& gamma, const TanglePresentation& u,
                      int degree_cap) {
    if (gamma.component_count() != u.component_count())
        throw std::invalid_argument("tangle and string link component counts differ");
    if (degree_cap < 1)
        throw std::invalid_argument("degree cap must be >= 1");
}

}  // namespace

std::vector<MagnusSeries> transform(const SLMoveInput& input) {
    const TanglePresentation& gamma = input.gamma;
    const TanglePresentation& u = input.u;
    const int q = input.degree_cap;
    check_move_input(gamma, u, q);
    const int n = gamma.component_count();

    std::vector<MagnusSeries> meridian;
    meridian.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i)
        meridian.push_back(add(MagnusSeries::one(n, q), MagnusSeries::variable(n, q, i)));

    std::vector<MagnusSeries> cur;
    cur.reserve(static_cast<std::size_t>(n));
    for (int j = 1; j <= n; ++j)
        cur.push_back(expand(gamma.longitude(j), q));

    auto step = [&](const std::vector<MagnusSeries>& lam) {
        std::vector<MagnusSeries> beta;
        beta.reserve(static_cast<std::size_t>(n));
        for (int l = 0; l < n; ++l)
            beta.push_back(commutator_series(lam[static_cast<std::size_t>(l)],
                                             meridian[static_cast<std::size_t>(l)]));
        std::vector<MagnusSeries> u_img;
        u_img.reserve(static_cast<std::size_t>(n));
        for (int i = 1; i <= n; ++i)
            u_img.push_back(eval_word(u.longitude(i), beta));
        std::vector<MagnusSeries> alpha;
        alpha.reserve(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            alpha.push_back(mul(mul(inverse(u_img[static_cast<std::size_t>(i)]),
                                    meridian[static_cast<std::size_t>(i)]),
                                u_img[static_cast<std::size_t>(i)]));
        std::vector<MagnusSeries> next;
        next.reserve(static_cast<std::size_t>(n));
        for (int j = 1; j <= n; ++j) {
            const MagnusSeries& conj = u_img[static_cast<std::size_t>(j - 1)];
            next.push_back(
                mul(mul(conj, eval_word(gamma.longitude(j), alpha)), inverse(conj)));
        }
        return next;
    };

    for (int pass = 0; pass <= q; ++pass) {
        std::vector<MagnusSeries> next = step(cur);
        if (next == cur)
            return cur;
        cur = std::move(next);
    }
    throw std::logic_error("SL-move fixed point did not stabilize within the degree cap");
}

TanglePresentation transformed_words(const TanglePresentation& gamma,
                                     const TanglePresentation& u, int degree_cap) {
    check_move_input(gamma, u, degree_cap);
    const int n = gamma.component_count();
    const std::vector<MagnusSeries> target = transform({gamma, u, degree_cap});

    std::vector<GroupWord> lam;
    lam.reserve(static_cast<std::size_t>(n));
    for (int j = 1; j <= n; ++j)
        lam.push_back(reduce(gamma.longitude(j)));

    for (int pass = 0; pass <= degree_cap + 1; ++pass) {
        bool matches = true;
        for (int j = 0; j < n && matches; ++j)
            matches = expand(lam[static_cast<std::size_t>(j)], degree_cap) ==
                      target[static_cast<std::size_t>(j)];
        if (matches)
            return TanglePresentation(n, std::move(lam));

        std::vector<GroupWord> beta;
        beta.reserve(static_cast<std::size_t>(n));
        for (int l = 1; l <= n; ++l)
            beta.push_back(commutator(lam[static_cast<std::size_t>(l - 1)],
                                      GroupWord::generator(n, l)));
        std::vector<GroupWord> u_words;
        u_words.reserve(static_cast<std::size_t>(n));
        for (int i = 1; i <= n; ++i) {
            GroupWord w = GroupWord::identity(n);
            for (const Letter& z : u.longitude(i).letters()) {
                const GroupWord& b = beta[static_cast<std::size_t>(z.index - 1)];
                w = concat(w, z.sign > 0 ? b : invert(b));
            }
            u_words.push_back(reduce(w));
        }
        std::vector<GroupWord> alpha;
        alpha.reserve(static_cast<std::size_t>(n));
        for (int i = 1; i <= n; ++i)
            alpha.push_back(conjugate(GroupWord::generator(n, i),
                                      invert(u_words[static_cast<std::size_t>(i - 1)])));
        std::vector<GroupWord> next;
        next.reserve(static_cast<std::size_t>(n));
        for (int j = 1; j <= n; ++j) {
            GroupWord w = GroupWord::identity(n);
            for (const Letter& a : gamma.longitude(j).letters()) {
                const GroupWord& img = alpha[static_cast<std::size_t>(a.index - 1)];
                w = concat(w, a.sign > 0 ? img : invert(img));
            }
            next.push_back(conjugate(reduce(w), u_words[static_cast<std::size_t>(j - 1)]));
        }
        lam = std::move(next);
    }
    throw std::logic_error("word-level SL-move did not stabilize within the degree cap");
}

DeltaPolynomial prop_delta_formula(const MuTable& mu, const LinkingMatrix& m, int k, int j,
                                   int n) {
    if (k < 1)
        throw std::invalid_argument("k must be >= 1");
    if (j < 1 || j > n)
        throw std::invalid_argument("component index j out of range");
    if (m.size() != n)
        throw std::invalid_argument("linking matrix size mismatch");

    auto mu_at = [&](const SequenceKey& key) -> const Int& {
        auto it = mu.find(key);
        if (it == mu.end())
            throw std::invalid_argument("mu table is missing a required value");
        return it->second;
    };

    DeltaPolynomial out;
    auto accumulate = [&out](const Monomial& mono, const Int& v) {
        auto [it, inserted] = out.emplace(mono, v);
        if (!inserted)
            it->second += v;
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
                    const Int coef = c * m.at(l, is);
                    if (coef == 0)
                        continue;
                    const IndexSeq head(J.begin(), J.begin() + (s - 1));
                    const IndexSeq tail(J.begin() + s, J.end());
                    auto emit = [&](const IndexSeq& mid, int sign) {
                        Monomial mono = seq_join(head, mid);
                        mono.insert(mono.end(), tail.begin(), tail.end());
                        accumulate(mono, sign > 0 ? coef : -coef);
                    };
                    emit(seq_join(IndexSeq{is}, seq_append(I, l)), +1);  // i_s I l
                    emit(seq_join(IndexSeq{is, l}, I), -1);            // i_s l I
                    emit(seq_append(seq_append(I, l), is), -1);        // I l i_s
                    emit(seq_append(seq_join(IndexSeq{l}, I), is), +1);  // l I i_s
                }
                const Int coef2 = c * m.at(l, j);
                if (coef2 != 0) {
                    accumulate(seq_join(seq_append(I, l), J), coef2);    // I l J
                    accumulate(seq_join(seq_join(IndexSeq{l}, I), J), -coef2);  // l I J
                    accumulate(JIl, -coef2);                              // J I l
                    Monomial JlI = J;
                    JlI.push_back(l);
                    JlI.insert(JlI.end(), I.begin(), I.end());
                    accumulate(JlI, coef2);                               // J l I
                }
            }
        }
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

bool verify_congruence(const TanglePresentation& gamma, const TanglePresentation& u,
                       const SequenceKey& I, int k) {
    if (I.empty())
        throw std::invalid_argument("sequence must be nonempty");
    if (k < 0)
        throw std::invalid_argument("k must be >= 0");
    // the hypothesis is vacuous for k = 0 (length-1 values vanish by definition)
    if (k >= 2 && !check_vanishing(gamma, k, false))
        throw std::invalid_argument(
            "congruence requires vanishing Milnor numbers up to length k");
    const int q = static_cast<int>(I.size());
    const std::vector<MagnusSeries> moved = transform({gamma, u, q});
    const Int before = milnor_number(gamma, I);
    Int after = 0;
    if (I.size() > 1) {
        Monomial m(I.begin(), I.end() - 1);
        after = moved[static_cast<std::size_t>(I.back() - 1)].coeff(m);
    }
    const Int modulus = delta_k(gamma, I, k);
    if (modulus == 0)
        return before == after;
    return (after - before) % modulus == 0;
}

}  // namespace clover
