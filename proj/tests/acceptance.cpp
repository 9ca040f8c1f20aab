// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Each criterion is exact integer equality under a wall-clock
// budget; the randomized ones are seeded and reproducible.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <tuple>
#include <vector>

#include "clover/classify.hpp"
#include "clover/hset.hpp"
#include "clover/magnus.hpp"
#include "clover/milnor.hpp"
#include "clover/sampling.hpp"
#include "clover/slmove.hpp"
#include "clover/zlattice.hpp"
#include "support.hpp"

using namespace clover;
using namespace clover::testsupport;

namespace {

using Clock = std::chrono::steady_clock;

struct Criterion {
    int number;
    std::string label;
    double budget_seconds;
    std::function<bool(std::string&)> body;
};

GroupWord gen(int n, int i, int sign = 1) {
    return GroupWord::generator(n, i, sign);
}

// ---- 1: Magnus homomorphism + inverse identities ---------------------------

bool magnus_homomorphism(std::string& detail) {
    Rng rng(1001);
    int checked = 0;
    for (int t = 0; t < 200; ++t) {
        const int n = rng.range(1, 5);
        const int q = rng.range(1, 5);
        const GroupWord v = random_word(rng, n, 12);
        const GroupWord w = random_word(rng, n, 12);
        if (expand(concat(v, w), q) != mul(expand(v, q), expand(w, q)))
            return false;
        if (inverse(expand(w, q)) != expand(invert(w), q))
            return false;
        ++checked;
    }
    detail = std::to_string(checked) + " word pairs";
    return checked >= 200;
}

// ---- 2: the displayed 4-component lattice rows ------------------------------

bool example_rows_conformance(std::string& detail) {
    Rng rng(1002);
    int checked = 0;
    for (int t = 0; t < 20; ++t) {
        std::vector<std::vector<Int>> mu2(5, std::vector<Int>(5, 0));
        MuTable mu;
        for (int p = 1; p <= 4; ++p)
            for (int q = p + 1; q <= 4; ++q) {
                Int v = rng.range(-3, 3);
                mu2[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)] = v;
                mu2[static_cast<std::size_t>(q)][static_cast<std::size_t>(p)] = v;
                mu.emplace(SequenceKey{p, q}, v);
                mu.emplace(SequenceKey{q, p}, v);
            }
        for (const SequenceKey& S : seq_basis(4, 4, 3))
            mu.emplace(seq_append(S, 4), rng.range(-3, 3));

        const AffineLattice lattice = hset_from_mu(mu, 4, 1, 4);
        if (lattice.gens != example_lattice_rows(mu2))
            return false;
        for (std::size_t r = 0; r < lattice.basis.size(); ++r)
            if (lattice.base[r] != mu.at(seq_append(lattice.basis[r], 4)))
                return false;
        ++checked;
    }
    detail = std::to_string(checked) + " assignments";
    return checked >= 20;
}

// ---- 3: closed-form degree-(2k+1) difference --------------------------------

bool closed_form_identity(std::string& detail) {
    Rng rng(1003);
    int instances = 0;
    auto run_instance = [&](int n, int k) {
        const TanglePresentation gamma =
            k == 1 ? random_tangle(rng, n, 8) : random_vanishing_tangle(rng, n, k, 2);
        const TanglePresentation u = random_string_link(rng, n, 2, true);
        const int q = 2 * k + 1;
        const std::vector<MagnusSeries> moved = transform({gamma, u, q});
        const LinkingMatrix m = linking_of(u);
        const MuTable mu = mu_table(gamma, k + 1, false);
        for (int j = 1; j <= n; ++j) {
            DeltaPolynomial observed;
            const MagnusSeries plain = expand(gamma.longitude(j), q);
            for (const SequenceKey& S : seq_basis(n, j, q)) {
                Int d = moved[static_cast<std::size_t>(j - 1)].coeff(S) - plain.coeff(S);
                if (d != 0)
                    observed.emplace(S, std::move(d));
            }
            if (prop_delta_formula(mu, m, k, j, n) != observed)
                return false;
        }
        ++instances;
        return true;
    };
    for (int t = 0; t < 50; ++t) {
        const int k = rng.coin() ? 1 : 2;
        const int n = rng.range(4, 5);
        if (!run_instance(n, k))
            return false;
    }
    // extra width: degree-(2k+1) monomials without repeats need n >= 2k+2,
    // so k = 2 only bites from six components up
    for (int t = 0; t < 6; ++t)
        if (!run_instance(6, 2))
            return false;
    detail = std::to_string(instances) + " instances";
    return instances >= 50;
}

// ---- 4 and 5: congruence and low-length invariance under shared runs --------

struct MovedBatch {
    std::vector<std::tuple<TanglePresentation, TanglePresentation, int,
                           std::vector<MagnusSeries>>> runs;  // gamma, u, k, moved at 2k+2
};

MovedBatch shared_runs() {
    MovedBatch batch;
    Rng rng(1004);
    for (int t = 0; t < 30; ++t) {
        const int k = rng.coin() ? 1 : 2;
        const int n = k == 2 ? (rng.coin() ? 4 : 5) : rng.range(3, 5);
        TanglePresentation gamma =
            k == 1 ? random_tangle(rng, n, 8) : random_vanishing_tangle(rng, n, k, 2);
        TanglePresentation u = random_string_link(rng, n, 2, true);
        std::vector<MagnusSeries> moved = transform({gamma, u, 2 * k + 2});
        batch.runs.emplace_back(std::move(gamma), std::move(u), k, std::move(moved));
    }
    return batch;
}

bool congruence_criterion(const MovedBatch& batch, std::string& detail) {
    Rng rng(1005);
    int triples = 0;
    for (const auto& [gamma, u, k, moved] : batch.runs) {
        const int n = gamma.component_count();
        for (int s = 0; s < 4; ++s) {
            const int len = rng.range(1, 2 * k + 2);
            SequenceKey I;
            for (int p = 0; p < len; ++p)
                I.push_back(rng.range(1, n));
            Int before = milnor_number(gamma, I);
            Int after = 0;
            if (I.size() > 1) {
                Monomial mono(I.begin(), I.end() - 1);
                after = moved[static_cast<std::size_t>(I.back() - 1)].coeff(mono);
            }
            const Int modulus = delta_k(gamma, I, k);
            const bool ok =
                modulus == 0 ? before == after : (after - before) % modulus == 0;
            if (!ok)
                return false;
            ++triples;
        }
    }
    detail = std::to_string(triples) + " (gamma, u, I) triples";
    return triples >= 100;
}

bool invariance_criterion(const MovedBatch& batch, std::string& detail) {
    int runs = 0;
    for (const auto& [gamma, u, k, moved] : batch.runs) {
        const int n = gamma.component_count();
        for (int j = 1; j <= n; ++j) {
            const MagnusSeries plain = expand(gamma.longitude(j), 2 * k + 2);
            for (int d = 0; d <= 2 * k; ++d)
                for (const Monomial& m : all_sequences(n, d, false))
                    if (plain.coeff(m) != moved[static_cast<std::size_t>(j - 1)].coeff(m))
                        return false;
        }
        ++runs;
    }
    detail = std::to_string(runs) + " moves, every mu of length <= 2k+1";
    return runs >= 20;
}

// ---- 6: lattice invariance ---------------------------------------------------

bool lattice_invariance(std::string& detail) {
    Rng rng(1006);
    int checked = 0;
    for (int t = 0; t < 20; ++t) {
        const int k = t % 3 == 2 ? 2 : 1;
        const int n = k == 2 ? 6 : rng.range(4, 5);
        const int j = rng.range(1, n);
        const TanglePresentation gamma =
            k == 1 ? random_tangle(rng, n, 6) : random_vanishing_tangle(rng, n, k, 2);
        const TanglePresentation u = random_string_link(rng, n, 2, true);

        const AffineLattice before = hset_generators(gamma, k, j);
        const AffineLattice after =
            hset_from_expansions(transform({gamma, u, 2 * k + 1}), k, j);
        if (!hset_member(before, after.base) || !hset_member(after, before.base))
            return false;
        if (span_hnf(before.gens) != span_hnf(after.gens))
            return false;
        ++checked;
    }
    detail = std::to_string(checked) + " moves, mutual containment + equal spans";
    return checked >= 20;
}

// ---- 7: integer solver vs bounded brute force --------------------------------

bool solver_oracle(std::string& detail) {
    Rng rng(1007);
    int checked = 0;
    for (int t = 0; t < 120; ++t) {
        IntMatrix a(4, 3);
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 3; ++c)
                a.at(r, c) = rng.range(-4, 4);
        std::vector<Int> b(4);
        if (rng.coin()) {
            b = mat_vec(a, {Int(rng.range(-5, 5)), Int(rng.range(-5, 5)), Int(rng.range(-5, 5))});
        } else {
            for (auto& v : b)
                v = rng.range(-6, 6);
        }
        bool brute = false;
        for (int x1 = -5; x1 <= 5 && !brute; ++x1)
            for (int x2 = -5; x2 <= 5 && !brute; ++x2)
                for (int x3 = -5; x3 <= 5 && !brute; ++x3)
                    brute = mat_vec(a, {Int(x1), Int(x2), Int(x3)}) == b;
        const auto solved = member(a, b);
        if (brute && !solved.has_value())
            return false;
        if (!brute && solved.has_value()) {
            // solution outside the brute-force box; member verified it exactly
        }
        ++checked;
    }
    detail = std::to_string(checked) + " systems";
    return checked >= 100;
}

// ---- 8: classifier soundness ---------------------------------------------------

bool classifier_soundness(std::string& detail) {
    Rng rng(1008);
    int equivalent_pairs = 0;
    for (int t = 0; t < 20; ++t) {
        TanglePresentation gamma = TanglePresentation::trivial(4);
        TanglePresentation u = TanglePresentation::trivial(4);
        if (t % 2 == 0) {
            // short longitudes with rich linking
            std::vector<GroupWord> ls;
            for (int i = 1; i <= 4; ++i) {
                GroupWord w = GroupWord::identity(4);
                const int extra = rng.range(1, 2);
                for (int p = 0; p < extra; ++p) {
                    int other = rng.range(1, 4);
                    if (other == i)
                        other = (other % 4) + 1;
                    w = concat(w, gen(4, other, rng.coin() ? 1 : -1));
                }
                ls.push_back(w);
            }
            gamma = TanglePresentation(4, std::move(ls));
            u = random_string_link(rng, 4, 1, false);
        } else {
            gamma = random_vanishing_tangle(rng, 4, 2, 1);
            u = random_string_link(rng, 4, 1, false);
        }
        const TanglePresentation moved = transformed_words(gamma, u, 4);
        if (classify_4clover(gamma, moved) != Verdict::equivalent)
            return false;
        if (classify_4clover(moved, gamma) != Verdict::equivalent)
            return false;
        ++equivalent_pairs;
    }

    int separated_pairs = 0;
    for (int t = 0; t < 20; ++t) {
        const TanglePresentation a = random_tangle(rng, 4, 6);
        // change one non-repeated mu of length <= 3 by a commutator factor
        std::vector<GroupWord> ls = a.longitudes();
        const int j = rng.range(1, 4);
        int x = rng.range(1, 4), y = rng.range(1, 4);
        while (x == j)
            x = rng.range(1, 4);
        while (y == j || y == x)
            y = rng.range(1, 4);
        ls[static_cast<std::size_t>(j - 1)] = reduce(concat(
            ls[static_cast<std::size_t>(j - 1)], commutator(gen(4, x), gen(4, y))));
        const TanglePresentation b(4, std::move(ls));
        if (fingerprint(a) == fingerprint(b))
            return false;  // the perturbation must move mu(xyj)
        if (classify_4clover(a, b) != Verdict::inequivalent)
            return false;
        ++separated_pairs;
    }
    detail = std::to_string(equivalent_pairs) + " moved pairs + " +
             std::to_string(separated_pairs) + " separated pairs";
    return equivalent_pairs >= 20 && separated_pairs >= 20;
}

}  // namespace

int main() {
    MovedBatch batch;  // shared by criteria 4 and 5
    bool batch_ready = false;
    auto ensure_batch = [&]() {
        if (!batch_ready) {
            batch = shared_runs();
            batch_ready = true;
        }
    };

    const std::vector<Criterion> criteria = {
        {1, "Magnus homomorphism and inverse identities", 5.0,
         [](std::string& d) { return magnus_homomorphism(d); }},
        {2, "displayed lattice rows at (n, k, j) = (4, 1, 4)", 1.0,
         [](std::string& d) { return example_rows_conformance(d); }},
        {3, "closed-form degree-(2k+1) difference of the SL-move", 60.0,
         [](std::string& d) { return closed_form_identity(d); }},
        {4, "congruence mu'(I) = mu(I) mod delta^k(I)", 60.0,
         [&](std::string& d) {
             ensure_batch();
             return congruence_criterion(batch, d);
         }},
        {5, "exact invariance of mu up to length 2k+1", 60.0,
         [&](std::string& d) {
             ensure_batch();
             return invariance_criterion(batch, d);
         }},
        {6, "lattice invariance under SL-moves", 60.0,
         [](std::string& d) { return lattice_invariance(d); }},
        {7, "integer solver vs bounded brute force", 10.0,
         [](std::string& d) { return solver_oracle(d); }},
        {8, "classifier soundness on moved and separated pairs", 30.0,
         [](std::string& d) { return classifier_soundness(d); }},
    };

    bool all_pass = true;
    for (const Criterion& c : criteria) {
        const auto t0 = Clock::now();
        std::string detail;
        bool ok = false;
        try {
            ok = c.body(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
            ok = false;
        }
        const double seconds = std::chrono::duration<double>(Clock::now() - t0).count();
        const bool in_budget = seconds <= c.budget_seconds;
        const bool pass = ok && in_budget;
        all_pass = all_pass && pass;
        std::printf("%s  criterion %d: %s (%s) [%.2fs, budget %.0fs]\n",
                    pass ? "PASS" : "FAIL", c.number, c.label.c_str(),
                    detail.empty() ? "-" : detail.c_str(), seconds, c.budget_seconds);
    }
    std::printf("%s\n", all_pass ? "ACCEPTANCE: all criteria passed"
                                 : "ACCEPTANCE: FAILURES PRESENT");
    return all_pass ? 0 : 1;
}
