#include <doctest.h>

#include "clover/magnus.hpp"
#include "clover/sampling.hpp"
#include "support.hpp"

using namespace clover;
using namespace clover::testsupport;

namespace {

MagnusSeries from_terms(int n, int q, const BruteSeries& terms) {
    MagnusSeries s(n, q);
    for (const auto& [m, c] : terms)
        s.set_coeff(m, c);
    return s;
}

MagnusSeries random_sparse(Rng& rng, int n, int q) {
    MagnusSeries s(n, q);
    const int terms = rng.range(0, 6);
    for (int t = 0; t < terms; ++t) {
        Monomial m;
        const int d = rng.range(0, q);
        for (int p = 0; p < d; ++p)
            m.push_back(rng.range(1, n));
        s.set_coeff(m, rng.range(-4, 4));
    }
    return s;
}

}  // namespace

TEST_CASE("truncated products") {
    // (1 + X1)(1 - X1) at cap 2 leaves 1 - X1 X1
    MagnusSeries a = from_terms(2, 2, {{{}, 1}, {{1}, 1}});
    MagnusSeries b = from_terms(2, 2, {{{}, 1}, {{1}, -1}});
    CHECK(mul(a, b) == from_terms(2, 2, {{{}, 1}, {{1, 1}, -1}}));

    CHECK(mul(a, MagnusSeries::one(2, 2)) == a);

    // cap 1 drops the cross term
    MagnusSeries c = from_terms(2, 1, {{{}, 1}, {{1}, 1}});
    MagnusSeries d = from_terms(2, 1, {{{}, 1}, {{2}, 1}});
    CHECK(mul(c, d) == from_terms(2, 1, {{{}, 1}, {{1}, 1}, {{2}, 1}}));

    CHECK_THROWS_AS(mul(a, c), std::invalid_argument);
}

TEST_CASE("ring axioms on random series") {
    Rng rng(21);
    for (int t = 0; t < 100; ++t) {
        const int n = rng.range(1, 4);
        const int q = rng.range(1, 4);
        MagnusSeries a = random_sparse(rng, n, q);
        MagnusSeries b = random_sparse(rng, n, q);
        MagnusSeries c = random_sparse(rng, n, q);
        CHECK(mul(mul(a, b), c) == mul(a, mul(b, c)));
        CHECK(mul(a, add(b, c)) == add(mul(a, b), mul(a, c)));
        CHECK(mul(add(a, b), c) == add(mul(a, c), mul(b, c)));
    }
}

TEST_CASE("mul agrees with the map-based multiplier") {
    Rng rng(22);
    for (int t = 0; t < 100; ++t) {
        const int n = rng.range(1, 4);
        const int q = rng.range(1, 5);
        MagnusSeries a = random_sparse(rng, n, q);
        MagnusSeries b = random_sparse(rng, n, q);
        CHECK(to_brute(mul(a, b)) == brute_mul(to_brute(a), to_brute(b), q));
    }
}

TEST_CASE("letter expansions") {
    CHECK(expand(GroupWord::identity(2), 3) == MagnusSeries::one(2, 3));

    GroupWord a1 = GroupWord::generator(2, 1);
    CHECK(expand(a1, 3) == from_terms(2, 3, {{{}, 1}, {{1}, 1}}));
    CHECK(expand(invert(a1), 3) ==
          from_terms(2, 3, {{{}, 1}, {{1}, -1}, {{1, 1}, 1}, {{1, 1, 1}, -1}}));

    // commutator expansion at cap 2
    GroupWord comm = commutator(a1, GroupWord::generator(2, 2));
    MagnusSeries expected = from_terms(2, 2, {{{}, 1}, {{1, 2}, 1}, {{2, 1}, -1}});
    CHECK(expand(comm, 2) == expected);
    CHECK(to_brute(expand(comm, 2)) == brute_expand(comm, 2));

    CHECK(coefficient(expand(comm, 2), {1, 2}) == 1);
    CHECK(coefficient(expand(a1, 1), {1}) == 1);
    CHECK(coefficient(expand(a1, 1), {2}) == 0);
    CHECK_THROWS_AS(coefficient(expand(a1, 1), {1, 1}), std::invalid_argument);
}

TEST_CASE("expansion is a homomorphism") {
    Rng rng(23);
    for (int t = 0; t < 250; ++t) {
        const int n = rng.range(1, 5);
        const int q = rng.range(1, 5);
        GroupWord v = random_word(rng, n, 12);
        GroupWord w = random_word(rng, n, 12);
        CHECK(expand(concat(v, w), q) == mul(expand(v, q), expand(w, q)));
        CHECK(to_brute(expand(v, q)) == brute_expand(v, q));
    }
}

TEST_CASE("series inverse") {
    CHECK(inverse(MagnusSeries::one(2, 3)) == MagnusSeries::one(2, 3));

    MagnusSeries a = from_terms(2, 2, {{{}, 1}, {{1}, 1}});
    CHECK(inverse(a) == from_terms(2, 2, {{{}, 1}, {{1}, -1}, {{1, 1}, 1}}));
    CHECK_THROWS_AS(inverse(from_terms(2, 2, {{{}, 2}})), std::invalid_argument);

    Rng rng(24);
    for (int t = 0; t < 100; ++t) {
        const int n = rng.range(1, 4);
        const int q = rng.range(1, 5);
        GroupWord w = random_word(rng, n, 10);
        MagnusSeries e = expand(w, q);
        CHECK(inverse(e) == expand(invert(w), q));
        CHECK(mul(e, inverse(e)) == MagnusSeries::one(n, q));
        CHECK(mul(inverse(e), e) == MagnusSeries::one(n, q));
    }
}

TEST_CASE("substitution") {
    // renaming
    MagnusSeries f = from_terms(2, 2, {{{}, 1}, {{1}, 1}});
    std::vector<MagnusSeries> g = {MagnusSeries::variable(2, 2, 2), MagnusSeries::variable(2, 2, 2)};
    CHECK(substitute(f, g) == from_terms(2, 2, {{{}, 1}, {{2}, 1}}));

    // identity substitution
    MagnusSeries f2 = from_terms(2, 2, {{{}, 1}, {{1, 2}, 1}});
    std::vector<MagnusSeries> id = {MagnusSeries::variable(2, 2, 1), MagnusSeries::variable(2, 2, 2)};
    CHECK(substitute(f2, id) == f2);

    // replacement by a commutator leading part
    MagnusSeries comm = from_terms(2, 2, {{{1, 2}, 1}, {{2, 1}, -1}});
    std::vector<MagnusSeries> g3 = {comm, MagnusSeries(2, 2)};
    CHECK(substitute(f, g3) == from_terms(2, 2, {{{}, 1}, {{1, 2}, 1}, {{2, 1}, -1}}));

    // images must kill the constant term
    std::vector<MagnusSeries> bad = {MagnusSeries::one(2, 2), MagnusSeries(2, 2)};
    CHECK_THROWS_AS(substitute(f, bad), std::invalid_argument);
}

TEST_CASE("substitution respects multiplication") {
    Rng rng(25);
    for (int t = 0; t < 60; ++t) {
        const int n = rng.range(1, 3);
        const int q = rng.range(1, 4);
        MagnusSeries f = random_sparse(rng, n, q);
        MagnusSeries g = random_sparse(rng, n, q);
        std::vector<MagnusSeries> images;
        for (int i = 0; i < n; ++i) {
            MagnusSeries im = random_sparse(rng, n, q);
            im.set_coeff({}, 0);
            images.push_back(im);
        }
        CHECK(substitute(mul(f, g), images) ==
              mul(substitute(f, images), substitute(g, images)));
    }
}

TEST_CASE("substitution matches word evaluation on expansions") {
    Rng rng(26);
    for (int t = 0; t < 40; ++t) {
        const int n = rng.range(2, 4);
        const int q = rng.range(2, 4);
        GroupWord w = random_word(rng, n, 8);
        // unit-constant images and their zero-constant shifts
        std::vector<MagnusSeries> units, shifts;
        for (int i = 0; i < n; ++i) {
            MagnusSeries im = random_sparse(rng, n, q);
            im.set_coeff({}, 1);
            units.push_back(im);
            shifts.push_back(sub(im, MagnusSeries::one(n, q)));
        }
        CHECK(eval_word(w, units) == substitute(expand(w, q), shifts));
    }
}

TEST_CASE("commutator series") {
    MagnusSeries unit = MagnusSeries::one(2, 2);
    MagnusSeries b = from_terms(2, 2, {{{}, 1}, {{2}, 1}});
    CHECK(commutator_series(unit, b) == unit);

    MagnusSeries a = from_terms(2, 2, {{{}, 1}, {{1}, 1}});
    CHECK(commutator_series(a, b) == from_terms(2, 2, {{{}, 1}, {{1, 2}, 1}, {{2, 1}, -1}}));

    Rng rng(27);
    for (int t = 0; t < 50; ++t) {
        const int n = rng.range(1, 3);
        const int q = rng.range(1, 4);
        MagnusSeries s = random_sparse(rng, n, q);
        s.set_coeff({}, 1);
        CHECK(commutator_series(s, s) == MagnusSeries::one(n, q));
    }

    // matches the expansion of the word commutator
    Rng rng2(28);
    for (int t = 0; t < 50; ++t) {
        const int n = rng2.range(2, 4);
        const int q = rng2.range(1, 4);
        GroupWord x = random_word(rng2, n, 8);
        GroupWord y = random_word(rng2, n, 8);
        CHECK(commutator_series(expand(x, q), expand(y, q)) == expand(commutator(x, y), q));
    }
}

TEST_CASE("iterated commutators vanish below their weight") {
    Rng rng(29);
    for (int t = 0; t < 40; ++t) {
        const int n = rng.range(2, 4);
        const int weight = rng.range(2, 4);
        GroupWord c = random_deep_commutator(rng, n, weight);
        MagnusSeries e = expand(c, weight);
        bool low_degree_clear = true;
        e.for_each_term([&](const Monomial& m, const Int&) {
            if (!m.empty() && static_cast<int>(m.size()) < weight)
                low_degree_clear = false;
        });
        CHECK(low_degree_clear);
    }
}

TEST_CASE("oversized truncation tables are rejected") {
    CHECK_THROWS_AS(MagnusSeries(9, 12), std::invalid_argument);
    CHECK_THROWS_AS(MagnusSeries(2, 0), std::invalid_argument);
    CHECK_THROWS_AS(MagnusSeries(0, 3), std::invalid_argument);
}

TEST_CASE("term order is graded lexicographic") {
    MagnusSeries s = from_terms(2, 2, {{{2, 1}, 1}, {{1}, 1}, {{}, 1}, {{1, 2}, 1}, {{2}, 1}});
    std::vector<Monomial> seen;
    s.for_each_term([&](const Monomial& m, const Int&) { seen.push_back(m); });
    CHECK(seen == std::vector<Monomial>{{}, {1}, {2}, {1, 2}, {2, 1}});
}
