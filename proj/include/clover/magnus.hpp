#pragma once

#include <vector>

#include "clover/ints.hpp"
#include "clover/seq.hpp"
#include "clover/word.hpp"

namespace clover {

// A polynomial in rank() non-commuting variables X_1..X_n with integer
// coefficients, truncated at degree_cap(): every arithmetic operation
// discards terms of degree > degree_cap() eagerly. Coefficients are stored
// densely, indexed by the graded-lex position of the monomial, so term
// iteration and serialization are always in graded-lex order.
//
// Values are immutable in normal use (the mutating helpers exist for
// construction); all free operations below are pure.
class MagnusSeries {
public:
    MagnusSeries(int rank, int degree_cap);  // zero series

    static MagnusSeries one(int rank, int degree_cap);
    static MagnusSeries variable(int rank, int degree_cap, int index);

    int rank() const { return n_; }
    int degree_cap() const { return q_; }

    const Int& coeff(const Monomial& m) const;
    void set_coeff(const Monomial& m, Int v);
    void add_coeff(const Monomial& m, const Int& v);

    const Int& constant_term() const { return c_[0]; }
    bool is_zero() const;

    // f(monomial, coefficient) over nonzero terms, graded-lex order.
    template <class F>
    void for_each_term(F&& f) const {
        for (std::size_t pos = 0; pos < c_.size(); ++pos)
            if (c_[pos] != 0)
                f(monomial_at(pos), c_[pos]);
    }

    friend bool operator==(const MagnusSeries& a, const MagnusSeries& b) {
        return a.n_ == b.n_ && a.q_ == b.q_ && a.c_ == b.c_;
    }

    friend MagnusSeries add(const MagnusSeries& a, const MagnusSeries& b);
    friend MagnusSeries sub(const MagnusSeries& a, const MagnusSeries& b);
    friend MagnusSeries mul(const MagnusSeries& a, const MagnusSeries& b);
    friend MagnusSeries scale(const MagnusSeries& a, const Int& c);

private:
    int n_, q_;
    std::vector<long long> pw_;   // pw_[d] = n^d
    std::vector<long long> off_;  // off_[d] = first position of degree d
    std::vector<Int> c_;

    std::size_t position_of(const Monomial& m) const;
    Monomial monomial_at(std::size_t pos) const;

    friend struct SeriesInternal;
};

MagnusSeries add(const MagnusSeries& a, const MagnusSeries& b);
MagnusSeries sub(const MagnusSeries& a, const MagnusSeries& b);
MagnusSeries scale(const MagnusSeries& a, const Int& c);

// Truncated product; requires matching rank and degree cap.
MagnusSeries mul(const MagnusSeries& a, const MagnusSeries& b);

inline MagnusSeries operator+(const MagnusSeries& a, const MagnusSeries& b) { return add(a, b); }
inline MagnusSeries operator-(const MagnusSeries& a, const MagnusSeries& b) { return sub(a, b); }
inline MagnusSeries operator*(const MagnusSeries& a, const MagnusSeries& b) { return mul(a, b); }

// The expansion of a single generator: 1 + X_i for sign +1, and the
// truncated geometric series 1 - X_i + X_i^2 - ... for sign -1.
MagnusSeries letter_series(int rank, int degree_cap, int index, int sign);

// Expansion of a word, multiplicative over concatenation.
MagnusSeries expand(const GroupWord& w, int degree_cap);

// Two-sided inverse up to the degree cap; requires constant term 1.
MagnusSeries inverse(const MagnusSeries& a);

// Stored coefficient of m, or 0; requires degree(m) <= degree cap.
Int coefficient(const MagnusSeries& a, const Monomial& m);

// Replaces the variable with index l by images[l-1] in every monomial of f.
// Every image must share rank and degree cap with f and have constant term 0.
MagnusSeries substitute(const MagnusSeries& f, const std::vector<MagnusSeries>& images);

// inverse(a) * inverse(b) * a * b; requires constant terms 1.
MagnusSeries commutator_series(const MagnusSeries& a, const MagnusSeries& b);

// Product over the letters of w of images[index-1]^(sign); every image must
// have constant term 1. This is the expansion of w under the assignment
// generator i -> images[i-1].
MagnusSeries eval_word(const GroupWord& w, const std::vector<MagnusSeries>& images);

}  // namespace clover
