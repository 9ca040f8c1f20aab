#pragma once

#include <optional>
#include <vector>

#include "clover/ints.hpp"

namespace clover {

class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(int rows, int cols);

    static IntMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Int& at(int r, int c) { return a_[index(r, c)]; }
    const Int& at(int r, int c) const { return a_[index(r, c)]; }

    friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

private:
    int rows_, cols_;
    std::vector<Int> a_;

    std::size_t index(int r, int c) const;
};

std::vector<Int> mat_vec(const IntMatrix& a, const std::vector<Int>& x);

struct HnfResult {
    IntMatrix h;  // column-style Hermite normal form
    IntMatrix u;  // unimodular, h = a * u
};

// Column-style Hermite normal form by unimodular column operations:
// pivots positive with strictly increasing pivot rows, entries to the left
// of a pivot in its row reduced into [0, pivot), zero columns trailing.
// With this convention H is canonical for the column span of A.
HnfResult hnf(const IntMatrix& a);

// Canonical generator matrix of the column span: the HNF with trailing
// zero columns removed. Two matrices span the same integer lattice iff
// their canonical forms are equal.
IntMatrix span_hnf(const IntMatrix& a);

// Some integer solution x of A x = b, or nullopt when none exists. A
// returned solution always satisfies A x = b exactly.
std::optional<std::vector<Int>> member(const IntMatrix& a, const std::vector<Int>& b);

// member with the failure witness exposed: when unsolvable, fail_row is the
// row of the forward substitution on the HNF that could not be satisfied
// and residual the amount left over there.
struct MemberCertificate {
    bool solvable = false;
    std::vector<Int> x;
    int fail_row = -1;
    Int residual = 0;
};
MemberCertificate member_certificate(const IntMatrix& a, const std::vector<Int>& b);

// Whether {b1 + G1 m} and {b2 + G2 m'} meet over the integers, decided as
// membership of b2 - b1 in the column span of [G1 | -G2].
bool affine_intersects(const std::vector<Int>& b1, const IntMatrix& g1,
                       const std::vector<Int>& b2, const IntMatrix& g2);

}  // namespace clover
