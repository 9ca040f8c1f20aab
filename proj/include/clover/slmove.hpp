#pragma once

#include <map>
#include <vector>

#include "clover/ints.hpp"
#include "clover/magnus.hpp"
#include "clover/milnor.hpp"
#include "clover/seq.hpp"

namespace clover {

// Pairwise linking numbers of a string link, read off the degree-1
// coefficients of its longitudes. Symmetric with an ignored diagonal.
class LinkingMatrix {
public:
    explicit LinkingMatrix(int n);

    int size() const { return n_; }
    const Int& at(int p, int q) const;
    void set(int p, int q, Int v);  // sets both orders

private:
    int n_;
    std::vector<Int> m_;
};

// mu_u(l i) = coefficient of Z_l in the expansion of u_i at cap 2.
// Errors out when the two orders disagree: asymmetric linking data cannot
// come from a string link.
LinkingMatrix linking_of(const TanglePresentation& u);

struct SLMoveInput {
    TanglePresentation gamma;  // the bottom tangle being moved
    TanglePresentation u;      // the string link driving the move, in its own meridians
    int degree_cap;
};

// Expansions of the longitudes of the moved tangle in the meridians of the
// moved tangle, exact in the degree-cap truncation.
//
// The longitudes of the result satisfy a closed system of relations: the
// doubled component of u_l is read by the commutator beta_l = [lambda'_l,
// alpha'_l], the old meridians are alpha_i = u_i^-1 alpha'_i u_i with u_i
// evaluated over the beta's, and lambda'_j = u_j lambda_j u_j^-1 with
// lambda_j evaluated over those alpha's. Iterating that system from the
// untransformed expansions is a contraction in the degree filtration (each
// pass pushes the first disagreement at least one degree higher), so it
// reaches its unique fixed point within degree_cap passes.
std::vector<MagnusSeries> transform(const SLMoveInput& input);

// A word presentation whose longitudes expand exactly to transform(...):
// the same fixed point run on words instead of series. Intended for small
// inputs; word length grows quickly with each pass.
TanglePresentation transformed_words(const TanglePresentation& gamma,
                                     const TanglePresentation& u, int degree_cap);

using DeltaPolynomial = std::map<Monomial, Int, GradedLex>;

// The predicted degree-(2k+1) change of the mu coefficients on non-repeated
// j-free monomials, assembled from the mu table of the unmoved tangle and
// the linking matrix of the string link:
//
//   sum over |J| = |I| = k, l with JIl non-repeated and j-free of
//     mu(Jj) mu(Il) [ sum_s m(l, J_s) Y_{J<s}(Y_{J_s I l} - Y_{J_s l I}
//                                              - Y_{I l J_s} + Y_{l I J_s})Y_{J>s}
//                     + m(l, j) (Y_{IlJ} - Y_{lIJ} - Y_{JIl} + Y_{JlI}) ]
//
// The mu table must contain every required mu(Jj) and mu(Il) entry.
// Zero coefficients are not stored in the result.
DeltaPolynomial prop_delta_formula(const MuTable& mu, const LinkingMatrix& m, int k, int j,
                                   int n);

// Whether the moved tangle's mu(I) is congruent to the original mu(I)
// modulo delta_k(gamma, I, k), with modulus 0 meaning exact equality.
// Requires check_vanishing(gamma, k) — errors out otherwise.
bool verify_congruence(const TanglePresentation& gamma, const TanglePresentation& u,
                       const SequenceKey& I, int k);

}  // namespace clover
