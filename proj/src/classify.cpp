#include "clover/classify.hpp"

#include <stdexcept>

namespace clover {

namespace {

constexpr int kComponents = 4;
constexpr int kLatticeK = 1;
constexpr int kLatticeJ = 4;

void require_four(const TanglePresentation& t) {
    if (t.component_count() != kComponents)
        throw std::invalid_argument("classifier expects 4-component presentations");
}

}  // namespace

Fingerprint fingerprint(const TanglePresentation& t) {
    require_four(t);
    std::vector<MagnusSeries> exps;
    exps.reserve(kComponents);
    for (int i = 1; i <= kComponents; ++i)
        exps.push_back(expand(t.longitude(i), 3));
    Fingerprint fp;
    for (int len = 2; len <= 3; ++len) {
        for (const SequenceKey& I : all_sequences(kComponents, len, true)) {
            Monomial m(I.begin(), I.end() - 1);
            fp.emplace(I, exps[static_cast<std::size_t>(I.back() - 1)].coeff(m));
        }
    }
    return fp;
}

ClassifyReport classify_4clover_report(const TanglePresentation& t1,
                                       const TanglePresentation& t2) {
    require_four(t1);
    require_four(t2);
    ClassifyReport report;

    const Fingerprint fp1 = fingerprint(t1);
    const Fingerprint fp2 = fingerprint(t2);
    auto it1 = fp1.begin();
    auto it2 = fp2.begin();
    for (; it1 != fp1.end(); ++it1, ++it2) {
        if (it1->second != it2->second) {
            report.verdict = Verdict::inequivalent;
            report.differing_sequence = it1->first;
            report.differing_values = std::make_pair(it1->second, it2->second);
            return report;
        }
    }

    const AffineLattice h1 = hset_generators(t1, kLatticeK, kLatticeJ);
    const AffineLattice h2 = hset_generators(t2, kLatticeK, kLatticeJ);
    report.lattices_checked = true;

    IntMatrix joint(h1.gens.rows(), h1.gens.cols() + h2.gens.cols());
    for (int r = 0; r < h1.gens.rows(); ++r) {
        for (int c = 0; c < h1.gens.cols(); ++c)
            joint.at(r, c) = h1.gens.at(r, c);
        for (int c = 0; c < h2.gens.cols(); ++c)
            joint.at(r, h1.gens.cols() + c) = -h2.gens.at(r, c);
    }
    std::vector<Int> rhs(h1.base.size());
    for (std::size_t i = 0; i < rhs.size(); ++i)
        rhs[i] = h2.base[i] - h1.base[i];

    const MemberCertificate cert = member_certificate(joint, rhs);
    if (cert.solvable) {
        report.verdict = Verdict::equivalent;
    } else {
        report.verdict = Verdict::inequivalent;
        report.infeasible_row = h1.basis[static_cast<std::size_t>(cert.fail_row)];
        report.infeasible_residual = cert.residual;
    }
    return report;
}

Verdict classify_4clover(const TanglePresentation& t1, const TanglePresentation& t2) {
    return classify_4clover_report(t1, t2).verdict;
}

}  // namespace clover
