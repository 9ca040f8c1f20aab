#include "clover/zlattice.hpp"

#include <stdexcept>
#include <tuple>
#include <utility>

namespace clover {

namespace {

// g = gcd(a, b) >= 0 with p*a + q*b = g.
std::tuple<Int, Int, Int> xgcd(Int a, Int b) {
    Int p0 = 1, q0 = 0, p1 = 0, q1 = 1;
    while (b != 0) {
        Int quot = a / b;  // truncated division is fine, loop ends at b == 0
        Int r = a - quot * b;
        a = std::move(b);
        b = std::move(r);
        Int p2 = p0 - quot * p1;
        Int q2 = q0 - quot * q1;
        p0 = std::move(p1);
        q0 = std::move(q1);
        p1 = std::move(p2);
        q1 = std::move(q2);
    }
    if (a < 0) {
        a = -a;
        p0 = -p0;
        q0 = -q0;
    }
    return {a, p0, q0};
}

Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        --q;
    return q;
}

int first_nonzero_row(const IntMatrix& m, int col) {
    for (int r = 0; r < m.rows(); ++r)
        if (m.at(r, col) != 0)
            return r;
    return -1;
}

}  // namespace

IntMatrix::IntMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0)
        throw std::invalid_argument("matrix dimensions must be nonnegative");
    a_.resize(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols));
}

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

std::size_t IntMatrix::index(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
        throw std::invalid_argument("matrix index out of range");
    return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
           static_cast<std::size_t>(c);
}

std::vector<Int> mat_vec(const IntMatrix& a, const std::vector<Int>& x) {
    if (static_cast<int>(x.size()) != a.cols())
        throw std::invalid_argument("matrix-vector dimension mismatch");
    std::vector<Int> y(static_cast<std::size_t>(a.rows()));
    for (int r = 0; r < a.rows(); ++r)
        for (int c = 0; c < a.cols(); ++c)
            y[static_cast<std::size_t>(r)] += a.at(r, c) * x[static_cast<std::size_t>(c)];
    return y;
}

namespace {

void swap_cols(IntMatrix& m, int c1, int c2) {
    for (int r = 0; r < m.rows(); ++r)
        std::swap(m.at(r, c1), m.at(r, c2));
}

void negate_col(IntMatrix& m, int c) {
    for (int r = 0; r < m.rows(); ++r)
        m.at(r, c) = -m.at(r, c);
}

// col_c2 -= t * col_c
void add_multiple(IntMatrix& m, int c, int c2, const Int& t) {
    for (int r = 0; r < m.rows(); ++r)
        m.at(r, c2) -= t * m.at(r, c);
}

// Replace (col_c, col_c2) by (p*col_c + q*col_c2, -bf*col_c + af*col_c2);
// the 2x2 block has determinant p*af + q*bf = 1.
void combine_cols(IntMatrix& m, int c, int c2, const Int& p, const Int& q, const Int& af,
                  const Int& bf) {
    for (int r = 0; r < m.rows(); ++r) {
        Int v = p * m.at(r, c) + q * m.at(r, c2);
        Int w = af * m.at(r, c2) - bf * m.at(r, c);
        m.at(r, c) = std::move(v);
        m.at(r, c2) = std::move(w);
    }
}

}  // namespace

HnfResult hnf(const IntMatrix& a) {
    HnfResult res{a, IntMatrix::identity(a.cols())};
    IntMatrix& h = res.h;
    IntMatrix& u = res.u;
    int pivot = 0;
    for (int r = 0; r < a.rows() && pivot < a.cols(); ++r) {
        // locate the first column carrying this row, gcd-combine the rest in
        int anchor = -1;
        for (int c = pivot; c < a.cols(); ++c) {
            if (h.at(r, c) == 0)
                continue;
            if (anchor < 0) {
                anchor = c;
                continue;
            }
            auto [g, p, q] = xgcd(h.at(r, anchor), h.at(r, c));
            Int af = h.at(r, anchor) / g;
            Int bf = h.at(r, c) / g;
            combine_cols(h, anchor, c, p, q, af, bf);
            combine_cols(u, anchor, c, p, q, af, bf);
        }
        if (anchor < 0)
            continue;
        if (anchor != pivot) {
            swap_cols(h, anchor, pivot);
            swap_cols(u, anchor, pivot);
        }
        if (h.at(r, pivot) < 0) {
            negate_col(h, pivot);
            negate_col(u, pivot);
        }
        for (int c = 0; c < pivot; ++c) {
            Int t = floor_div(h.at(r, c), h.at(r, pivot));
            if (t != 0) {
                add_multiple(h, pivot, c, t);
                add_multiple(u, pivot, c, t);
            }
        }
        ++pivot;
    }
    return res;
}

IntMatrix span_hnf(const IntMatrix& a) {
    IntMatrix h = hnf(a).h;
    int nonzero = 0;
    for (int c = 0; c < h.cols(); ++c)
        if (first_nonzero_row(h, c) >= 0)
            ++nonzero;
    IntMatrix out(h.rows(), nonzero);
    for (int c = 0; c < nonzero; ++c)
        for (int r = 0; r < h.rows(); ++r)
            out.at(r, c) = h.at(r, c);
    return out;
}

MemberCertificate member_certificate(const IntMatrix& a, const std::vector<Int>& b) {
    if (static_cast<int>(b.size()) != a.rows())
        throw std::invalid_argument("right-hand side length must match row count");
    MemberCertificate cert;
    const HnfResult hu = hnf(a);
    const IntMatrix& h = hu.h;

    std::vector<Int> y(static_cast<std::size_t>(a.cols()));
    std::vector<Int> acc(b.size());  // running H * y
    int next = 0;                    // next pivot column
    for (int r = 0; r < a.rows(); ++r) {
        Int v = b[static_cast<std::size_t>(r)] - acc[static_cast<std::size_t>(r)];
        const bool pivot_here = next < h.cols() && first_nonzero_row(h, next) == r;
        if (pivot_here) {
            const Int& piv = h.at(r, next);
            if (v % piv != 0) {
                cert.fail_row = r;
                cert.residual = v % piv;
                return cert;
            }
            Int coef = v / piv;
            if (coef != 0)
                for (int rr = r; rr < a.rows(); ++rr)
                    acc[static_cast<std::size_t>(rr)] += coef * h.at(rr, next);
            y[static_cast<std::size_t>(next)] = std::move(coef);
            ++next;
        } else if (v != 0) {
            cert.fail_row = r;
            cert.residual = std::move(v);
            return cert;
        }
    }
    cert.solvable = true;
    cert.x = mat_vec(hu.u, y);
    if (mat_vec(a, cert.x) != b)
        throw std::logic_error("integer solver produced an invalid solution");
    return cert;
}

std::optional<std::vector<Int>> member(const IntMatrix& a, const std::vector<Int>& b) {
    MemberCertificate cert = member_certificate(a, b);
    if (!cert.solvable)
        return std::nullopt;
    return std::move(cert.x);
}

bool affine_intersects(const std::vector<Int>& b1, const IntMatrix& g1,
                       const std::vector<Int>& b2, const IntMatrix& g2) {
    if (b1.size() != b2.size() || g1.rows() != g2.rows() ||
        static_cast<int>(b1.size()) != g1.rows())
        throw std::invalid_argument("affine lattice dimension mismatch");
    IntMatrix joint(g1.rows(), g1.cols() + g2.cols());
    for (int r = 0; r < g1.rows(); ++r) {
        for (int c = 0; c < g1.cols(); ++c)
            joint.at(r, c) = g1.at(r, c);
        for (int c = 0; c < g2.cols(); ++c)
            joint.at(r, g1.cols() + c) = -g2.at(r, c);
    }
    std::vector<Int> rhs(b1.size());
    for (std::size_t i = 0; i < b1.size(); ++i)
        rhs[i] = b2[i] - b1[i];
    return member(joint, rhs).has_value();
}

}  // namespace clover
