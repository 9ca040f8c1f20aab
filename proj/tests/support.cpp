#include "support.hpp"

#include <stdexcept>

namespace clover::testsupport {

BruteSeries brute_one() {
    return {{Monomial{}, Int(1)}};
}

BruteSeries brute_letter(int index, int sign, int degree_cap) {
    BruteSeries s = brute_one();
    if (sign > 0) {
        s[{index}] = 1;
        return s;
    }
    Monomial m;
    Int c = 1;
    for (int d = 1; d <= degree_cap; ++d) {
        m.push_back(index);
        c = -c;
        s[m] = c;
    }
    return s;
}

BruteSeries brute_mul(const BruteSeries& a, const BruteSeries& b, int degree_cap) {
    BruteSeries r;
    for (const auto& [ma, ca] : a) {
        for (const auto& [mb, cb] : b) {
            if (static_cast<int>(ma.size() + mb.size()) > degree_cap)
                continue;
            Monomial m = ma;
            m.insert(m.end(), mb.begin(), mb.end());
            r[m] += ca * cb;
        }
    }
    for (auto it = r.begin(); it != r.end();)
        it = it->second == 0 ? r.erase(it) : std::next(it);
    return r;
}

BruteSeries brute_expand(const GroupWord& w, int degree_cap) {
    BruteSeries r = brute_one();
    for (const Letter& l : w.letters())
        r = brute_mul(r, brute_letter(l.index, l.sign, degree_cap), degree_cap);
    return r;
}

BruteSeries to_brute(const MagnusSeries& s) {
    BruteSeries r;
    s.for_each_term([&](const Monomial& m, const Int& c) { r[m] = c; });
    return r;
}

Int bareiss_determinant(const IntMatrix& m) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("determinant needs a square matrix");
    const int n = m.rows();
    if (n == 0)
        return 1;
    IntMatrix a = m;
    Int prev = 1;
    Int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a.at(k, k) == 0) {
            int swap_row = -1;
            for (int r = k + 1; r < n; ++r)
                if (a.at(r, k) != 0) {
                    swap_row = r;
                    break;
                }
            if (swap_row < 0)
                return 0;
            for (int c = 0; c < n; ++c)
                std::swap(a.at(k, c), a.at(swap_row, c));
            sign = -sign;
        }
        for (int r = k + 1; r < n; ++r)
            for (int c = k + 1; c < n; ++c)
                a.at(r, c) = (a.at(r, c) * a.at(k, k) - a.at(r, k) * a.at(k, c)) / prev;
        prev = a.at(k, k);
    }
    return sign * a.at(n - 1, n - 1);
}

IntMatrix example_lattice_rows(const std::vector<std::vector<Int>>& mu2) {
    const Int A = mu2[1][4] * mu2[2][3];
    const Int B = mu2[1][3] * mu2[2][4];
    const Int C = mu2[1][2] * mu2[3][4];
    // columns: pairs 12, 13, 14, 23, 24, 34
    IntMatrix rows(6, 6);
    auto set_row = [&](int r, Int m12, Int m13, Int m14, Int m23, Int m24, Int m34) {
        rows.at(r, 0) = std::move(m12);
        rows.at(r, 1) = std::move(m13);
        rows.at(r, 2) = std::move(m14);
        rows.at(r, 3) = std::move(m23);
        rows.at(r, 4) = std::move(m24);
        rows.at(r, 5) = std::move(m34);
    };
    // X_123: A (m13 - m34 - m12 + m24) + C (m24 - m23 - m14 + m13)
    set_row(0, -A, A + C, -C, -C, A + C, -A);
    // X_132: A (m34 - m13 - m24 + m12) + B (m34 - m23 - m14 + m12)
    set_row(1, A + B, -A, -B, -B, -A, A + B);
    // X_213: B (m23 - m34 - m12 + m14) + C (m23 - m24 - m13 + m14)
    set_row(2, -B, -C, B + C, B + C, -C, -B);
    // X_231: same displayed expression as X_132
    set_row(3, A + B, -A, -B, -B, -A, A + B);
    // X_312: same displayed expression as X_213
    set_row(4, -B, -C, B + C, B + C, -C, -B);
    // X_321: same displayed expression as X_123
    set_row(5, -A, A + C, -C, -C, A + C, -A);
    return rows;
}

}  // namespace clover::testsupport
