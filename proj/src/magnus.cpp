#include "clover/magnus.hpp"

#include <stdexcept>
#include <string>

namespace clover {

namespace {

constexpr long long kMaxPositions = 8'000'000;

void check_compatible(const MagnusSeries& a, const MagnusSeries& b) {
    if (a.rank() != b.rank())
        throw std::invalid_argument("series rank mismatch");
    if (a.degree_cap() != b.degree_cap())
        throw std::invalid_argument("series degree cap mismatch");
}

}  // namespace

MagnusSeries::MagnusSeries(int rank, int degree_cap) : n_(rank), q_(degree_cap) {
    if (rank < 1)
        throw std::invalid_argument("series rank must be >= 1");
    if (degree_cap < 1)
        throw std::invalid_argument("series degree cap must be >= 1");
    pw_.resize(q_ + 1);
    off_.resize(q_ + 2);
    pw_[0] = 1;
    off_[0] = 0;
    for (int d = 0; d <= q_; ++d) {
        if (d > 0) {
            if (pw_[d - 1] > kMaxPositions / n_)
                throw std::invalid_argument("truncation table too large for rank " +
                                            std::to_string(n_) + ", degree " + std::to_string(q_));
            pw_[d] = pw_[d - 1] * n_;
        }
        off_[d + 1] = off_[d] + pw_[d];
        if (off_[d + 1] > kMaxPositions)
            throw std::invalid_argument("truncation table too large for rank " +
                                        std::to_string(n_) + ", degree " + std::to_string(q_));
    }
    c_.resize(static_cast<std::size_t>(off_[q_ + 1]));
}

MagnusSeries MagnusSeries::one(int rank, int degree_cap) {
    MagnusSeries s(rank, degree_cap);
    s.c_[0] = 1;
    return s;
}

MagnusSeries MagnusSeries::variable(int rank, int degree_cap, int index) {
    MagnusSeries s(rank, degree_cap);
    s.set_coeff({index}, 1);
    return s;
}

std::size_t MagnusSeries::position_of(const Monomial& m) const {
    int d = static_cast<int>(m.size());
    if (d > q_)
        throw std::invalid_argument("monomial degree " + std::to_string(d) +
                                    " exceeds degree cap " + std::to_string(q_));
    long long r = 0;
    for (int idx : m) {
        if (idx < 1 || idx > n_)
            throw std::invalid_argument("monomial index out of range");
        r = r * n_ + (idx - 1);
    }
    return static_cast<std::size_t>(off_[d] + r);
}

Monomial MagnusSeries::monomial_at(std::size_t pos) const {
    int d = 0;
    while (static_cast<long long>(pos) >= off_[d + 1])
        ++d;
    long long r = static_cast<long long>(pos) - off_[d];
    Monomial m(d);
    for (int t = d - 1; t >= 0; --t) {
        m[t] = static_cast<int>(r % n_) + 1;
        r /= n_;
    }
    return m;
}

const Int& MagnusSeries::coeff(const Monomial& m) const {
    return c_[position_of(m)];
}

void MagnusSeries::set_coeff(const Monomial& m, Int v) {
    c_[position_of(m)] = std::move(v);
}

void MagnusSeries::add_coeff(const Monomial& m, const Int& v) {
    c_[position_of(m)] += v;
}

bool MagnusSeries::is_zero() const {
    for (const Int& v : c_)
        if (v != 0)
            return false;
    return true;
}

MagnusSeries add(const MagnusSeries& a, const MagnusSeries& b) {
    check_compatible(a, b);
    MagnusSeries r = a;
    for (std::size_t i = 0; i < r.c_.size(); ++i)
        r.c_[i] += b.c_[i];
    return r;
}

MagnusSeries sub(const MagnusSeries& a, const MagnusSeries& b) {
    check_compatible(a, b);
    MagnusSeries r = a;
    for (std::size_t i = 0; i < r.c_.size(); ++i)
        r.c_[i] -= b.c_[i];
    return r;
}

MagnusSeries scale(const MagnusSeries& a, const Int& c) {
    MagnusSeries r = a;
    for (Int& v : r.c_)
        v *= c;
    return r;
}

MagnusSeries mul(const MagnusSeries& a, const MagnusSeries& b) {
    check_compatible(a, b);
    const int n = a.rank(), q = a.degree_cap();
    MagnusSeries r(n, q);
    for (int da = 0; da <= q; ++da) {
        for (long long ra = 0; ra < a.pw_[da]; ++ra) {
            const Int& ca = a.c_[static_cast<std::size_t>(a.off_[da] + ra)];
            if (ca == 0)
                continue;
            for (int db = 0; db + da <= q; ++db) {
                const long long out_base = r.off_[da + db] + ra * a.pw_[db];
                for (long long rb = 0; rb < b.pw_[db]; ++rb) {
                    const Int& cb = b.c_[static_cast<std::size_t>(b.off_[db] + rb)];
                    if (cb == 0)
                        continue;
                    r.c_[static_cast<std::size_t>(out_base + rb)] += ca * cb;
                }
            }
        }
    }
    return r;
}

MagnusSeries letter_series(int rank, int degree_cap, int index, int sign) {
    MagnusSeries s = MagnusSeries::one(rank, degree_cap);
    if (sign == +1) {
        s.set_coeff({index}, 1);
        return s;
    }
    if (sign != -1)
        throw std::invalid_argument("letter sign must be +1 or -1");
    Monomial m;
    Int c = 1;
    for (int d = 1; d <= degree_cap; ++d) {
        m.push_back(index);
        c = -c;
        s.set_coeff(m, c);
    }
    return s;
}

MagnusSeries expand(const GroupWord& w, int degree_cap) {
    MagnusSeries r = MagnusSeries::one(w.rank(), degree_cap);
    for (const Letter& l : w.letters())
        r = mul(r, letter_series(w.rank(), degree_cap, l.index, l.sign));
    return r;
}

MagnusSeries inverse(const MagnusSeries& a) {
    if (a.constant_term() != 1)
        throw std::invalid_argument("series inverse requires constant term 1");
    const MagnusSeries unit = MagnusSeries::one(a.rank(), a.degree_cap());
    MagnusSeries e = sub(unit, a);  // degree >= 1
    MagnusSeries r = unit;
    MagnusSeries p = e;
    for (int t = 1; t <= a.degree_cap() && !p.is_zero(); ++t) {
        r = add(r, p);
        if (t < a.degree_cap())
            p = mul(p, e);
    }
    return r;
}

Int coefficient(const MagnusSeries& a, const Monomial& m) {
    return a.coeff(m);
}

MagnusSeries substitute(const MagnusSeries& f, const std::vector<MagnusSeries>& images) {
    if (static_cast<int>(images.size()) != f.rank())
        throw std::invalid_argument("substitute needs one image per variable");
    for (const MagnusSeries& g : images) {
        check_compatible(f, g);
        if (g.constant_term() != 0)
            throw std::invalid_argument("substitute images must have constant term 0");
    }
    MagnusSeries r(f.rank(), f.degree_cap());
    f.for_each_term([&](const Monomial& m, const Int& c) {
        if (m.empty()) {
            r.add_coeff({}, c);
            return;
        }
        MagnusSeries p = images[static_cast<std::size_t>(m[0] - 1)];
        for (std::size_t t = 1; t < m.size() && !p.is_zero(); ++t)
            p = mul(p, images[static_cast<std::size_t>(m[t] - 1)]);
        r = add(r, scale(p, c));
    });
    return r;
}

MagnusSeries commutator_series(const MagnusSeries& a, const MagnusSeries& b) {
    if (a.constant_term() != 1 || b.constant_term() != 1)
        throw std::invalid_argument("commutator series requires constant terms 1");
    return mul(mul(inverse(a), inverse(b)), mul(a, b));
}

MagnusSeries eval_word(const GroupWord& w, const std::vector<MagnusSeries>& images) {
    if (static_cast<int>(images.size()) != w.rank())
        throw std::invalid_argument("eval_word needs one image per generator");
    if (images.empty())
        throw std::invalid_argument("eval_word requires rank >= 1");
    std::vector<const MagnusSeries*> inv_cache(images.size(), nullptr);
    std::vector<MagnusSeries> inv_store;
    inv_store.reserve(images.size());
    MagnusSeries r = MagnusSeries::one(images[0].rank(), images[0].degree_cap());
    for (const Letter& l : w.letters()) {
        const std::size_t i = static_cast<std::size_t>(l.index - 1);
        if (l.sign == +1) {
            r = mul(r, images[i]);
        } else {
            if (inv_cache[i] == nullptr) {
                inv_store.push_back(inverse(images[i]));
                inv_cache[i] = &inv_store.back();
            }
            r = mul(r, *inv_cache[i]);
        }
    }
    return r;
}

}  // namespace clover
