#include "clover/word.hpp"

#include <stdexcept>
#include <string>

namespace clover {

GroupWord::GroupWord(int rank, std::vector<Letter> letters)
    : rank_(rank), letters_(std::move(letters)) {
    if (rank < 0)
        throw std::invalid_argument("word rank must be nonnegative");
    for (const Letter& l : letters_) {
        if (l.index < 1 || l.index > rank_)
            throw std::invalid_argument("letter index " + std::to_string(l.index) +
                                        " out of range 1.." + std::to_string(rank_));
        if (l.sign != 1 && l.sign != -1)
            throw std::invalid_argument("letter sign must be +1 or -1");
    }
}

GroupWord GroupWord::identity(int rank) {
    return GroupWord(rank, {});
}

GroupWord GroupWord::generator(int rank, int index, int sign) {
    return GroupWord(rank, {Letter{index, sign}});
}

GroupWord reduce(const GroupWord& w) {
    std::vector<Letter> out;
    out.reserve(w.size());
    for (const Letter& l : w.letters()) {
        if (!out.empty() && out.back().index == l.index && out.back().sign == -l.sign)
            out.pop_back();
        else
            out.push_back(l);
    }
    return GroupWord(w.rank(), std::move(out));
}

GroupWord invert(const GroupWord& w) {
    std::vector<Letter> out;
    out.reserve(w.size());
    for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it)
        out.push_back(Letter{it->index, -it->sign});
    return GroupWord(w.rank(), std::move(out));
}

GroupWord concat(const GroupWord& a, const GroupWord& b) {
    if (a.rank() != b.rank())
        throw std::invalid_argument("cannot concatenate words of different rank");
    std::vector<Letter> out = a.letters();
    out.insert(out.end(), b.letters().begin(), b.letters().end());
    return GroupWord(a.rank(), std::move(out));
}

GroupWord power(const GroupWord& w, int e) {
    GroupWord base = e >= 0 ? w : invert(w);
    int reps = e >= 0 ? e : -e;
    std::vector<Letter> out;
    out.reserve(w.size() * static_cast<std::size_t>(reps));
    for (int t = 0; t < reps; ++t)
        out.insert(out.end(), base.letters().begin(), base.letters().end());
    return GroupWord(w.rank(), std::move(out));
}

GroupWord commutator(const GroupWord& x, const GroupWord& y) {
    return reduce(concat(concat(invert(x), invert(y)), concat(x, y)));
}

GroupWord conjugate(const GroupWord& w, const GroupWord& g) {
    return reduce(concat(concat(g, w), invert(g)));
}

long long exponent_sum(const GroupWord& w, int i) {
    if (i < 1 || i > w.rank())
        throw std::invalid_argument("generator index out of range");
    long long s = 0;
    for (const Letter& l : w.letters())
        if (l.index == i)
            s += l.sign;
    return s;
}

}  // namespace clover
