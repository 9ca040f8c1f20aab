#pragma once

#include <vector>

namespace clover {

// One generator occurrence in a free-group word.
struct Letter {
    int index;  // generator number, 1-based
    int sign;   // +1 or -1

    friend bool operator==(const Letter& a, const Letter& b) {
        return a.index == b.index && a.sign == b.sign;
    }
};

// A word in the free group on rank() meridian generators. Words are stored
// letter by letter and are immutable after construction; they are not
// required to be freely reduced.
class GroupWord {
public:
    GroupWord(int rank, std::vector<Letter> letters);

    static GroupWord identity(int rank);
    static GroupWord generator(int rank, int index, int sign = +1);

    int rank() const { return rank_; }
    const std::vector<Letter>& letters() const { return letters_; }
    bool empty() const { return letters_.empty(); }
    std::size_t size() const { return letters_.size(); }

    friend bool operator==(const GroupWord& a, const GroupWord& b) {
        return a.rank_ == b.rank_ && a.letters_ == b.letters_;
    }

private:
    int rank_;
    std::vector<Letter> letters_;
};

// Free reduction; idempotent.
GroupWord reduce(const GroupWord& w);

// w^-1: reversed letters with flipped signs.
GroupWord invert(const GroupWord& w);

GroupWord concat(const GroupWord& a, const GroupWord& b);
GroupWord power(const GroupWord& w, int e);

// [x, y] = x^-1 y^-1 x y, freely reduced.
GroupWord commutator(const GroupWord& x, const GroupWord& y);

// g w g^-1, freely reduced.
GroupWord conjugate(const GroupWord& w, const GroupWord& g);

// Signed occurrence count of generator i.
long long exponent_sum(const GroupWord& w, int i);

}  // namespace clover
