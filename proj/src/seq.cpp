#include "clover/seq.hpp"

#include <algorithm>

namespace clover {

bool non_repeated(const IndexSeq& s) {
    for (size_t i = 0; i < s.size(); ++i)
        for (size_t j = i + 1; j < s.size(); ++j)
            if (s[i] == s[j])
                return false;
    return true;
}

namespace {

void enumerate(int n, int length, bool nr, IndexSeq& cur, std::vector<IndexSeq>& out) {
    if (static_cast<int>(cur.size()) == length) {
        out.push_back(cur);
        return;
    }
    for (int i = 1; i <= n; ++i) {
        if (nr && std::find(cur.begin(), cur.end(), i) != cur.end())
            continue;
        cur.push_back(i);
        enumerate(n, length, nr, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<IndexSeq> all_sequences(int n, int length, bool non_repeated_only) {
    std::vector<IndexSeq> out;
    if (length < 0 || n < 1)
        return out;
    IndexSeq cur;
    enumerate(n, length, non_repeated_only, cur, out);
    return out;
}

IndexSeq seq_join(const IndexSeq& a, const IndexSeq& b) {
    IndexSeq r = a;
    r.insert(r.end(), b.begin(), b.end());
    return r;
}

IndexSeq seq_append(IndexSeq a, int index) {
    a.push_back(index);
    return a;
}

}  // namespace clover
