#pragma once

#include <algorithm>
#include <cstdlib>
#include <vector>

namespace potency {

/// A word in a free group: nonzero letters, +k = generator k, -k = its
/// inverse, generators 1-based.
using Word = std::vector<int>;

inline Word free_reduce(const Word& w) {
    Word out;
    out.reserve(w.size());
    for (int x : w) {
        if (!out.empty() && out.back() == -x)
            out.pop_back();
        else
            out.push_back(x);
    }
    return out;
}

inline Word cyclically_reduce(const Word& w) {
    Word v = free_reduce(w);
    std::size_t lo = 0, hi = v.size();
    while (hi - lo >= 2 && v[lo] == -v[hi - 1]) {
        ++lo;
        --hi;
    }
    return Word(v.begin() + static_cast<std::ptrdiff_t>(lo),
                v.begin() + static_cast<std::ptrdiff_t>(hi));
}

inline Word inverse_word(const Word& w) {
    Word out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(-*it);
    return out;
}

/// Canonical representative of a relator up to cyclic rotation and inversion:
/// the lexicographically smallest rotation of the word or its inverse.
inline Word canonical_relator(const Word& w) {
    Word v = cyclically_reduce(w);
    if (v.empty()) return v;
    Word best;
    for (const Word& base : {v, inverse_word(v)}) {
        for (std::size_t i = 0; i < base.size(); ++i) {
            Word rot(base.begin() + static_cast<std::ptrdiff_t>(i), base.end());
            rot.insert(rot.end(), base.begin(), base.begin() + static_cast<std::ptrdiff_t>(i));
            if (best.empty() || rot < best) best = std::move(rot);
        }
    }
    return best;
}

/// Replaces every occurrence of generator g by `repl` (and g^-1 by its
/// inverse), freely reducing the result.
inline Word substitute_generator(const Word& w, int g, const Word& repl) {
    Word inv = inverse_word(repl);
    Word out;
    for (int x : w) {
        if (x == g)
            out.insert(out.end(), repl.begin(), repl.end());
        else if (x == -g)
            out.insert(out.end(), inv.begin(), inv.end());
        else
            out.push_back(x);
    }
    return free_reduce(out);
}

}  // namespace potency
