#pragma once

#include <vector>

namespace spinflat {

/// Word over group generator letters: +j is generator j (1-based),
/// -j is its inverse. The empty word is the identity.
using Word = std::vector<int>;

/// Cancels adjacent inverse pairs until stable.
inline Word free_reduce(const Word& w) {
    Word out;
    for (int letter : w) {
        if (!out.empty() && out.back() == -letter)
            out.pop_back();
        else
            out.push_back(letter);
    }
    return out;
}

inline Word inverse_word(const Word& w) {
    Word out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(-*it);
    return out;
}

} // namespace spinflat
