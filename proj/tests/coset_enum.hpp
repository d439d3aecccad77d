#pragma once

// Test-only oracle: Todd-Coxeter coset enumeration over the trivial subgroup.
// Used to check that a relator set really presents the group it was derived
// from: the enumeration must terminate with exactly |G| cosets. Kept out of
// the library on purpose so it stays independent of the code it checks.

#include "spinflat/word.hpp"

#include <functional>
#include <optional>
#include <utility>
#include <vector>

namespace coset_enum {

inline std::optional<long long>
presented_group_order(int ngens, const std::vector<spinflat::Word>& relators, int max_cosets) {
    const int L = 2 * ngens; // column 2(j-1) is generator j, 2(j-1)+1 its inverse
    auto col = [](int letter) {
        int j = letter > 0 ? letter : -letter;
        return 2 * (j - 1) + (letter > 0 ? 0 : 1);
    };
    auto inv_col = [](int c) { return c ^ 1; };

    std::vector<std::vector<int>> table;
    std::vector<int> parent;
    long long mutations = 0;

    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    auto new_coset = [&]() {
        table.emplace_back(L, -1);
        parent.push_back(static_cast<int>(parent.size()));
        ++mutations;
        return static_cast<int>(parent.size()) - 1;
    };
    new_coset();

    std::vector<std::pair<int, int>> pending;

    auto set_entry = [&](int a, int c, int b) {
        a = find(a);
        b = find(b);
        int cur = table[a][c] < 0 ? -1 : find(table[a][c]);
        if (cur < 0) {
            table[a][c] = b;
            ++mutations;
        } else if (cur != b) {
            pending.emplace_back(cur, b);
        }
        int back = table[b][inv_col(c)] < 0 ? -1 : find(table[b][inv_col(c)]);
        if (back < 0) {
            table[b][inv_col(c)] = a;
            ++mutations;
        } else if (back != a) {
            pending.emplace_back(back, a);
        }
    };

    auto process_pending = [&]() {
        while (!pending.empty()) {
            auto [x, y] = pending.back();
            pending.pop_back();
            x = find(x);
            y = find(y);
            if (x == y) continue;
            if (x > y) std::swap(x, y);
            parent[y] = x;
            ++mutations;
            for (int c = 0; c < L; ++c) {
                int t = table[y][c];
                if (t < 0) continue;
                t = find(t);
                int xr = find(x);
                int cur = table[xr][c] < 0 ? -1 : find(table[xr][c]);
                if (cur < 0) {
                    table[xr][c] = t;
                    int back = table[t][inv_col(c)] < 0 ? -1 : find(table[t][inv_col(c)]);
                    if (back < 0)
                        table[t][inv_col(c)] = xr;
                    else if (back != xr)
                        pending.emplace_back(back, xr);
                } else if (cur != t) {
                    pending.emplace_back(cur, t);
                }
            }
        }
    };

    // Scan relator r from coset start; returns false when the coset cap is hit.
    auto scan = [&](int start, const spinflat::Word& r) {
        while (true) {
            start = find(start);
            int f = start;
            std::size_t i = 0;
            while (i < r.size()) {
                int nxt = table[f][col(r[i])];
                if (nxt < 0) break;
                f = find(nxt);
                ++i;
            }
            if (i == r.size()) {
                if (f != start) {
                    pending.emplace_back(f, start);
                    process_pending();
                }
                return true;
            }
            int b = start;
            std::size_t j = r.size();
            while (j > i) {
                int nxt = table[b][inv_col(col(r[j - 1]))];
                if (nxt < 0) break;
                b = find(nxt);
                --j;
            }
            if (j == i) {
                if (f != b) {
                    pending.emplace_back(f, b);
                    process_pending();
                }
                return true;
            }
            if (j == i + 1) {
                set_entry(f, col(r[i]), b);
                process_pending();
                return true;
            }
            if (static_cast<int>(table.size()) >= max_cosets) return false;
            set_entry(f, col(r[i]), new_coset());
            process_pending();
        }
    };

    while (true) {
        long long before = mutations;
        for (std::size_t c = 0; c < table.size(); ++c) {
            if (find(static_cast<int>(c)) != static_cast<int>(c)) continue;
            for (const spinflat::Word& r : relators)
                if (!scan(static_cast<int>(c), r)) return std::nullopt;
        }
        for (std::size_t c = 0; c < table.size(); ++c) {
            int cc = static_cast<int>(c);
            if (find(cc) != cc) continue;
            for (int l = 0; l < L; ++l) {
                cc = find(cc);
                if (table[cc][l] >= 0) continue;
                if (static_cast<int>(table.size()) >= max_cosets) return std::nullopt;
                set_entry(cc, l, new_coset());
                process_pending();
            }
        }
        if (mutations == before) break;
    }

    long long live = 0;
    for (std::size_t c = 0; c < parent.size(); ++c)
        if (find(static_cast<int>(c)) == static_cast<int>(c)) ++live;
    return live;
}

} // namespace coset_enum
