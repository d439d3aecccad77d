#include "spinflat/finite_group.hpp"

#include <algorithm>
#include <set>

namespace spinflat {

int FiniteMatrixGroup::index_of(const IntMat& m) const {
    auto it = index.find(m.a);
    return it == index.end() ? -1 : it->second;
}

int FiniteMatrixGroup::mul(int i, int j) const {
    if (!mult_table.empty()) return mult_table[static_cast<std::size_t>(i) * elements.size() + j];
    int k = index_of(elements[i] * elements[j]);
    if (k < 0) throw InternalError("group is not closed under multiplication");
    return k;
}

int FiniteMatrixGroup::conjugate(int g, int x) const { return mul(mul(g, x), inverse[g]); }

i64 FiniteMatrixGroup::element_order(int i) const {
    i64 ord = 1;
    int p = i;
    while (p != 0) {
        p = mul(p, i);
        ++ord;
        if (ord > order()) throw InternalError("element order exceeds group order");
    }
    return ord;
}

int FiniteMatrixGroup::eval_word(const Word& w) const {
    int acc = 0;
    for (int letter : w) {
        int j = letter > 0 ? letter : -letter;
        if (j < 1 || j > num_letters()) throw InternalError("word letter out of range");
        int g = gens[j - 1];
        acc = mul(acc, letter > 0 ? g : inverse[g]);
    }
    return acc;
}

FiniteMatrixGroup close(const std::vector<IntMat>& generators, int n, i64 cap) {
    for (const IntMat& g : generators)
        if (g.n != n) throw InternalError("generator dimension mismatch");
    FiniteMatrixGroup G;
    G.n = n;
    G.elements.push_back(IntMat::identity(n));
    G.words.push_back({});
    G.index.emplace(G.elements[0].a, 0);

    for (std::size_t i = 0; i < G.elements.size(); ++i) {
        for (std::size_t j = 0; j < generators.size(); ++j) {
            IntMat m = G.elements[i] * generators[j];
            if (G.index.find(m.a) != G.index.end()) continue;
            if (static_cast<i64>(G.elements.size()) >= cap)
                throw CapExceededError("group closure exceeded cap of " + std::to_string(cap) +
                                       " elements");
            int idx = static_cast<int>(G.elements.size());
            G.index.emplace(m.a, idx);
            Word w = G.words[i];
            w.push_back(static_cast<int>(j) + 1);
            G.words.push_back(std::move(w));
            G.elements.push_back(std::move(m));
        }
    }

    G.gens.reserve(generators.size());
    for (const IntMat& g : generators) G.gens.push_back(G.index_of(g));

    G.inverse.resize(G.elements.size());
    for (std::size_t i = 0; i < G.elements.size(); ++i) {
        int vi = G.index_of(G.elements[i].inverse());
        if (vi < 0) throw InternalError("closure is missing an inverse");
        G.inverse[i] = vi;
    }

    // dense product table for the sizes the subgroup/character machinery sees
    if (G.order() <= 256) {
        std::size_t sz = G.elements.size();
        G.mult_table.resize(sz * sz);
        for (std::size_t i = 0; i < sz; ++i)
            for (std::size_t j = 0; j < sz; ++j) {
                int k = G.index_of(G.elements[i] * G.elements[j]);
                if (k < 0) throw InternalError("closure is missing a product");
                G.mult_table[i * sz + j] = k;
            }
    }
    return G;
}

namespace {

bool is_power_of_two(i64 x) { return x > 0 && (x & (x - 1)) == 0; }

i64 two_part(i64 x) {
    i64 t = 1;
    while (x % 2 == 0) {
        x /= 2;
        t *= 2;
    }
    return t;
}

// Closure of a set of element indices under the group multiplication.
std::vector<int> index_closure(const FiniteMatrixGroup& G, std::vector<int> seed) {
    std::set<int> have(seed.begin(), seed.end());
    have.insert(0);
    std::vector<int> queue(have.begin(), have.end());
    for (std::size_t i = 0; i < queue.size(); ++i)
        for (std::size_t j = 0; j < queue.size(); ++j) {
            int p = G.mul(queue[i], queue[j]);
            if (have.insert(p).second) queue.push_back(p);
            p = G.mul(queue[j], queue[i]);
            if (have.insert(p).second) queue.push_back(p);
        }
    return std::vector<int>(have.begin(), have.end());
}

} // namespace

FiniteMatrixGroup sylow2(const FiniteMatrixGroup& G) {
    i64 target = two_part(G.order());
    if (target == 1) {
        FiniteMatrixGroup S = close({}, G.n);
        return S;
    }

    std::vector<i64> orders(G.elements.size());
    for (std::size_t i = 0; i < G.elements.size(); ++i) orders[i] = G.element_order(static_cast<int>(i));

    // seed: first element whose order is the largest occurring power of two
    i64 best = 1;
    for (i64 o : orders)
        if (is_power_of_two(o) && o > best) best = o;
    int seed = -1;
    for (std::size_t i = 0; i < orders.size(); ++i)
        if (orders[i] == best) {
            seed = static_cast<int>(i);
            break;
        }

    std::vector<int> gens_idx{seed};
    std::vector<int> H = index_closure(G, gens_idx);

    while (static_cast<i64>(H.size()) < target) {
        int found = -1;
        std::set<int> inH(H.begin(), H.end());
        for (std::size_t x = 1; x < G.elements.size() && found < 0; ++x) {
            int xi = static_cast<int>(x);
            if (inH.count(xi) || !is_power_of_two(orders[x])) continue;
            bool normalizes = true;
            for (int h : H)
                if (!inH.count(G.conjugate(xi, h))) {
                    normalizes = false;
                    break;
                }
            if (normalizes) found = xi;
        }
        if (found < 0) throw InternalError("Sylow ascent found no normalizing 2-element");
        gens_idx.push_back(found);
        H = index_closure(G, gens_idx);
        if (!is_power_of_two(static_cast<i64>(H.size())))
            throw InternalError("Sylow ascent produced a non-2-group");
    }

    std::vector<IntMat> gen_mats;
    gen_mats.reserve(gens_idx.size());
    for (int gi : gens_idx) gen_mats.push_back(G.elements[gi]);
    FiniteMatrixGroup S = close(gen_mats, G.n);
    if (S.order() != target) throw InternalError("Sylow subgroup has wrong order");
    for (int gi : gens_idx) S.gen_parent_words.push_back(G.words[gi]);
    return S;
}

std::vector<SubgroupInfo> subgroups_2group(const FiniteMatrixGroup& G) {
    if (!is_power_of_two(G.order()))
        throw std::invalid_argument("subgroup enumeration requires a 2-group");

    std::vector<std::vector<std::vector<int>>> levels; // levels[k]: subgroups of order 2^k
    levels.push_back({{0}});
    while ((static_cast<i64>(1) << (levels.size() - 1)) < G.order()) {
        std::set<std::vector<int>> next;
        for (const std::vector<int>& H : levels.back()) {
            std::set<int> inH(H.begin(), H.end());
            for (std::size_t x = 1; x < G.elements.size(); ++x) {
                int xi = static_cast<int>(x);
                if (inH.count(xi)) continue;
                if (!inH.count(G.mul(xi, xi))) continue;
                bool normalizes = true;
                for (int h : H)
                    if (!inH.count(G.conjugate(xi, h))) {
                        normalizes = false;
                        break;
                    }
                if (!normalizes) continue;
                std::vector<int> S = H;
                for (int h : H) S.push_back(G.mul(xi, h));
                std::sort(S.begin(), S.end());
                next.insert(std::move(S));
            }
        }
        levels.emplace_back(next.begin(), next.end());
    }

    std::vector<SubgroupInfo> out;
    for (const auto& level : levels)
        for (const std::vector<int>& H : level) {
            SubgroupInfo info;
            info.elements = H;
            std::set<int> inH(H.begin(), H.end());
            std::vector<int> coset_of(G.elements.size(), -1);
            for (std::size_t e = 0; e < G.elements.size(); ++e) {
                if (coset_of[e] >= 0) continue;
                int rep = static_cast<int>(e);
                int c = static_cast<int>(info.coset_reps.size());
                info.coset_reps.push_back(rep);
                for (int h : H) coset_of[G.mul(rep, h)] = c;
            }
            out.push_back(std::move(info));
        }
    return out;
}

std::vector<std::vector<int>> conjugacy_classes(const FiniteMatrixGroup& G) {
    std::vector<std::vector<int>> classes;
    std::vector<bool> assigned(G.elements.size(), false);
    for (std::size_t x = 0; x < G.elements.size(); ++x) {
        if (assigned[x]) continue;
        std::set<int> orbit;
        for (std::size_t g = 0; g < G.elements.size(); ++g)
            orbit.insert(G.conjugate(static_cast<int>(g), static_cast<int>(x)));
        for (int y : orbit) assigned[y] = true;
        classes.emplace_back(orbit.begin(), orbit.end());
    }
    return classes;
}

RelatorSet relators(const FiniteMatrixGroup& G) {
    RelatorSet rs;
    std::set<Word> seen;
    for (std::size_t i = 0; i < G.elements.size(); ++i) {
        for (int j = 1; j <= G.num_letters(); ++j) {
            int t = G.mul(static_cast<int>(i), G.gens[j - 1]);
            // tree edge: target's stored word is exactly w_i + [j]
            const Word& wi = G.words[i];
            const Word& wt = G.words[t];
            if (wt.size() == wi.size() + 1 &&
                std::equal(wi.begin(), wi.end(), wt.begin()) && wt.back() == j)
                continue;
            Word rel = wi;
            rel.push_back(j);
            Word back = inverse_word(wt);
            rel.insert(rel.end(), back.begin(), back.end());
            rel = free_reduce(rel);
            if (rel.empty()) continue;
            if (seen.insert(rel).second) rs.words.push_back(std::move(rel));
        }
    }
    return rs;
}

std::vector<std::vector<int>> linear_characters_subset(const FiniteMatrixGroup& G,
                                                       const std::vector<int>& subset) {
    // N = subgroup generated by all squares and commutators of the subgroup;
    // characters into {+-1} are exactly the characters of the F2-space H/N.
    std::vector<int> nk_seed;
    for (int a : subset) {
        nk_seed.push_back(G.mul(a, a));
        for (int b : subset) {
            int comm = G.mul(G.mul(a, b), G.mul(G.inv(a), G.inv(b)));
            nk_seed.push_back(comm);
        }
    }
    std::vector<int> N = index_closure(G, nk_seed);

    std::map<int, unsigned> coord;
    for (int x : N) coord[x] = 0;
    std::vector<int> basis;
    for (int e : subset) {
        if (coord.count(e)) continue;
        unsigned bit = 1u << basis.size();
        basis.push_back(e);
        std::vector<std::pair<int, unsigned>> snapshot(coord.begin(), coord.end());
        for (const auto& [x, c] : snapshot) coord[G.mul(x, e)] = c | bit;
    }
    if (coord.size() != subset.size())
        throw InternalError("character space construction did not cover the subgroup");

    int d = static_cast<int>(basis.size());
    std::vector<std::vector<int>> chars;
    chars.reserve(1u << d);
    for (unsigned m = 0; m < (1u << d); ++m) {
        std::vector<int> vals;
        vals.reserve(subset.size());
        for (int e : subset)
            vals.push_back(__builtin_popcount(coord[e] & m) % 2 ? -1 : +1);
        chars.push_back(std::move(vals));
    }
    return chars;
}

std::vector<std::vector<int>> linear_characters(const FiniteMatrixGroup& H) {
    std::vector<int> all(H.elements.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
    return linear_characters_subset(H, all);
}

} // namespace spinflat
