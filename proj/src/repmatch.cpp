#include "spinflat/repmatch.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace spinflat {

namespace {

// position of parent index e within the sorted subgroup element list, or -1
int subgroup_pos(const std::vector<int>& elems, int e) {
    auto it = std::lower_bound(elems.begin(), elems.end(), e);
    if (it == elems.end() || *it != e) return -1;
    return static_cast<int>(it - elems.begin());
}

} // namespace

MonomialRep induce(const FiniteMatrixGroup& G, const SubgroupInfo& H,
                   const std::vector<int>& tau,
                   const std::vector<std::vector<int>>& classes) {
    int r = static_cast<int>(H.coset_reps.size());
    MonomialRep rep;
    rep.degree = r;

    // coset id of every parent element, for O(1) lookups below
    std::vector<int> coset_of(G.elements.size(), -1);
    for (int c = 0; c < r; ++c)
        for (int h : H.elements) coset_of[G.mul(H.coset_reps[c], h)] = c;

    auto matrix_of = [&](int g) {
        IntMat m(r);
        for (int i = 0; i < r; ++i) {
            int u = G.mul(g, H.coset_reps[i]);
            int j = coset_of[u];
            int h = G.mul(G.inv(H.coset_reps[j]), u);
            int pos = subgroup_pos(H.elements, h);
            if (pos < 0) throw InternalError("coset decomposition left the subgroup");
            m.at(j, i) = tau[pos];
        }
        return m;
    };

    rep.gen_matrices.reserve(G.gens.size());
    for (int g : G.gens) rep.gen_matrices.push_back(matrix_of(g));

    rep.character.reserve(classes.size());
    for (const auto& cls : classes) {
        int g = cls.front();
        i64 chi = 0;
        for (int i = 0; i < r; ++i) {
            int u = G.mul(g, H.coset_reps[i]);
            if (coset_of[u] != i) continue;
            int h = G.mul(G.inv(H.coset_reps[i]), u);
            int pos = subgroup_pos(H.elements, h);
            chi += tau[pos];
        }
        rep.character.push_back(chi);
    }
    return rep;
}

namespace {

struct Candidate {
    MonomialRep rep;
    int subgroup_index;
};

std::vector<Candidate> build_candidates(const FiniteMatrixGroup& G,
                                        const std::vector<std::vector<int>>& classes) {
    std::vector<SubgroupInfo> subs = subgroups_2group(G);
    std::vector<Candidate> cands;
    for (std::size_t si = 0; si < subs.size(); ++si) {
        auto chars = linear_characters_subset(G, subs[si].elements);
        for (std::size_t ti = 0; ti < chars.size(); ++ti) {
            Candidate c;
            c.rep = induce(G, subs[si], chars[ti], classes);
            c.rep.subgroup_index = static_cast<int>(si);
            c.rep.tau_index = static_cast<int>(ti);
            c.subgroup_index = static_cast<int>(si);
            cands.push_back(std::move(c));
        }
    }
    std::stable_sort(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) {
        if (a.rep.degree != b.rep.degree) return a.rep.degree < b.rep.degree;
        if (a.subgroup_index != b.subgroup_index) return a.subgroup_index < b.subgroup_index;
        return a.rep.character < b.rep.character;
    });
    // deduplicate by character: equal characters give equivalent summands
    std::vector<Candidate> dedup;
    std::map<std::vector<i64>, bool> seen;
    for (auto& c : cands) {
        if (seen.emplace(c.rep.character, true).second) dedup.push_back(std::move(c));
    }
    return dedup;
}

// depth-first multiset cover of the target character; candidates may repeat
void search_covers(const std::vector<Candidate>& cands, const std::vector<i64>& target,
                   int dim, std::vector<int>& chosen, int from,
                   const std::function<bool(const std::vector<int>&)>& emit, bool& stop) {
    if (stop) return;
    i64 degree_so_far = 0;
    for (int idx : chosen) degree_so_far += cands[idx].rep.degree;
    if (degree_so_far == dim) {
        std::vector<i64> sum(target.size(), 0);
        for (int idx : chosen)
            for (std::size_t c = 0; c < sum.size(); ++c)
                sum[c] += cands[idx].rep.character[c];
        if (sum == target && !emit(chosen)) stop = true;
        return;
    }
    for (std::size_t i = static_cast<std::size_t>(from); i < cands.size(); ++i) {
        if (degree_so_far + cands[i].rep.degree > dim) continue;
        chosen.push_back(static_cast<int>(i));
        search_covers(cands, target, dim, chosen, static_cast<int>(i), emit, stop);
        chosen.pop_back();
        if (stop) return;
    }
}

std::vector<i64> character_of_group(const FiniteMatrixGroup& G,
                                    const std::vector<std::vector<int>>& classes) {
    std::vector<i64> chi;
    chi.reserve(classes.size());
    for (const auto& cls : classes) chi.push_back(G.elements[cls.front()].trace());
    return chi;
}

OrthogonalIntegralRep assemble(const FiniteMatrixGroup& G, const std::vector<Candidate>& cands,
                               const std::vector<int>& chosen) {
    OrthogonalIntegralRep rep;
    int dim = G.n;
    for (std::size_t g = 0; g < G.gens.size(); ++g) {
        IntMat m(dim);
        int off = 0;
        for (int idx : chosen) {
            const IntMat& blk = cands[idx].rep.gen_matrices[g];
            for (int r = 0; r < blk.n; ++r)
                for (int c = 0; c < blk.n; ++c) m.at(off + r, off + c) = blk.at(r, c);
            off += blk.n;
        }
        rep.gen_matrices.push_back(std::move(m));
    }
    for (int idx : chosen) rep.blocks.push_back(cands[idx].rep);
    return rep;
}

void verify_rep(const FiniteMatrixGroup& G, const OrthogonalIntegralRep& rep) {
    for (const IntMat& m : rep.gen_matrices) {
        if (!m.is_signed_permutation())
            throw InternalError("matched representation is not by signed permutations");
        if (m.signed_permutation_det() != 1)
            throw InternalError("matched representation leaves SO(n,Z)");
    }
    RelatorSet rels = relators(G);
    for (const Word& w : rels.words) {
        IntMat acc = IntMat::identity(G.n);
        for (int letter : w) {
            int j = letter > 0 ? letter : -letter;
            const IntMat& m = rep.gen_matrices[j - 1];
            acc = acc * (letter > 0 ? m : m.inverse());
        }
        if (!acc.is_identity())
            throw InternalError("matched representation violates a group relator");
    }
}

} // namespace

OrthogonalIntegralRep match_representation(const FiniteMatrixGroup& G, int variant) {
    i64 ord = G.order();
    if (ord <= 0 || (ord & (ord - 1)) != 0)
        throw std::invalid_argument("representation matching requires a 2-group");
    for (const IntMat& m : G.elements)
        if (m.det() != 1)
            throw std::invalid_argument("representation matching requires determinant +1 "
                                        "(orientable holonomy)");

    auto classes = conjugacy_classes(G);
    std::vector<i64> target = character_of_group(G, classes);
    auto cands = build_candidates(G, classes);

    std::vector<int> picked;
    int seen = 0;
    bool stop = false;
    std::vector<int> chosen;
    search_covers(cands, target, G.n, chosen, 0,
                  [&](const std::vector<int>& cover) {
                      if (seen++ == variant) {
                          picked = cover;
                          return false; // stop
                      }
                      return true;
                  },
                  stop);
    if (picked.empty() && seen <= variant)
        throw InternalError("no induced-character cover matches the holonomy character");

    OrthogonalIntegralRep rep = assemble(G, cands, picked);
    verify_rep(G, rep);
    return rep;
}

int count_matchings(const FiniteMatrixGroup& G, int limit) {
    auto classes = conjugacy_classes(G);
    std::vector<i64> target = character_of_group(G, classes);
    auto cands = build_candidates(G, classes);
    int seen = 0;
    bool stop = false;
    std::vector<int> chosen;
    search_covers(cands, target, G.n, chosen, 0,
                  [&](const std::vector<int>&) { return ++seen < limit; }, stop);
    return seen;
}

} // namespace spinflat
