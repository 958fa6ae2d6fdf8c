#pragma once

#include <algorithm>
#include <map>
#include <tuple>
#include <vector>

#include "chainform/integer.hpp"
#include "chainform/poset.hpp"

namespace chainform {

namespace detail {

// d-vector of the interval [x,y] inside P: descent-set elements -> count.
// This determines the interval's f-vector and vice versa.
using IntervalKey = std::map<std::vector<int>, Int>;

inline IntervalKey interval_descents(const LabeledPoset& P, int x, int y) {
    IntervalKey key;
    std::vector<int> word;
    auto dfs = [&](auto&& self, int z) -> void {
        if (z == y) {
            std::vector<int> des;
            for (std::size_t j = 1; j < word.size(); ++j)
                if (word[j - 1] > word[j]) des.push_back(static_cast<int>(j));
            ++key[des];
            return;
        }
        for (const auto& [w, l] : P.up(z)) {
            if (!P.leq(w, y)) continue;
            word.push_back(l);
            self(self, w);
            word.pop_back();
        }
    };
    dfs(dfs, x);
    return key;
}

// All interval d-vectors of P, interned through `dict` so keys compare as
// small integers; kid[x][y] = -1 when x <= y fails.
inline std::vector<std::vector<int>> intern_interval_keys(
    const LabeledPoset& P, std::map<IntervalKey, int>& dict) {
    int n = P.num_elements();
    std::vector<std::vector<int>> kid(n, std::vector<int>(n, -1));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (!P.leq(x, y)) continue;
            IntervalKey k = interval_descents(P, x, y);
            auto [it, ins] = dict.emplace(std::move(k), static_cast<int>(dict.size()));
            kid[x][y] = it->second;
        }
    return kid;
}

}  // namespace detail

// True iff there is a poset isomorphism P -> Q under which every interval
// and its image have identical f-vectors. Exhaustive backtracking search,
// pruned by per-element interval invariants; intended for desk scale
// (|P| <= 40, rk <= 6 in practice).
inline bool label_equivalent(const LabeledPoset& P, const LabeledPoset& Q) {
    int n = P.num_elements();
    if (n != Q.num_elements() || P.rank() != Q.rank() ||
        P.covers().size() != Q.covers().size())
        return false;

    std::map<detail::IntervalKey, int> dict;
    auto kidP = detail::intern_interval_keys(P, dict);
    auto kidQ = detail::intern_interval_keys(Q, dict);

    // Per-element invariant: (rank, key[bottom,x], key[x,top], degrees).
    using Inv = std::tuple<int, int, int, std::size_t, std::size_t>;
    auto invariants = [n](const LabeledPoset& R, const std::vector<std::vector<int>>& kid) {
        std::vector<Inv> inv(n);
        for (int x = 0; x < n; ++x)
            inv[x] = {R.rank_of(x), kid[R.bottom()][x], kid[x][R.top()],
                      R.up(x).size(), R.down(x).size()};
        return inv;
    };
    std::vector<Inv> invP = invariants(P, kidP), invQ = invariants(Q, kidQ);
    {
        auto a = invP, b = invQ;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) return false;
    }

    // Assign P's elements rank by rank; compatibility with every previously
    // assigned element both enforces the isomorphism and checks all interval
    // f-vectors, so a completed assignment needs no post-verification.
    std::vector<int> porder(n);
    for (int x = 0; x < n; ++x) porder[x] = x;
    std::sort(porder.begin(), porder.end(),
              [&](int a, int b) { return P.rank_of(a) != P.rank_of(b)
                                      ? P.rank_of(a) < P.rank_of(b) : a < b; });

    std::vector<std::vector<int>> cand(n);
    for (int x = 0; x < n; ++x)
        for (int u = 0; u < n; ++u)
            if (invP[x] == invQ[u]) cand[x].push_back(u);

    std::vector<int> image(n, -1);
    std::vector<char> used(n, 0);
    auto compatible = [&](int x, int u, int i) {
        for (int j = 0; j < i; ++j) {
            int y = porder[j], v = image[y];
            if (P.leq(x, y) != Q.leq(u, v) || P.leq(y, x) != Q.leq(v, u)) return false;
            if (P.leq(x, y) && kidP[x][y] != kidQ[u][v]) return false;
            if (P.leq(y, x) && kidP[y][x] != kidQ[v][u]) return false;
        }
        return true;
    };
    auto search = [&](auto&& self, int i) -> bool {
        if (i == n) return true;
        int x = porder[i];
        for (int u : cand[x]) {
            if (used[u] || !compatible(x, u, i)) continue;
            used[u] = 1;
            image[x] = u;
            if (self(self, i + 1)) return true;
            used[u] = 0;
            image[x] = -1;
        }
        return false;
    };
    return search(search, 0);
}

}  // namespace chainform
