#pragma once

#include <limits>
#include <map>
#include <vector>

#include "chainform/error.hpp"
#include "chainform/flag_stats.hpp"
#include "chainform/integer.hpp"
#include "chainform/poset.hpp"
#include "chainform/qsym.hpp"
#include "chainform/rank_set.hpp"

namespace chainform {

// Rank selection and R-labelings.
//
// Convention: an "increasing" chain is one whose word is descent-free, i.e.
// weakly increasing (w_j <= w_{j+1} throughout). This matches the descent
// definition (strict >), and it is what makes f_I equal the weighted chain
// count below. On families whose intervals have distinct labels the weak and
// strict readings coincide.

namespace detail {

// Number of descent-free saturated chains from x to y.
inline Int increasing_chain_count(const LabeledPoset& P, int x, int y) {
    if (!P.leq(x, y)) return 0;
    Int count = 0;
    auto dfs = [&](auto&& self, int z, long long last) -> void {
        if (z == y) {
            ++count;
            return;
        }
        for (const auto& [w, l] : P.up(z)) {
            if (!P.leq(w, y) || l < last) continue;
            self(self, w, l);
        }
    };
    dfs(dfs, x, std::numeric_limits<long long>::min());
    return count;
}

// Sum over maximal chains of P(I) of the product of edge weights, where the
// edge weight of x < y between consecutive selected ranks is provided by wt.
template <typename WeightFn>
Int rank_selected_sum(const LabeledPoset& P, const RankSet& I, WeightFn&& wt) {
    int n = P.rank();
    if (I.ambient() != n) throw OutOfRange("rank set has wrong ambient rank");
    if (n == 0) return 1;
    std::vector<int> levels{0};
    for (int i : I.elems()) levels.push_back(i);
    levels.push_back(n);

    std::vector<int> prev_elems{P.bottom()};
    std::vector<Int> prev_count{Int(1)};
    for (std::size_t t = 1; t < levels.size(); ++t) {
        std::vector<int> cur = P.elements_of_rank(levels[t]);
        std::vector<Int> cnt(cur.size(), Int(0));
        for (std::size_t j = 0; j < cur.size(); ++j)
            for (std::size_t i = 0; i < prev_elems.size(); ++i) {
                if (prev_count[i] == 0 || !P.leq(prev_elems[i], cur[j])) continue;
                cnt[j] += prev_count[i] * wt(prev_elems[i], cur[j]);
            }
        prev_elems = std::move(cur);
        prev_count = std::move(cnt);
    }
    return prev_count.empty() ? Int(0) : prev_count[0];
}

}  // namespace detail

// phi_I(P): maximal chains of the rank-selected poset P(I); labels ignored.
inline Int rank_selected_chain_count(const LabeledPoset& P, const RankSet& I) {
    return detail::rank_selected_sum(P, I, [](int, int) { return Int(1); });
}

// The whole flag f-vector, phi_I for every I.
inline std::map<RankSet, Int> flag_fvector_classic(const LabeledPoset& P) {
    std::map<RankSet, Int> out;
    for (const RankSet& I : all_rank_sets(P.rank()))
        out.emplace(I, rank_selected_chain_count(P, I));
    return out;
}

// E_P = sum_I phi_I(P) M_{alpha(I)}.
inline QSymExpr ehrenborg_ep(const LabeledPoset& P) {
    QSymExpr e(QBasis::M);
    for (const RankSet& I : all_rank_sets(P.rank()))
        e.add_term(comp_from_set(I), rank_selected_chain_count(P, I));
    return e;
}

// Weighted rank selection: each cover x < y of P(I) weighs the number of
// increasing chains of [x,y]; the weighted chain count equals f_I(P).
inline Int weighted_flag_count(const LabeledPoset& P, const RankSet& I) {
    return detail::rank_selected_sum(P, I, [&P](int x, int y) {
        return detail::increasing_chain_count(P, x, y);
    });
}

// Every interval has exactly one increasing chain.
inline bool is_r_labeled(const LabeledPoset& P) {
    int n = P.num_elements();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (P.leq(x, y) && detail::increasing_chain_count(P, x, y) != 1)
                return false;
    return true;
}

// Every interval has at most one increasing chain, and every subinterval of
// an interval possessing one possesses one as well.
inline bool is_relative_r_labeled(const LabeledPoset& P) {
    int n = P.num_elements();
    std::vector<std::vector<Int>> inc(n, std::vector<Int>(n, 0));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (P.leq(x, y)) {
                inc[x][y] = detail::increasing_chain_count(P, x, y);
                if (inc[x][y] > 1) return false;
            }
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (!P.leq(x, y) || inc[x][y] == 0) continue;
            for (int u = 0; u < n; ++u) {
                if (!P.leq(x, u) || !P.leq(u, y)) continue;
                for (int v = 0; v < n; ++v)
                    if (P.leq(u, v) && P.leq(v, y) && inc[u][v] == 0) return false;
            }
        }
    return true;
}

// phi_I(P/Gamma) where Gamma holds the chains with some step interval that
// has no increasing chain; equals f_I(P) for relative R-labeled posets.
// Gamma is never materialized: membership is a per-step test.
inline Int relative_flag_count(const LabeledPoset& P, const RankSet& I) {
    if (!is_relative_r_labeled(P))
        throw NotRelativeRLabeled("poset is not relative R-labeled");
    return detail::rank_selected_sum(P, I, [&P](int x, int y) {
        return detail::increasing_chain_count(P, x, y) > 0 ? Int(1) : Int(0);
    });
}

}  // namespace chainform
