#pragma once

#include <atomic>
#include <map>
#include <thread>
#include <vector>

#include "chainform/composition.hpp"
#include "chainform/flag_stats.hpp"
#include "chainform/poset.hpp"
#include "chainform/qsym.hpp"

namespace chainform {

// The three equivalent expressions for F_P:
//   via_M      sum over compositions alpha of rk(P) of f_{I(alpha)} M_alpha
//   via_dF     sum over descent sets I of d_I F_{I,n}
//   via_chains sum over maximal chains rho of F_{D(rho),n}
enum class FpMethod { via_M, via_dF, via_chains };

namespace detail {

// F-basis accumulation of chain descents, keyed by alpha(D(rho)). Streams
// chains without materializing R(P); with threads > 1 the first-level
// branches are enumerated concurrently and merged in branch order, which
// gives the same exact integer map as the sequential walk.
inline std::map<Composition, Int> chain_descent_terms(const LabeledPoset& P,
                                                      int threads) {
    std::map<Composition, Int> total;
    if (P.rank() == 0) {
        ++total[Composition{}];
        return total;
    }
    const auto& branches = P.up(P.bottom());
    auto walk_branch = [&P](std::size_t b, std::map<Composition, Int>& acc) {
        std::vector<int> word{P.up(P.bottom())[b].second};
        auto dfs = [&](auto&& self, int x) -> void {
            if (x == P.top()) {
                ++acc[comp_from_set(descent_set(word))];
                return;
            }
            for (const auto& [y, l] : P.up(x)) {
                word.push_back(l);
                self(self, y);
                word.pop_back();
            }
        };
        dfs(dfs, P.up(P.bottom())[b].first);
    };

    if (threads <= 1 || branches.size() <= 1) {
        for (std::size_t b = 0; b < branches.size(); ++b) walk_branch(b, total);
        return total;
    }

    std::vector<std::map<Composition, Int>> partial(branches.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t b = next.fetch_add(1); b < branches.size();
             b = next.fetch_add(1))
            walk_branch(b, partial[b]);
    };
    std::size_t nthreads = std::min<std::size_t>(threads, branches.size());
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    for (const auto& m : partial)
        for (const auto& [a, c] : m) total[a] += c;
    return total;
}

}  // namespace detail

// F_P in the requested basis (default M). All methods agree after basis
// conversion; via_chains is the scalable default.
inline QSymExpr fp(const LabeledPoset& P, FpMethod method = FpMethod::via_chains,
                   QBasis out = QBasis::M, int threads = 1) {
    QSymExpr e;
    switch (method) {
        case FpMethod::via_M: {
            FlagStats fs = flag_stats(P);
            e = QSymExpr(QBasis::M);
            for (const Composition& alpha : compositions_of(P.rank()))
                e.add_term(alpha, fs.f(set_from_comp(alpha)));
            break;
        }
        case FpMethod::via_dF: {
            FlagStats fs = flag_stats(P);
            e = QSymExpr(QBasis::F);
            fs.for_each_nonzero_d([&](const RankSet& I, const Int& c) {
                e.add_term(comp_from_set(I), c);
            });
            break;
        }
        case FpMethod::via_chains: {
            e = QSymExpr(QBasis::F);
            for (const auto& [a, c] : detail::chain_descent_terms(P, threads))
                e.add_term(a, c);
            break;
        }
    }
    return out == QBasis::M ? to_m(e) : to_f(e);
}

// F_{P x Q} = F_P . F_Q, checked by independent computation of both sides.
inline bool fp_product_check(const LabeledPoset& P, const LabeledPoset& Q) {
    return fp(product(P, Q)) == mul(fp(P), fp(Q));
}

}  // namespace chainform
