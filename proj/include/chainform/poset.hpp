#pragma once

#include <algorithm>
#include <cstdint>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "chainform/error.hpp"
#include "chainform/rank_set.hpp"

namespace chainform {

struct Cover {
    int lower = 0;
    int upper = 0;
    int label = 0;

    friend bool operator==(const Cover&, const Cover&) = default;
    friend bool operator<(const Cover& a, const Cover& b) {
        if (a.lower != b.lower) return a.lower < b.lower;
        if (a.upper != b.upper) return a.upper < b.upper;
        return a.label < b.label;
    }
};

// A maximal chain together with its label word.
struct ChainWord {
    std::vector<int> elements;  // rk+1 element ids, bottom to top
    std::vector<int> word;      // rk cover labels

    friend bool operator==(const ChainWord&, const ChainWord&) = default;
};

// Finite graded poset with unique bottom and top and integer-labeled covers.
// Immutable once built; safe to share read-only across threads.
class LabeledPoset {
public:
    int num_elements() const { return n_; }
    int rank() const { return rank_total_; }
    int rank_of(int x) const { return rank_[x]; }
    int bottom() const { return bottom_; }
    int top() const { return top_; }
    const std::vector<Cover>& covers() const { return covers_; }

    // Upward / downward cover neighbours as (element, label), sorted by element.
    const std::vector<std::pair<int, int>>& up(int x) const { return up_[x]; }
    const std::vector<std::pair<int, int>>& down(int x) const { return down_[x]; }

    bool leq(int x, int y) const {
        return (leq_[x][static_cast<std::size_t>(y) >> 6] >>
                (static_cast<std::size_t>(y) & 63)) & 1;
    }

    std::vector<int> elements_of_rank(int r) const {
        std::vector<int> out;
        for (int x = 0; x < n_; ++x)
            if (rank_[x] == r) out.push_back(x);
        return out;
    }

    int cover_label(int x, int y) const {
        for (const auto& [u, l] : up_[x])
            if (u == y) return l;
        throw OutOfRange("no cover " + std::to_string(x) + " -> " + std::to_string(y));
    }

private:
    LabeledPoset() = default;
    friend LabeledPoset build_poset(std::vector<Cover> covers, int n_elems);

    int n_ = 0;
    int rank_total_ = 0;
    int bottom_ = 0;
    int top_ = 0;
    std::vector<Cover> covers_;
    std::vector<int> rank_;
    std::vector<std::vector<std::pair<int, int>>> up_, down_;
    std::vector<std::vector<std::uint64_t>> leq_;  // closure bitset rows
};

// Validates and builds. The cover list must describe the Hasse diagram of a
// graded poset with unique bottom and top; covers are stored sorted by
// (lower, upper).
inline LabeledPoset build_poset(std::vector<Cover> covers, int n_elems) {
    if (n_elems <= 0) throw NoUniqueBounds("poset needs at least one element");

    for (const Cover& c : covers) {
        if (c.lower < 0 || c.lower >= n_elems || c.upper < 0 || c.upper >= n_elems)
            throw OutOfRange("cover ids must lie in 0.." + std::to_string(n_elems - 1));
        if (c.lower == c.upper)
            throw CycleDetected("self-cover at element " + std::to_string(c.lower));
    }

    std::sort(covers.begin(), covers.end());
    for (std::size_t i = 1; i < covers.size(); ++i)
        if (covers[i].lower == covers[i - 1].lower &&
            covers[i].upper == covers[i - 1].upper)
            throw DuplicateCover("duplicate cover (" + std::to_string(covers[i].lower) +
                                 "," + std::to_string(covers[i].upper) + ")");

    LabeledPoset P;
    P.n_ = n_elems;
    P.covers_ = std::move(covers);
    P.up_.assign(n_elems, {});
    P.down_.assign(n_elems, {});
    std::vector<int> indeg(n_elems, 0), outdeg(n_elems, 0);
    for (const Cover& c : P.covers_) {
        P.up_[c.lower].emplace_back(c.upper, c.label);
        P.down_[c.upper].emplace_back(c.lower, c.label);
        ++indeg[c.upper];
        ++outdeg[c.lower];
    }
    for (auto& v : P.down_) std::sort(v.begin(), v.end());

    // Kahn topological sort; a shortfall means a directed cycle.
    std::vector<int> order;
    order.reserve(n_elems);
    {
        std::vector<int> deg = indeg;
        std::priority_queue<int, std::vector<int>, std::greater<int>> q;
        for (int x = 0; x < n_elems; ++x)
            if (deg[x] == 0) q.push(x);
        while (!q.empty()) {
            int x = q.top();
            q.pop();
            order.push_back(x);
            for (const auto& [y, l] : P.up_[x])
                if (--deg[y] == 0) q.push(y);
        }
        if (static_cast<int>(order.size()) != n_elems)
            throw CycleDetected("cover relation contains a directed cycle");
    }

    std::vector<int> sources, sinks;
    for (int x = 0; x < n_elems; ++x) {
        if (indeg[x] == 0) sources.push_back(x);
        if (outdeg[x] == 0) sinks.push_back(x);
    }
    if (sources.size() != 1)
        throw NoUniqueBounds("expected a unique minimal element, found " +
                             std::to_string(sources.size()));
    if (sinks.size() != 1)
        throw NoUniqueBounds("expected a unique maximal element, found " +
                             std::to_string(sinks.size()));
    P.bottom_ = sources[0];
    P.top_ = sinks[0];

    // Longest-path ranks from the bottom; gradedness is equivalent to every
    // cover raising rank by exactly one.
    P.rank_.assign(n_elems, 0);
    for (int x : order)
        for (const auto& [y, l] : P.up_[x])
            P.rank_[y] = std::max(P.rank_[y], P.rank_[x] + 1);
    for (const Cover& c : P.covers_)
        if (P.rank_[c.upper] != P.rank_[c.lower] + 1)
            throw NotGraded("cover (" + std::to_string(c.lower) + "," +
                            std::to_string(c.upper) + ") skips rank " +
                            std::to_string(P.rank_[c.lower] + 1));
    P.rank_total_ = P.rank_[P.top_];

    // Reflexive-transitive closure, computed bottom-up over the topo order.
    std::size_t words = (static_cast<std::size_t>(n_elems) + 63) / 64;
    P.leq_.assign(n_elems, std::vector<std::uint64_t>(words, 0));
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int x = *it;
        auto& row = P.leq_[x];
        row[static_cast<std::size_t>(x) >> 6] |= std::uint64_t(1) << (x & 63);
        for (const auto& [y, l] : P.up_[x]) {
            const auto& ry = P.leq_[y];
            for (std::size_t w = 0; w < words; ++w) row[w] |= ry[w];
        }
    }
    return P;
}

// Visits every maximal chain in lexicographic order of element ids.
// fn(elements, word) receives buffers owned by the walker.
template <typename Fn>
void for_each_maximal_chain(const LabeledPoset& P, Fn&& fn) {
    std::vector<int> elems{P.bottom()};
    std::vector<int> word;
    auto dfs = [&](auto&& self, int x) -> void {
        if (x == P.top()) {
            fn(std::as_const(elems), std::as_const(word));
            return;
        }
        for (const auto& [y, l] : P.up(x)) {
            elems.push_back(y);
            word.push_back(l);
            self(self, y);
            elems.pop_back();
            word.pop_back();
        }
    };
    dfs(dfs, P.bottom());
}

inline std::vector<ChainWord> maximal_chains(const LabeledPoset& P) {
    std::vector<ChainWord> out;
    for_each_maximal_chain(P, [&](const std::vector<int>& e, const std::vector<int>& w) {
        out.push_back(ChainWord{e, w});
    });
    return out;
}

// D(rho) = { j : w_j > w_{j+1} }, positions 1-based.
inline RankSet descent_set(const std::vector<int>& word) {
    int n = static_cast<int>(word.size());
    std::vector<int> des;
    for (int j = 1; j < n; ++j)
        if (word[j - 1] > word[j]) des.push_back(j);
    return RankSet(n, std::move(des));
}

// The interval [x,y] as a poset in its own right, elements renumbered in
// increasing order of their ids in P.
inline LabeledPoset interval(const LabeledPoset& P, int x, int y) {
    if (x < 0 || x >= P.num_elements() || y < 0 || y >= P.num_elements())
        throw OutOfRange("interval endpoints out of range");
    if (!P.leq(x, y))
        throw NotComparable(std::to_string(x) + " <= " + std::to_string(y) +
                            " does not hold");
    std::vector<int> zs;
    std::vector<int> newid(P.num_elements(), -1);
    for (int z = 0; z < P.num_elements(); ++z)
        if (P.leq(x, z) && P.leq(z, y)) {
            newid[z] = static_cast<int>(zs.size());
            zs.push_back(z);
        }
    std::vector<Cover> covers;
    for (const Cover& c : P.covers())
        if (newid[c.lower] >= 0 && newid[c.upper] >= 0)
            covers.push_back({newid[c.lower], newid[c.upper], c.label});
    return build_poset(std::move(covers), static_cast<int>(zs.size()));
}

// Cartesian product. Covers keep the label of the factor cover; the second
// factor's labels are first shifted by a constant so the two label sets are
// disjoint (any order-preserving disjoint relabeling gives a
// label-equivalent result; the shift is fixed for determinism).
inline LabeledPoset product(const LabeledPoset& P, const LabeledPoset& Q) {
    int shift = 0;
    if (!P.covers().empty() && !Q.covers().empty()) {
        int maxP = P.covers()[0].label, minQ = Q.covers()[0].label;
        for (const Cover& c : P.covers()) maxP = std::max(maxP, c.label);
        for (const Cover& c : Q.covers()) minQ = std::min(minQ, c.label);
        shift = maxP - minQ + 1;
    }
    int nQ = Q.num_elements();
    std::vector<Cover> covers;
    covers.reserve(P.covers().size() * Q.num_elements() +
                   Q.covers().size() * P.num_elements());
    for (const Cover& c : P.covers())
        for (int q = 0; q < nQ; ++q)
            covers.push_back({c.lower * nQ + q, c.upper * nQ + q, c.label});
    for (int p = 0; p < P.num_elements(); ++p)
        for (const Cover& c : Q.covers())
            covers.push_back({p * nQ + c.lower, p * nQ + c.upper, c.label + shift});
    return build_poset(std::move(covers), P.num_elements() * nQ);
}

}  // namespace chainform
