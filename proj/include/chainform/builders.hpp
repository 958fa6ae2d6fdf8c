#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "chainform/error.hpp"
#include "chainform/partition.hpp"
#include "chainform/poset.hpp"

namespace chainform {

// Subsets of {1,...,n} ordered by inclusion; element ids are the subset
// bitmasks. A cover X < Y is labeled by the unique element of Y \ X.
inline LabeledPoset boolean_poset(int n) {
    if (n < 0 || n > 10)
        throw OutOfBounds("boolean poset supported for 0 <= n <= 10");
    std::vector<Cover> covers;
    int size = 1 << n;
    for (int x = 0; x < size; ++x)
        for (int i = 1; i <= n; ++i)
            if (!(x & (1 << (i - 1)))) covers.push_back({x, x | (1 << (i - 1)), i});
    return build_poset(std::move(covers), size);
}

// A single chain carrying the given word.
inline LabeledPoset chain_poset(const std::vector<int>& word) {
    std::vector<Cover> covers;
    for (std::size_t j = 0; j < word.size(); ++j)
        covers.push_back({static_cast<int>(j), static_cast<int>(j) + 1, word[j]});
    return build_poset(std::move(covers), static_cast<int>(word.size()) + 1);
}

// The interval [mu,nu] in Young's lattice. A cover kappa < lam adds one box
// in row i and is labeled by the content lam_i - i of that box, so maximal
// chains correspond to standard tableaux of shape nu/mu.
inline LabeledPoset young_interval(const Partition& mu, const Partition& nu) {
    if (!nu.contains(mu))
        throw NotContained("mu = (" + mu.str() + ") is not contained in nu = (" +
                           nu.str() + ")");
    std::set<Partition> elems{mu};
    std::vector<Partition> frontier{mu};
    while (!frontier.empty()) {
        std::vector<Partition> next;
        for (const Partition& kappa : frontier) {
            for (int i = 1; i <= kappa.length() + 1; ++i) {
                if (kappa.part(i) + 1 > nu.part(i)) continue;
                if (i > 1 && kappa.part(i) + 1 > kappa.part(i - 1)) continue;
                std::vector<int> parts = kappa.parts();
                if (i > kappa.length())
                    parts.push_back(1);
                else
                    ++parts[i - 1];
                Partition lam(std::move(parts));
                if (elems.insert(lam).second) next.push_back(std::move(lam));
            }
        }
        frontier = std::move(next);
    }

    std::vector<Partition> by_id(elems.begin(), elems.end());  // canonical order
    std::map<Partition, int> id;
    for (std::size_t k = 0; k < by_id.size(); ++k) id[by_id[k]] = static_cast<int>(k);

    std::vector<Cover> covers;
    for (const Partition& kappa : by_id)
        for (const Partition& lam : by_id) {
            if (lam.weight() != kappa.weight() + 1 || !lam.contains(kappa)) continue;
            int row = 0;
            for (int i = 1; i <= lam.length(); ++i)
                if (lam.part(i) != kappa.part(i)) {
                    row = i;
                    break;
                }
            covers.push_back({id[kappa], id[lam], lam.part(row) - row});
        }
    return build_poset(std::move(covers), static_cast<int>(by_id.size()));
}

// Permutations in one-line notation, values 1..n.
using Permutation = std::vector<int>;

inline bool is_permutation(const Permutation& w) {
    std::vector<char> seen(w.size() + 1, 0);
    for (int v : w) {
        if (v < 1 || v > static_cast<int>(w.size()) || seen[v]) return false;
        seen[v] = 1;
    }
    return true;
}

inline int perm_length(const Permutation& w) {  // inversion count
    int inv = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j)
            if (w[i] > w[j]) ++inv;
    return inv;
}

inline Permutation perm_inverse(const Permutation& w) {
    Permutation inv(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) inv[w[i] - 1] = static_cast<int>(i) + 1;
    return inv;
}

// Left multiplication by the transposition (i,i+1): swaps the values i, i+1.
inline Permutation left_mult(int i, const Permutation& w) {
    Permutation v = w;
    for (int& x : v) {
        if (x == i)
            x = i + 1;
        else if (x == i + 1)
            x = i;
    }
    return v;
}

// The interval [1,w] in the left weak order: covers u < v with v = (i,i+1)u
// and l(v) = l(u)+1, labeled i. Maximal chains read off the reduced
// decompositions of w.
inline LabeledPoset weak_order_interval(const Permutation& w) {
    if (!is_permutation(w)) throw OutOfRange("not a permutation of 1..n");
    int lw = perm_length(w);
    if (lw > 8) throw TooLong("length " + std::to_string(lw) + " exceeds the bound 8");
    int n = static_cast<int>(w.size());
    Permutation winv = perm_inverse(w);

    auto below_w = [&](const Permutation& u) {
        // u <= w in left weak order iff l(u) + l(w u^{-1}) = l(w).
        Permutation ui = perm_inverse(u);
        Permutation wu_inv(n);
        for (int k = 0; k < n; ++k) wu_inv[k] = w[ui[k] - 1];
        return perm_length(u) + perm_length(wu_inv) == lw;
    };

    Permutation identity(n);
    for (int k = 0; k < n; ++k) identity[k] = k + 1;

    std::set<Permutation> elems{identity};
    std::vector<Permutation> frontier{identity};
    while (!frontier.empty()) {
        std::vector<Permutation> next;
        for (const Permutation& u : frontier) {
            int lu = perm_length(u);
            for (int i = 1; i < n; ++i) {
                Permutation v = left_mult(i, u);
                if (perm_length(v) != lu + 1 || !below_w(v)) continue;
                if (elems.insert(v).second) next.push_back(std::move(v));
            }
        }
        frontier = std::move(next);
    }

    std::vector<Permutation> by_id(elems.begin(), elems.end());
    std::sort(by_id.begin(), by_id.end(), [](const Permutation& a, const Permutation& b) {
        int la = perm_length(a), lb = perm_length(b);
        if (la != lb) return la < lb;
        return a < b;
    });
    std::map<Permutation, int> id;
    for (std::size_t k = 0; k < by_id.size(); ++k) id[by_id[k]] = static_cast<int>(k);

    std::vector<Cover> covers;
    for (const Permutation& u : by_id) {
        int lu = perm_length(u);
        for (int i = 1; i < n; ++i) {
            Permutation v = left_mult(i, u);
            if (perm_length(v) != lu + 1) continue;
            auto it = id.find(v);
            if (it != id.end()) covers.push_back({id[u], it->second, i});
        }
    }
    return build_poset(std::move(covers), static_cast<int>(by_id.size()));
}

}  // namespace chainform
