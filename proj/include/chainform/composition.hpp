#pragma once

#include <numeric>
#include <string>
#include <vector>

#include "chainform/detail/format.hpp"
#include "chainform/error.hpp"
#include "chainform/rank_set.hpp"

namespace chainform {

// A composition of n: ordered sequence of strictly positive parts. The empty
// composition is the unique composition of 0.
class Composition {
public:
    Composition() = default;

    explicit Composition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (int p : parts_)
            if (p < 1) throw OutOfRange("composition parts must be >= 1");
    }

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int weight() const {
        return std::accumulate(parts_.begin(), parts_.end(), 0);
    }

    // alpha_{<=j}: the first j parts.
    Composition prefix(int j) const {
        return Composition(std::vector<int>(parts_.begin(), parts_.begin() + j));
    }
    // alpha_{>j}: the remaining parts.
    Composition suffix(int j) const {
        return Composition(std::vector<int>(parts_.begin() + j, parts_.end()));
    }
    // I(alpha)_j = alpha_1 + ... + alpha_j.
    int partial_sum(int j) const {
        return std::accumulate(parts_.begin(), parts_.begin() + j, 0);
    }

    std::string str() const { return detail::join(parts_); }

    friend bool operator==(const Composition& a, const Composition& b) {
        return a.parts_ == b.parts_;
    }
    // Canonical term order: (weight, length, lexicographic).
    friend bool operator<(const Composition& a, const Composition& b) {
        int wa = a.weight(), wb = b.weight();
        if (wa != wb) return wa < wb;
        if (a.parts_.size() != b.parts_.size())
            return a.parts_.size() < b.parts_.size();
        return a.parts_ < b.parts_;
    }

private:
    std::vector<int> parts_;
};

// alpha(I) = (i_1, i_2-i_1, ..., n-i_k) for I = {i_1 < ... < i_k}.
inline Composition comp_from_set(const RankSet& I) {
    int n = I.ambient();
    std::vector<int> parts;
    int prev = 0;
    for (int i : I.elems()) {
        parts.push_back(i - prev);
        prev = i;
    }
    if (n > prev) parts.push_back(n - prev);
    return Composition(std::move(parts));
}

inline RankSet set_from_comp(const Composition& alpha) {
    std::vector<int> elems;
    int sum = 0;
    for (int j = 0; j + 1 < alpha.length(); ++j) {
        sum += alpha.parts()[j];
        elems.push_back(sum);
    }
    return RankSet(alpha.weight(), std::move(elems));
}

// All compositions of n in canonical order.
inline std::vector<Composition> compositions_of(int n) {
    std::vector<Composition> out;
    for (const RankSet& I : all_rank_sets(n)) out.push_back(comp_from_set(I));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace chainform
