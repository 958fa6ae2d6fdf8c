#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "chainform/detail/format.hpp"
#include "chainform/error.hpp"

namespace chainform {

// A subset of {1,...,n-1} attached to its ambient rank n. Houses descent
// sets and the index sets of flag statistics.
class RankSet {
public:
    RankSet() = default;

    RankSet(int n, std::vector<int> elems) : n_(n), elems_(std::move(elems)) {
        if (n_ < 0) throw OutOfRange("ambient rank must be nonnegative");
        std::sort(elems_.begin(), elems_.end());
        elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
        for (int i : elems_)
            if (i <= 0 || i >= n_)
                throw OutOfRange("member " + std::to_string(i) +
                                 " outside {1,...," + std::to_string(n_ - 1) + "}");
    }

    static RankSet empty_set(int n) { return RankSet(n, {}); }

    static RankSet full_set(int n) {
        std::vector<int> all;
        for (int i = 1; i < n; ++i) all.push_back(i);
        return RankSet(n, std::move(all));
    }

    // Bit i-1 of `mask` represents membership of i.
    static RankSet from_mask(int n, std::uint64_t mask) {
        std::vector<int> elems;
        for (int i = 1; i < n; ++i)
            if ((mask >> (i - 1)) & 1) elems.push_back(i);
        return RankSet(n, std::move(elems));
    }

    int ambient() const { return n_; }
    const std::vector<int>& elems() const { return elems_; }
    std::size_t size() const { return elems_.size(); }
    bool empty() const { return elems_.empty(); }

    bool contains(int i) const {
        return std::binary_search(elems_.begin(), elems_.end(), i);
    }

    bool subset_of(const RankSet& other) const {
        return std::includes(other.elems_.begin(), other.elems_.end(),
                             elems_.begin(), elems_.end());
    }

    std::uint64_t mask() const {
        std::uint64_t m = 0;
        for (int i : elems_) m |= std::uint64_t(1) << (i - 1);
        return m;
    }

    std::string str() const { return detail::join(elems_); }

    friend bool operator==(const RankSet& a, const RankSet& b) {
        return a.n_ == b.n_ && a.elems_ == b.elems_;
    }
    friend bool operator<(const RankSet& a, const RankSet& b) {
        if (a.n_ != b.n_) return a.n_ < b.n_;
        return a.elems_ < b.elems_;
    }

private:
    int n_ = 0;
    std::vector<int> elems_;
};

// All subsets of {1,...,n-1}, ordered by (cardinality, lexicographic).
inline std::vector<RankSet> all_rank_sets(int n) {
    if (n > 24) throw OutOfRange("rank too large to enumerate all subsets");
    std::vector<std::vector<int>> subsets{{}};
    for (int i = 1; i < n; ++i) {
        std::size_t sz = subsets.size();
        for (std::size_t s = 0; s < sz; ++s) {
            auto with = subsets[s];
            with.push_back(i);
            subsets.push_back(std::move(with));
        }
    }
    std::sort(subsets.begin(), subsets.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) {
                  if (a.size() != b.size()) return a.size() < b.size();
                  return a < b;
              });
    std::vector<RankSet> out;
    out.reserve(subsets.size());
    for (auto& s : subsets) out.emplace_back(n, std::move(s));
    return out;
}

}  // namespace chainform
