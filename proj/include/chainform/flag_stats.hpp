#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "chainform/integer.hpp"
#include "chainform/poset.hpp"
#include "chainform/rank_set.hpp"

namespace chainform {

// Descent statistics of the maximal chains of a poset of rank n:
//   d_I = #{ chains with descent set exactly I }
//   f_J = #{ chains with descent set contained in J } = sum_{I subset J} d_I
// Stored densely (indexed by subset mask) for n <= 16, sparsely beyond;
// f is derived from d on demand.
class FlagStats {
public:
    FlagStats() = default;

    int rank() const { return n_; }
    Int total_chains() const { return total_; }

    Int d(const RankSet& I) const {
        if (dense_) return dense_d_[I.mask()];
        auto it = sparse_d_.find(I);
        return it == sparse_d_.end() ? Int(0) : it->second;
    }

    Int f(const RankSet& J) const {
        Int sum = 0;
        if (dense_) {
            std::uint64_t m = J.mask();
            // Iterate submasks of m, including 0.
            std::uint64_t s = m;
            while (true) {
                sum += dense_d_[s];
                if (s == 0) break;
                s = (s - 1) & m;
            }
        } else {
            for (const auto& [I, c] : sparse_d_)
                if (I.subset_of(J)) sum += c;
        }
        return sum;
    }

    template <typename Fn>
    void for_each_nonzero_d(Fn&& fn) const {
        if (dense_) {
            for (std::uint64_t m = 0; m < dense_d_.size(); ++m)
                if (dense_d_[m] != 0) fn(RankSet::from_mask(n_, m), dense_d_[m]);
        } else {
            for (const auto& [I, c] : sparse_d_) fn(I, c);
        }
    }

private:
    friend FlagStats flag_stats(const LabeledPoset&);

    int n_ = 0;
    bool dense_ = true;
    std::vector<Int> dense_d_{Int(0)};  // size 2^(n-1), mask-indexed
    std::map<RankSet, Int> sparse_d_;
    Int total_ = 0;
};

inline FlagStats flag_stats(const LabeledPoset& P) {
    FlagStats fs;
    fs.n_ = P.rank();
    fs.dense_ = fs.n_ <= 16;
    if (fs.dense_)
        fs.dense_d_.assign(std::size_t(1) << (fs.n_ > 0 ? fs.n_ - 1 : 0), Int(0));
    for_each_maximal_chain(P, [&](const std::vector<int>&, const std::vector<int>& w) {
        RankSet D = descent_set(w);
        if (fs.dense_)
            ++fs.dense_d_[D.mask()];
        else
            ++fs.sparse_d_[D];
        ++fs.total_;
    });
    return fs;
}

}  // namespace chainform
