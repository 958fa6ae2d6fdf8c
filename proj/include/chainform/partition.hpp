#pragma once

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

#include "chainform/composition.hpp"
#include "chainform/detail/format.hpp"
#include "chainform/error.hpp"

namespace chainform {

// Integer partition: weakly decreasing positive parts. The empty partition
// is the unique partition of 0.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 1) throw OutOfRange("partition parts must be >= 1");
            if (i && parts_[i] > parts_[i - 1])
                throw OutOfRange("partition parts must be weakly decreasing");
        }
    }

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int weight() const {
        int w = 0;
        for (int p : parts_) w += p;
        return w;
    }
    int part(int i) const {  // 1-based, 0 beyond the last row
        return (i >= 1 && i <= length()) ? parts_[i - 1] : 0;
    }

    // Diagram containment: mu_i <= this_i for all rows.
    bool contains(const Partition& mu) const {
        for (int i = 1; i <= mu.length(); ++i)
            if (mu.part(i) > part(i)) return false;
        return true;
    }

    Partition conjugate() const {
        std::vector<int> cols;
        for (int c = 1; c <= part(1); ++c) {
            int h = 0;
            while (h < length() && parts_[h] >= c) ++h;
            cols.push_back(h);
        }
        return Partition(std::move(cols));
    }

    std::string str() const { return detail::join(parts_); }

    friend bool operator==(const Partition& a, const Partition& b) {
        return a.parts_ == b.parts_;
    }
    // Canonical term order: (weight, length, lexicographic).
    friend bool operator<(const Partition& a, const Partition& b) {
        int wa = a.weight(), wb = b.weight();
        if (wa != wb) return wa < wb;
        if (a.parts_.size() != b.parts_.size())
            return a.parts_.size() < b.parts_.size();
        return a.parts_ < b.parts_;
    }

private:
    std::vector<int> parts_;
};

// lambda(alpha): parts of alpha listed in decreasing order.
inline Partition sort_composition(const Composition& alpha) {
    std::vector<int> parts = alpha.parts();
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    return Partition(std::move(parts));
}

inline std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rest, int maxPart) {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(rest, maxPart); p >= 1; --p) {
            cur.push_back(p);
            rec(rest - p, p);
            cur.pop_back();
        }
    };
    rec(n, n == 0 ? 1 : n);
    std::sort(out.begin(), out.end());
    return out;
}

// Dominance order on partitions of equal weight.
inline bool dominates(const Partition& lam, const Partition& mu) {
    if (lam.weight() != mu.weight()) throw WeightMismatch("dominance needs equal weight");
    int sl = 0, sm = 0;
    int rows = std::max(lam.length(), mu.length());
    for (int i = 1; i <= rows; ++i) {
        sl += lam.part(i);
        sm += mu.part(i);
        if (sl < sm) return false;
    }
    return true;
}

}  // namespace chainform
