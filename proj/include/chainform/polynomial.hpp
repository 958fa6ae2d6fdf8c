#pragma once

#include <map>
#include <vector>

#include "chainform/error.hpp"
#include "chainform/integer.hpp"
#include "chainform/qsym.hpp"

namespace chainform {

// Exact polynomial in x_1..x_k, used as the independent oracle for the
// quasi-symmetric product: expanding first and multiplying as power series
// must agree with multiplying in the M basis and then expanding.
struct Polynomial {
    int nvars = 0;
    std::map<std::vector<int>, Int> terms;  // exponent vector -> coefficient

    friend bool operator==(const Polynomial&, const Polynomial&) = default;
};

inline void poly_add_term(Polynomial& p, const std::vector<int>& expo, const Int& c) {
    if (c == 0) return;
    Int& slot = p.terms[expo];
    slot += c;
    if (slot == 0) p.terms.erase(expo);
}

// Substitutes x_{k+1} = x_{k+2} = ... = 0. For a homogeneous expression of
// degree n and k >= n this truncation is injective.
inline Polynomial expand_polynomial(const QSymExpr& a, int k) {
    if (k < 1) throw OutOfRange("need at least one variable");
    Polynomial p;
    p.nvars = k;
    QSymExpr mexpr = to_m(a);
    std::vector<int> idx;  // chosen variable indices, strictly increasing
    for (const auto& [alpha, c] : mexpr.terms()) {
        const std::vector<int>& parts = alpha.parts();
        auto rec = [&](auto&& self, std::size_t pos, int lo) -> void {
            if (pos == parts.size()) {
                std::vector<int> expo(k, 0);
                for (std::size_t t = 0; t < parts.size(); ++t)
                    expo[idx[t] - 1] = parts[t];
                poly_add_term(p, expo, c);
                return;
            }
            for (int i = lo; i <= k; ++i) {
                idx.push_back(i);
                self(self, pos + 1, i + 1);
                idx.pop_back();
            }
        };
        rec(rec, 0, 1);
    }
    return p;
}

inline Polynomial poly_mul(const Polynomial& a, const Polynomial& b) {
    if (a.nvars != b.nvars) throw OutOfRange("variable count mismatch");
    Polynomial p;
    p.nvars = a.nvars;
    for (const auto& [ea, ca] : a.terms)
        for (const auto& [eb, cb] : b.terms) {
            std::vector<int> e = ea;
            for (int i = 0; i < p.nvars; ++i) e[i] += eb[i];
            poly_add_term(p, e, ca * cb);
        }
    return p;
}

}  // namespace chainform
