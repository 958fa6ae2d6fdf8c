#pragma once

#include <algorithm>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "chainform/error.hpp"
#include "chainform/generating.hpp"
#include "chainform/integer.hpp"
#include "chainform/partition.hpp"
#include "chainform/poset.hpp"
#include "chainform/qsym.hpp"

namespace chainform {

enum class SBasis { m, s };

// Integer symmetric function in the monomial (m) or Schur (s) basis.
class SymExpr {
public:
    SymExpr() = default;
    explicit SymExpr(SBasis b) : basis_(b) {}

    static SymExpr term(const Partition& lam, Int c = 1, SBasis b = SBasis::m) {
        SymExpr e(b);
        e.add_term(lam, std::move(c));
        return e;
    }

    SBasis basis() const { return basis_; }
    const std::map<Partition, Int>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Int coeff(const Partition& lam) const {
        auto it = terms_.find(lam);
        return it == terms_.end() ? Int(0) : it->second;
    }

    void add_term(const Partition& lam, const Int& c) {
        if (c == 0) return;
        Int& slot = terms_[lam];
        slot += c;
        if (slot == 0) terms_.erase(lam);
    }

    friend bool operator==(const SymExpr& a, const SymExpr& b) {
        return a.basis_ == b.basis_ && a.terms_ == b.terms_;
    }

private:
    SBasis basis_ = SBasis::m;
    std::map<Partition, Int> terms_;
};

// Detects whether the coefficient of M_alpha depends only on lambda(alpha);
// if so returns sum f_mu m_mu, otherwise nullopt. Missing terms count as
// coefficient zero, so each partition class with a nonzero coefficient must
// be fully present with a constant coefficient.
inline std::optional<SymExpr> is_symmetric(const QSymExpr& a) {
    if (a.basis() != QBasis::M) throw BasisMismatch("is_symmetric expects the M basis");
    SymExpr out(SBasis::m);
    std::set<Partition> seen;
    for (const auto& [alpha, c] : a.terms()) {
        Partition lam = sort_composition(alpha);
        if (!seen.insert(lam).second) continue;
        // Every rearrangement of lam must carry the same coefficient.
        std::vector<int> asc = lam.parts();
        std::sort(asc.begin(), asc.end());
        do {
            if (a.coeff(Composition(asc)) != c) return std::nullopt;
        } while (std::next_permutation(asc.begin(), asc.end()));
        out.add_term(lam, c);
    }
    return out;
}

// Kostka number: semistandard tableaux of shape lam and content mu, counted
// by exhaustive fill. Memoized behind a mutex.
inline Int kostka(const Partition& lam, const Partition& mu) {
    if (lam.weight() != mu.weight())
        throw WeightMismatch("|lambda| = " + std::to_string(lam.weight()) +
                             " vs |mu| = " + std::to_string(mu.weight()));
    static std::map<std::pair<Partition, Partition>, Int> cache;
    static std::mutex cache_mutex;
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find({lam, mu});
        if (it != cache.end()) return it->second;
    }

    int rows = lam.length();
    int vals = mu.length();
    std::vector<std::vector<int>> tab(rows);
    for (int r = 0; r < rows; ++r) tab[r].assign(lam.part(r + 1), 0);
    std::vector<int> remaining = mu.parts();
    Int count = 0;
    auto fill = [&](auto&& self, int r, int c) -> void {
        if (r == rows) {
            ++count;
            return;
        }
        if (c == static_cast<int>(tab[r].size())) {
            self(self, r + 1, 0);
            return;
        }
        int lo = 1;
        if (c > 0) lo = std::max(lo, tab[r][c - 1]);                    // row weakly increases
        if (r > 0 && c < static_cast<int>(tab[r - 1].size()))
            lo = std::max(lo, tab[r - 1][c] + 1);                       // column strictly increases
        for (int v = lo; v <= vals; ++v) {
            if (remaining[v - 1] == 0) continue;
            --remaining[v - 1];
            tab[r][c] = v;
            self(self, r, c + 1);
            ++remaining[v - 1];
        }
    };
    fill(fill, 0, 0);

    std::lock_guard<std::mutex> lock(cache_mutex);
    return cache.emplace(std::make_pair(lam, mu), count).first->second;
}

// S_lam = sum_mu K_{lam,mu} m_mu (per graded piece).
inline SymExpr schur_to_m(const SymExpr& a) {
    if (a.basis() != SBasis::s) throw BasisMismatch("schur_to_m expects the s basis");
    SymExpr out(SBasis::m);
    for (const auto& [lam, c] : a.terms())
        for (const Partition& mu : partitions_of(lam.weight()))
            out.add_term(mu, c * kostka(lam, mu));
    return out;
}

// Inverts the unitriangular Kostka system exactly over the integers by
// back-substitution along lexicographic-descending order (which refines
// dominance, so K_{kappa,lam} != 0 only for already-processed kappa).
inline SymExpr m_to_schur(const SymExpr& a) {
    if (a.basis() != SBasis::m) throw BasisMismatch("m_to_schur expects the m basis");
    SymExpr out(SBasis::s);
    std::set<int> weights;
    for (const auto& [lam, c] : a.terms()) weights.insert(lam.weight());
    for (int n : weights) {
        std::vector<Partition> parts = partitions_of(n);
        std::sort(parts.begin(), parts.end(),
                  [](const Partition& x, const Partition& y) {
                      return x.parts() > y.parts();  // lexicographic descending
                  });
        std::map<Partition, Int> b;
        for (const Partition& lam : parts) {
            Int val = a.coeff(lam);
            for (const auto& [kappa, bk] : b) val -= bk * kostka(kappa, lam);
            if (val != 0) b.emplace(lam, val);
        }
        for (const auto& [lam, c] : b) out.add_term(lam, c);
    }
    return out;
}

// Schur coefficients c^P_lambda of F_P; requires F_P symmetric. The m- and
// s-expansions are cross-checked on the way out.
inline std::map<Partition, Int> schur_expansion(const LabeledPoset& P) {
    std::optional<SymExpr> m = is_symmetric(fp(P));
    if (!m) throw NotSymmetric("F_P is not a symmetric function");
    SymExpr s = m_to_schur(*m);
    if (schur_to_m(s) != *m)
        throw Error("Internal", "Kostka roundtrip failed");  // unreachable
    return s.terms();
}

// --- textual rendering ----------------------------------------------------

inline std::string render(const SymExpr& a) {
    if (a.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [lam, c] : a.terms()) {
        if (!first) out << " ";
        first = false;
        out << (c < 0 ? "-" : "+") << boost::multiprecision::abs(c)
            << (a.basis() == SBasis::m ? " m[" : " s[") << lam.str() << "]";
    }
    return out.str();
}

inline SymExpr parse_sym(const std::string& text) {
    std::istringstream in(text);
    std::string tok;
    std::vector<std::pair<Int, std::string>> raw;
    Int pending;
    bool have_coeff = false;
    while (in >> tok) {
        if (tok == "0" && !have_coeff && raw.empty()) return SymExpr(SBasis::m);
        if (!have_coeff) {
            try {
                std::string digits = tok;
                if (!digits.empty() && digits[0] == '+') digits.erase(0, 1);
                pending = Int(digits);
            } catch (const std::exception&) {
                throw ParseError("expected coefficient, got '" + tok + "'");
            }
            have_coeff = true;
        } else {
            raw.emplace_back(pending, tok);
            have_coeff = false;
        }
    }
    if (have_coeff) throw ParseError("dangling coefficient");
    if (raw.empty()) throw ParseError("empty expression");
    SBasis basis = SBasis::m;
    SymExpr out;
    bool first = true;
    for (const auto& [c, sym] : raw) {
        if (sym.size() < 3 || sym[1] != '[' || sym.back() != ']')
            throw ParseError("bad basis token '" + sym + "'");
        SBasis b;
        if (sym[0] == 'm')
            b = SBasis::m;
        else if (sym[0] == 's')
            b = SBasis::s;
        else
            throw ParseError("unknown basis letter '" + std::string(1, sym[0]) + "'");
        if (first) {
            basis = b;
            out = SymExpr(basis);
            first = false;
        } else if (b != basis) {
            throw ParseError("mixed bases in expression");
        }
        std::string body = sym.substr(2, sym.size() - 3);
        out.add_term(Partition(detail::parse_int_list(body, "part")), c);
    }
    return out;
}

}  // namespace chainform
