#pragma once

#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "chainform/composition.hpp"
#include "chainform/error.hpp"
#include "chainform/integer.hpp"
#include "chainform/rank_set.hpp"

namespace chainform {

enum class QBasis { M, F };

// Integer quasi-symmetric function, tagged with its basis. M-basis terms are
// keyed by the composition alpha of M_alpha; F-basis terms are keyed by the
// composition alpha(I) of F_{I,n} (so the key determines both I and n).
// Mixed weights are allowed; zero coefficients are never stored.
class QSymExpr {
public:
    QSymExpr() = default;
    explicit QSymExpr(QBasis b) : basis_(b) {}

    static QSymExpr unit(QBasis b = QBasis::M) {
        QSymExpr e(b);
        e.add_term(Composition{}, 1);
        return e;
    }
    static QSymExpr term(const Composition& alpha, Int c = 1, QBasis b = QBasis::M) {
        QSymExpr e(b);
        e.add_term(alpha, std::move(c));
        return e;
    }

    QBasis basis() const { return basis_; }
    const std::map<Composition, Int>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Int coeff(const Composition& alpha) const {
        auto it = terms_.find(alpha);
        return it == terms_.end() ? Int(0) : it->second;
    }

    void add_term(const Composition& alpha, const Int& c) {
        if (c == 0) return;
        Int& slot = terms_[alpha];
        slot += c;
        if (slot == 0) terms_.erase(alpha);
    }

    QSymExpr& operator+=(const QSymExpr& o) {
        if (basis_ != o.basis_) throw BasisMismatch("cannot add across bases");
        for (const auto& [a, c] : o.terms_) add_term(a, c);
        return *this;
    }
    QSymExpr& operator-=(const QSymExpr& o) {
        if (basis_ != o.basis_) throw BasisMismatch("cannot subtract across bases");
        for (const auto& [a, c] : o.terms_) add_term(a, -c);
        return *this;
    }
    QSymExpr& operator*=(const Int& k) {
        if (k == 0) { terms_.clear(); return *this; }
        for (auto& [a, c] : terms_) c *= k;
        return *this;
    }
    friend QSymExpr operator+(QSymExpr a, const QSymExpr& b) { return a += b; }
    friend QSymExpr operator-(QSymExpr a, const QSymExpr& b) { return a -= b; }
    friend QSymExpr operator*(QSymExpr a, const Int& k) { return a *= k; }

    friend bool operator==(const QSymExpr& a, const QSymExpr& b) {
        return a.basis_ == b.basis_ && a.terms_ == b.terms_;
    }

private:
    QBasis basis_ = QBasis::M;
    std::map<Composition, Int> terms_;
};

// Tensor in the M (x) M basis; zero coefficients never stored.
using QSymTensor = std::map<std::pair<Composition, Composition>, Int>;

inline void tensor_add(QSymTensor& t, const Composition& a, const Composition& b,
                       const Int& c) {
    if (c == 0) return;
    auto key = std::make_pair(a, b);
    auto it = t.find(key);
    if (it == t.end()) {
        t.emplace(std::move(key), c);
    } else if ((it->second += c) == 0) {
        t.erase(it);
    }
}

namespace detail {

// Quasi-shuffle (overlapping shuffle) of two part sequences: at each step
// take the head of a, the head of b, or merge both heads into one part.
inline void quasi_shuffle_rec(std::vector<int>& acc, const std::vector<int>& a,
                              std::size_t i, const std::vector<int>& b,
                              std::size_t j, std::map<Composition, Int>& out) {
    if (i == a.size() && j == b.size()) {
        ++out[Composition(acc)];
        return;
    }
    if (i < a.size()) {
        acc.push_back(a[i]);
        quasi_shuffle_rec(acc, a, i + 1, b, j, out);
        acc.pop_back();
    }
    if (j < b.size()) {
        acc.push_back(b[j]);
        quasi_shuffle_rec(acc, a, i, b, j + 1, out);
        acc.pop_back();
    }
    if (i < a.size() && j < b.size()) {
        acc.push_back(a[i] + b[j]);
        quasi_shuffle_rec(acc, a, i + 1, b, j + 1, out);
        acc.pop_back();
    }
}

inline std::map<Composition, Int> quasi_shuffle(const Composition& a,
                                                const Composition& b) {
    std::map<Composition, Int> out;
    std::vector<int> acc;
    quasi_shuffle_rec(acc, a.parts(), 0, b.parts(), 0, out);
    return out;
}

// Supersets J of I inside {1,...,n-1}; weights beyond 30 would need 2^(n-1)
// terms and are refused.
template <typename Fn>
void for_each_superset(const RankSet& I, Fn&& fn) {
    int n = I.ambient();
    if (n > 31) throw OutOfRange("weight too large for basis conversion");
    std::vector<int> comp;
    for (int i = 1; i < n; ++i)
        if (!I.contains(i)) comp.push_back(i);
    std::uint64_t lim = std::uint64_t(1) << comp.size();
    for (std::uint64_t m = 0; m < lim; ++m) {
        std::vector<int> elems = I.elems();
        int added = 0;
        for (std::size_t t = 0; t < comp.size(); ++t)
            if ((m >> t) & 1) {
                elems.push_back(comp[t]);
                ++added;
            }
        fn(RankSet(n, std::move(elems)), added);
    }
}

}  // namespace detail

// F_{I,n} = sum over J >= I of M_{alpha(J)}.
inline QSymExpr f_to_m(const QSymExpr& a) {
    if (a.basis() != QBasis::F) throw BasisMismatch("f_to_m expects the F basis");
    QSymExpr out(QBasis::M);
    for (const auto& [gamma, c] : a.terms()) {
        detail::for_each_superset(set_from_comp(gamma),
                                  [&](const RankSet& J, int) {
                                      out.add_term(comp_from_set(J), c);
                                  });
    }
    return out;
}

// M_alpha = sum over J >= I(alpha) of (-1)^{|J - I(alpha)|} F_{J,n}.
inline QSymExpr m_to_f(const QSymExpr& a) {
    if (a.basis() != QBasis::M) throw BasisMismatch("m_to_f expects the M basis");
    QSymExpr out(QBasis::F);
    for (const auto& [alpha, c] : a.terms()) {
        detail::for_each_superset(set_from_comp(alpha),
                                  [&](const RankSet& J, int added) {
                                      out.add_term(comp_from_set(J),
                                                   added % 2 ? -c : c);
                                  });
    }
    return out;
}

inline QSymExpr to_m(const QSymExpr& a) {
    return a.basis() == QBasis::M ? a : f_to_m(a);
}
inline QSymExpr to_f(const QSymExpr& a) {
    return a.basis() == QBasis::F ? a : m_to_f(a);
}

// Product in the M basis via the quasi-shuffle rule; agrees with
// multiplication of the underlying power series (see expand_polynomial).
inline QSymExpr mul(const QSymExpr& a, const QSymExpr& b) {
    QSymExpr ma = to_m(a), mb = to_m(b);
    QSymExpr out(QBasis::M);
    for (const auto& [alpha, ca] : ma.terms())
        for (const auto& [beta, cb] : mb.terms())
            for (const auto& [gamma, mult] : detail::quasi_shuffle(alpha, beta))
                out.add_term(gamma, ca * cb * mult);
    return out;
}

// Delta M_alpha = sum_{j=0..l(alpha)} M_{alpha_{<=j}} (x) M_{alpha_{>j}}.
inline QSymTensor coproduct(const QSymExpr& a) {
    if (a.basis() != QBasis::M) throw BasisMismatch("coproduct expects the M basis");
    QSymTensor out;
    for (const auto& [alpha, c] : a.terms())
        for (int j = 0; j <= alpha.length(); ++j)
            tensor_add(out, alpha.prefix(j), alpha.suffix(j), c);
    return out;
}

// Projection onto degree 0.
inline Int counit(const QSymExpr& a) { return a.coeff(Composition{}); }

namespace detail {

inline const std::map<Composition, Int>& antipode_of(
    const Composition& alpha, std::map<Composition, std::map<Composition, Int>>& memo) {
    auto it = memo.find(alpha);
    if (it != memo.end()) return it->second;
    std::map<Composition, Int> res;
    if (alpha.length() == 0) {
        res[alpha] = 1;
    } else {
        // S(M_alpha) = -M_alpha - sum_{0<j<l} S(M_{alpha<=j}) * M_{alpha>j}
        res[alpha] = -1;
        for (int j = 1; j < alpha.length(); ++j) {
            const auto& s = antipode_of(alpha.prefix(j), memo);
            Composition tail = alpha.suffix(j);
            for (const auto& [beta, cb] : s)
                for (const auto& [gamma, mult] : quasi_shuffle(beta, tail)) {
                    auto [jt, ins] = res.emplace(gamma, Int(0));
                    jt->second -= cb * mult;
                    if (jt->second == 0) res.erase(jt);
                }
        }
    }
    return memo.emplace(alpha, std::move(res)).first->second;
}

}  // namespace detail

// Degree-wise convolution inverse of the identity.
inline QSymExpr antipode(const QSymExpr& a) {
    if (a.basis() != QBasis::M) throw BasisMismatch("antipode expects the M basis");
    std::map<Composition, std::map<Composition, Int>> memo;
    QSymExpr out(QBasis::M);
    for (const auto& [alpha, c] : a.terms())
        for (const auto& [beta, cb] : detail::antipode_of(alpha, memo))
            out.add_term(beta, c * cb);
    return out;
}

// Componentwise product of tensors: (a (x) b)(c (x) d) = ac (x) bd.
inline QSymTensor tensor_mul(const QSymTensor& s, const QSymTensor& t) {
    QSymTensor out;
    for (const auto& [ab, c1] : s)
        for (const auto& [cd, c2] : t) {
            auto left = detail::quasi_shuffle(ab.first, cd.first);
            auto right = detail::quasi_shuffle(ab.second, cd.second);
            for (const auto& [l, ml] : left)
                for (const auto& [r, mr] : right)
                    tensor_add(out, l, r, c1 * c2 * ml * mr);
        }
    return out;
}

// --- textual rendering --------------------------------------------------
//
// M terms render as M[2,1]; F terms as F[1,3|5] (descent set | ambient n),
// with F[|n] for an empty descent set. Terms carry explicit signs:
// "+1 M[2] +2 M[1,1]". The zero expression renders as "0".

inline std::string render_basis_token(QBasis b, const Composition& key) {
    if (b == QBasis::M) return "M[" + key.str() + "]";
    RankSet I = set_from_comp(key);
    return "F[" + I.str() + "|" + std::to_string(key.weight()) + "]";
}

inline std::string render(const QSymExpr& a) {
    if (a.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [key, c] : a.terms()) {
        if (!first) out << " ";
        first = false;
        out << (c < 0 ? "-" : "+") << boost::multiprecision::abs(c) << " "
            << render_basis_token(a.basis(), key);
    }
    return out.str();
}

namespace detail {

inline std::vector<int> parse_int_list(const std::string& s, const char* what) {
    std::vector<int> out;
    if (s.empty()) return out;
    std::istringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            int v = std::stoi(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            out.push_back(v);
        } catch (const std::exception&) {
            throw ParseError(std::string("bad ") + what + " entry '" + item + "'");
        }
    }
    return out;
}

}  // namespace detail

// Parses the renderer's grammar back into an expression.
inline QSymExpr parse_qsym(const std::string& text) {
    std::istringstream in(text);
    std::string tok;
    std::vector<std::pair<Int, std::string>> raw;
    Int pending;
    bool have_coeff = false;
    while (in >> tok) {
        if (tok == "0" && !have_coeff && raw.empty()) {
            if (in >> tok) throw ParseError("tokens after '0'");
            return QSymExpr(QBasis::M);
        }
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

    QBasis basis = QBasis::M;
    QSymExpr out;
    bool first = true;
    for (const auto& [c, sym] : raw) {
        if (sym.size() < 3 || sym[1] != '[' || sym.back() != ']')
            throw ParseError("bad basis token '" + sym + "'");
        char letter = sym[0];
        std::string body = sym.substr(2, sym.size() - 3);
        QBasis b;
        Composition key;
        if (letter == 'M') {
            b = QBasis::M;
            key = Composition(detail::parse_int_list(body, "part"));
        } else if (letter == 'F') {
            auto bar = body.find('|');
            if (bar == std::string::npos)
                throw ParseError("F token needs '|n': '" + sym + "'");
            b = QBasis::F;
            std::vector<int> elems = detail::parse_int_list(body.substr(0, bar), "set");
            int n;
            try {
                n = std::stoi(body.substr(bar + 1));
            } catch (const std::exception&) {
                throw ParseError("bad ambient rank in '" + sym + "'");
            }
            key = comp_from_set(RankSet(n, std::move(elems)));
        } else {
            throw ParseError("unknown basis letter '" + std::string(1, letter) + "'");
        }
        if (first) {
            basis = b;
            out = QSymExpr(basis);
            first = false;
        } else if (b != basis) {
            throw ParseError("mixed bases in expression");
        }
        out.add_term(key, c);
    }
    return out;
}

}  // namespace chainform
