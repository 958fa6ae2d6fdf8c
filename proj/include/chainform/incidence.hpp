#pragma once

#include <algorithm>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "chainform/generating.hpp"
#include "chainform/integer.hpp"
#include "chainform/label_equivalence.hpp"
#include "chainform/poset.hpp"
#include "chainform/poset_io.hpp"
#include "chainform/qsym.hpp"

namespace chainform {

// The incidence Hopf algebra on label-equivalence classes of edge-labeled
// posets. Classes are carried by concrete representatives; equality of
// classes is decided lazily through label_equivalent during normalization,
// and the representative kept for a merged class is the one with the
// lexicographically least canonical serialization.

struct IncidenceTerm {
    LabeledPoset rep;
    Int coeff;
};

struct IncidenceTensorTerm {
    LabeledPoset left;
    LabeledPoset right;
    Int coeff;
};

namespace detail {

struct NormGroup {
    LabeledPoset rep;
    std::string serial;
    Int coeff;
};

}  // namespace detail

class IncidenceElement {
public:
    IncidenceElement() = default;

    static IncidenceElement zero() { return IncidenceElement(); }
    static IncidenceElement from_poset(const LabeledPoset& P, Int c = 1);
    static IncidenceElement unit() {
        return from_poset(build_poset({}, 1));
    }

    const std::vector<IncidenceTerm>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

private:
    std::vector<IncidenceTerm> terms_;  // normalized, sorted by (rank, serialization)

    friend IncidenceElement normalize(std::vector<IncidenceTerm> raw);
};

// Merges label-equivalent representatives, drops zero coefficients, picks
// deterministic representatives, sorts terms.
inline IncidenceElement normalize(std::vector<IncidenceTerm> raw) {
    std::vector<detail::NormGroup> groups;
    for (auto& t : raw) {
        if (t.coeff == 0) continue;
        bool merged = false;
        for (auto& g : groups) {
            if (g.rep.rank() != t.rep.rank()) continue;
            if (!label_equivalent(g.rep, t.rep)) continue;
            g.coeff += t.coeff;
            std::string s = serialize_poset(t.rep);
            if (s < g.serial) {
                g.serial = std::move(s);
                g.rep = std::move(t.rep);
            }
            merged = true;
            break;
        }
        if (!merged)
            groups.push_back({t.rep, serialize_poset(t.rep), std::move(t.coeff)});
    }
    std::erase_if(groups, [](const detail::NormGroup& g) { return g.coeff == 0; });
    std::sort(groups.begin(), groups.end(),
              [](const detail::NormGroup& a, const detail::NormGroup& b) {
                  if (a.rep.rank() != b.rep.rank()) return a.rep.rank() < b.rep.rank();
                  return a.serial < b.serial;
              });
    IncidenceElement e;
    for (auto& g : groups) e.terms_.push_back({std::move(g.rep), std::move(g.coeff)});
    return e;
}

inline IncidenceElement IncidenceElement::from_poset(const LabeledPoset& P, Int c) {
    return normalize({IncidenceTerm{P, std::move(c)}});
}

inline IncidenceElement add(const IncidenceElement& a, const IncidenceElement& b) {
    std::vector<IncidenceTerm> raw = a.terms();
    raw.insert(raw.end(), b.terms().begin(), b.terms().end());
    return normalize(std::move(raw));
}

inline IncidenceElement scale(const IncidenceElement& a, const Int& k) {
    std::vector<IncidenceTerm> raw;
    for (const auto& t : a.terms()) raw.push_back({t.rep, t.coeff * k});
    return normalize(std::move(raw));
}

// Class product: representatives multiply as posets with disjoint labels.
inline IncidenceElement hopf_product(const IncidenceElement& a,
                                     const IncidenceElement& b) {
    std::vector<IncidenceTerm> raw;
    for (const auto& ta : a.terms())
        for (const auto& tb : b.terms())
            raw.push_back({product(ta.rep, tb.rep), ta.coeff * tb.coeff});
    return normalize(std::move(raw));
}

class IncidenceTensor {
public:
    IncidenceTensor() = default;
    const std::vector<IncidenceTensorTerm>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

private:
    std::vector<IncidenceTensorTerm> terms_;

    friend IncidenceTensor normalize_tensor(std::vector<IncidenceTensorTerm> raw);
};

inline IncidenceTensor normalize_tensor(std::vector<IncidenceTensorTerm> raw) {
    struct Group {
        LabeledPoset left, right;
        std::string sl, sr;
        Int coeff;
    };
    std::vector<Group> groups;
    for (auto& t : raw) {
        if (t.coeff == 0) continue;
        bool merged = false;
        for (auto& g : groups) {
            if (g.left.rank() != t.left.rank() || g.right.rank() != t.right.rank())
                continue;
            if (!label_equivalent(g.left, t.left) || !label_equivalent(g.right, t.right))
                continue;
            g.coeff += t.coeff;
            std::string sl = serialize_poset(t.left), sr = serialize_poset(t.right);
            if (std::tie(sl, sr) < std::tie(g.sl, g.sr)) {
                g.left = std::move(t.left);
                g.right = std::move(t.right);
                g.sl = std::move(sl);
                g.sr = std::move(sr);
            }
            merged = true;
            break;
        }
        if (!merged)
            groups.push_back({t.left, t.right, serialize_poset(t.left),
                              serialize_poset(t.right), std::move(t.coeff)});
    }
    std::erase_if(groups, [](const Group& g) { return g.coeff == 0; });
    std::sort(groups.begin(), groups.end(), [](const Group& a, const Group& b) {
        int ra = a.left.rank(), rb = b.left.rank();
        if (ra != rb) return ra < rb;
        int sa = a.right.rank(), sb = b.right.rank();
        if (sa != sb) return sa < sb;
        return std::tie(a.sl, a.sr) < std::tie(b.sl, b.sr);
    });
    IncidenceTensor t;
    for (auto& g : groups)
        t.terms_.push_back({std::move(g.left), std::move(g.right), std::move(g.coeff)});
    return t;
}

// Delta(P) = sum over x in P of [0,x] (x) [x,1], extended linearly.
inline IncidenceTensor hopf_coproduct(const IncidenceElement& a) {
    std::vector<IncidenceTensorTerm> raw;
    for (const auto& t : a.terms()) {
        const LabeledPoset& P = t.rep;
        for (int x = 0; x < P.num_elements(); ++x)
            raw.push_back({interval(P, P.bottom(), x), interval(P, x, P.top()),
                           t.coeff});
    }
    return normalize_tensor(std::move(raw));
}

// Coefficient of the rank-0 class.
inline Int counit(const IncidenceElement& a) {
    for (const auto& t : a.terms())
        if (t.rep.rank() == 0) return t.coeff;
    return 0;
}

// S(1) = 1; S(P) = -sum_{x != top} S([0,x]) . [x,1].
inline IncidenceElement antipode_incidence(const IncidenceElement& a) {
    auto antipode_poset = [](auto&& self, const LabeledPoset& P) -> IncidenceElement {
        if (P.rank() == 0) return IncidenceElement::unit();
        IncidenceElement acc;
        for (int x = 0; x < P.num_elements(); ++x) {
            if (x == P.top()) continue;
            IncidenceElement s = self(self, interval(P, P.bottom(), x));
            IncidenceElement upper = IncidenceElement::from_poset(interval(P, x, P.top()));
            acc = add(acc, hopf_product(s, upper));
        }
        return scale(acc, -1);
    };
    IncidenceElement out;
    for (const auto& t : a.terms())
        out = add(out, scale(antipode_poset(antipode_poset, t.rep), t.coeff));
    return out;
}

// Phi: linear extension of P -> F_P. A morphism of graded Hopf algebras
// into the quasi-symmetric functions.
inline QSymExpr phi(const IncidenceElement& a) {
    QSymExpr out(QBasis::M);
    for (const auto& t : a.terms()) {
        QSymExpr f = fp(t.rep);
        for (const auto& [alpha, c] : f.terms()) out.add_term(alpha, c * t.coeff);
    }
    return out;
}

inline QSymTensor phi_tensor(const IncidenceTensor& a) {
    QSymTensor out;
    for (const auto& t : a.terms()) {
        QSymExpr l = fp(t.left), r = fp(t.right);
        for (const auto& [beta, cb] : l.terms())
            for (const auto& [gamma, cg] : r.terms())
                tensor_add(out, beta, gamma, cb * cg * t.coeff);
    }
    return out;
}

// Equality of normalized elements up to label-equivalence of representatives.
inline bool equivalent(const IncidenceElement& a, const IncidenceElement& b) {
    if (a.terms().size() != b.terms().size()) return false;
    std::vector<char> used(b.terms().size(), 0);
    for (const auto& ta : a.terms()) {
        bool found = false;
        for (std::size_t j = 0; j < b.terms().size(); ++j) {
            if (used[j] || b.terms()[j].coeff != ta.coeff) continue;
            if (!label_equivalent(ta.rep, b.terms()[j].rep)) continue;
            used[j] = 1;
            found = true;
            break;
        }
        if (!found) return false;
    }
    return true;
}

inline bool equivalent(const IncidenceTensor& a, const IncidenceTensor& b) {
    if (a.terms().size() != b.terms().size()) return false;
    std::vector<char> used(b.terms().size(), 0);
    for (const auto& ta : a.terms()) {
        bool found = false;
        for (std::size_t j = 0; j < b.terms().size(); ++j) {
            const auto& tb = b.terms()[j];
            if (used[j] || tb.coeff != ta.coeff) continue;
            if (!label_equivalent(ta.left, tb.left) ||
                !label_equivalent(ta.right, tb.right))
                continue;
            used[j] = 1;
            found = true;
            break;
        }
        if (!found) return false;
    }
    return true;
}

// Rendered as a signed sum of coeff * inline serialization.
inline std::string render(const IncidenceElement& a) {
    if (a.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& t : a.terms()) {
        if (!first) out << " ";
        first = false;
        out << (t.coeff < 0 ? "-" : "+") << boost::multiprecision::abs(t.coeff)
            << " * " << inline_poset(t.rep);
    }
    return out.str();
}

inline std::string render(const IncidenceTensor& a) {
    if (a.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& t : a.terms()) {
        if (!first) out << "\n";
        first = false;
        out << (t.coeff < 0 ? "-" : "+") << boost::multiprecision::abs(t.coeff)
            << " * " << inline_poset(t.left) << " (x) " << inline_poset(t.right);
    }
    return out.str();
}

}  // namespace chainform
