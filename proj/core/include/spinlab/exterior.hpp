#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "spinlab/multivector.hpp"

namespace spinlab {

/// Element of the exterior algebra over R^{r+s}. The signature only supplies
/// the metric used by contraction; the wedge product ignores it.
template <CliffordScalar S>
class ExteriorElement {
  public:
    using Traits = ScalarTraits<S>;
    using Terms = std::map<Mask, S>;

    ExteriorElement() = default;
    explicit ExteriorElement(Signature sig) : sig_(sig) {}

    static ExteriorElement one(Signature sig) {
        ExteriorElement out(sig);
        out.add_term(0, Traits::from_int(1));
        return out;
    }
    static ExteriorElement basis_vector(Signature sig, int i) {
        ExteriorElement out(sig);
        out.add_term(Mask{1} << i, Traits::from_int(1));
        return out;
    }
    static ExteriorElement vector(Signature sig, const std::vector<S>& components) {
        if (static_cast<int>(components.size()) != sig.n())
            throw std::invalid_argument("vector has wrong number of components");
        ExteriorElement out(sig);
        for (int i = 0; i < sig.n(); ++i)
            out.add_term(Mask{1} << i, components[i]);
        return out;
    }

    const Signature& signature() const { return sig_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    S coefficient(Mask m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Traits::from_int(0) : it->second;
    }

    void add_term(Mask m, const S& value) {
        if (!sig_.fits(m))
            throw std::invalid_argument("blade mask does not fit the signature");
        if (Traits::is_zero(value))
            return;
        auto [it, inserted] = terms_.try_emplace(m, value);
        if (!inserted) {
            it->second += value;
            if (Traits::is_zero(it->second))
                terms_.erase(it);
        }
    }

    ExteriorElement& operator+=(const ExteriorElement& o) {
        for (const auto& [m, c] : o.terms_)
            add_term(m, c);
        return *this;
    }
    ExteriorElement& operator-=(const ExteriorElement& o) {
        for (const auto& [m, c] : o.terms_)
            add_term(m, -c);
        return *this;
    }
    friend ExteriorElement operator+(ExteriorElement a, const ExteriorElement& b) { return a += b; }
    friend ExteriorElement operator-(ExteriorElement a, const ExteriorElement& b) { return a -= b; }
    friend ExteriorElement operator*(const S& k, ExteriorElement a) {
        ExteriorElement out(a.sig_);
        for (const auto& [m, c] : a.terms_)
            out.add_term(m, k * c);
        return out;
    }

    /// Wedge product.
    friend ExteriorElement operator^(const ExteriorElement& a, const ExteriorElement& b) {
        if (!(a.sig_ == b.sig_))
            throw std::invalid_argument("exterior elements over different spaces");
        ExteriorElement out(a.sig_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) {
                if (ma & mb)
                    continue;
                S c = ca * cb;
                if (reordering_sign(ma, mb) < 0)
                    c = -c;
                out.add_term(ma | mb, c);
            }
        return out;
    }

    friend bool operator==(const ExteriorElement& a, const ExteriorElement& b) {
        return a.sig_ == b.sig_ && a.terms_ == b.terms_;
    }

  private:
    Signature sig_{};
    Terms terms_;
};

/// phi: e_{j1} ^ ... ^ e_{jk} -> e_{j1} ... e_{jk}; identity on canonical masks.
template <CliffordScalar S>
Multivector<S> lambda_to_clifford(const ExteriorElement<S>& w, const Signature& sig) {
    if (!(w.signature() == sig))
        throw std::invalid_argument("exterior element and target algebra differ in dimension");
    Multivector<S> out(sig);
    for (const auto& [m, c] : w.terms())
        out.add_term(m, c);
    return out;
}

/// Contraction of the basis vector e_i into w, with <e_i,e_i> = -e_i^2.
template <CliffordScalar S>
ExteriorElement<S> contract_basis(int i, const ExteriorElement<S>& w) {
    const Mask bit = Mask{1} << i;
    const int metric = -w.signature().square(i);
    ExteriorElement<S> out(w.signature());
    for (const auto& [m, c] : w.terms()) {
        if (!(m & bit))
            continue;
        const int below = std::popcount(m & (bit - 1));
        const int sign = ((below % 2) ? -1 : 1) * metric;
        out.add_term(m ^ bit, sign > 0 ? c : S(-c));
    }
    return out;
}

/// c(v) w = v ^ w - v _| w.
template <CliffordScalar S>
ExteriorElement<S> wedge_contract_action(const std::vector<S>& v, const ExteriorElement<S>& w) {
    const Signature& sig = w.signature();
    if (static_cast<int>(v.size()) != sig.n())
        throw std::invalid_argument("vector has wrong number of components");
    ExteriorElement<S> out = ExteriorElement<S>::vector(sig, v) ^ w;
    for (int i = 0; i < sig.n(); ++i) {
        if (ScalarTraits<S>::is_zero(v[i]))
            continue;
        out -= v[i] * contract_basis(i, w);
    }
    return out;
}

/// sigma(x) = c(x) 1, with c extended multiplicatively from generators.
template <CliffordScalar S>
ExteriorElement<S> clifford_to_lambda(const Multivector<S>& x) {
    const Signature& sig = x.signature();
    ExteriorElement<S> out(sig);
    for (const auto& [m, c] : x.terms()) {
        ExteriorElement<S> acc = ExteriorElement<S>::one(sig);
        for (int i = sig.n() - 1; i >= 0; --i) {
            if (!(m & (Mask{1} << i)))
                continue;
            std::vector<S> e(sig.n(), ScalarTraits<S>::from_int(0));
            e[i] = ScalarTraits<S>::from_int(1);
            acc = wedge_contract_action(e, acc);
        }
        out += c * acc;
    }
    return out;
}

}  // namespace spinlab
