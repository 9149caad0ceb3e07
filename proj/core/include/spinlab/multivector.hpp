#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "spinlab/scalar.hpp"
#include "spinlab/signature.hpp"

namespace spinlab {

/// Sparse element of Cl(r,s): blade mask -> coefficient, no stored zeros.
template <CliffordScalar S>
class Multivector {
  public:
    using Scalar = S;
    using Traits = ScalarTraits<S>;
    using Terms = std::map<Mask, S>;

    Multivector() = default;
    explicit Multivector(Signature sig) : sig_(sig) {}

    static Multivector scalar(Signature sig, S value) { return blade(sig, 0, std::move(value)); }
    static Multivector one(Signature sig) { return scalar(sig, Traits::from_int(1)); }

    static Multivector blade(Signature sig, Mask mask, S coefficient = Traits::from_int(1)) {
        Multivector out(sig);
        out.add_term(mask, std::move(coefficient));
        return out;
    }

    static Multivector basis_vector(Signature sig, int i) {
        if (i < 0 || i >= sig.n())
            throw std::invalid_argument("basis vector index out of range");
        return blade(sig, Mask{1} << i);
    }

    static Multivector vector(Signature sig, const std::vector<S>& components) {
        if (static_cast<int>(components.size()) != sig.n())
            throw std::invalid_argument("vector has wrong number of components");
        Multivector out(sig);
        for (int i = 0; i < sig.n(); ++i)
            out.add_term(Mask{1} << i, components[i]);
        return out;
    }

    const Signature& signature() const { return sig_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    S coefficient(Mask m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Traits::from_int(0) : it->second;
    }
    S scalar_part() const { return coefficient(0); }

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

    bool is_scalar() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0); }

    /// Grade-k projection.
    Multivector grade_part(int k) const {
        return filtered([k](Mask m) { return grade(m) == k; });
    }
    Multivector even_part() const {
        return filtered([](Mask m) { return grade(m) % 2 == 0; });
    }
    Multivector odd_part() const {
        return filtered([](Mask m) { return grade(m) % 2 == 1; });
    }
    bool is_even() const { return odd_part().is_zero(); }
    bool is_odd() const { return even_part().is_zero(); }

    /// Drop coefficients with magnitude <= tol (floating coefficients only matter).
    Multivector pruned(double tol) const {
        Multivector out(sig_);
        for (const auto& [m, c] : terms_)
            if (Traits::magnitude(c) > tol)
                out.terms_.emplace(m, c);
        return out;
    }

    double max_abs_coefficient() const {
        double best = 0.0;
        for (const auto& [m, c] : terms_)
            best = std::max(best, Traits::magnitude(c));
        return best;
    }

    template <class T, class Convert>
    Multivector<T> cast(Convert convert) const {
        Multivector<T> out(sig_);
        for (const auto& [m, c] : terms_)
            out.add_term(m, convert(c));
        return out;
    }

    Multivector& operator+=(const Multivector& o) {
        require_same(o);
        for (const auto& [m, c] : o.terms_)
            add_term(m, c);
        return *this;
    }
    Multivector& operator-=(const Multivector& o) {
        require_same(o);
        for (const auto& [m, c] : o.terms_)
            add_term(m, -c);
        return *this;
    }
    Multivector& operator*=(const S& k) {
        if (Traits::is_zero(k)) {
            terms_.clear();
            return *this;
        }
        for (auto& [m, c] : terms_)
            c *= k;
        return *this;
    }

    friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
    friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
    friend Multivector operator-(Multivector a) {
        for (auto& [m, c] : a.terms_)
            c = -c;
        return a;
    }
    friend Multivector operator*(Multivector a, const S& k) { return a *= k; }
    friend Multivector operator*(const S& k, Multivector a) { return a *= k; }
    friend Multivector operator*(const Multivector& a, const Multivector& b) { return product(a, b); }

    friend bool operator==(const Multivector& a, const Multivector& b) {
        return a.sig_ == b.sig_ && a.terms_ == b.terms_;
    }

    /// Geometric product, with the blade kernel exposed so the verification
    /// suite can run against a deliberately broken kernel.
    static Multivector product(const Multivector& a, const Multivector& b, BladeProductFn kernel = &blade_product) {
        a.require_same(b);
        Multivector out(a.sig_);
        if (a.is_zero() || b.is_zero())
            return out;
        if constexpr (!Traits::exact) {
            const std::size_t work = a.size() * b.size();
            if (a.sig_.n() <= 16 && work * 8 >= a.sig_.blade_count()) {
                std::vector<S> acc(a.sig_.blade_count(), Traits::from_int(0));
                for (const auto& [ma, ca] : a.terms_)
                    for (const auto& [mb, cb] : b.terms_) {
                        const BladeProduct p = kernel(ma, mb, a.sig_);
                        if (p.sign > 0)
                            acc[p.mask] += ca * cb;
                        else
                            acc[p.mask] -= ca * cb;
                    }
                for (std::size_t m = 0; m < acc.size(); ++m)
                    if (!Traits::is_zero(acc[m]))
                        out.terms_.emplace_hint(out.terms_.end(), static_cast<Mask>(m), acc[m]);
                return out;
            }
        }
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) {
                const BladeProduct p = kernel(ma, mb, a.sig_);
                S c = ca * cb;
                if (p.sign < 0)
                    c = -c;
                out.add_term(p.mask, c);
            }
        return out;
    }

  private:
    template <class Pred>
    Multivector filtered(Pred keep) const {
        Multivector out(sig_);
        for (const auto& [m, c] : terms_)
            if (keep(m))
                out.terms_.emplace_hint(out.terms_.end(), m, c);
        return out;
    }

    void require_same(const Multivector& o) const {
        if (!(sig_ == o.sig_))
            throw std::invalid_argument("multivectors belong to different signatures");
    }

    template <class Fn>
    Multivector signed_by_grade(Fn sign_of_grade) const {
        Multivector out(sig_);
        for (const auto& [m, c] : terms_)
            out.terms_.emplace_hint(out.terms_.end(), m, sign_of_grade(grade(m)) > 0 ? c : S(-c));
        return out;
    }

    template <CliffordScalar T>
    friend Multivector<T> grade_involution(const Multivector<T>&);
    template <CliffordScalar T>
    friend Multivector<T> reversal(const Multivector<T>&);
    template <CliffordScalar T>
    friend Multivector<T> conjugation(const Multivector<T>&);

    Signature sig_{};
    Terms terms_;
};

template <CliffordScalar S>
Multivector<S> geometric_product(const Multivector<S>& x, const Multivector<S>& y) {
    return Multivector<S>::product(x, y);
}

/// alpha: grade-k blades scaled by (-1)^k.
template <CliffordScalar S>
Multivector<S> grade_involution(const Multivector<S>& x) {
    return x.signed_by_grade([](int k) { return (k % 2) ? -1 : 1; });
}

/// x^t: grade-k blades scaled by (-1)^{k(k-1)/2}.
template <CliffordScalar S>
Multivector<S> reversal(const Multivector<S>& x) {
    return x.signed_by_grade([](int k) { return ((k * (k - 1) / 2) % 2) ? -1 : 1; });
}

/// x-bar = alpha(x^t): grade-k blades scaled by (-1)^{k(k+1)/2}.
template <CliffordScalar S>
Multivector<S> conjugation(const Multivector<S>& x) {
    return x.signed_by_grade([](int k) { return ((k * (k + 1) / 2) % 2) ? -1 : 1; });
}

/// N(x) = x * conj(x). Scalar-valued on the Clifford group, arbitrary otherwise.
template <CliffordScalar S>
Multivector<S> spinor_norm(const Multivector<S>& x) {
    return x * conjugation(x);
}

/// Extension of e_i -> images[i] to the whole algebra, e_I -> images[i1]*...*images[ik].
/// `scale(c, t)` multiplies an image by a coefficient; `one` is the target unit.
template <CliffordScalar S, class T, class ScaleFn>
T induced_homomorphism(const Multivector<S>& x, const std::vector<T>& images, const T& one, ScaleFn scale) {
    if (static_cast<int>(images.size()) != x.signature().n())
        throw std::invalid_argument("need one generator image per basis vector");
    std::optional<T> total;
    for (const auto& [m, c] : x.terms()) {
        T blade_image = one;
        for (int i = 0; i < x.signature().n(); ++i)
            if (m & (Mask{1} << i))
                blade_image = blade_image * images[i];
        T term = scale(c, blade_image);
        if (total)
            *total = *total + term;
        else
            total = std::move(term);
    }
    if (!total)
        return scale(ScalarTraits<S>::from_int(0), one);
    return *total;
}

}  // namespace spinlab
