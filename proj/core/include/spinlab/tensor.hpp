#pragma once

#include <map>
#include <stdexcept>
#include <utility>

#include "spinlab/multivector.hpp"

namespace spinlab {

enum class TensorKind { graded, ungraded };

/// Element of Cl(A) (x) Cl(B) on pairs of blade masks. The graded kind
/// multiplies with the Koszul sign (-1)^{deg(b) deg(a')}.
template <CliffordScalar S>
class TensorElement {
  public:
    using Traits = ScalarTraits<S>;
    using Key = std::pair<Mask, Mask>;
    using Terms = std::map<Key, S>;

    TensorElement(Signature left, Signature right, TensorKind kind = TensorKind::graded)
        : left_(left), right_(right), kind_(kind) {}

    static TensorElement pure(const Multivector<S>& a, const Multivector<S>& b,
                              TensorKind kind = TensorKind::graded) {
        TensorElement out(a.signature(), b.signature(), kind);
        for (const auto& [ma, ca] : a.terms())
            for (const auto& [mb, cb] : b.terms())
                out.add_term({ma, mb}, ca * cb);
        return out;
    }

    const Signature& left() const { return left_; }
    const Signature& right() const { return right_; }
    TensorKind kind() const { return kind_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    S coefficient(Mask a, Mask b) const {
        auto it = terms_.find({a, b});
        return it == terms_.end() ? Traits::from_int(0) : it->second;
    }

    void add_term(Key k, const S& value) {
        if (!left_.fits(k.first) || !right_.fits(k.second))
            throw std::invalid_argument("tensor term does not fit the factors");
        if (Traits::is_zero(value))
            return;
        auto [it, inserted] = terms_.try_emplace(k, value);
        if (!inserted) {
            it->second += value;
            if (Traits::is_zero(it->second))
                terms_.erase(it);
        }
    }

    TensorElement& operator+=(const TensorElement& o) {
        require_same(o);
        for (const auto& [k, c] : o.terms_)
            add_term(k, c);
        return *this;
    }
    friend TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
    friend TensorElement operator-(TensorElement a, const TensorElement& b) {
        a.require_same(b);
        for (const auto& [k, c] : b.terms_)
            a.add_term(k, -c);
        return a;
    }

    friend TensorElement operator*(const TensorElement& x, const TensorElement& y) {
        x.require_same(y);
        TensorElement out(x.left_, x.right_, x.kind_);
        for (const auto& [kx, cx] : x.terms_)
            for (const auto& [ky, cy] : y.terms_) {
                const BladeProduct pa = blade_product(kx.first, ky.first, x.left_);
                const BladeProduct pb = blade_product(kx.second, ky.second, x.right_);
                int sign = pa.sign * pb.sign;
                if (x.kind_ == TensorKind::graded && (grade(kx.second) % 2) && (grade(ky.first) % 2))
                    sign = -sign;
                S c = cx * cy;
                if (sign < 0)
                    c = -c;
                out.add_term({pa.mask, pb.mask}, c);
            }
        return out;
    }
    friend TensorElement operator*(const S& k, TensorElement a) {
        TensorElement out(a.left_, a.right_, a.kind_);
        for (const auto& [key, c] : a.terms_)
            out.add_term(key, k * c);
        return out;
    }

    friend bool operator==(const TensorElement& a, const TensorElement& b) {
        return a.left_ == b.left_ && a.right_ == b.right_ && a.kind_ == b.kind_ && a.terms_ == b.terms_;
    }

  private:
    void require_same(const TensorElement& o) const {
        if (!(left_ == o.left_ && right_ == o.right_ && kind_ == o.kind_))
            throw std::invalid_argument("tensor elements over different factor algebras");
    }

    Signature left_;
    Signature right_;
    TensorKind kind_;
    Terms terms_;
};

/// Orthogonal splitting of Cl(r,s) into its first `k` generators and the rest.
/// Generator order is preserved, so each factor is again in canonical form.
struct Splitting {
    Signature whole;
    int k = 0;

    Splitting(Signature sig, int first) : whole(sig), k(first) {
        if (first < 0 || first > sig.n())
            throw std::invalid_argument("splitting index outside the generator range");
    }
    Signature left() const { return Signature(std::min(whole.r(), k), std::max(0, k - whole.r()), kHardMaxDimension); }
    Signature right() const {
        const int r2 = std::max(0, whole.r() - k);
        return Signature(r2, whole.n() - k - r2, kHardMaxDimension);
    }
    Mask left_mask() const { return k == 0 ? 0u : static_cast<Mask>((std::uint64_t{1} << k) - 1); }
};

/// f~ : Cl(E1 + E2) -> Cl(E1) (x)^ Cl(E2), induced by v1 + v2 -> v1 (x) 1 + 1 (x) v2.
template <CliffordScalar S>
TensorElement<S> split_iso(const Multivector<S>& x, const Splitting& split) {
    if (!(x.signature() == split.whole))
        throw std::invalid_argument("element does not live on the split space");
    const Signature l = split.left(), r = split.right();
    std::vector<TensorElement<S>> images;
    const S one = ScalarTraits<S>::from_int(1);
    for (int i = 0; i < split.whole.n(); ++i) {
        TensorElement<S> t(l, r);
        if (i < split.k)
            t.add_term({Mask{1} << i, 0}, one);
        else
            t.add_term({0, Mask{1} << (i - split.k)}, one);
        images.push_back(std::move(t));
    }
    TensorElement<S> unit(l, r);
    unit.add_term({0, 0}, one);
    return induced_homomorphism(x, images, unit, [](const S& c, const TensorElement<S>& t) { return c * t; });
}

/// g~(a (x) b) = Cl(i1)(a) * Cl(i2)(b), computed with the geometric product of the whole space.
template <CliffordScalar S>
Multivector<S> split_iso_inverse(const TensorElement<S>& t, const Splitting& split) {
    if (!(t.left() == split.left() && t.right() == split.right()))
        throw std::invalid_argument("tensor factors do not match the splitting");
    Multivector<S> out(split.whole);
    for (const auto& [key, c] : t.terms()) {
        const auto a = Multivector<S>::blade(split.whole, key.first, c);
        const auto b = Multivector<S>::blade(split.whole, key.second << split.k);
        out += a * b;
    }
    return out;
}

/// Volume element e_0 ... e_{n-1} of a signature.
template <CliffordScalar S>
Multivector<S> volume_blade(const Signature& sig) {
    return Multivector<S>::blade(sig, sig.full_mask());
}

/// Cl(E1 + E2, Q) -> Cl(E1, Q1) (x) Cl(E2, +-Q2), ungraded, for dim E1 even.
/// Induced by (v1, v2) -> v1 (x) 1 + eps (x) v2; the right factor carries +Q2 when
/// Cl(E1) is positive and -Q2 when it is negative.
template <CliffordScalar S>
TensorElement<S> product_split_iso(const Multivector<S>& x, const Splitting& split) {
    if (!(x.signature() == split.whole))
        throw std::invalid_argument("element does not live on the split space");
    if (split.k % 2)
        throw std::invalid_argument("the first factor must have even dimension");
    const Signature l = split.left();
    const auto eps = volume_blade<S>(l);
    const bool positive = (eps * eps).scalar_part() == ScalarTraits<S>::from_int(1);
    const Signature r0 = split.right();
    // -Q2 swaps which generators square to -1; keep canonical order by relabelling.
    const Signature r = positive ? r0 : Signature(r0.s(), r0.r(), kHardMaxDimension);
    auto relabel = [&](int j) { return positive ? j : (j < r0.r() ? r0.s() + j : j - r0.r()); };

    const S one = ScalarTraits<S>::from_int(1);
    std::vector<TensorElement<S>> images;
    for (int i = 0; i < split.whole.n(); ++i) {
        TensorElement<S> t(l, r, TensorKind::ungraded);
        if (i < split.k)
            t.add_term({Mask{1} << i, 0}, one);
        else
            t.add_term({l.full_mask(), Mask{1} << relabel(i - split.k)}, one);
        images.push_back(std::move(t));
    }
    TensorElement<S> unit(l, r, TensorKind::ungraded);
    unit.add_term({0, 0}, one);
    return induced_homomorphism(x, images, unit, [](const S& c, const TensorElement<S>& t) { return c * t; });
}

/// Cl(E, -Q) -> Cl(E, Q) for even n and positive Cl(E, Q), induced by
/// v -> eps_+ * v. The input lives on Signature(s, r): its first s generators
/// are the basis vectors r..n-1 of E, followed by basis vectors 0..r-1.
template <CliffordScalar S>
Multivector<S> sign_flip_iso(const Multivector<S>& x, const Signature& target) {
    if (target.n() % 2)
        throw std::invalid_argument("sign flip isomorphism needs even dimension");
    const auto eps = volume_blade<S>(target);
    if (!((eps * eps).scalar_part() == ScalarTraits<S>::from_int(1)))
        throw std::invalid_argument("sign flip isomorphism needs a positive algebra");
    const Signature flipped(target.s(), target.r(), kHardMaxDimension);
    if (!(x.signature() == flipped))
        throw std::invalid_argument("input must live on the sign-flipped signature");
    std::vector<Multivector<S>> images;
    for (int j = 0; j < flipped.n(); ++j) {
        const int e = j < target.s() ? target.r() + j : j - target.s();
        images.push_back(eps * Multivector<S>::basis_vector(target, e));
    }
    return induced_homomorphism(x, images, Multivector<S>::one(target),
                                [](const S& c, const Multivector<S>& m) { return c * m; });
}

}  // namespace spinlab
