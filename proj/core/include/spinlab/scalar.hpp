#pragma once

#include <complex>
#include <string>
#include <type_traits>

#include <gmpxx.h>

namespace spinlab {

using Rational = mpq_class;
using Complex = std::complex<double>;

/// Element of Q(i). Used wherever idempotents and ideals must be exact.
struct GaussianRational {
    Rational re{0};
    Rational im{0};

    GaussianRational() = default;
    GaussianRational(Rational r, Rational i = 0) : re(std::move(r)), im(std::move(i)) {
        re.canonicalize();
        im.canonicalize();
    }
    GaussianRational(long v) : re(v), im(0) {}
    GaussianRational(int v) : re(v), im(0) {}

    static GaussianRational i() { return {0, 1}; }

    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
    GaussianRational conj() const { return {re, -im}; }
    Rational norm2() const { return re * re + im * im; }

    GaussianRational& operator+=(const GaussianRational& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o) {
        Rational r = re * o.re - im * o.im;
        Rational i = re * o.im + im * o.re;
        re = std::move(r);
        im = std::move(i);
        return *this;
    }
    GaussianRational& operator/=(const GaussianRational& o) {
        const Rational d = o.norm2();
        *this *= o.conj();
        re /= d;
        im /= d;
        return *this;
    }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
    friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
};

std::string to_string(const Rational& q);
std::string to_string(const GaussianRational& z);

/// Uniform access to the coefficient fields a Multivector may carry.
template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
    static constexpr bool exact = true;
    static bool is_zero(const Rational& v) { return sgn(v) == 0; }
    static Rational from_int(long v) { return Rational(v); }
    static Complex to_complex(const Rational& v) { return {v.get_d(), 0.0}; }
    static double magnitude(const Rational& v) { return std::abs(v.get_d()); }
};

template <>
struct ScalarTraits<GaussianRational> {
    static constexpr bool exact = true;
    static bool is_zero(const GaussianRational& v) { return v.is_zero(); }
    static GaussianRational from_int(long v) { return GaussianRational(v); }
    static Complex to_complex(const GaussianRational& v) { return {v.re.get_d(), v.im.get_d()}; }
    static double magnitude(const GaussianRational& v) { return std::abs(to_complex(v)); }
};

template <>
struct ScalarTraits<double> {
    static constexpr bool exact = false;
    static bool is_zero(double v) { return v == 0.0; }
    static double from_int(long v) { return static_cast<double>(v); }
    static Complex to_complex(double v) { return {v, 0.0}; }
    static double magnitude(double v) { return std::abs(v); }
};

template <>
struct ScalarTraits<Complex> {
    static constexpr bool exact = false;
    static bool is_zero(const Complex& v) { return v == Complex{}; }
    static Complex from_int(long v) { return {static_cast<double>(v), 0.0}; }
    static Complex to_complex(const Complex& v) { return v; }
    static double magnitude(const Complex& v) { return std::abs(v); }
};

template <class S>
concept CliffordScalar = requires { ScalarTraits<S>::exact; };

}  // namespace spinlab
