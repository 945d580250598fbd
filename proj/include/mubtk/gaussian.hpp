#pragma once

#include "mubtk/rational.hpp"

#include <complex>
#include <string>

namespace mubtk {

/// Complex number with exact rational real and imaginary parts.
struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational() = default;
    GaussianRational(Rational r) : re(std::move(r)) {}
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    GaussianRational(long r) : re(r) {}
    GaussianRational(long r, long i) : re(r), im(i) {}

    static GaussianRational i() { return {Rational(0), Rational(1)}; }

    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    bool is_real() const { return im.is_zero(); }

    GaussianRational conj() const { return {re, -im}; }
    /// |z|^2 = re^2 + im^2; a nonnegative Rational, zero iff z = 0.
    Rational norm2() const { return re * re + im * im; }

    std::complex<double> to_complex() const { return {re.to_double(), im.to_double()}; }

    GaussianRational operator-() const { return {-re, -im}; }
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
        Rational n2 = o.norm2();
        if (n2.is_zero()) throw std::domain_error("GaussianRational: division by zero");
        *this *= o.conj();
        re /= n2;
        im /= n2;
        return *this;
    }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

    std::string to_string() const {
        if (im.is_zero()) return re.to_string();
        std::string s = re.is_zero() ? "" : re.to_string();
        if (im.sign() > 0 && !s.empty()) s += "+";
        s += im.to_string() + "i";
        return s;
    }
};

}  // namespace mubtk
