#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace mubtk {

/// Exact rational scalar. Always canonical: lowest terms, positive denominator.
/// Arithmetic never rounds.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(int n) : v_(static_cast<long>(n)) {}
    Rational(long num, long den) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }
    explicit Rational(const mpz_class& n) : v_(n) {}

    /// Parses "p/q" or "p" with optional sign; arbitrary precision.
    static Rational parse(std::string_view text);

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    const mpq_class& raw() const { return v_; }
    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    double to_double() const { return v_.get_d(); }
    /// "p/q", or just "p" when the denominator is 1.
    std::string to_string() const { return v_.get_str(); }

    Rational operator-() const { return from_raw(-v_); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    Rational abs() const { return sign() < 0 ? -*this : *this; }

private:
    // GMP keeps mpq results canonical as long as operands are; constructors
    // canonicalize explicitly so the invariant holds from birth.
    static Rational from_raw(mpq_class v) {
        Rational r;
        r.v_ = std::move(v);
        return r;
    }
    mpq_class v_;
};

inline Rational Rational::parse(std::string_view text) {
    std::string s;
    s.reserve(text.size());
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw std::invalid_argument("Rational::parse: empty input");
    mpq_class v;
    if (v.set_str(s, 10) != 0)
        throw std::invalid_argument("Rational::parse: bad rational '" + std::string(text) + "'");
    if (v.get_den() == 0) throw std::invalid_argument("Rational::parse: zero denominator");
    v.canonicalize();
    Rational r;
    r = Rational(v);
    return r;
}

}  // namespace mubtk
