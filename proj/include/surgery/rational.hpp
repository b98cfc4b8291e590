#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>

#include "surgery/errors.hpp"

namespace surgery {

using Integer = mpz_class;

// gmpxx constructors stop at long; convert long long explicitly so 32-bit
// longs cannot truncate.
inline Integer make_integer(long long n) {
    if constexpr (sizeof(long) >= sizeof(long long)) {
        return Integer(static_cast<long>(n));
    } else {
        const bool neg = n < 0;
        const unsigned long long mag =
            neg ? 0ULL - static_cast<unsigned long long>(n) : static_cast<unsigned long long>(n);
        Integer r(static_cast<unsigned long>(mag >> 32));
        r <<= 32;
        r += static_cast<unsigned long>(mag & 0xffffffffULL);
        if (neg) r = -r;
        return r;
    }
}

// Exact rational number, always in canonical form: reduced fraction with
// positive denominator and the sign carried by the numerator.  Thin wrapper
// around GMP's mpq_class so arithmetic never overflows or rounds.
class Rational {
  public:
    Rational() : value_(0) {}
    Rational(long long n) : value_(make_integer(n)) {}
    Rational(const Integer& n) : value_(n) {}

    Rational(long long n, long long d) : Rational(make_integer(n), make_integer(d)) {}

    Rational(const Integer& n, const Integer& d) {
        if (d == 0) fail(ErrorKind::ZeroDenominator, "rational with denominator 0");
        value_ = mpq_class(n, d);
        value_.canonicalize();
    }

    const Integer numerator() const { return value_.get_num(); }
    const Integer denominator() const { return value_.get_den(); }

    bool is_zero() const { return value_ == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    // Largest integer <= *this.
    Integer floor() const {
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
        return q;
    }

    // Requires is_integer(); NonIntegral otherwise.
    Integer to_integer() const {
        if (!is_integer()) fail(ErrorKind::NonIntegral, "expected integer, got " + to_string());
        return value_.get_num();
    }

    std::string to_string() const;
    static Rational from_string(const std::string& text);

    Rational operator-() const { return Rational(mpq_class(-value_)); }

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) fail(ErrorKind::DivisionByZero, "rational division by zero");
        value_ /= o.value_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.value_ != b.value_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.value_ <= b.value_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.value_ > b.value_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.value_ >= b.value_; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

  private:
    explicit Rational(mpq_class v) : value_(std::move(v)) {}

    mpq_class value_;  // invariant: canonical (gmp keeps it so after canonicalize)
};

inline Rational make_rational(long long n, long long d) { return Rational(n, d); }
inline Rational make_rational(const Integer& n, const Integer& d) { return Rational(n, d); }

// Residue class mod 3, value in {0,1,2}.  Small value type so congruence
// bookkeeping cannot silently mix moduli or pick up C's negative remainders.
class Mod3Residue {
  public:
    Mod3Residue() : v_(0) {}
    explicit Mod3Residue(int v) : v_(((v % 3) + 3) % 3) {}

    static Mod3Residue of(long long n) { return Mod3Residue(static_cast<int>(((n % 3) + 3) % 3)); }
    static Mod3Residue of(const Integer& n) {
        // mpz_fdiv_ui returns the non-negative remainder.
        return Mod3Residue(static_cast<int>(mpz_fdiv_ui(n.get_mpz_t(), 3)));
    }

    int value() const { return v_; }

    friend Mod3Residue operator+(Mod3Residue a, Mod3Residue b) { return Mod3Residue(a.v_ + b.v_); }
    friend Mod3Residue operator-(Mod3Residue a, Mod3Residue b) { return Mod3Residue(a.v_ - b.v_ + 3); }
    friend Mod3Residue operator*(Mod3Residue a, Mod3Residue b) { return Mod3Residue(a.v_ * b.v_); }
    Mod3Residue operator-() const { return Mod3Residue(3 - v_); }

    friend bool operator==(Mod3Residue a, Mod3Residue b) { return a.v_ == b.v_; }
    friend bool operator!=(Mod3Residue a, Mod3Residue b) { return a.v_ != b.v_; }

  private:
    int v_;
};

// Reduce a rational mod 3: num * den^{-1} in Z/3.  Defined only when the
// denominator is a unit mod 3, i.e. not divisible by 3.
Mod3Residue mod3_residue(const Rational& r);

}  // namespace surgery
