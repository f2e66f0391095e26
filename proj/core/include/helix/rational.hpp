#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

#include "helix/errors.hpp"

namespace helix {

/// Arbitrary-precision integer. Ranks and pairing values grow roughly like
/// 3^q with the order q, so fixed-width integers are not an option here.
using Int = mpz_class;

Int pow_int(const Int& base, unsigned exp);
inline Int pow3(unsigned exp) { return pow_int(3, exp); }
inline Int pow2(unsigned exp) { return pow_int(2, exp); }

/// Exact rational number, always in lowest terms with positive denominator.
/// Backed by GMP; every operation normalizes eagerly so equality is
/// structural. There is no floating point anywhere in this library.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}
    Rational(long n) : v_(static_cast<signed long>(n)) {}
    Rational(const Int& n) : v_(n) {}
    Rational(const Int& num, const Int& den);

    /// Parses "p", "-p" or "p/q". Throws ParseError on malformed input.
    static Rational parse(std::string_view text);

    Int numerator() const { return v_.get_num(); }
    Int denominator() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    /// Largest integer <= value.
    Int floor() const;

    Rational abs() const;

    std::string str() const;

    friend Rational operator+(const Rational& a, const Rational& b) { return from_mpq(a.v_ + b.v_); }
    friend Rational operator-(const Rational& a, const Rational& b) { return from_mpq(a.v_ - b.v_); }
    friend Rational operator*(const Rational& a, const Rational& b) { return from_mpq(a.v_ * b.v_); }
    friend Rational operator/(const Rational& a, const Rational& b);
    Rational operator-() const { return from_mpq(-v_); }

    Rational& operator+=(const Rational& b) { v_ += b.v_; return *this; }
    Rational& operator-=(const Rational& b) { v_ -= b.v_; return *this; }
    Rational& operator*=(const Rational& b) { v_ *= b.v_; return *this; }
    Rational& operator/=(const Rational& b) { *this = *this / b; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t()) == 0; }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) { return mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t()) < 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    static Rational from_mpq(mpq_class v) {
        Rational r;
        r.v_ = std::move(v);
        return r;
    }

    mpq_class v_;  // canonical: lowest terms, positive denominator
};

std::string int_str(const Int& n);

}  // namespace helix
