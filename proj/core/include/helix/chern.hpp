#pragma once

#include <array>
#include <optional>
#include <string>

#include "helix/rational.hpp"

namespace helix {

/// A class in K(P^3) ⊗ Q written in the coordinates
/// (ch0·H^3, ch1·H^2, ch2·H, ch3). For an actual sheaf, ch0 is a
/// non-negative integer, ch1 an integer, 2·ch2 and 6·ch3 integers.
struct ChernCharacter {
    Rational ch0, ch1, ch2, ch3;

    friend bool operator==(const ChernCharacter&, const ChernCharacter&) = default;

    friend ChernCharacter operator+(const ChernCharacter& a, const ChernCharacter& b) {
        return {a.ch0 + b.ch0, a.ch1 + b.ch1, a.ch2 + b.ch2, a.ch3 + b.ch3};
    }
    friend ChernCharacter operator-(const ChernCharacter& a, const ChernCharacter& b) {
        return {a.ch0 - b.ch0, a.ch1 - b.ch1, a.ch2 - b.ch2, a.ch3 - b.ch3};
    }
    friend ChernCharacter operator*(const Rational& k, const ChernCharacter& v) {
        return {k * v.ch0, k * v.ch1, k * v.ch2, k * v.ch3};
    }

    std::string str() const;
};

struct ChernClasses {
    Int c1, c2, c3;
    friend bool operator==(const ChernClasses&, const ChernClasses&) = default;
};

/// ch(O(n)) = (1, n, n^2/2, n^3/6).
ChernCharacter ch_line(const Int& n);

/// Multiplication by exp(t·H): the Chern character of E(t).
ChernCharacter twist(const ChernCharacter& v, const Int& t);

/// ch(E^v) = (ch0, -ch1, ch2, -ch3).
ChernCharacter dual(const ChernCharacter& v);

/// chi(E) = ch0 + 11/6 ch1 + 2 ch2 + ch3 (Todd class of P^3).
Rational euler_chi(const ChernCharacter& v);

/// The Euler bilinear form chi(E, F) = chi(F ⊗ E^v) by
/// Hirzebruch-Riemann-Roch. chi(O, F) = euler_chi(F).
Rational euler_pair(const ChernCharacter& e, const ChernCharacter& f);

/// Inverts the Newton relations: c1 = ch1, c2 = (c1^2 - 2 ch2)/2,
/// c3 = (6 ch3 - c1^3 + 3 c1 c2)/3 + ... (degree-3 relation).
/// Returns nullopt when any class fails to be an integer.
/// Precondition: ch0 and ch1 are integers.
std::optional<ChernClasses> chern_classes(const ChernCharacter& v);

/// mu = ch1/ch0. Throws ZeroRankError when ch0 = 0.
Rational slope(const ChernCharacter& v);

/// Numerical shadow of exceptionality: ch0 > 0, chi(v,v) = 1,
/// gcd(ch0, ch1) = 1 and integral Chern classes.
bool is_candidate_exceptional(const ChernCharacter& v);

}  // namespace helix
