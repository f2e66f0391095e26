#pragma once

#include <string>
#include <string_view>

#include "helix/rational.hpp"

namespace helix {

/// 3-adic rational p/3^q, stored normalized: q = 0 or 3 does not divide p.
/// These index the constructive exceptional bundles on P^3; q is the
/// mutation order of the bundle.
class ThreeAdic {
public:
    ThreeAdic() : p_(0), q_(0) {}
    ThreeAdic(Int p, unsigned q = 0);

    /// Accepts "p/3^q", a plain fraction whose denominator is a power of
    /// three ("10/27"), or an integer. Throws ParseError otherwise.
    static ThreeAdic parse(std::string_view text);

    const Int& numerator() const { return p_; }
    unsigned order() const { return q_; }
    Int denominator() const { return pow3(q_); }
    Rational value() const { return Rational(p_, pow3(q_)); }

    bool is_integer() const { return q_ == 0; }
    /// Integer part, rounding toward -infinity.
    Int floor() const { return value().floor(); }
    /// t - floor(t), again a normalized 3-adic.
    ThreeAdic frac() const { return *this - floor(); }

    /// Numerator residue class mod 3; for q >= 1 this is 1 or 2 and
    /// records whether the bundle arises from a right or left mutation.
    int residue() const;
    bool right_form() const { return q_ >= 1 && residue() == 1; }
    bool left_form() const { return q_ >= 1 && residue() == 2; }

    ThreeAdic operator+(const Int& n) const { return ThreeAdic(p_ + n * pow3(q_), q_); }
    ThreeAdic operator-(const Int& n) const { return ThreeAdic(p_ - n * pow3(q_), q_); }

    std::string str() const;

    friend bool operator==(const ThreeAdic& a, const ThreeAdic& b) { return a.q_ == b.q_ && a.p_ == b.p_; }
    friend bool operator!=(const ThreeAdic& a, const ThreeAdic& b) { return !(a == b); }
    friend bool operator<(const ThreeAdic& a, const ThreeAdic& b);
    friend bool operator<=(const ThreeAdic& a, const ThreeAdic& b) { return !(b < a); }
    friend bool operator>(const ThreeAdic& a, const ThreeAdic& b) { return b < a; }
    friend bool operator>=(const ThreeAdic& a, const ThreeAdic& b) { return !(a < b); }

private:
    Int p_;
    unsigned q_;
};

}  // namespace helix
