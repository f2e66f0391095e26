#include "helix/chern.hpp"

namespace helix {

std::string ChernCharacter::str() const {
    return "(" + ch0.str() + "," + ch1.str() + "," + ch2.str() + "," + ch3.str() + ")";
}

ChernCharacter ch_line(const Int& n) {
    return {Rational(1), Rational(n), Rational(n * n, 2), Rational(n * n * n, 6)};
}

ChernCharacter twist(const ChernCharacter& v, const Int& t) {
    const Rational t1{t};
    const Rational t2{t * t, 2};
    const Rational t3{t * t * t, 6};
    return {v.ch0,
            v.ch1 + t1 * v.ch0,
            v.ch2 + t1 * v.ch1 + t2 * v.ch0,
            v.ch3 + t1 * v.ch2 + t2 * v.ch1 + t3 * v.ch0};
}

ChernCharacter dual(const ChernCharacter& v) { return {v.ch0, -v.ch1, v.ch2, -v.ch3}; }

Rational euler_chi(const ChernCharacter& v) {
    return v.ch0 + Rational(11, 6) * v.ch1 + Rational(2) * v.ch2 + v.ch3;
}

Rational euler_pair(const ChernCharacter& e, const ChernCharacter& f) {
    return f.ch0 * e.ch0
         + Rational(11, 6) * (f.ch1 * e.ch0 - e.ch1 * f.ch0)
         + Rational(2) * (f.ch2 * e.ch0 - f.ch1 * e.ch1 + e.ch2 * f.ch0)
         + f.ch3 * e.ch0 - f.ch2 * e.ch1 + e.ch2 * f.ch1 - e.ch3 * f.ch0;
}

std::optional<ChernClasses> chern_classes(const ChernCharacter& v) {
    if (!v.ch0.is_integer() || !v.ch1.is_integer()) return std::nullopt;
    const Int c1 = v.ch1.numerator();
    const Rational c2q = (Rational(c1 * c1) - Rational(2) * v.ch2) / Rational(2);
    if (!c2q.is_integer()) return std::nullopt;
    const Int c2 = c2q.numerator();
    const Rational c3q = (Rational(6) * v.ch3 - Rational(c1 * c1 * c1) + Rational(3 * c1 * c2)) / Rational(3);
    if (!c3q.is_integer()) return std::nullopt;
    return ChernClasses{c1, c2, c3q.numerator()};
}

Rational slope(const ChernCharacter& v) {
    if (v.ch0.is_zero()) throw ZeroRankError("slope of a rank-zero class " + v.str());
    return v.ch1 / v.ch0;
}

bool is_candidate_exceptional(const ChernCharacter& v) {
    if (!v.ch0.is_integer() || !v.ch1.is_integer()) return false;
    if (v.ch0.sign() <= 0) return false;
    if (euler_pair(v, v) != Rational(1)) return false;
    Int g;
    mpz_gcd(g.get_mpz_t(), v.ch0.numerator().get_mpz_t(), v.ch1.numerator().get_mpz_t());
    if (g != 1) return false;
    return chern_classes(v).has_value();
}

}  // namespace helix
