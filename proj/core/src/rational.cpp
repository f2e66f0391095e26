#include "helix/rational.hpp"

#include <cctype>
#include <ostream>

namespace helix {

Int pow_int(const Int& base, unsigned exp) {
    Int out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
    return out;
}

Rational::Rational(const Int& num, const Int& den) {
    if (sgn(den) == 0) throw ArithmeticError("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    auto is_int = [](std::string_view s) {
        if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
        if (s.empty()) return false;
        for (char c : s)
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        return true;
    };
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        if (!is_int(text)) throw ParseError("not a rational: '" + std::string(text) + "'");
        return Rational(Int(std::string(text)));
    }
    const auto num = text.substr(0, slash);
    const auto den = text.substr(slash + 1);
    if (!is_int(num) || !is_int(den)) throw ParseError("not a rational: '" + std::string(text) + "'");
    const Int d{std::string(den)};
    if (sgn(d) == 0) throw ParseError("zero denominator: '" + std::string(text) + "'");
    return Rational(Int(std::string(num)), d);
}

Int Rational::floor() const {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
    return q;
}

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw ArithmeticError("division by zero");
    return Rational::from_mpq(a.v_ / b.v_);
}

std::string Rational::str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

std::string int_str(const Int& n) { return n.get_str(); }

}  // namespace helix
