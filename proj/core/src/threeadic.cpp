#include "helix/threeadic.hpp"

#include <cctype>

namespace helix {

namespace {

bool plain_integer(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

ThreeAdic::ThreeAdic(Int p, unsigned q) : p_(std::move(p)), q_(q) {
    while (q_ > 0 && mpz_divisible_ui_p(p_.get_mpz_t(), 3)) {
        p_ /= 3;
        --q_;
    }
}

int ThreeAdic::residue() const {
    const Int r = ((p_ % 3) + 3) % 3;
    return static_cast<int>(r.get_si());
}

ThreeAdic ThreeAdic::parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        if (!plain_integer(text)) throw ParseError("not a 3-adic rational: '" + std::string(text) + "'");
        return ThreeAdic(Int(std::string(text)), 0);
    }
    const auto num = text.substr(0, slash);
    auto den = text.substr(slash + 1);
    if (!plain_integer(num)) throw ParseError("not a 3-adic rational: '" + std::string(text) + "'");
    const Int p{std::string(num)};

    // "p/3^q" literal form.
    if (den.size() >= 3 && den.substr(0, 2) == "3^") {
        const auto exp = den.substr(2);
        if (!plain_integer(exp) || exp.front() == '-') throw ParseError("bad 3-adic exponent in '" + std::string(text) + "'");
        const Int q{std::string(exp)};
        if (q > 1000000) throw ParseError("3-adic exponent out of range");
        return ThreeAdic(p, static_cast<unsigned>(q.get_ui()));
    }

    // Plain fraction: denominator must be a power of three.
    if (!plain_integer(den) || den.front() == '-') throw ParseError("not a 3-adic rational: '" + std::string(text) + "'");
    Int d{std::string(den)};
    if (sgn(d) <= 0) throw ParseError("not a 3-adic rational: '" + std::string(text) + "'");
    unsigned q = 0;
    while (mpz_divisible_ui_p(d.get_mpz_t(), 3)) {
        d /= 3;
        ++q;
    }
    if (d != 1) throw ParseError("denominator of '" + std::string(text) + "' is not a power of 3");
    return ThreeAdic(p, q);
}

std::string ThreeAdic::str() const {
    if (q_ == 0) return p_.get_str();
    return p_.get_str() + "/" + pow3(q_).get_str();
}

bool operator<(const ThreeAdic& a, const ThreeAdic& b) {
    // p_a / 3^qa < p_b / 3^qb  <=>  p_a 3^qb < p_b 3^qa
    return a.p_ * pow3(b.q_) < b.p_ * pow3(a.q_);
}

}  // namespace helix
