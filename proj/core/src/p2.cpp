#include "helix/p2.hpp"

#include <algorithm>
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

Dyadic::Dyadic(Int p, unsigned q) : p_(std::move(p)), q_(q) {
    while (q_ > 0 && mpz_even_p(p_.get_mpz_t())) {
        p_ /= 2;
        --q_;
    }
}

Dyadic Dyadic::parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        if (!plain_integer(text)) throw ParseError("not a dyadic rational: '" + std::string(text) + "'");
        return Dyadic(Int(std::string(text)), 0);
    }
    const auto num = text.substr(0, slash);
    auto den = text.substr(slash + 1);
    if (!plain_integer(num)) throw ParseError("not a dyadic rational: '" + std::string(text) + "'");
    const Int p{std::string(num)};

    if (den.size() >= 3 && den.substr(0, 2) == "2^") {
        const auto exp = den.substr(2);
        if (!plain_integer(exp) || exp.front() == '-') throw ParseError("bad dyadic exponent in '" + std::string(text) + "'");
        const Int q{std::string(exp)};
        if (q > 1000000) throw ParseError("dyadic exponent out of range");
        return Dyadic(p, static_cast<unsigned>(q.get_ui()));
    }

    if (!plain_integer(den) || den.front() == '-') throw ParseError("not a dyadic rational: '" + std::string(text) + "'");
    Int d{std::string(den)};
    if (sgn(d) <= 0) throw ParseError("not a dyadic rational: '" + std::string(text) + "'");
    unsigned q = 0;
    while (mpz_even_p(d.get_mpz_t())) {
        d /= 2;
        ++q;
    }
    if (d != 1) throw ParseError("denominator of '" + std::string(text) + "' is not a power of 2");
    return Dyadic(p, q);
}

std::string Dyadic::str() const {
    if (q_ == 0) return p_.get_str();
    return p_.get_str() + "/" + pow2(q_).get_str();
}

Rational rr_polynomial_p2(const Rational& x) {
    return (x + Rational(1)) * (x + Rational(2)) / Rational(2);
}

P2SlopeData slope_data(const Rational& alpha) {
    const Int r = alpha.denominator();
    const Rational delta{r * r - 1, 2 * r * r};
    const Rational chi = Rational(r) * (rr_polynomial_p2(alpha) - delta);
    return {alpha, r, delta, chi};
}

Rational dot(const Rational& alpha, const Rational& beta) {
    const Rational pole = Rational(3) + alpha - beta;
    if (pole.is_zero())
        throw PoleInDotError("dot(" + alpha.str() + ", " + beta.str() + ") hits the pole 3 + alpha - beta = 0");
    const Rational da = slope_data(alpha).delta;
    const Rational db = slope_data(beta).delta;
    return (alpha + beta) / Rational(2) + (db - da) / pole;
}

Rational P2Map::epsilon(const Dyadic& t) {
    if (t.is_integer()) return Rational(t.numerator());
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = memo_.find({t.numerator(), t.order()});
        if (it != memo_.end()) return it->second;
    }
    // t = (2k+1)/2^q; parents k/2^(q-1) and (k+1)/2^(q-1).
    const Int k = (t.numerator() - 1) / 2;
    const Rational a = epsilon(Dyadic(k, t.order() - 1));
    const Rational b = epsilon(Dyadic(k + 1, t.order() - 1));
    Rational value = dot(a, b);
    std::lock_guard<std::mutex> lock(mutex_);
    auto [it, inserted] = memo_.emplace(std::make_pair(t.numerator(), t.order()), std::move(value));
    (void)inserted;
    return it->second;
}

std::vector<Dyadic> enumerate_dyadics(const Rational& lo, const Rational& hi, unsigned cutoff) {
    std::vector<Dyadic> out;
    for (unsigned q = 0; q <= cutoff; ++q) {  // sorted by value below
        const Int den = pow2(q);
        // Smallest p with p/2^q >= lo is ceil(lo * 2^q).
        const Rational scaled_lo = lo * Rational(den);
        const Rational scaled_hi = hi * Rational(den);
        Int p = scaled_lo.floor();
        if (Rational(p) < scaled_lo) p += 1;
        for (; Rational(p) <= scaled_hi; p += 1) {
            if (q > 0 && mpz_even_p(p.get_mpz_t())) continue;
            out.emplace_back(p, q);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

Int min_rank_at_order(unsigned q) {
    Int prev = 1, cur = 1;  // a(0) = 1
    for (unsigned k = 1; k <= q; ++k) {
        const Int next = k == 1 ? Int(2) : Int(3 * cur - prev);
        prev = cur;
        cur = next;
    }
    return cur;
}

DeltaBound delta_of_mu(P2Map& map, const Rational& mu, unsigned cutoff) {
    DeltaBound out;
    out.cutoff = cutoff;
    out.value = Rational(0);
    out.witness_alpha = Rational(0);
    bool first = true;

    const Rational three(3);
    for (const Dyadic& t : enumerate_dyadics(mu - Rational(4), mu + Rational(4), cutoff)) {
        const Rational alpha = map.epsilon(t);
        const Rational dist = (alpha - mu).abs();
        if (!(dist < three)) continue;
        const Rational term = rr_polynomial_p2(-dist) - slope_data(alpha).delta;
        if (first || term > out.value) {
            out.value = term;
            out.witness_alpha = alpha;
            first = false;
        }
    }
    if (first)
        throw ArithmeticError("empty exceptional window for delta(" + mu.str() + ")");

    // Tail certificate: P(-x) <= 1 on [0,3), so any alpha with
    // Delta(alpha) >= 1 - value cannot beat the enumerated maximum; that
    // is 1/r^2 <= 2·value - 1.
    const Rational excess = Rational(2) * out.value - Rational(1);
    if (excess.sign() <= 0) {
        out.rank_threshold = 0;
        out.min_rank_beyond = min_rank_at_order(cutoff + 1);
        out.certified = false;
        return out;
    }
    // Smallest R with R^2 >= 1/excess, exactly.
    const Rational inv = Rational(1) / excess;
    Int r;
    mpz_sqrt(r.get_mpz_t(), inv.floor().get_mpz_t());
    while (Rational(r * r) < inv) r += 1;
    while (r > 1 && Rational((r - 1) * (r - 1)) >= inv) r -= 1;
    out.rank_threshold = r;
    out.min_rank_beyond = min_rank_at_order(cutoff + 1);
    out.certified = out.min_rank_beyond >= out.rank_threshold;
    return out;
}

std::string to_string(Stability s) {
    switch (s) {
        case Stability::Stable: return "stable";
        case Stability::Exceptional: return "exceptional";
        case Stability::Unstable: return "unstable";
        case Stability::Undecided: return "undecided";
    }
    return "?";
}

StabilityResult is_stable_character(P2Map& map, const Int& r, const Rational& mu,
                                    const Rational& delta, unsigned cutoff) {
    if (r < 1) throw ArithmeticError("rank must be >= 1");

    DeltaBound bound = delta_of_mu(map, mu, cutoff);

    // Exceptional characters: mu an exceptional slope of order <= cutoff
    // with the matching rank and discriminant.
    const Int lo = mu.floor();
    for (const Dyadic& t : enumerate_dyadics(Rational(lo), Rational(lo + 1), cutoff)) {
        if (map.epsilon(t) != mu) continue;
        const P2SlopeData sd = slope_data(mu);
        if (r == sd.r && delta == sd.delta) return {Stability::Exceptional, std::move(bound)};
        break;  // slope matched but (r, Delta) differ: not exceptional
    }

    // Riemann-Roch integrality: c1, chi, c2 all integers.
    const Rational rr{r};
    const Rational c1 = rr * mu;
    const Rational chi = rr * (rr_polynomial_p2(mu) - delta);
    const Rational ch2 = rr * (mu * mu / Rational(2) - delta);
    const Rational c2 = (c1 * c1 - Rational(2) * ch2) / Rational(2);
    if (!c1.is_integer() || !chi.is_integer() || !c2.is_integer())
        throw NonIntegralCharacterError("(" + int_str(r) + ", " + mu.str() + ", " + delta.str() +
                                        ") has non-integral invariants");

    if (delta < bound.value) return {Stability::Unstable, std::move(bound)};
    if (bound.certified) return {Stability::Stable, std::move(bound)};
    return {Stability::Undecided, std::move(bound)};
}

}  // namespace helix
