#pragma once

#include <map>
#include <mutex>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "helix/rational.hpp"

namespace helix {

/// Dyadic rational p/2^q, normalized (q = 0 or p odd). These index the
/// exceptional slopes on P^2.
class Dyadic {
public:
    Dyadic() : p_(0), q_(0) {}
    Dyadic(Int p, unsigned q);
    Dyadic(long n) : p_(n), q_(0) {}

    /// Accepts "p/2^q", a plain fraction with power-of-two denominator,
    /// or an integer.
    static Dyadic parse(std::string_view text);

    const Int& numerator() const { return p_; }
    unsigned order() const { return q_; }
    Rational value() const { return Rational(p_, pow2(q_)); }
    bool is_integer() const { return q_ == 0; }

    std::string str() const;

    friend bool operator==(const Dyadic& a, const Dyadic& b) { return a.q_ == b.q_ && a.p_ == b.p_; }
    friend bool operator<(const Dyadic& a, const Dyadic& b) { return a.value() < b.value(); }

private:
    Int p_;
    unsigned q_;
};

/// Numerical data attached to a slope alpha on P^2:
///   r     = smallest positive integer with r·alpha integral,
///   Delta = (1/2)(1 - 1/r^2),
///   chi   = r·(P(alpha) - Delta)
/// with P(x) = (x+1)(x+2)/2 the Riemann-Roch polynomial of P^2.
struct P2SlopeData {
    Rational alpha;
    Int r;
    Rational delta;
    Rational chi;
};

/// P(x) = (x+1)(x+2)/2, normalized so that chi(O(n)) = P(n).
Rational rr_polynomial_p2(const Rational& x);

P2SlopeData slope_data(const Rational& alpha);

/// alpha.beta = (alpha+beta)/2 + (Delta(beta) - Delta(alpha))/(3 + alpha - beta).
/// Throws PoleInDotError when 3 + alpha - beta = 0.
Rational dot(const Rational& alpha, const Rational& beta);

/// The exceptional-slope bijection on P^2: epsilon(n) = n and
/// epsilon((2p+1)/2^(q+1)) = epsilon(p/2^q) . epsilon((p+1)/2^q),
/// memoized.
class P2Map {
public:
    Rational epsilon(const Dyadic& t);

private:
    std::map<std::pair<Int, unsigned>, Rational> memo_;
    std::mutex mutex_;
};

/// delta(mu) restricted to exceptional slopes of order <= cutoff, with an
/// exactness certificate. The sup over the remaining (higher-order)
/// slopes is dominated once ranks exceed `rank_threshold`; higher-order
/// slopes have rank at least `min_rank_beyond` (the minimal exceptional
/// rank grows as 1, 2, 5, 13, 34, ... with the order), so the bound is
/// certified exact when min_rank_beyond >= rank_threshold.
struct DeltaBound {
    Rational value;
    Rational witness_alpha;  // where the maximum is attained
    unsigned cutoff;
    Int rank_threshold;   // tail ranks >= this cannot beat `value`
    Int min_rank_beyond;  // minimal rank at order cutoff+1
    bool certified;
};

DeltaBound delta_of_mu(P2Map& map, const Rational& mu, unsigned cutoff);

/// Minimal rank of an exceptional bundle of order exactly q
/// (1, 2, 5, 13, 34, ..., a_{k+1} = 3 a_k - a_{k-1}).
Int min_rank_at_order(unsigned q);

enum class Stability { Stable, Exceptional, Unstable, Undecided };

std::string to_string(Stability s);

struct StabilityResult {
    Stability verdict;
    DeltaBound bound;
};

/// Drezet-Le Potier membership test for (r, mu, Delta): exceptional
/// characters are stable; otherwise stability is equivalent to integral
/// Euler characteristic and Chern classes together with Delta >= delta(mu).
/// Throws NonIntegralCharacterError when chi or the Chern classes are not
/// integers (and the character is not exceptional).
StabilityResult is_stable_character(P2Map& map, const Int& r, const Rational& mu,
                                    const Rational& delta, unsigned cutoff);

/// All normalized dyadics of order <= cutoff with value in [lo, hi].
std::vector<Dyadic> enumerate_dyadics(const Rational& lo, const Rational& hi, unsigned cutoff);

}  // namespace helix
