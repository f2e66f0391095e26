#include <doctest.h>

#include <random>

#include "helix/chern.hpp"

using namespace helix;

namespace {

// Independent oracle: h^0(O_{P^3}(n)) = C(n+3, 3).
Int binom3(long n) {
    if (n + 3 < 3) return 0;
    Int out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n + 3), 3);
    return out;
}

ChernCharacter rand_chern(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-50, 50);
    std::uniform_int_distribution<long> den(1, 10);
    auto r = [&] { return Rational(Int(num(rng)), Int(den(rng))); };
    return {r(), r(), r(), r()};
}

const ChernCharacter kTwistedTangent{Rational(3), Rational(1), Rational(-1, 2), Rational(1, 6)};

}  // namespace

TEST_CASE("ch_line") {
    CHECK(ch_line(0) == ChernCharacter{Rational(1), Rational(0), Rational(0), Rational(0)});
    CHECK(ch_line(1) == ChernCharacter{Rational(1), Rational(1), Rational(1, 2), Rational(1, 6)});
    CHECK(ch_line(-2) == ChernCharacter{Rational(1), Rational(-2), Rational(2), Rational(-4, 3)});
}

TEST_CASE("twist against the Euler-sequence oracle") {
    // ch(T) from 0 -> O -> O(1)^4 -> T -> 0, computed without twist().
    const ChernCharacter tangent = Rational(4) * ch_line(1) - ch_line(0);
    CHECK(twist(kTwistedTangent, 1) == tangent);
    CHECK(tangent == ChernCharacter{Rational(3), Rational(4), Rational(2), Rational(2, 3)});

    CHECK(twist(ch_line(0), 1) == ch_line(1));
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> tw(-9, 9);
    for (int i = 0; i < 100; ++i) {
        const ChernCharacter v = rand_chern(rng);
        CHECK(twist(v, 0) == v);
        const Int s{tw(rng)}, t{tw(rng)};
        CHECK(twist(twist(v, s), t) == twist(v, s + t));
        CHECK(twist(ch_line(s), t) == ch_line(s + t));
    }
}

TEST_CASE("dual") {
    CHECK(dual(ch_line(1)) == ch_line(-1));
    CHECK(dual(kTwistedTangent) ==
          ChernCharacter{Rational(3), Rational(-1), Rational(-1, 2), Rational(-1, 6)});
    std::mt19937_64 rng(13);
    for (int i = 0; i < 50; ++i) {
        const ChernCharacter v = rand_chern(rng);
        CHECK(dual(dual(v)) == v);
        if (!v.ch0.is_zero()) CHECK(slope(dual(v)) == -slope(v));
    }
}

TEST_CASE("euler_chi against the binomial oracle") {
    for (long n = -3; n <= 8; ++n) CHECK(euler_chi(ch_line(n)) == Rational(binom3(n)));
    CHECK(euler_chi(ch_line(1)) == Rational(4));
    CHECK(euler_chi(kTwistedTangent) == Rational(4));
    CHECK(euler_chi({Rational(9), Rational(2), Rational(-2), Rational(4, 3)}) == Rational(10));
}

TEST_CASE("euler_pair worked example and oracles") {
    // chi(O(2), T(-1)) = 0.
    CHECK(euler_pair(ch_line(2), kTwistedTangent) == Rational(0));
    // chi(O, O(3)) = number of cubics in four variables.
    CHECK(euler_pair(ch_line(0), ch_line(3)) == Rational(20));
    CHECK(Rational(20) == Rational(binom3(3)));
    // Serre duality gives chi(O(-4)) = -chi(O) = -1.
    CHECK(ch_line(-4) ==
          ChernCharacter{Rational(1), Rational(-4), Rational(8), Rational(-32, 3)});
    CHECK(euler_pair(ch_line(0), ch_line(-4)) == Rational(-1));

    for (long n = 0; n <= 10; ++n)
        CHECK(euler_pair(ch_line(0), ch_line(n)) == Rational(binom3(n)));
    for (long n : {-1L, -2L, -3L}) CHECK(euler_pair(ch_line(0), ch_line(n)) == Rational(0));
}

TEST_CASE("euler_pair bilinearity and Serre-twist antisymmetry") {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 100; ++i) {
        const ChernCharacter a = rand_chern(rng);
        const ChernCharacter b = rand_chern(rng);
        const ChernCharacter c = rand_chern(rng);
        CHECK(euler_pair(a + b, c) == euler_pair(a, c) + euler_pair(b, c));
        CHECK(euler_pair(a, b + c) == euler_pair(a, b) + euler_pair(a, c));
        CHECK(euler_pair(a, b) == -euler_pair(b, twist(a, -4)));
        CHECK(euler_pair(ch_line(0), a) == euler_chi(a));
    }
}

TEST_CASE("chern_classes") {
    // Line bundles have c2 = c3 = 0.
    const auto line = chern_classes(ch_line(2));
    REQUIRE(line.has_value());
    CHECK(*line == ChernClasses{2, 0, 0});

    // Total Chern class of T(-1) from the Euler sequence is 1/(1-H),
    // i.e. (c1, c2, c3) = (1, 1, 1).
    const auto tw = chern_classes(kTwistedTangent);
    REQUIRE(tw.has_value());
    CHECK(*tw == ChernClasses{1, 1, 1});

    CHECK(!chern_classes({Rational(1), Rational(0), Rational(1, 3), Rational(0)}).has_value());
    CHECK(!chern_classes({Rational(1, 2), Rational(0), Rational(0), Rational(0)}).has_value());
}

TEST_CASE("slope") {
    CHECK(slope(kTwistedTangent) == Rational(1, 3));
    CHECK(slope({Rational(1), Rational(5), Rational(0), Rational(0)}) == Rational(5));
    CHECK(slope({Rational(17), Rational(5), Rational(-7, 2), Rational(5, 6)}) == Rational(5, 17));
    CHECK_THROWS_AS(slope({Rational(0), Rational(1), Rational(0), Rational(0)}),
                    helix::ZeroRankError);
}

TEST_CASE("is_candidate_exceptional") {
    // Direct chi(v,v) evaluation as oracle.
    CHECK(euler_pair(kTwistedTangent, kTwistedTangent) == Rational(1));
    CHECK(is_candidate_exceptional(kTwistedTangent));
    CHECK(is_candidate_exceptional(ch_line(0)));
    const ChernCharacter rank2{Rational(2), Rational(0), Rational(0), Rational(0)};
    CHECK(euler_pair(rank2, rank2) == Rational(4));
    CHECK(!is_candidate_exceptional(rank2));
    // gcd(ch0, ch1) > 1.
    CHECK(!is_candidate_exceptional({Rational(2), Rational(2), Rational(1), Rational(1, 3)}));
}
