#include <doctest.h>

#include "helix/epsilon.hpp"
#include "helix/perp.hpp"
#include "helix/verify.hpp"

using namespace helix;

TEST_CASE("solve_orthogonality on the tangent-bundle system") {
    const SlopePoint s = solve_orthogonality(ch_line(0), ch_line(1), ch_line(2));
    CHECK(s.x1 == Rational(1, 3));
    CHECK(s.x2 == Rational(-1, 6));
    CHECK(s.x3 == Rational(1, 18));

    // Substitution oracle: the lift with ch0 = 3 satisfies all three
    // conditions exactly.
    const ChernCharacter v{Rational(3), Rational(3) * s.x1, Rational(3) * s.x2, Rational(3) * s.x3};
    CHECK(euler_pair(v, ch_line(0)) == Rational(0));
    CHECK(euler_pair(ch_line(1), v) == Rational(0));
    CHECK(euler_pair(ch_line(2), v) == Rational(0));
}

TEST_CASE("solve_orthogonality recovers the origin for (O(-1), O(1), O(2))") {
    const SlopePoint s = solve_orthogonality(ch_line(-1), ch_line(1), ch_line(2));
    CHECK(s.x1 == Rational(0));
    CHECK(s.x2 == Rational(0));
    CHECK(s.x3 == Rational(0));
}

TEST_CASE("degenerate systems") {
    CHECK_THROWS_AS(solve_orthogonality(ch_line(0), ch_line(0), ch_line(1)), SingularSystemError);
    CHECK_THROWS_AS(perp(ch_line(0), ch_line(0), ch_line(1)), SingularSystemError);
}

TEST_CASE("perp computes mutated bundles") {
    CHECK(perp(ch_line(0), ch_line(1), ch_line(2)) ==
          ChernCharacter{Rational(3), Rational(1), Rational(-1, 2), Rational(1, 6)});
    CHECK(perp(ch_line(-1), ch_line(1), ch_line(2)) == ch_line(0));
    const ChernCharacter t_minus_1{Rational(3), Rational(1), Rational(-1, 2), Rational(1, 6)};
    CHECK(perp(ch_line(0), t_minus_1, ch_line(1)) ==
          ChernCharacter{Rational(9), Rational(2), Rational(-2), Rational(4, 3)});
}

TEST_CASE("line at infinity") {
    // Three independent rank-zero classes force the solution line into
    // the locus ch0 = 0.
    const ChernCharacter e{Rational(0), Rational(1), Rational(0), Rational(0)};
    const ChernCharacter g{Rational(0), Rational(0), Rational(1), Rational(0)};
    const ChernCharacter h{Rational(0), Rational(0), Rational(0), Rational(1)};
    CHECK_THROWS_AS(perp(e, g, h), LineAtInfinityError);
}

TEST_CASE("non-exceptional lift is reported, not guessed") {
    // The solution line of this system is spanned by (2, 1, 0, 0), which
    // has chi(v, v) = 2.
    const ChernCharacter e{Rational(6), Rational(0), Rational(1), Rational(-2)};
    const ChernCharacter g{Rational(6), Rational(0), Rational(1), Rational(14)};
    const ChernCharacter h{Rational(6), Rational(3), Rational(0), Rational(3)};
    const SlopePoint s = solve_orthogonality(e, g, h);
    CHECK(s.x1 == Rational(1, 2));
    CHECK(s.x2 == Rational(0));
    CHECK(s.x3 == Rational(0));
    CHECK_THROWS_AS(perp(e, g, h), NonExceptionalLiftError);
}

TEST_CASE("round trip through distinguished foundations") {
    EpsilonMap eps;
    for (const ThreeAdic& t : enumerate_indices(3)) {
        const MarkedFoundation mf = eps.distinguished_foundation(t);
        CHECK(perp_complement(mf.foundation, mf.mark) == mf.foundation[mf.mark]);
    }
}
