#include "helix/perp.hpp"

#include <array>

namespace helix {

namespace {

using Row = std::array<Rational, 4>;

// chi(v, e) = 0 as a linear condition on v.
Row condition_into(const ChernCharacter& e) {
    return {euler_chi(e),
            Rational(-11, 6) * e.ch0 - Rational(2) * e.ch1 - e.ch2,
            Rational(2) * e.ch0 + e.ch1,
            -e.ch0};
}

// chi(g, v) = 0 as a linear condition on v.
Row condition_from(const ChernCharacter& g) {
    return {g.ch0 - Rational(11, 6) * g.ch1 + Rational(2) * g.ch2 - g.ch3,
            Rational(11, 6) * g.ch0 - Rational(2) * g.ch1 + g.ch2,
            Rational(2) * g.ch0 - g.ch1,
            g.ch0};
}

// Gaussian elimination to row echelon form; pivot = first structurally
// nonzero entry in the column (exactness makes the choice irrelevant).
// Returns the rank.
int echelonize(std::array<Row, 3>& m) {
    int rank = 0;
    for (int col = 0; col < 4 && rank < 3; ++col) {
        int pivot = -1;
        for (int r = rank; r < 3; ++r) {
            if (!m[r][col].is_zero()) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        std::swap(m[rank], m[pivot]);
        for (int r = rank + 1; r < 3; ++r) {
            if (m[r][col].is_zero()) continue;
            const Rational factor = m[r][col] / m[rank][col];
            for (int c = col; c < 4; ++c) m[r][c] -= factor * m[rank][c];
        }
        ++rank;
    }
    return rank;
}

// The solution line of the rank-3 homogeneous system, by back substitution
// with the free coordinate set to an exact value.
std::array<Rational, 4> null_vector(std::array<Row, 3> m) {
    if (echelonize(m) != 3)
        throw SingularSystemError("orthogonality conditions do not cut out a line");

    // Identify pivot columns.
    std::array<int, 3> pivot_col{};
    int free_col = -1;
    {
        int col = 0;
        for (int r = 0; r < 3; ++r) {
            while (m[r][col].is_zero()) {
                free_col = col;
                ++col;
            }
            pivot_col[r] = col++;
        }
        if (free_col < 0) free_col = col;  // trailing column is free
    }

    std::array<Rational, 4> v{Rational(0), Rational(0), Rational(0), Rational(0)};
    v[free_col] = Rational(1);
    for (int r = 2; r >= 0; --r) {
        Rational acc(0);
        for (int c = pivot_col[r] + 1; c < 4; ++c) acc += m[r][c] * v[c];
        v[pivot_col[r]] = -acc / m[r][pivot_col[r]];
    }
    return v;
}

std::array<Row, 3> build_system(const ChernCharacter& e, const ChernCharacter& g,
                                const ChernCharacter& h) {
    return {condition_into(e), condition_from(g), condition_from(h)};
}

// The hypothesis on perp: the classes themselves must be independent in
// K(P^3) ⊗ Q.
void require_independent(const ChernCharacter& e, const ChernCharacter& g,
                         const ChernCharacter& h) {
    std::array<Row, 3> m{Row{e.ch0, e.ch1, e.ch2, e.ch3}, Row{g.ch0, g.ch1, g.ch2, g.ch3},
                         Row{h.ch0, h.ch1, h.ch2, h.ch3}};
    if (echelonize(m) != 3)
        throw SingularSystemError("input classes are linearly dependent in K(P^3)");
}

}  // namespace

SlopePoint solve_orthogonality(const ChernCharacter& e, const ChernCharacter& g,
                               const ChernCharacter& h) {
    require_independent(e, g, h);
    // Affine 3x3 system in (ch1/ch0, ch2/ch0, ch3/ch0): divide each
    // condition by ch0, i.e. move the ch0 coefficient to the right side.
    auto rows = build_system(e, g, h);
    std::array<Row, 3> m;
    for (int r = 0; r < 3; ++r) m[r] = {rows[r][1], rows[r][2], rows[r][3], -rows[r][0]};

    if (echelonize(m) != 3 || m[2][2].is_zero() || m[1][1].is_zero() || m[0][0].is_zero())
        throw SingularSystemError("affine orthogonality system is singular");

    SlopePoint s;
    s.x3 = m[2][3] / m[2][2];
    s.x2 = (m[1][3] - m[1][2] * s.x3) / m[1][1];
    s.x1 = (m[0][3] - m[0][2] * s.x3 - m[0][1] * s.x2) / m[0][0];
    return s;
}

ChernCharacter perp(const ChernCharacter& e, const ChernCharacter& g,
                    const ChernCharacter& h) {
    require_independent(e, g, h);
    const auto line = null_vector(build_system(e, g, h));
    if (line[0].is_zero())
        throw LineAtInfinityError("solution line lies in the rank-zero locus");

    const SlopePoint s{line[1] / line[0], line[2] / line[0], line[3] / line[0]};
    const Rational r0{s.x1.denominator()};
    const ChernCharacter v{r0, r0 * s.x1, r0 * s.x2, r0 * s.x3};

    // Contract: the returned class satisfies all three conditions exactly.
    if (euler_pair(v, e) != Rational(0) || euler_pair(g, v) != Rational(0) ||
        euler_pair(h, v) != Rational(0))
        throw SingularSystemError("perp re-substitution failed");

    if (!is_candidate_exceptional(v))
        throw NonExceptionalLiftError("perp lift " + v.str() + " is not numerically exceptional");
    return v;
}

}  // namespace helix
