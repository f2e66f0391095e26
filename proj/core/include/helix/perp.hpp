#pragma once

#include "helix/chern.hpp"

namespace helix {

/// Point of the affine patch ch0 != 0 of P(K(P^3)_Q), in coordinates
/// (ch1/ch0, ch2/ch0, ch3/ch0).
struct SlopePoint {
    Rational x1, x2, x3;
    friend bool operator==(const SlopePoint&, const SlopePoint&) = default;
};

/// Solves chi(-, e) = chi(g, -) = chi(h, -) = 0 on the affine patch by
/// exact Gaussian elimination. Throws SingularSystemError when the system
/// has no unique affine solution.
SlopePoint solve_orthogonality(const ChernCharacter& e, const ChernCharacter& g,
                               const ChernCharacter& h);

/// The unique rank-positive integral class orthogonal to e on the right
/// and to g, h on the left; this computes mutated bundles from the rest
/// of a foundation. The lift normalizes ch0 to the denominator of the
/// slope coordinate, which is justified by coprimality of ch0 and ch1
/// for exceptional classes; a lift that is not numerically exceptional
/// raises NonExceptionalLiftError rather than being silently accepted.
///
/// Throws SingularSystemError, LineAtInfinityError, NonExceptionalLiftError.
ChernCharacter perp(const ChernCharacter& e, const ChernCharacter& g,
                    const ChernCharacter& h);

}  // namespace helix
