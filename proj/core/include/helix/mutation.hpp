#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "helix/chern.hpp"

namespace helix {

/// Four consecutive bundles of a helix on P^3. Invariants: strictly
/// increasing slopes, numerically exceptional collection
/// (euler_pair(e[i], e[j]) = 0 for i > j), every entry a candidate
/// exceptional class.
class Foundation {
public:
    static Foundation make(std::array<ChernCharacter, 4> e);
    static Foundation unchecked(std::array<ChernCharacter, 4> e) { return Foundation(std::move(e)); }

    const ChernCharacter& operator[](int i) const { return e_[static_cast<size_t>(i)]; }
    const std::array<ChernCharacter, 4>& entries() const { return e_; }

    /// nullopt when the invariants hold, otherwise the first violation.
    static std::optional<std::string> violation(const std::array<ChernCharacter, 4>& e);

    friend bool operator==(const Foundation&, const Foundation&) = default;

private:
    explicit Foundation(std::array<ChernCharacter, 4> e) : e_(std::move(e)) {}
    std::array<ChernCharacter, 4> e_;
};

/// The preferred foundation (O(-1), O, O(1), O(2)) of the helix of line
/// bundles.
Foundation preferred_foundation();

struct MarkedFoundation {
    Foundation foundation;
    int mark;  // 0..3, position of the distinguished bundle
    friend bool operator==(const MarkedFoundation&, const MarkedFoundation&) = default;
};

/// The six admissible moves on a foundation (E,F,G,H):
///   R0: (E, R_E(H(-4)), F, G)      L0: (H(-4), E, L_F G, F)
///   R1: (F, R_F E, G, H)           L1: (E, F, L_G H, G)
///   R2: (G, R_G F, H, E(4))        L2: (F, G, L_H(E(4)), H)
/// Right moves introduce the new bundle at position 1, left moves at
/// position 2.
enum class Move { R0, R1, R2, L0, L1, L2 };

bool is_right_move(Move m);
int new_bundle_position(Move m);
std::string to_string(Move m);
Move move_from_string(std::string_view s);

/// All eight pairwise mutations of a helix, named on a foundation
/// (E,F,G,H). Six of them are the canonical moves above; the mutations
/// L(E,F) and R(G,H) carry no canonical name.
enum class PairMutation {
    RightEF,   // = R1
    LeftEF,
    RightFG,   // = R2
    LeftFG,    // = L0
    RightGH,
    LeftGH,    // = L1
    RightCyc,  // R(H(-4), E) = R0
    LeftCyc,   // L(H, E(4)) = L2
};

std::string to_string(PairMutation m);

enum class MutationClass { Commuting, Admissible, Extraneous };

std::string to_string(MutationClass c);

/// hom-count of an ordered pair inside a helix: on exceptional pairs all
/// higher Ext vanish, so hom = chi. Throws NonPositiveHomError unless the
/// pairing is a positive integer.
Int hom_count(const ChernCharacter& e, const ChernCharacter& f);

/// ch(R_F E) = chi(E,F)·ch(F) - ch(E), from the coevaluation sequence
/// 0 -> E -> F ⊗ Hom(E,F)^v -> R_F E -> 0.
ChernCharacter right_mutation(const ChernCharacter& e, const ChernCharacter& f);

/// ch(L_E F) = chi(E,F)·ch(E) - ch(F), from the evaluation sequence
/// 0 -> L_E F -> E ⊗ Hom(E,F) -> F -> 0.
ChernCharacter left_mutation(const ChernCharacter& e, const ChernCharacter& f);

/// Applies one canonical move; validates the result eagerly and throws
/// InvalidFoundationError if it is not a foundation again.
Foundation apply_move(const Foundation& f, Move m);

/// The eight distinct mutations of the helix, each returned as a
/// foundation seating that contains the replaced pair.
std::vector<std::pair<PairMutation, Foundation>> enumerate_mutations(const Foundation& f);

/// Classifies a mutation of the target helix relative to the mutation
/// that produced it (right or left): the eight split as 2 commuting,
/// 3 admissible, 3 extraneous.
MutationClass classify_mutation(bool parent_was_right, PairMutation child);

/// Checks both helix-relation identities at the Chern level:
///   R(E,F) = L(G, L_H(E(4))) ∘ L(H, E(4))
///   L(G,H) = R(R_{E(4)} H, F(4)) ∘ R(H, E(4))
/// computing each side independently.
bool verify_helix_relation(const Foundation& f);

/// Shift (E,F,G,H) -> (F,G,H,E(4)); seatings related by shifts present
/// the same helix.
Foundation shift_left(const Foundation& f);
Foundation shift_right(const Foundation& f);

/// Canonical seating of the underlying helix (slope(f0) <= 0 < slope(f1)),
/// serialized; two foundations get the same key iff they generate the
/// same helix.
std::string canonical_helix_key(const Foundation& f);

}  // namespace helix
