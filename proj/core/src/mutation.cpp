#include "helix/mutation.hpp"

namespace helix {

std::optional<std::string> Foundation::violation(const std::array<ChernCharacter, 4>& e) {
    for (int i = 0; i < 4; ++i)
        if (!is_candidate_exceptional(e[static_cast<size_t>(i)]))
            return "entry " + std::to_string(i) + " = " + e[static_cast<size_t>(i)].str() +
                   " is not a candidate exceptional class";
    for (int i = 0; i < 3; ++i)
        if (!(slope(e[static_cast<size_t>(i)]) < slope(e[static_cast<size_t>(i + 1)])))
            return "slopes not strictly increasing at position " + std::to_string(i);
    for (int i = 1; i < 4; ++i)
        for (int j = 0; j < i; ++j)
            if (euler_pair(e[static_cast<size_t>(i)], e[static_cast<size_t>(j)]) != Rational(0))
                return "chi(e" + std::to_string(i) + ", e" + std::to_string(j) + ") != 0";
    return std::nullopt;
}

Foundation Foundation::make(std::array<ChernCharacter, 4> e) {
    if (auto why = violation(e)) throw InvalidFoundationError(*why);
    return Foundation(std::move(e));
}

Foundation preferred_foundation() {
    return Foundation::unchecked({ch_line(-1), ch_line(0), ch_line(1), ch_line(2)});
}

bool is_right_move(Move m) { return m == Move::R0 || m == Move::R1 || m == Move::R2; }

int new_bundle_position(Move m) { return is_right_move(m) ? 1 : 2; }

std::string to_string(Move m) {
    switch (m) {
        case Move::R0: return "R0";
        case Move::R1: return "R1";
        case Move::R2: return "R2";
        case Move::L0: return "L0";
        case Move::L1: return "L1";
        case Move::L2: return "L2";
    }
    return "?";
}

Move move_from_string(std::string_view s) {
    if (s == "R0") return Move::R0;
    if (s == "R1") return Move::R1;
    if (s == "R2") return Move::R2;
    if (s == "L0") return Move::L0;
    if (s == "L1") return Move::L1;
    if (s == "L2") return Move::L2;
    throw ParseError("unknown move '" + std::string(s) + "' (expected R0..R2, L0..L2)");
}

std::string to_string(PairMutation m) {
    switch (m) {
        case PairMutation::RightEF: return "R(E,F)";
        case PairMutation::LeftEF: return "L(E,F)";
        case PairMutation::RightFG: return "R(F,G)";
        case PairMutation::LeftFG: return "L(F,G)";
        case PairMutation::RightGH: return "R(G,H)";
        case PairMutation::LeftGH: return "L(G,H)";
        case PairMutation::RightCyc: return "R(H(-4),E)";
        case PairMutation::LeftCyc: return "L(H,E(4))";
    }
    return "?";
}

std::string to_string(MutationClass c) {
    switch (c) {
        case MutationClass::Commuting: return "commuting";
        case MutationClass::Admissible: return "admissible";
        case MutationClass::Extraneous: return "extraneous";
    }
    return "?";
}

Int hom_count(const ChernCharacter& e, const ChernCharacter& f) {
    const Rational k = euler_pair(e, f);
    if (!k.is_integer() || k.sign() <= 0)
        throw NonPositiveHomError("chi(" + e.str() + ", " + f.str() + ") = " + k.str() +
                                  " is not a positive integer");
    return k.numerator();
}

ChernCharacter right_mutation(const ChernCharacter& e, const ChernCharacter& f) {
    return Rational(hom_count(e, f)) * f - e;
}

ChernCharacter left_mutation(const ChernCharacter& e, const ChernCharacter& f) {
    return Rational(hom_count(e, f)) * e - f;
}

Foundation apply_move(const Foundation& f, Move m) {
    const ChernCharacter& E = f[0];
    const ChernCharacter& F = f[1];
    const ChernCharacter& G = f[2];
    const ChernCharacter& H = f[3];
    std::array<ChernCharacter, 4> out;
    switch (m) {
        case Move::R0: out = {E, right_mutation(twist(H, -4), E), F, G}; break;
        case Move::R1: out = {F, right_mutation(E, F), G, H}; break;
        case Move::R2: out = {G, right_mutation(F, G), H, twist(E, 4)}; break;
        case Move::L0: out = {twist(H, -4), E, left_mutation(F, G), F}; break;
        case Move::L1: out = {E, F, left_mutation(G, H), G}; break;
        case Move::L2: out = {F, G, left_mutation(H, twist(E, 4)), H}; break;
    }
    return Foundation::make(std::move(out));
}

std::vector<std::pair<PairMutation, Foundation>> enumerate_mutations(const Foundation& f) {
    const ChernCharacter& E = f[0];
    const ChernCharacter& F = f[1];
    const ChernCharacter& G = f[2];
    const ChernCharacter& H = f[3];
    std::vector<std::pair<PairMutation, Foundation>> out;
    out.emplace_back(PairMutation::RightEF, apply_move(f, Move::R1));
    out.emplace_back(PairMutation::LeftEF,
                     Foundation::make({left_mutation(E, F), E, G, H}));
    out.emplace_back(PairMutation::RightFG, apply_move(f, Move::R2));
    out.emplace_back(PairMutation::LeftFG, apply_move(f, Move::L0));
    out.emplace_back(PairMutation::RightGH,
                     Foundation::make({E, F, H, right_mutation(G, H)}));
    out.emplace_back(PairMutation::LeftGH, apply_move(f, Move::L1));
    out.emplace_back(PairMutation::RightCyc, apply_move(f, Move::R0));
    out.emplace_back(PairMutation::LeftCyc, apply_move(f, Move::L2));
    return out;
}

MutationClass classify_mutation(bool parent_was_right, PairMutation child) {
    // On the target's own foundation, with the new bundle at position 1
    // (right parent) or 2 (left parent):
    //   right parent: commuting {R(G,H), L(G,H)},
    //                 admissible {R(E,F), L(F,G), R(H(-4),E)},
    //                 extraneous {L(E,F), R(F,G), L(H,E(4))};
    //   left parent:  commuting {R(E,F), L(E,F)},
    //                 admissible {L(G,H), R(F,G), L(H,E(4))},
    //                 extraneous {R(G,H), L(F,G), R(H(-4),E)}.
    if (parent_was_right) {
        switch (child) {
            case PairMutation::RightGH:
            case PairMutation::LeftGH: return MutationClass::Commuting;
            case PairMutation::RightEF:
            case PairMutation::LeftFG:
            case PairMutation::RightCyc: return MutationClass::Admissible;
            default: return MutationClass::Extraneous;
        }
    }
    switch (child) {
        case PairMutation::RightEF:
        case PairMutation::LeftEF: return MutationClass::Commuting;
        case PairMutation::LeftGH:
        case PairMutation::RightFG:
        case PairMutation::LeftCyc: return MutationClass::Admissible;
        default: return MutationClass::Extraneous;
    }
}

bool verify_helix_relation(const Foundation& f) {
    const ChernCharacter& E = f[0];
    const ChernCharacter& F = f[1];
    const ChernCharacter& G = f[2];
    const ChernCharacter& H = f[3];
    const ChernCharacter E4 = twist(E, 4);
    try {
        // R(E,F) = L(G, L_H(E(4))) ∘ L(H, E(4)): the two diagram paths
        // must produce the same bundle.
        const ChernCharacter direct_r = right_mutation(E, F);
        const ChernCharacter step1 = left_mutation(H, E4);
        const ChernCharacter composite_r = left_mutation(G, step1);
        if (composite_r != direct_r) return false;

        // L(G,H) = R(R_{E(4)} H, F(4)) ∘ R(H, E(4)), read back through the
        // twist-by-4 periodicity.
        const ChernCharacter direct_l = left_mutation(G, H);
        const ChernCharacter step2 = right_mutation(H, E4);
        const ChernCharacter composite_l = right_mutation(step2, twist(F, 4));
        if (composite_l != twist(direct_l, 4)) return false;
    } catch (const NonPositiveHomError&) {
        return false;
    }
    return true;
}

Foundation shift_left(const Foundation& f) {
    return Foundation::unchecked({f[1], f[2], f[3], twist(f[0], 4)});
}

Foundation shift_right(const Foundation& f) {
    return Foundation::unchecked({twist(f[3], -4), f[0], f[1], f[2]});
}

std::string canonical_helix_key(const Foundation& f) {
    Foundation g = f;
    while (slope(g[0]).sign() > 0) g = shift_right(g);
    while (slope(g[1]).sign() <= 0) g = shift_left(g);
    std::string key;
    for (const auto& v : g.entries()) key += v.str();
    return key;
}

}  // namespace helix
