#include "helix/epsilon.hpp"

#include <algorithm>

namespace helix {

bool Resolution::additive() const {
    return sub + quotient == Rational(multiplicity) * middle;
}

CohomologyProfile wbn_profile(const ChernCharacter& v) {
    const Rational mu = slope(v);
    const Rational chi = euler_chi(v);
    if (!chi.is_integer())
        throw ArithmeticError("non-integral Euler characteristic " + chi.str());
    const Int c = chi.numerator();
    if (mu.sign() >= 0) return {0, c};
    if (mu <= Rational(-4)) return {3, -c};
    if (chi.sign() < 0) return {1, -c};
    return {2, c};
}

bool is_globally_generated(const ThreeAdic& t) { return sgn(t.numerator()) >= 0; }

NavStep parent_step(const ThreeAdic& t) {
    if (t.order() == 0 || t.value() <= Rational(0) || t.value() >= Rational(1))
        throw InvalidIndexError("parent_step requires a normalized index in (0,1), got " + t.str());
    const unsigned q = t.order();
    const Int a = t.numerator();
    if (q == 1) return {ThreeAdic(0), a == 1 ? Move::R1 : Move::L1, true};

    if (t.right_form()) {
        const Int pp = (a - 1) / 3;
        const Int r = pp % 3;
        if (r != 0) return {ThreeAdic(pp, q - 1), r == 1 ? Move::R1 : Move::R2, false};
        return {ThreeAdic(pp + 1, q - 1), Move::R0, false};
    }
    const Int pp = (a - 2) / 3;
    const Int r = (pp + 1) % 3;
    if (r != 0) return {ThreeAdic(pp + 1, q - 1), r == 1 ? Move::L0 : Move::L1, false};
    return {ThreeAdic(pp, q - 1), Move::L2, false};
}

ThreeAdic child_index(const ThreeAdic& t, Move m) {
    long delta = 0;
    switch (m) {
        case Move::R0: delta = -2; break;
        case Move::L0: delta = -1; break;
        case Move::R1: delta = 1; break;
        case Move::L1: delta = -1; break;
        case Move::R2: delta = 1; break;
        case Move::L2: delta = 2; break;
    }
    return ThreeAdic(t.numerator() * 3 + delta, t.order() + 1);
}

ThreeAdic root_child_index(Move m) {
    switch (m) {
        case Move::R1: return ThreeAdic(1, 1);
        case Move::L1: return ThreeAdic(2, 1);
        default: throw InvalidIndexError("the root admits only R1 and L1");
    }
}

IndexedFoundation apply_move_indexed(const IndexedFoundation& f, Move m,
                                     const ThreeAdic& new_index) {
    const auto& i = f.idx;
    Foundation g = apply_move(f.f, m);
    std::array<ThreeAdic, 4> j;
    switch (m) {
        case Move::R0: j = {i[0], new_index, i[1], i[2]}; break;
        case Move::R1: j = {i[1], new_index, i[2], i[3]}; break;
        case Move::R2: j = {i[2], new_index, i[3], i[0] + 4}; break;
        case Move::L0: j = {i[3] - 4, i[0], new_index, i[1]}; break;
        case Move::L1: j = {i[0], i[1], new_index, i[2]}; break;
        case Move::L2: j = {i[1], i[2], new_index, i[3]}; break;
    }
    return IndexedFoundation{std::move(g), std::move(j)};
}

IndexedFoundation indexed_preferred_foundation() {
    return {preferred_foundation(), {ThreeAdic(-1), ThreeAdic(0), ThreeAdic(1), ThreeAdic(2)}};
}

std::vector<ThreeAdic> enumerate_indices(unsigned max_order) {
    std::vector<ThreeAdic> out;
    for (unsigned q = 1; q <= max_order; ++q) {
        const Int den = pow3(q);
        for (Int p = 1; p < den; ++p)
            if (!mpz_divisible_ui_p(p.get_mpz_t(), 3)) out.emplace_back(p, q);
    }
    std::sort(out.begin(), out.end());
    return out;
}

const EpsilonMap::Vertex& EpsilonMap::vertex(const ThreeAdic& t) {
    if (t.order() == 0 || t.value() <= Rational(0) || t.value() >= Rational(1))
        throw InvalidIndexError("vertex requires an index in (0,1), got " + t.str());
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = memo_.find({t.numerator(), t.order()});
        if (it != memo_.end()) return it->second;
    }

    const NavStep step = parent_step(t);
    IndexedFoundation parent =
        step.from_root ? indexed_preferred_foundation() : vertex(step.parent).fnd;
    Vertex v{t, apply_move_indexed(parent, step.move, t), new_bundle_position(step.move),
             step.move};

    std::lock_guard<std::mutex> lock(mutex_);
    auto [it, inserted] = memo_.emplace(std::make_pair(t.numerator(), t.order()), std::move(v));
    (void)inserted;  // concurrent duplicate insertion is benign
    return it->second;
}

ChernCharacter EpsilonMap::epsilon(const ThreeAdic& t) {
    if (t.is_integer()) return ch_line(t.numerator());
    const Int n = t.floor();
    const ThreeAdic f = t.frac();
    const ChernCharacter base = vertex(f).ch();
    return n == 0 ? base : twist(base, n);
}

MarkedFoundation EpsilonMap::distinguished_foundation(const ThreeAdic& t) {
    const Vertex& v = vertex(t);
    return {v.fnd.f, v.mark};
}

std::pair<ThreeAdic, ThreeAdic> EpsilonMap::parents(const ThreeAdic& t) {
    const Vertex& v = vertex(t);
    return {v.fnd.idx[v.mark - 1], v.fnd.idx[v.mark + 1]};
}

std::array<Resolution, 2> EpsilonMap::standard_resolutions(const ThreeAdic& t) {
    if (t.is_integer())
        throw InvalidIndexError("line bundles have no standard resolution");
    const Int n = t.floor();
    if (n != 0) {
        auto res = standard_resolutions(t.frac());
        for (auto& r : res) {
            r.sub = twist(r.sub, n);
            r.middle = twist(r.middle, n);
            r.quotient = twist(r.quotient, n);
        }
        return res;
    }

    const Vertex& v = vertex(t);
    const NavStep step = parent_step(t);
    Foundation pre = step.from_root ? preferred_foundation() : vertex(step.parent).fnd.f;
    // Reseat so that a right move mutates the pair (E', F') and a left
    // move mutates (G', H').
    switch (v.incoming) {
        case Move::R0:
        case Move::L0: pre = shift_right(pre); break;
        case Move::R2:
        case Move::L2: pre = shift_left(pre); break;
        default: break;
    }
    const ChernCharacter& E = pre[0];
    const ChernCharacter& F = pre[1];
    const ChernCharacter& G = pre[2];
    const ChernCharacter& H = pre[3];
    const ChernCharacter& B = v.ch();

    std::array<Resolution, 2> out;
    if (is_right_move(v.incoming)) {
        // Defining coevaluation: 0 -> E' -> F'^k -> B -> 0; the helix
        // relation rewrites B as a subobject 0 -> B -> G'^m -> L_{H'}(E'(4)) -> 0.
        out[0] = {E, F, B, hom_count(E, F), Resolution::Orientation::DefinesAsQuotient};
        const ChernCharacter coquotient = left_mutation(H, twist(E, 4));
        out[1] = {B, G, coquotient, hom_count(B, G), Resolution::Orientation::DefinesAsSub};
    } else {
        // Defining evaluation: 0 -> B -> G'^k -> H' -> 0; the helix
        // relation rewrites B as a quotient 0 -> R_{E'}(H'(-4)) -> F'^m -> B -> 0.
        out[0] = {B, G, H, hom_count(G, H), Resolution::Orientation::DefinesAsSub};
        const ChernCharacter cosub = right_mutation(twist(H, -4), E);
        out[1] = {cosub, F, B, hom_count(F, B), Resolution::Orientation::DefinesAsQuotient};
    }
    for (const auto& r : out)
        if (!r.additive())
            throw Error("standard resolution fails additivity at index " + t.str());
    return out;
}

std::optional<ThreeAdic> EpsilonMap::epsilon_inverse(const ChernCharacter& v, unsigned max_order) {
    if (!is_candidate_exceptional(v)) return std::nullopt;
    if (v.ch0 == Rational(1)) {
        const Int n = v.ch1.numerator();
        return v == ch_line(n) ? std::optional<ThreeAdic>(ThreeAdic(n)) : std::nullopt;
    }
    if (max_order == 0) return std::nullopt;

    const Rational mu = slope(v);
    const Int n = mu.floor();
    const ChernCharacter v0 = n == 0 ? v : twist(v, -n);
    const Rational mu0 = slope(v0);

    std::vector<ThreeAdic> frontier{ThreeAdic(1, 1), ThreeAdic(2, 1)};
    while (!frontier.empty()) {
        const ThreeAdic t = frontier.back();
        frontier.pop_back();
        const Vertex& w = vertex(t);
        if (w.ch() == v0) return t + n;
        if (t.order() >= max_order) continue;
        const auto moves = w.mark == 1 ? std::array<Move, 3>{Move::R0, Move::L0, Move::R1}
                                       : std::array<Move, 3>{Move::L1, Move::R2, Move::L2};
        for (Move m : moves) {
            const ThreeAdic c = child_index(t, m);
            const Vertex& cw = vertex(c);
            // The whole subtree under c has slopes strictly between the
            // slopes of the entries adjacent to its new bundle.
            const Rational lo = slope(cw.fnd.f[cw.mark - 1]);
            const Rational hi = slope(cw.fnd.f[cw.mark + 1]);
            if (lo < mu0 && mu0 < hi) frontier.push_back(c);
        }
    }
    return std::nullopt;
}

BundleRecord EpsilonMap::record(const ThreeAdic& t) {
    BundleRecord r;
    r.index = t;
    r.order = t.order();
    r.ch = epsilon(t);
    r.rank = r.ch.ch0.numerator();
    r.slope = slope(r.ch);
    const auto cls = chern_classes(r.ch);
    if (!cls) throw Error("epsilon value with non-integral Chern classes at " + t.str());
    r.c = *cls;
    const Rational chi = euler_chi(r.ch);
    if (!chi.is_integer()) throw Error("non-integral chi at " + t.str());
    r.chi = chi.numerator();
    r.wbn = wbn_profile(r.ch);
    r.globally_generated = is_globally_generated(t);

    if (t.is_integer()) {
        const Int n = t.numerator();
        r.foundation = Foundation::unchecked(
            {ch_line(n - 1), ch_line(n), ch_line(n + 1), ch_line(n + 2)});
        r.foundation_indices = {ThreeAdic(n - 1), ThreeAdic(n), ThreeAdic(n + 1), ThreeAdic(n + 2)};
        r.mark = 1;
        return r;
    }

    const Int n = t.floor();
    const ThreeAdic f = t.frac();
    const Vertex& v = vertex(f);
    if (n == 0) {
        r.foundation = v.fnd.f;
        r.foundation_indices = v.fnd.idx;
    } else {
        std::array<ChernCharacter, 4> tw;
        for (int i = 0; i < 4; ++i) tw[static_cast<size_t>(i)] = twist(v.fnd.f[i], n);
        r.foundation = Foundation::unchecked(std::move(tw));
        for (int i = 0; i < 4; ++i)
            r.foundation_indices[static_cast<size_t>(i)] = v.fnd.idx[static_cast<size_t>(i)] + n;
    }
    r.mark = v.mark;
    const auto res = standard_resolutions(t);
    r.resolutions.assign(res.begin(), res.end());
    return r;
}

}  // namespace helix
