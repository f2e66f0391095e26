#pragma once

#include <array>
#include <map>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

#include "helix/mutation.hpp"
#include "helix/threeadic.hpp"

namespace helix {

/// A foundation together with the epsilon indices of its four entries.
struct IndexedFoundation {
    Foundation f = preferred_foundation();
    std::array<ThreeAdic, 4> idx;
};

/// One short exact sequence 0 -> sub -> middle^multiplicity -> quotient -> 0
/// presenting a bundle, with ch(sub) + ch(quotient) = multiplicity·ch(middle)
/// exactly. `orientation` records which end the presented bundle sits at.
struct Resolution {
    enum class Orientation { DefinesAsSub, DefinesAsQuotient };
    ChernCharacter sub;
    ChernCharacter middle;
    ChernCharacter quotient;
    Int multiplicity;
    Orientation orientation;
    bool additive() const;
};

/// Conjectural cohomology profile: at most one nonzero h^i, with
///   (0, chi)  if mu >= 0
///   (1, -chi) if -4 < mu < 0 and chi < 0
///   (2, chi)  if -4 < mu < 0 and chi >= 0
///   (3, -chi) if mu <= -4.
struct CohomologyProfile {
    int degree;
    Int dim;
};

CohomologyProfile wbn_profile(const ChernCharacter& v);

/// Global generation holds exactly for slope >= 0, i.e. index >= 0.
bool is_globally_generated(const ThreeAdic& t);

/// The move and parent index that produce a given index of order >= 1 in
/// the admissible-mutation tree. For order 1 `from_root` is set and the
/// parent index is meaningless.
struct NavStep {
    ThreeAdic parent;
    Move move;
    bool from_root;
};

NavStep parent_step(const ThreeAdic& t);

/// Index introduced by applying `m` to the vertex with index `t`
/// (t in (0,1), or the root when `root` is passed).
ThreeAdic child_index(const ThreeAdic& t, Move m);
ThreeAdic root_child_index(Move m);

/// Applies a move to an indexed foundation, tracking entry indices.
IndexedFoundation apply_move_indexed(const IndexedFoundation& f, Move m,
                                     const ThreeAdic& new_index);

/// The preferred foundation with its line-bundle indices (-1, 0, 1, 2).
IndexedFoundation indexed_preferred_foundation();

/// All normalized 3-adic rationals in (0,1) of order <= max_order,
/// ascending. There are 3^q - 1 of them for max_order = q.
std::vector<ThreeAdic> enumerate_indices(unsigned max_order);

/// Full catalog row for one index.
struct BundleRecord {
    ThreeAdic index;
    unsigned order;
    ChernCharacter ch;
    Int rank;
    Rational slope;
    ChernClasses c;
    Int chi;
    Foundation foundation = preferred_foundation();
    std::array<ThreeAdic, 4> foundation_indices;
    int mark;
    CohomologyProfile wbn;
    bool globally_generated;
    std::vector<Resolution> resolutions;  // empty for order 0
};

/// The epsilon bijection {3-adic rationals} -> {Chern characters of
/// constructive exceptional bundles on P^3}, realized through the
/// distinguished-foundation recursion. Values and foundations are
/// memoized; the memo is guarded and idempotent, so concurrent use is
/// safe. All returned values are immutable copies or stable references.
class EpsilonMap {
public:
    /// Memoized vertex of the admissible tree, t in (0,1), order >= 1.
    struct Vertex {
        ThreeAdic index;
        IndexedFoundation fnd;
        int mark;
        Move incoming;
        const ChernCharacter& ch() const { return fnd.f[mark]; }
    };

    const Vertex& vertex(const ThreeAdic& t);

    /// epsilon(t) for any 3-adic rational: epsilon(n) = ch(O(n)) on
    /// integers, epsilon(t + n) = twist(epsilon(t), n) in general.
    ChernCharacter epsilon(const ThreeAdic& t);

    /// The marked foundation of the distinguished helix, t in (0,1).
    MarkedFoundation distinguished_foundation(const ThreeAdic& t);

    /// Indices of the foundation entries adjacent to the marked bundle.
    std::pair<ThreeAdic, ThreeAdic> parents(const ThreeAdic& t);

    /// The two standard short exact sequences presenting epsilon(t):
    /// the defining mutation and the opposite presentation obtained from
    /// the helix relation. Requires order(t) >= 1.
    std::array<Resolution, 2> standard_resolutions(const ThreeAdic& t);

    /// Inverse lookup by descending the tree along slope bounds; nullopt
    /// when v is not an epsilon value of order <= max_order.
    std::optional<ThreeAdic> epsilon_inverse(const ChernCharacter& v, unsigned max_order);

    BundleRecord record(const ThreeAdic& t);

private:
    const Vertex& vertex_locked_lookup(const ThreeAdic& t, bool& found);

    std::map<std::pair<Int, unsigned>, Vertex> memo_;
    std::mutex mutex_;
};

}  // namespace helix
