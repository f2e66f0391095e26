#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "helix/epsilon.hpp"

namespace helix {

/// Vertex of the admissible-mutation tree. The root is the helix of line
/// bundles with its preferred foundation; every other vertex carries the
/// bundle of slope in (0,1) introduced by its incoming move.
struct GammaVertex {
    bool is_root = false;
    ThreeAdic index;  // meaningful when !is_root
    IndexedFoundation fnd;
    int mark = 1;        // position of the new bundle; 1 for the root's O
    Move incoming = Move::R1;  // meaningful when !is_root
    unsigned depth = 0;
    std::size_t parent = 0;
    std::vector<std::size_t> children;
};

struct GammaTree {
    std::vector<GammaVertex> verts;  // verts[0] is the root, BFS order
    unsigned depth = 0;
};

/// Child moves in increasing order of the slope they introduce:
/// {R0, L0, R1} after a right move, {L1, R2, L2} after a left move,
/// {R1, L1} at the root.
std::vector<Move> child_moves(const GammaVertex& v);

/// Breadth-first expansion to the given depth. Vertex count is
/// 1 + sum_{k=1..depth} 2·3^(k-1) = 3^depth.
GammaTree build_tree(unsigned depth);

struct TreeCheck {
    std::string name;
    bool pass;
    long long count;
    std::string witness;
};

/// Structural verification: (a) pairwise-distinct helices, (b) degree
/// structure (root 2, interior 4), (c) sibling slopes strictly ordered,
/// (d) every new bundle has slope strictly in (0,1), (e) descendant
/// slopes confined to the interval cut out by the entries adjacent to
/// the parent's new bundle. Non-throwing; failures land in the report.
std::vector<TreeCheck> verify_tree(const GammaTree& tree);

std::string export_dot(const GammaTree& tree);
std::string export_json(const GammaTree& tree);

/// Parsed form of the JSON export, for round-trip checks.
struct ParsedTreeNode {
    std::optional<ThreeAdic> index;
    std::optional<ChernCharacter> ch;
    std::string move;
    std::vector<ParsedTreeNode> children;
};

ParsedTreeNode parse_tree_json(const std::string& text);

}  // namespace helix
