#include "helix/tree.hpp"

#include <set>

#include <json.hpp>

namespace helix {

using ordered_json = nlohmann::ordered_json;

std::vector<Move> child_moves(const GammaVertex& v) {
    if (v.is_root) return {Move::R1, Move::L1};
    if (is_right_move(v.incoming)) return {Move::R0, Move::L0, Move::R1};
    return {Move::L1, Move::R2, Move::L2};
}

GammaTree build_tree(unsigned depth) {
    GammaTree tree;
    tree.depth = depth;
    GammaVertex root;
    root.is_root = true;
    root.fnd = indexed_preferred_foundation();
    root.mark = 1;
    root.depth = 0;
    tree.verts.push_back(std::move(root));

    std::size_t begin = 0, end = 1;
    for (unsigned level = 0; level < depth; ++level) {
        for (std::size_t p = begin; p < end; ++p) {
            for (Move m : child_moves(tree.verts[p])) {
                const GammaVertex& parent = tree.verts[p];
                GammaVertex child;
                child.index = parent.is_root ? root_child_index(m) : child_index(parent.index, m);
                child.fnd = apply_move_indexed(parent.fnd, m, child.index);
                child.mark = new_bundle_position(m);
                child.incoming = m;
                child.depth = level + 1;
                child.parent = p;
                tree.verts.push_back(std::move(child));
                tree.verts[p].children.push_back(tree.verts.size() - 1);
            }
        }
        begin = end;
        end = tree.verts.size();
    }
    return tree;
}

namespace {

const ChernCharacter& new_bundle(const GammaVertex& v) { return v.fnd.f[v.mark]; }

Rational new_slope(const GammaVertex& v) { return slope(new_bundle(v)); }

// Slope window that must contain every descendant's new bundle.
std::pair<Rational, Rational> subtree_window(const GammaVertex& v) {
    return {slope(v.fnd.f[v.mark - 1]), slope(v.fnd.f[v.mark + 1])};
}

}  // namespace

std::vector<TreeCheck> verify_tree(const GammaTree& tree) {
    std::vector<TreeCheck> checks;
    const auto& V = tree.verts;

    {
        TreeCheck c{"distinct-helices", true, static_cast<long long>(V.size()), ""};
        std::set<std::string> seen;
        for (const auto& v : V) {
            const auto key = canonical_helix_key(v.fnd.f);
            if (!seen.insert(key).second) {
                c.pass = false;
                c.witness = "duplicate helix at index " + (v.is_root ? std::string("root") : v.index.str());
                break;
            }
        }
        checks.push_back(std::move(c));
    }

    {
        TreeCheck c{"degree-structure", true, static_cast<long long>(V.size()), ""};
        for (std::size_t i = 0; i < V.size(); ++i) {
            const auto& v = V[i];
            if (v.depth >= tree.depth && !v.children.empty()) {
                c.pass = false;
                c.witness = "leaf with children at depth " + std::to_string(v.depth);
                break;
            }
            if (v.depth < tree.depth) {
                const std::size_t expect = v.is_root ? 2 : 3;
                const std::size_t degree = v.children.size() + (v.is_root ? 0 : 1);
                if (v.children.size() != expect) {
                    c.pass = false;
                    c.witness = "vertex " + std::to_string(i) + " has " +
                                std::to_string(v.children.size()) + " children";
                    break;
                }
                if (degree != (v.is_root ? 2u : 4u)) {
                    c.pass = false;
                    c.witness = "vertex " + std::to_string(i) + " has degree " + std::to_string(degree);
                    break;
                }
            }
        }
        checks.push_back(std::move(c));
    }

    {
        TreeCheck c{"sibling-slope-order", true, 0, ""};
        for (const auto& v : V) {
            for (std::size_t k = 1; k < v.children.size(); ++k) {
                ++c.count;
                if (!(new_slope(V[v.children[k - 1]]) < new_slope(V[v.children[k]]))) {
                    c.pass = false;
                    c.witness = "children of " + (v.is_root ? std::string("root") : v.index.str()) +
                                " out of order";
                }
            }
        }
        checks.push_back(std::move(c));
    }

    {
        TreeCheck c{"new-slope-in-unit-interval", true, 0, ""};
        for (const auto& v : V) {
            if (v.is_root) continue;
            ++c.count;
            const Rational mu = new_slope(v);
            if (!(Rational(0) < mu && mu < Rational(1))) {
                c.pass = false;
                c.witness = "slope " + mu.str() + " at index " + v.index.str();
            }
        }
        checks.push_back(std::move(c));
    }

    {
        TreeCheck c{"subtree-slope-nesting", true, 0, ""};
        for (std::size_t i = 0; i < V.size(); ++i) {
            if (V[i].is_root) continue;
            const auto [lo, hi] = subtree_window(V[i]);
            // Walk the whole subtree of i.
            std::vector<std::size_t> stack{V[i].children.begin(), V[i].children.end()};
            while (!stack.empty()) {
                const std::size_t j = stack.back();
                stack.pop_back();
                ++c.count;
                const Rational mu = new_slope(V[j]);
                if (!(lo < mu && mu < hi)) {
                    c.pass = false;
                    c.witness = "descendant " + V[j].index.str() + " of " + V[i].index.str() +
                                " escapes (" + lo.str() + ", " + hi.str() + ")";
                    stack.clear();
                    break;
                }
                stack.insert(stack.end(), V[j].children.begin(), V[j].children.end());
            }
            if (!c.pass) break;
        }
        checks.push_back(std::move(c));
    }

    return checks;
}

std::string export_dot(const GammaTree& tree) {
    std::string out = "digraph gamma_tree {\n";
    out += "  node [shape=box];\n";
    for (std::size_t i = 0; i < tree.verts.size(); ++i) {
        const auto& v = tree.verts[i];
        if (v.is_root) {
            out += "  n0 [label=\"sigma0\"];\n";
        } else {
            out += "  n" + std::to_string(i) + " [label=\"eps(" + v.index.str() +
                   ")\\nmu=" + new_slope(v).str() + "\"];\n";
        }
    }
    for (std::size_t i = 0; i < tree.verts.size(); ++i) {
        for (std::size_t c : tree.verts[i].children) {
            out += "  n" + std::to_string(i) + " -> n" + std::to_string(c) + " [label=\"" +
                   to_string(tree.verts[c].incoming) + "\"];\n";
        }
    }
    out += "}\n";
    return out;
}

namespace {

ordered_json chern_json(const ChernCharacter& v) {
    return ordered_json::array({v.ch0.str(), v.ch1.str(), v.ch2.str(), v.ch3.str()});
}

ordered_json vertex_json(const GammaTree& tree, std::size_t i) {
    const auto& v = tree.verts[i];
    ordered_json node;
    if (v.is_root) {
        node["index"] = nullptr;
        node["slope"] = nullptr;
        node["ch"] = nullptr;
        node["move"] = "root";
    } else {
        node["index"] = v.index.str();
        node["slope"] = new_slope(v).str();
        node["ch"] = chern_json(new_bundle(v));
        node["move"] = to_string(v.incoming);
    }
    node["children"] = ordered_json::array();
    for (std::size_t c : v.children) node["children"].push_back(vertex_json(tree, c));
    return node;
}

ParsedTreeNode parse_node(const ordered_json& j) {
    ParsedTreeNode n;
    if (!j.at("index").is_null()) n.index = ThreeAdic::parse(j.at("index").get<std::string>());
    if (!j.at("ch").is_null()) {
        const auto& arr = j.at("ch");
        if (!arr.is_array() || arr.size() != 4) throw ParseError("tree json: bad ch array");
        n.ch = ChernCharacter{
            Rational::parse(arr[0].get<std::string>()), Rational::parse(arr[1].get<std::string>()),
            Rational::parse(arr[2].get<std::string>()), Rational::parse(arr[3].get<std::string>())};
    }
    n.move = j.at("move").get<std::string>();
    for (const auto& c : j.at("children")) n.children.push_back(parse_node(c));
    return n;
}

}  // namespace

std::string export_json(const GammaTree& tree) {
    return vertex_json(tree, 0).dump(2) + "\n";
}

ParsedTreeNode parse_tree_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const std::exception& e) {
        throw ParseError(std::string("tree json: ") + e.what());
    }
    return parse_node(j);
}

}  // namespace helix
