#pragma once

#include "opcalc/labeled_tree.hpp"

#include <functional>
#include <string>

namespace opcalc {

inline std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '\n') {
            out += "\\n";
            continue;
        }
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

/// Graphviz text for a labelled tree, root at the bottom. Vertices print through `node_text`, the
/// edge into a vertex through `edge_text` (empty for none). Leaves are plain-text nodes named by label.
template <class V>
std::string to_dot(const Labeled<V>& t, const std::function<std::string(const V&)>& node_text,
                   const std::function<std::string(const V&)>& edge_text) {
    std::string out = "digraph point {\n  rankdir=BT;\n  node [shape=box];\n";
    const auto& tree = t.tree;
    if (tree.is_trivial()) {
        for (std::size_t l = 1; l <= t.arity(); ++l)
            out += "  l" + std::to_string(l) + " [shape=plaintext, label=\"" + std::to_string(l) + "\"];\n";
        return out + "}\n";
    }
    std::string edges;
    for (auto v : tree.planar_traversal()) {
        const auto id = "v" + std::to_string(v);
        out += "  " + id + " [label=\"" + dot_escape(node_text(t.at[v])) + "\"];\n";
        const auto& slots = tree.vertices[v].slots;
        for (std::size_t s = 0; s < slots.size(); ++s) {
            if (slots[s].is_leaf()) {
                const auto leaf = "l" + std::to_string(slots[s].value);
                out += "  " + leaf + " [shape=plaintext, label=\"" + std::to_string(slots[s].value) + "\"];\n";
                edges += "  " + id + " -> " + leaf + " [taillabel=\"" + std::to_string(s + 1) + "\"];\n";
                continue;
            }
            const auto child = static_cast<VertexId>(slots[s].value);
            const auto annot = edge_text(t.at[child]);
            edges += "  " + id + " -> v" + std::to_string(child) + " [taillabel=\"" + std::to_string(s + 1) + "\"" +
                     (annot.empty() ? "" : ", label=\"" + dot_escape(annot) + "\"") + "];\n";
        }
    }
    return out + edges + "}\n";
}

}  // namespace opcalc
