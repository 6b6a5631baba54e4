#include "ncrrt/tree.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace ncrrt {

Tree::Tree(const Config& root) { nodes_.push_back({root, std::nullopt}); }

NodeId Tree::add_node(const Config& c, NodeId parent) {
    if (parent.index >= nodes_.size()) {
        throw std::out_of_range("Tree::add_node: parent " + std::to_string(parent.index) +
                                " is not in a tree of size " + std::to_string(nodes_.size()));
    }
    nodes_.push_back({c, parent});
    return NodeId{nodes_.size() - 1};
}

bool operator==(const Tree::Node& a, const Tree::Node& b) noexcept {
    return a.config == b.config && a.parent == b.parent;
}

bool operator==(const Tree& a, const Tree& b) noexcept { return a.nodes_ == b.nodes_; }

Tree tree_init(const Config& root) { return Tree(root); }

NodeId add_node(Tree& t, const Config& c, NodeId parent) { return t.add_node(c, parent); }

NodeId nearest_neighbour(const Config& x, const Tree& t) {
    const auto nodes = t.nodes();
    std::size_t best = 0;
    // Squared distance keeps the scan free of sqrt; the ordering is identical.
    double best_d2 = (nodes[0].config.x - x.x) * (nodes[0].config.x - x.x) +
                     (nodes[0].config.y - x.y) * (nodes[0].config.y - x.y);
    for (std::size_t i = 1; i < nodes.size(); ++i) {
        const double dx = nodes[i].config.x - x.x;
        const double dy = nodes[i].config.y - x.y;
        const double d2 = dx * dx + dy * dy;
        if (d2 < best_d2) {
            best_d2 = d2;
            best = i;
        }
    }
    return NodeId{best};
}

std::vector<Config> extract_path(const Tree& t, NodeId leaf) {
    std::vector<Config> path;
    std::optional<NodeId> cur = leaf;
    // parent(k) < k bounds the walk by size() steps.
    while (cur) {
        path.push_back(t.config(*cur));
        cur = t.parent(*cur);
    }
    std::reverse(path.begin(), path.end());
    return path;
}

double path_length(std::span<const Config> path) {
    if (path.empty()) {
        throw std::invalid_argument("path_length: empty path");
    }
    double total = 0.0;
    for (std::size_t i = 1; i < path.size(); ++i) {
        total += metric(path[i - 1], path[i]);
    }
    return total;
}

}  // namespace ncrrt
