// Rooted search tree with parent links.

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "ncrrt/space.hpp"

namespace ncrrt {

/// Index of a node in insertion order; the root is 0.
struct NodeId {
    std::size_t index{0};

    friend bool operator==(const NodeId&, const NodeId&) = default;
};

/// Append-only tree. Every node except the root has exactly one parent with a
/// smaller index, so the structure is acyclic and connected by construction.
class Tree {
public:
    struct Node {
        Config config;
        std::optional<NodeId> parent;
    };

    explicit Tree(const Config& root);

    /// Appends `c` as a child of `parent`. Throws std::out_of_range when
    /// `parent` is not a node of this tree.
    NodeId add_node(const Config& c, NodeId parent);

    [[nodiscard]] std::size_t size() const noexcept { return nodes_.size(); }
    [[nodiscard]] const Node& node(NodeId id) const { return nodes_.at(id.index); }
    [[nodiscard]] const Config& config(NodeId id) const { return nodes_.at(id.index).config; }
    [[nodiscard]] std::optional<NodeId> parent(NodeId id) const { return nodes_.at(id.index).parent; }
    [[nodiscard]] std::span<const Node> nodes() const noexcept { return nodes_; }

    friend bool operator==(const Tree& a, const Tree& b) noexcept;

private:
    std::vector<Node> nodes_;
};

bool operator==(const Tree::Node& a, const Tree::Node& b) noexcept;

[[nodiscard]] Tree tree_init(const Config& root);

NodeId add_node(Tree& t, const Config& c, NodeId parent);

/// Exhaustive scan; ties resolve to the smallest index.
[[nodiscard]] NodeId nearest_neighbour(const Config& x, const Tree& t);

/// Configs on the root-to-leaf chain, root first.
[[nodiscard]] std::vector<Config> extract_path(const Tree& t, NodeId leaf);

/// Sum of consecutive distances; 0 for a single config. Throws on an empty path.
[[nodiscard]] double path_length(std::span<const Config> path);

}  // namespace ncrrt
