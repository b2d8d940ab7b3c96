#ifndef EQUICHAIN_ORDERED_TREE_HPP
#define EQUICHAIN_ORDERED_TREE_HPP

#include <string>
#include <utility>
#include <vector>

#include "equichain/boron_tree.hpp"

namespace equichain {

/// A planar boron tree with a distinguished root leaf. The planar data is
/// the counterclockwise circular arrangement of the leaves, stored rotated
/// so the root comes last; the induced total leaf order is then simply the
/// arrangement read left to right, with the root as maximum.
class OrderedBoronTree {
public:
    /// Validates that root is a leaf, the arrangement is a permutation of
    /// the leaves, and every internal edge splits the arrangement into two
    /// contiguous circular arcs (throws not_planar otherwise).
    OrderedBoronTree(BoronTree tree, std::string root, std::vector<std::string> ccw_arrangement);

    const BoronTree& tree() const { return tree_; }
    const std::string& root() const { return root_; }

    /// Counterclockwise arrangement, rotated so the root is last.
    const std::vector<std::string>& arrangement() const { return arrangement_; }

    /// The non-root leaves in increasing order followed by the root (the
    /// maximum); x < y iff x lies between the root and y counterclockwise.
    const std::vector<std::string>& leaf_order() const { return arrangement_; }

    int leaf_count() const { return tree_.leaf_count(); }

    /// Splits at the root's neighbor: left part carries the leaves below its
    /// first (counterclockwise from the root) descendant, right part the
    /// rest; each part keeps the root and the induced planar structure.
    /// Requires at least three leaves (too_small otherwise).
    std::pair<OrderedBoronTree, OrderedBoronTree> root_decomposition() const;

    bool operator==(const OrderedBoronTree& o) const;

private:
    BoronTree tree_;
    std::string root_;
    std::vector<std::string> arrangement_;
};

/// Planar rooted structure for an arbitrary boron tree: roots at the given
/// leaf and lays subtrees out by depth-first order. Used to show every boron
/// tree is the image of an ordered one under the forgetful map.
OrderedBoronTree with_default_embedding(const BoronTree& t, const std::string& root);

/// All ordered boron trees over the given labeled tree: every choice of root
/// leaf and of planar embedding (two per internal vertex).
std::vector<OrderedBoronTree> all_orderings(const BoronTree& t);

} // namespace equichain

#endif
