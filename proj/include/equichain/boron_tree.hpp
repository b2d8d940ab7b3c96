#ifndef EQUICHAIN_BORON_TREE_HPP
#define EQUICHAIN_BORON_TREE_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "equichain/util.hpp"

namespace equichain {

/// A finite tree whose internal vertices all have degree three; leaves carry
/// distinct labels. Trees with one or two vertices (all leaves) are admitted
/// as degenerate cases. Instances are immutable after construction.
class BoronTree {
public:
    /// Builds a tree from an edge list on vertices 0..n-1. labels[v] must be
    /// non-empty exactly for the leaves. Throws invalid_tree when the graph
    /// is not a tree or a valence/label constraint fails.
    static BoronTree from_edges(int vertex_count,
                                const std::vector<std::pair<int, int>>& edges,
                                const std::vector<std::string>& labels);

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    int leaf_count() const { return static_cast<int>(leaves_.size()); }

    bool is_leaf(int v) const { return !label_[v].empty(); }
    const std::string& label_of(int v) const { return label_[v]; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }

    /// Leaf vertex ids in natural label order.
    const std::vector<int>& leaf_vertices() const { return leaves_; }
    /// Leaf labels in natural order ("2" before "10").
    const std::vector<std::string>& leaf_labels() const { return leaf_labels_; }

    bool has_leaf(const std::string& label) const;
    /// Vertex id of the given leaf; throws invalid_leaf if absent.
    int leaf_vertex(const std::string& label) const;

    /// The quartet relation: true iff the w-x geodesic and the y-z geodesic
    /// share a vertex. Labels must name four pairwise distinct leaves.
    bool quartet(const std::string& w, const std::string& x,
                 const std::string& y, const std::string& z) const;

    /// Steiner tree of S with degree-2 vertices suppressed; the result is a
    /// boron tree with leaf set S. Requires |S| >= 2 (after deduplication).
    BoronTree induced(const std::vector<std::string>& s) const;

    /// Label-independent encoding: equal iff the trees are isomorphic as
    /// unlabeled boron trees (AHU encoding minimized over all root edges).
    std::string canonical_form() const;

    bool isomorphic_to(const BoronTree& other) const;

    /// Graph distance between two vertices.
    int distance(int u, int v) const;

    /// Vertices on the unique u-v path, endpoints included.
    std::vector<int> path_vertices(int u, int v) const;

    /// Deterministic label-preserving serialization (Newick, no trailing
    /// semicolon handling here; see newick.hpp).
    std::string to_newick() const;

private:
    BoronTree() = default;
    void validate() const;

    std::vector<std::vector<int>> adj_;
    std::vector<std::string> label_;
    std::vector<int> leaves_;
    std::vector<std::string> leaf_labels_;
    std::map<std::string, int, NaturalLess> leaf_index_;
};

/// Fast quartet lookups for one tree: leaf-pair distances are precomputed so
/// each quartet evaluates in O(1). Leaves are addressed by their rank in
/// natural label order.
class QuartetTable {
public:
    explicit QuartetTable(const BoronTree& t);

    int leaf_count() const { return n_; }
    const std::vector<std::string>& labels() const { return labels_; }

    /// rho on leaf ranks; arguments must be pairwise distinct.
    bool rho(int w, int x, int y, int z) const;
    bool rho_labels(const std::string& w, const std::string& x,
                    const std::string& y, const std::string& z) const;

    /// Which of the three pairings of {a,b,c,d} is the split (the one with
    /// disjoint geodesics): 0 = ab|cd, 1 = ac|bd, 2 = ad|bc.
    int split_index(int a, int b, int c, int d) const;

    int leaf_rank(const std::string& label) const;

private:
    int dist(int i, int j) const { return dist_[static_cast<size_t>(i) * n_ + j]; }

    int n_ = 0;
    std::vector<std::string> labels_;
    std::map<std::string, int, NaturalLess> rank_;
    std::vector<int> dist_; // n_ x n_ leaf-pair distances
};

/// All leaf-rank injections phi: leaves(t0) -> leaves(t) that preserve and
/// reflect the quartet relation. Backtracking over t0's leaves in natural
/// label order with split-consistency pruning from the fourth assignment on;
/// the result is sorted lexicographically by image tuple.
std::vector<std::vector<int>> enumerate_embeddings(const BoronTree& t0, const BoronTree& t);

/// Count |Aut| without materializing maps: embeddings of t into itself.
size_t automorphism_count(const BoronTree& t);

/// All boron trees with leaf set {"1",...,"n"}, generated by leaf insertion
/// on every edge; complete and duplicate-free, (2n-5)!! trees. n >= 2.
std::vector<BoronTree> enumerate_labeled(int n);

} // namespace equichain

#endif
