#include "equichain/ordered_tree.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "equichain/error.hpp"

namespace equichain {

namespace {

// Leaves in the component of `start` after removing the edge (start, banned).
std::vector<int> side_leaves(const BoronTree& t, int start, int banned) {
    std::vector<int> stack{start}, out;
    std::vector<char> seen(t.vertex_count(), 0);
    seen[start] = 1;
    seen[banned] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        if (t.is_leaf(v)) out.push_back(v);
        for (int w : t.neighbors(v))
            if (!seen[w]) {
                seen[w] = 1;
                stack.push_back(w);
            }
    }
    return out;
}

bool circularly_contiguous(const std::vector<int>& positions, int n) {
    if (positions.empty() || static_cast<int>(positions.size()) == n) return true;
    std::vector<char> in(n, 0);
    for (int p : positions) in[p] = 1;
    int boundary = 0;
    for (int p = 0; p < n; ++p)
        if (in[p] && !in[(p + 1) % n]) ++boundary;
    return boundary == 1;
}

} // namespace

OrderedBoronTree::OrderedBoronTree(BoronTree tree, std::string root,
                                   std::vector<std::string> ccw_arrangement)
    : tree_(std::move(tree)), root_(std::move(root)), arrangement_(std::move(ccw_arrangement)) {
    tree_.leaf_vertex(root_); // throws invalid_leaf if absent

    if (arrangement_.size() != tree_.leaf_labels().size())
        throw Error(Errc::not_planar, "arrangement size does not match leaf count");
    std::set<std::string> seen(arrangement_.begin(), arrangement_.end());
    if (seen.size() != arrangement_.size())
        throw Error(Errc::not_planar, "arrangement repeats a leaf");
    for (const auto& l : arrangement_)
        if (!tree_.has_leaf(l)) throw Error(Errc::not_planar, "arrangement names unknown leaf '" + l + "'");

    // normalize: rotate the circular arrangement so the root comes last
    auto it = std::find(arrangement_.begin(), arrangement_.end(), root_);
    std::rotate(arrangement_.begin(), it + 1 == arrangement_.end() ? arrangement_.begin() : it + 1,
                arrangement_.end());

    const int n = static_cast<int>(arrangement_.size());
    std::vector<int> pos_of_vertex(tree_.vertex_count(), -1);
    for (int p = 0; p < n; ++p) pos_of_vertex[tree_.leaf_vertex(arrangement_[p])] = p;

    // every internal edge must separate the circle into two contiguous arcs
    for (int v = 0; v < tree_.vertex_count(); ++v) {
        if (tree_.is_leaf(v)) continue;
        for (int w : tree_.neighbors(v)) {
            if (w < v || tree_.is_leaf(w)) continue;
            std::vector<int> positions;
            for (int leaf : side_leaves(tree_, v, w)) positions.push_back(pos_of_vertex[leaf]);
            if (!circularly_contiguous(positions, n))
                throw Error(Errc::not_planar, "edge splits leaves into non-contiguous arcs");
        }
    }
}

bool OrderedBoronTree::operator==(const OrderedBoronTree& o) const {
    return root_ == o.root_ && arrangement_ == o.arrangement_ &&
           tree_.to_newick() == o.tree_.to_newick();
}

std::pair<OrderedBoronTree, OrderedBoronTree> OrderedBoronTree::root_decomposition() const {
    if (leaf_count() < 3)
        throw Error(Errc::too_small, "root decomposition needs at least three leaves");

    int r = tree_.leaf_vertex(root_);
    int hub = tree_.neighbors(r).front();
    std::vector<int> children;
    for (int w : tree_.neighbors(hub))
        if (w != r) children.push_back(w);

    // the left descendant is the one whose side holds the smallest leaf
    std::set<std::string> first_side;
    for (int leaf : side_leaves(tree_, children[0], hub)) first_side.insert(tree_.label_of(leaf));
    if (!first_side.count(arrangement_.front())) std::swap(children[0], children[1]);

    auto build_part = [&](int child) {
        std::set<std::string> side;
        for (int leaf : side_leaves(tree_, child, hub)) side.insert(tree_.label_of(leaf));
        std::vector<std::string> leaves(side.begin(), side.end());
        leaves.push_back(root_);
        BoronTree part = tree_.induced(leaves);
        std::vector<std::string> arr;
        for (const auto& l : arrangement_)
            if (side.count(l)) arr.push_back(l);
        arr.push_back(root_);
        return OrderedBoronTree(std::move(part), root_, std::move(arr));
    };
    return {build_part(children[0]), build_part(children[1])};
}

namespace {

void collect_leaves(const BoronTree& t, int v, int parent, const std::vector<int>& swap_mask,
                    std::vector<std::string>& out) {
    if (t.is_leaf(v)) {
        out.push_back(t.label_of(v));
        return;
    }
    std::vector<int> kids;
    for (int w : t.neighbors(v))
        if (w != parent) kids.push_back(w);
    if (!swap_mask.empty() && swap_mask[v]) std::swap(kids[0], kids[1]);
    for (int w : kids) collect_leaves(t, w, v, swap_mask, out);
}

} // namespace

OrderedBoronTree with_default_embedding(const BoronTree& t, const std::string& root) {
    int r = t.leaf_vertex(root);
    std::vector<std::string> arr;
    if (t.leaf_count() >= 2) {
        int hub = t.neighbors(r).front();
        if (t.is_leaf(hub)) {
            arr.push_back(t.label_of(hub));
        } else {
            for (int w : t.neighbors(hub))
                if (w != r) collect_leaves(t, w, hub, {}, arr);
        }
    }
    arr.push_back(root);
    return OrderedBoronTree(t, root, std::move(arr));
}

std::vector<OrderedBoronTree> all_orderings(const BoronTree& t) {
    std::vector<OrderedBoronTree> out;
    std::vector<int> internals;
    for (int v = 0; v < t.vertex_count(); ++v)
        if (!t.is_leaf(v)) internals.push_back(v);

    for (const auto& root : t.leaf_labels()) {
        int r = t.leaf_vertex(root);
        size_t combos = size_t{1} << internals.size();
        for (size_t mask = 0; mask < combos; ++mask) {
            std::vector<int> swap_mask(t.vertex_count(), 0);
            for (size_t i = 0; i < internals.size(); ++i)
                swap_mask[internals[i]] = (mask >> i) & 1;
            std::vector<std::string> arr;
            if (t.leaf_count() >= 2) {
                int hub = t.neighbors(r).front();
                if (t.is_leaf(hub)) {
                    arr.push_back(t.label_of(hub));
                } else {
                    std::vector<int> kids;
                    for (int w : t.neighbors(hub))
                        if (w != r) kids.push_back(w);
                    if (swap_mask[hub]) std::swap(kids[0], kids[1]);
                    for (int w : kids) collect_leaves(t, w, hub, swap_mask, arr);
                }
            }
            arr.push_back(root);
            out.emplace_back(t, root, std::move(arr));
        }
    }
    std::sort(out.begin(), out.end(), [](const OrderedBoronTree& a, const OrderedBoronTree& b) {
        if (a.root() != b.root()) return natural_less(a.root(), b.root());
        return a.arrangement() < b.arrangement();
    });
    out.erase(std::unique(out.begin(), out.end(),
                          [](const OrderedBoronTree& a, const OrderedBoronTree& b) {
                              return a.root() == b.root() && a.arrangement() == b.arrangement();
                          }),
              out.end());
    return out;
}

} // namespace equichain
