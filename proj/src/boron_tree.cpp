#include "equichain/boron_tree.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>

#include "equichain/error.hpp"

namespace equichain {

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::invalid_tree: return "InvalidTree";
        case Errc::invalid_leaf: return "InvalidLeaf";
        case Errc::degenerate_quartet: return "DegenerateQuartet";
        case Errc::too_few_leaves: return "TooFewLeaves";
        case Errc::not_planar: return "NotPlanar";
        case Errc::too_small: return "TooSmall";
        case Errc::arity_mismatch: return "ArityMismatch";
        case Errc::instance_mismatch: return "InstanceMismatch";
        case Errc::ring_mismatch: return "RingMismatch";
        case Errc::zero_polynomial: return "ZeroPolynomial";
        case Errc::bad_renaming: return "BadRenaming";
        case Errc::not_homogeneous: return "NotHomogeneous";
        case Errc::out_of_range: return "OutOfRange";
        case Errc::no_ordering: return "NoOrdering";
        case Errc::not_monomial: return "NotMonomial";
        case Errc::not_concrete: return "NotConcrete";
        case Errc::not_a_chain: return "NotAChain";
        case Errc::no_such_functor: return "NoSuchFunctor";
        case Errc::parse_error: return "ParseError";
        case Errc::invalid_argument: return "InvalidArgument";
    }
    return "Error";
}

BoronTree BoronTree::from_edges(int vertex_count,
                                const std::vector<std::pair<int, int>>& edges,
                                const std::vector<std::string>& labels) {
    if (vertex_count <= 0)
        throw Error(Errc::invalid_tree, "a boron tree has at least one vertex");
    if (static_cast<int>(labels.size()) != vertex_count)
        throw Error(Errc::invalid_tree, "label list does not match vertex count");

    BoronTree t;
    t.adj_.assign(vertex_count, {});
    t.label_ = labels;
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count || u == v)
            throw Error(Errc::invalid_tree, "bad edge endpoint");
        t.adj_[u].push_back(v);
        t.adj_[v].push_back(u);
    }
    for (auto& nb : t.adj_) std::sort(nb.begin(), nb.end());

    for (int v = 0; v < vertex_count; ++v) {
        if (!t.label_[v].empty()) {
            auto [it, fresh] = t.leaf_index_.emplace(t.label_[v], v);
            (void)it;
            if (!fresh)
                throw Error(Errc::invalid_tree, "duplicate leaf label '" + t.label_[v] + "'");
        }
    }
    for (const auto& [label, v] : t.leaf_index_) {
        t.leaves_.push_back(v);
        t.leaf_labels_.push_back(label);
    }
    t.validate();
    return t;
}

void BoronTree::validate() const {
    const int n = vertex_count();
    size_t edge_count = 0;
    for (const auto& nb : adj_) edge_count += nb.size();
    edge_count /= 2;
    if (edge_count != static_cast<size_t>(n) - 1)
        throw Error(Errc::invalid_tree, "graph is not a tree (wrong edge count)");

    // connectivity
    std::vector<char> seen(n, 0);
    std::deque<int> queue{0};
    seen[0] = 1;
    int reached = 1;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int w : adj_[v])
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                queue.push_back(w);
            }
    }
    if (reached != n) throw Error(Errc::invalid_tree, "graph is not connected");

    if (n <= 2) {
        for (int v = 0; v < n; ++v)
            if (label_[v].empty())
                throw Error(Errc::invalid_tree, "degenerate tree must consist of leaves");
        return;
    }
    for (int v = 0; v < n; ++v) {
        size_t deg = adj_[v].size();
        if (label_[v].empty()) {
            if (deg != 3)
                throw Error(Errc::invalid_tree, "internal vertex of valence " + std::to_string(deg));
        } else if (deg != 1) {
            throw Error(Errc::invalid_tree, "leaf '" + label_[v] + "' has degree " + std::to_string(deg));
        }
    }
}

bool BoronTree::has_leaf(const std::string& label) const {
    return leaf_index_.count(label) != 0;
}

int BoronTree::leaf_vertex(const std::string& label) const {
    auto it = leaf_index_.find(label);
    if (it == leaf_index_.end())
        throw Error(Errc::invalid_leaf, "no leaf labeled '" + label + "'");
    return it->second;
}

int BoronTree::distance(int u, int v) const {
    if (u == v) return 0;
    std::vector<int> d(adj_.size(), -1);
    std::deque<int> queue{u};
    d[u] = 0;
    while (!queue.empty()) {
        int w = queue.front();
        queue.pop_front();
        for (int x : adj_[w])
            if (d[x] < 0) {
                d[x] = d[w] + 1;
                if (x == v) return d[x];
                queue.push_back(x);
            }
    }
    return -1;
}

std::vector<int> BoronTree::path_vertices(int u, int v) const {
    std::vector<int> parent(adj_.size(), -2);
    std::deque<int> queue{u};
    parent[u] = -1;
    while (!queue.empty()) {
        int w = queue.front();
        queue.pop_front();
        if (w == v) break;
        for (int x : adj_[w])
            if (parent[x] == -2) {
                parent[x] = w;
                queue.push_back(x);
            }
    }
    std::vector<int> path;
    for (int w = v; w != -1; w = parent[w]) path.push_back(w);
    std::reverse(path.begin(), path.end());
    return path;
}

bool BoronTree::quartet(const std::string& w, const std::string& x,
                        const std::string& y, const std::string& z) const {
    const std::string* names[4] = {&w, &x, &y, &z};
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (*names[i] == *names[j])
                throw Error(Errc::degenerate_quartet, "repeated leaf '" + *names[i] + "'");
    int a = leaf_vertex(w), b = leaf_vertex(x), c = leaf_vertex(y), d = leaf_vertex(z);
    // rho(w,x;y,z) is false exactly when wx|yz is the split pairing, i.e.
    // d(w,x)+d(y,z) is the strict minimum of the three pairing sums.
    int s1 = distance(a, b) + distance(c, d);
    int s2 = distance(a, c) + distance(b, d);
    int s3 = distance(a, d) + distance(b, c);
    return !(s1 < s2 && s1 < s3);
}

BoronTree BoronTree::induced(const std::vector<std::string>& s) const {
    std::set<std::string, NaturalLess> want(s.begin(), s.end());
    if (want.size() < 2)
        throw Error(Errc::too_few_leaves, "induced tree needs at least two leaves");
    std::vector<char> keep(adj_.size(), 0);
    for (const auto& label : want) keep[leaf_vertex(label)] = 1;

    // Steiner tree: iteratively strip unwanted leaves of the current forest.
    std::vector<int> degree(adj_.size());
    std::vector<char> alive(adj_.size(), 1);
    for (size_t v = 0; v < adj_.size(); ++v) degree[v] = static_cast<int>(adj_[v].size());
    std::deque<int> queue;
    for (size_t v = 0; v < adj_.size(); ++v)
        if (degree[v] <= 1 && !keep[v]) queue.push_back(static_cast<int>(v));
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        if (!alive[v]) continue;
        alive[v] = 0;
        for (int w : adj_[v])
            if (alive[w]) {
                if (--degree[w] <= 1 && !keep[w]) queue.push_back(w);
            }
    }

    // Contract the remaining degree-2 vertices and renumber.
    auto next_along = [&](int from, int via) {
        // walk away from `from` through degree-2 vertices starting at `via`
        int prev = from, cur = via;
        while (alive[cur] && degree[cur] == 2 && !keep[cur]) {
            int nxt = -1;
            for (int w : adj_[cur])
                if (alive[w] && w != prev) nxt = w;
            prev = cur;
            cur = nxt;
        }
        return cur;
    };

    std::vector<int> id(adj_.size(), -1);
    std::vector<std::string> labels;
    std::vector<std::pair<int, int>> edges;
    int next_id = 0;
    for (size_t v = 0; v < adj_.size(); ++v) {
        if (!alive[v]) continue;
        bool contracted = degree[v] == 2 && !keep[v];
        if (!contracted) {
            id[v] = next_id++;
            labels.push_back(keep[v] ? label_[v] : std::string());
        }
    }
    for (size_t v = 0; v < adj_.size(); ++v) {
        if (id[v] < 0) continue;
        for (int w : adj_[v]) {
            if (!alive[w]) continue;
            int end = next_along(static_cast<int>(v), w);
            if (id[end] > id[v]) edges.emplace_back(id[v], id[end]);
            if (id[end] == id[v] && end != static_cast<int>(v)) continue; // cannot happen in a tree
        }
    }
    return from_edges(next_id, edges, labels);
}

namespace {

// AHU encoding of the subtree at v entered from `parent`.
std::string ahu_down(const BoronTree& t, int v, int parent) {
    if (t.is_leaf(v)) return "L";
    std::vector<std::string> parts;
    for (int w : t.neighbors(v))
        if (w != parent) parts.push_back(ahu_down(t, w, v));
    std::sort(parts.begin(), parts.end());
    std::string out = "(";
    for (auto& p : parts) out += p;
    out += ")";
    return out;
}

} // namespace

std::string BoronTree::canonical_form() const {
    if (vertex_count() == 1) return "L";
    std::string best;
    for (int v = 0; v < vertex_count(); ++v) {
        for (int w : adj_[v]) {
            if (w < v) continue;
            std::string a = ahu_down(*this, v, w);
            std::string b = ahu_down(*this, w, v);
            if (b < a) std::swap(a, b);
            std::string enc = "(" + a + b + ")";
            if (best.empty() || enc < best) best = enc;
        }
    }
    return best;
}

bool BoronTree::isomorphic_to(const BoronTree& other) const {
    if (leaf_count() != other.leaf_count() || vertex_count() != other.vertex_count()) return false;
    return canonical_form() == other.canonical_form();
}

namespace {

// Serializes the subtree at v (entered from parent); subtrees are ordered by
// their smallest contained leaf so the output is label-deterministic.
struct NewickWriter {
    const BoronTree& t;

    std::pair<std::string, std::string> write(int v, int parent) const {
        if (t.is_leaf(v)) return {t.label_of(v), t.label_of(v)};
        std::vector<std::pair<std::string, std::string>> subs; // (min leaf, text)
        for (int w : t.neighbors(v))
            if (w != parent) subs.push_back(write(w, v));
        std::sort(subs.begin(), subs.end(), [](const auto& a, const auto& b) {
            return natural_less(a.first, b.first);
        });
        std::string text = "(";
        for (size_t i = 0; i < subs.size(); ++i) {
            if (i) text += ",";
            text += subs[i].second;
        }
        text += ")";
        return {subs.front().first, text};
    }
};

} // namespace

std::string BoronTree::to_newick() const {
    if (vertex_count() == 1) return label_[0] + ";";
    // Hang the tree at the smallest leaf's neighbor; the smallest leaf is
    // emitted like any other subtree, so `(1,2)` and `(1,2,3)` come out flat.
    int root_leaf = leaves_.front();
    int top = adj_[root_leaf].front();
    NewickWriter w{*this};
    if (vertex_count() == 2) {
        return "(" + leaf_labels_[0] + "," + leaf_labels_[1] + ");";
    }
    std::vector<std::pair<std::string, std::string>> subs;
    for (int nb : adj_[top]) subs.push_back(w.write(nb, top));
    std::sort(subs.begin(), subs.end(), [](const auto& a, const auto& b) {
        return natural_less(a.first, b.first);
    });
    std::string text = "(";
    for (size_t i = 0; i < subs.size(); ++i) {
        if (i) text += ",";
        text += subs[i].second;
    }
    text += ");";
    return text;
}

QuartetTable::QuartetTable(const BoronTree& t) {
    labels_ = t.leaf_labels();
    n_ = static_cast<int>(labels_.size());
    for (int i = 0; i < n_; ++i) rank_[labels_[i]] = i;
    dist_.assign(static_cast<size_t>(n_) * n_, 0);

    // one BFS per leaf
    for (int i = 0; i < n_; ++i) {
        int src = t.leaf_vertices()[i];
        std::vector<int> d(t.vertex_count(), -1);
        std::deque<int> queue{src};
        d[src] = 0;
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            for (int w : t.neighbors(v))
                if (d[w] < 0) {
                    d[w] = d[v] + 1;
                    queue.push_back(w);
                }
        }
        for (int j = 0; j < n_; ++j) dist_[static_cast<size_t>(i) * n_ + j] = d[t.leaf_vertices()[j]];
    }
}

int QuartetTable::leaf_rank(const std::string& label) const {
    auto it = rank_.find(label);
    if (it == rank_.end()) throw Error(Errc::invalid_leaf, "no leaf labeled '" + label + "'");
    return it->second;
}

int QuartetTable::split_index(int a, int b, int c, int d) const {
    int s1 = dist(a, b) + dist(c, d);
    int s2 = dist(a, c) + dist(b, d);
    int s3 = dist(a, d) + dist(b, c);
    if (s1 < s2 && s1 < s3) return 0;
    if (s2 < s1 && s2 < s3) return 1;
    return 2;
}

bool QuartetTable::rho(int w, int x, int y, int z) const {
    if (w == x || w == y || w == z || x == y || x == z || y == z)
        throw Error(Errc::degenerate_quartet, "quartet arguments must be distinct");
    int s1 = dist(w, x) + dist(y, z);
    int s2 = dist(w, y) + dist(x, z);
    int s3 = dist(w, z) + dist(x, y);
    return !(s1 < s2 && s1 < s3);
}

bool QuartetTable::rho_labels(const std::string& w, const std::string& x,
                              const std::string& y, const std::string& z) const {
    return rho(leaf_rank(w), leaf_rank(x), leaf_rank(y), leaf_rank(z));
}

std::vector<std::vector<int>> enumerate_embeddings(const BoronTree& t0, const BoronTree& t) {
    const int k = t0.leaf_count();
    const int n = t.leaf_count();
    std::vector<std::vector<int>> result;
    if (k > n) return result;

    QuartetTable q0(t0), q(t);
    std::vector<int> image(k, -1);
    std::vector<char> used(n, 0);

    std::function<void(int)> assign = [&](int pos) {
        if (pos == k) {
            result.push_back(image);
            return;
        }
        for (int cand = 0; cand < n; ++cand) {
            if (used[cand]) continue;
            image[pos] = cand;
            bool ok = true;
            if (pos >= 3) {
                for (int a = 0; a < pos && ok; ++a)
                    for (int b = a + 1; b < pos && ok; ++b)
                        for (int c = b + 1; c < pos && ok; ++c)
                            ok = q0.split_index(a, b, c, pos) ==
                                 q.split_index(image[a], image[b], image[c], cand);
            }
            if (ok) {
                used[cand] = 1;
                assign(pos + 1);
                used[cand] = 0;
            }
        }
        image[pos] = -1;
    };
    assign(0);
    return result;
}

size_t automorphism_count(const BoronTree& t) {
    return enumerate_embeddings(t, t).size();
}

namespace {

// A labeled tree under construction: leaves 0..n-1 carry labels "1".."n",
// internal vertices are appended as they are created.
struct GrowingTree {
    int n_leaves;
    int n_vertices;
    std::vector<std::pair<int, int>> edges;
};

void grow(GrowingTree tree, int next_leaf, int n, std::vector<BoronTree>& out) {
    if (next_leaf == n) {
        std::vector<std::string> labels(tree.n_vertices);
        for (int i = 0; i < n; ++i) labels[i] = std::to_string(i + 1);
        out.push_back(BoronTree::from_edges(tree.n_vertices, tree.edges, labels));
        return;
    }
    for (size_t e = 0; e < tree.edges.size(); ++e) {
        GrowingTree next = tree;
        auto [a, b] = next.edges[e];
        int mid = next.n_vertices++;
        next.edges[e] = {a, mid};
        next.edges.emplace_back(mid, b);
        next.edges.emplace_back(mid, next_leaf);
        next.n_leaves++;
        grow(std::move(next), next_leaf + 1, n, out);
    }
}

} // namespace

std::vector<BoronTree> enumerate_labeled(int n) {
    if (n < 2) throw Error(Errc::too_few_leaves, "need at least two leaves");
    std::vector<BoronTree> out;
    GrowingTree seed{2, n, {{0, 1}}};
    grow(std::move(seed), 2, n, out);
    return out;
}

} // namespace equichain
