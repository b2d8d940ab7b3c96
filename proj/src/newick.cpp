#include "equichain/newick.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>

#include "equichain/error.hpp"

namespace equichain {

namespace {

struct Parser {
    const std::string& text;
    size_t pos = 0;

    [[noreturn]] void fail(const std::string& what) const {
        throw Error(Errc::parse_error, "at position " + std::to_string(pos) + ": " + what);
    }

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    char peek() {
        skip_ws();
        if (pos >= text.size()) fail("unexpected end of input");
        return text[pos];
    }

    void expect(char c) {
        if (peek() != c) fail(std::string("expected '") + c + "', found '" + text[pos] + "'");
        ++pos;
    }

    bool label_char(char c) const {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '-';
    }

    std::string label() {
        skip_ws();
        std::string out;
        while (pos < text.size() && label_char(text[pos])) out += text[pos++];
        if (out.empty()) fail("expected a leaf label");
        return out;
    }
};

struct RawNode {
    std::string label;           // empty for internal
    std::vector<int> children;
};

// subtree := leaf | '(' subtree (',' subtree)+ ')'
int parse_subtree(Parser& p, std::vector<RawNode>& nodes) {
    if (p.peek() == '(') {
        p.expect('(');
        int id = static_cast<int>(nodes.size());
        nodes.push_back({});
        std::vector<int> kids;
        kids.push_back(parse_subtree(p, nodes));
        while (p.peek() == ',') {
            p.expect(',');
            kids.push_back(parse_subtree(p, nodes));
        }
        p.expect(')');
        if (kids.size() < 2) p.fail("a group needs at least two subtrees");
        nodes[id].children = kids;
        return id;
    }
    int id = static_cast<int>(nodes.size());
    nodes.push_back({});
    nodes[id].label = p.label();
    return id;
}

struct ParsedTree {
    BoronTree tree;
    std::vector<std::string> leaf_appearance; // left-to-right leaf order
};

ParsedTree parse_tree_body(Parser& p) {
    std::vector<RawNode> nodes;
    int top = parse_subtree(p, nodes);
    p.expect(';');
    p.skip_ws();
    if (p.pos != p.text.size()) p.fail("trailing input after ';'");

    std::vector<std::string> appearance;
    for (const auto& n : nodes)
        if (!n.label.empty()) appearance.push_back(n.label);

    // flatten to an undirected edge list, then suppress degree-2 vertices
    // (the virtual top node in particular)
    std::vector<std::vector<int>> adj(nodes.size());
    std::function<void(int)> link = [&](int v) {
        for (int c : nodes[v].children) {
            adj[v].push_back(c);
            adj[c].push_back(v);
            link(c);
        }
    };
    link(top);

    std::vector<char> contracted(nodes.size(), 0);
    for (size_t v = 0; v < nodes.size(); ++v)
        contracted[v] = nodes[v].label.empty() && adj[v].size() == 2;

    auto walk = [&](int from, int via) {
        int prev = from, cur = via;
        while (contracted[cur]) {
            int nxt = -1;
            for (int w : adj[cur])
                if (w != prev) nxt = w;
            prev = cur;
            cur = nxt;
        }
        return cur;
    };

    std::vector<int> id(nodes.size(), -1);
    std::vector<std::string> labels;
    int next_id = 0;
    for (size_t v = 0; v < nodes.size(); ++v)
        if (!contracted[v]) {
            id[v] = next_id++;
            labels.push_back(nodes[v].label);
        }
    std::vector<std::pair<int, int>> edges;
    for (size_t v = 0; v < nodes.size(); ++v) {
        if (id[v] < 0) continue;
        for (int w : adj[v]) {
            int end = walk(static_cast<int>(v), w);
            if (id[end] > id[v]) edges.emplace_back(id[v], id[end]);
        }
    }
    return {BoronTree::from_edges(next_id, edges, labels), appearance};
}

} // namespace

BoronTree parse_newick(const std::string& text) {
    Parser p{text};
    return parse_tree_body(p).tree;
}

OrderedBoronTree parse_ordered_newick(const std::string& text) {
    Parser p{text};
    p.skip_ws();
    const std::string prefix = "root=";
    if (text.compare(p.pos, prefix.size(), prefix) != 0)
        throw Error(Errc::parse_error, "ordered tree must start with 'root=LABEL:'");
    p.pos += prefix.size();
    std::string root = p.label();
    p.expect(':');
    ParsedTree parsed = parse_tree_body(p);
    return OrderedBoronTree(std::move(parsed.tree), root, std::move(parsed.leaf_appearance));
}

std::string to_newick(const BoronTree& t) { return t.to_newick(); }

namespace {

// Serializes the subtree entered from parent with children ordered by the
// planar arrangement (first leaf position wins).
std::string write_planar(const BoronTree& t, int v, int parent,
                         const std::map<std::string, int>& pos, int* first_pos) {
    if (t.is_leaf(v)) {
        *first_pos = pos.at(t.label_of(v));
        return t.label_of(v);
    }
    std::vector<std::pair<int, std::string>> subs;
    for (int w : t.neighbors(v))
        if (w != parent) {
            int fp = 0;
            std::string s = write_planar(t, w, v, pos, &fp);
            subs.emplace_back(fp, std::move(s));
        }
    std::sort(subs.begin(), subs.end());
    *first_pos = subs.front().first;
    std::string out = "(";
    for (size_t i = 0; i < subs.size(); ++i) {
        if (i) out += ",";
        out += subs[i].second;
    }
    out += ")";
    return out;
}

} // namespace

std::string to_newick(const OrderedBoronTree& ot) {
    const BoronTree& t = ot.tree();
    std::string out = "root=" + ot.root() + ":";
    if (t.leaf_count() == 1) return out + ot.root() + ";";

    std::map<std::string, int> pos;
    for (size_t i = 0; i < ot.arrangement().size(); ++i) pos[ot.arrangement()[i]] = static_cast<int>(i);

    int r = t.leaf_vertex(ot.root());
    int hub = t.neighbors(r).front();
    if (t.is_leaf(hub)) return out + "(" + t.label_of(hub) + "," + ot.root() + ");";

    std::vector<std::pair<int, std::string>> subs;
    for (int w : t.neighbors(hub))
        if (w != r) {
            int fp = 0;
            std::string s = write_planar(t, w, hub, pos, &fp);
            subs.emplace_back(fp, std::move(s));
        }
    std::sort(subs.begin(), subs.end());
    out += "(";
    for (auto& [fp, s] : subs) {
        out += s;
        out += ",";
    }
    out += ot.root() + ");";
    return out;
}

} // namespace equichain
