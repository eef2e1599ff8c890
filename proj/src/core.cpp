#include "reeb/core.hpp"

#include <cassert>

namespace reeb {

TreePtr RootedTree::leaf() {
    static const TreePtr instance(
        new RootedTree(Kind::Leaf, nullptr, nullptr, 0, "*"));
    return instance;
}

namespace {

// shortlex: fewer saddles first, bytewise within equal lengths
bool enc_before(const std::string& x, const std::string& y) {
    return x.size() != y.size() ? x.size() < y.size() : x < y;
}

}  // namespace

TreePtr RootedTree::attach_up_up(TreePtr a, TreePtr b) {
    if (enc_before(b->encoding(), a->encoding())) std::swap(a, b);
    int saddles = 1 + a->saddle_count() + b->saddle_count();
    std::string enc = "(" + a->encoding() + "^" + b->encoding() + "^)";
    return TreePtr(new RootedTree(Kind::UpUp, std::move(a), std::move(b),
                                  saddles, std::move(enc)));
}

TreePtr RootedTree::attach_mixed(TreePtr up_child, TreePtr down_child) {
    int saddles = 1 + up_child->saddle_count() + down_child->saddle_count();
    std::string enc =
        "(" + up_child->encoding() + "^" + down_child->encoding() + "v)";
    return TreePtr(new RootedTree(Kind::Mixed, std::move(up_child),
                                  std::move(down_child), saddles,
                                  std::move(enc)));
}

FullReebGraph glue(TreePtr lower, TreePtr upper) {
    std::string enc = "[" + lower->encoding() + "|" + upper->encoding() + "]";
    return FullReebGraph{std::move(lower), std::move(upper), std::move(enc)};
}

namespace {

// Emits the subtree rooted at t, whose root half-edge attaches to vertex
// `parent`.  `flip` reverses every edge orientation in the subtree, including
// the half-edge (used for down-attached parts).  Vertices are numbered in
// preorder starting at `next`.
void emit(const TreePtr& t, int parent, bool flip, int& next,
          std::vector<std::pair<int, int>>& edges) {
    int v = next++;
    if (flip)
        edges.emplace_back(v, parent);
    else
        edges.emplace_back(parent, v);
    if (t->is_leaf()) return;
    emit(t->first(), v, flip, next, edges);
    bool second_flip = (t->kind() == RootedTree::Kind::Mixed) ? !flip : flip;
    emit(t->second(), v, second_flip, next, edges);
}

}  // namespace

ExplicitGraph to_explicit(const FullReebGraph& g) {
    int lower_vertices = 2 * g.lower->saddle_count() + 1;
    int deg2 = lower_vertices;
    ExplicitGraph out;
    out.vertex_count = 2 * g.saddle_count() + 1;
    out.edges.reserve(out.vertex_count - 1);
    int next = 0;
    emit(g.lower, deg2, /*flip=*/true, next, out.edges);
    assert(next == deg2);
    ++next;  // the degree-2 vertex itself
    emit(g.upper, deg2, /*flip=*/false, next, out.edges);
    assert(next == out.vertex_count);
    return out;
}

ExplicitGraph to_explicit(const TreePtr& t) {
    ExplicitGraph out;
    out.vertex_count = 2 * t->saddle_count() + 2;  // stub + saddles + leaves
    out.edges.reserve(out.vertex_count - 1);
    int next = 1;
    emit(t, 0, /*flip=*/false, next, out.edges);
    assert(next == out.vertex_count);
    return out;
}

ExplicitGraph reverse(const ExplicitGraph& g) {
    ExplicitGraph out;
    out.vertex_count = g.vertex_count;
    out.edges.reserve(g.edges.size());
    for (auto [u, v] : g.edges) out.edges.emplace_back(v, u);
    return out;
}

}  // namespace reeb
