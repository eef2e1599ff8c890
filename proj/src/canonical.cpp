#include "reeb/canonical.hpp"

#include <vector>

#include "reeb/errors.hpp"
#include "reeb/validate.hpp"

namespace reeb::canon {

CanonString encode_rooted(const TreePtr& t) { return t->encoding(); }

CanonString encode_full(const FullReebGraph& g) { return g.enc; }

namespace {

TreePtr parse_rooted_at(const CanonString& s, std::size_t& pos) {
    if (pos >= s.size()) throw ParseError("unexpected end of input", pos);
    if (s[pos] == '*') {
        ++pos;
        return RootedTree::leaf();
    }
    if (s[pos] != '(')
        throw ParseError(std::string("expected '*' or '(', got '") + s[pos] +
                             "'",
                         pos);
    ++pos;
    TreePtr a = parse_rooted_at(s, pos);
    if (pos >= s.size() || s[pos] != '^')
        throw ParseError("expected '^'", pos);
    ++pos;
    TreePtr b = parse_rooted_at(s, pos);
    if (pos >= s.size() || (s[pos] != '^' && s[pos] != 'v'))
        throw ParseError("expected '^' or 'v'", pos);
    char tag = s[pos++];
    if (pos >= s.size() || s[pos] != ')')
        throw ParseError("expected ')'", pos);
    ++pos;
    return tag == '^' ? RootedTree::attach_up_up(std::move(a), std::move(b))
                      : RootedTree::attach_mixed(std::move(a), std::move(b));
}

}  // namespace

TreePtr parse_rooted(const CanonString& s) {
    std::size_t pos = 0;
    TreePtr t = parse_rooted_at(s, pos);
    if (pos != s.size()) throw ParseError("trailing input", pos);
    return t;
}

FullReebGraph parse_full(const CanonString& s) {
    std::size_t pos = 0;
    if (s.empty() || s[0] != '[') throw ParseError("expected '['", 0);
    pos = 1;
    TreePtr lower = parse_rooted_at(s, pos);
    if (pos >= s.size() || s[pos] != '|')
        throw ParseError("expected '|'", pos);
    ++pos;
    TreePtr upper = parse_rooted_at(s, pos);
    if (pos >= s.size() || s[pos] != ']')
        throw ParseError("expected ']'", pos);
    ++pos;
    if (pos != s.size()) throw ParseError("trailing input", pos);
    return glue(std::move(lower), std::move(upper));
}

namespace {

struct Adjacency {
    // per vertex: (neighbor, edge points away from this vertex)
    std::vector<std::vector<std::pair<int, bool>>> adj;

    explicit Adjacency(const ExplicitGraph& g) : adj(g.vertex_count) {
        for (auto [u, v] : g.edges) {
            adj[u].emplace_back(v, true);
            adj[v].emplace_back(u, false);
        }
    }
};

// Rebuilds the rooted tree hanging at vertex v, entered from `parent`.
// `flip` means edge directions in this part are reversed relative to the
// tree's normal form.
TreePtr build_tree(const Adjacency& a, int v, int parent, bool flip) {
    TreePtr children[2];
    bool child_up[2];
    int found = 0;
    for (auto [w, away] : a.adj[v]) {
        if (w == parent) continue;
        bool up = (away != flip);  // upward attachment in normal form
        children[found] = build_tree(a, w, v, up ? flip : !flip);
        child_up[found] = up;
        ++found;
    }
    if (found == 0) return RootedTree::leaf();
    if (found != 2)
        throw InvalidStructureError("internal vertex is not degree 3");
    if (child_up[0] && child_up[1])
        return RootedTree::attach_up_up(children[0], children[1]);
    if (child_up[0]) return RootedTree::attach_mixed(children[0], children[1]);
    if (child_up[1]) return RootedTree::attach_mixed(children[1], children[0]);
    throw InvalidStructureError("saddle with two downward attachments");
}

}  // namespace

FullReebGraph full_from_explicit(const ExplicitGraph& g) {
    auto report = validate::check_reeb_structure(g);
    if (!report.is_valid)
        throw InvalidStructureError("not a valid Reeb graph:\n" +
                                    report.summary());
    Adjacency a(g);
    int deg2 = -1;
    for (int v = 0; v < g.vertex_count; ++v)
        if (a.adj[v].size() == 2) deg2 = v;
    // validation guarantees (in,out) = (1,1) at deg2
    int lower_root = -1, upper_root = -1;
    for (auto [w, away] : a.adj[deg2])
        (away ? upper_root : lower_root) = w;
    // the lower part's half-edge points up into deg2, the reverse of the
    // normal form
    TreePtr lower = build_tree(a, lower_root, deg2, /*flip=*/true);
    TreePtr upper = build_tree(a, upper_root, deg2, /*flip=*/false);
    return glue(std::move(lower), std::move(upper));
}

bool is_isomorphic(const ExplicitGraph& g1, const ExplicitGraph& g2) {
    return full_from_explicit(g1).enc == full_from_explicit(g2).enc;
}

}  // namespace reeb::canon
