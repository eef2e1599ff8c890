#ifndef REEB_CORE_HPP
#define REEB_CORE_HPP

#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace reeb {

class RootedTree;
using TreePtr = std::shared_ptr<const RootedTree>;

// A rooted oriented Reeb tree in normal form: the implicit root half-edge is
// directed into the tree.  Immutable; shared substructure is fine.
//
// A saddle node attaches its two subtrees in one of two shapes:
//   UpUp  - both subtrees hang by upward edges; the pair is unordered and is
//           stored with the shortlex-smaller encoding first (fewer saddles
//           first, bytewise within equal lengths).
//   Mixed - the first subtree hangs by an upward edge, the second by a
//           downward one (its orientations reverse on materialization).
//           The pair is ordered.
class RootedTree {
public:
    enum class Kind { Leaf, UpUp, Mixed };

    static TreePtr leaf();
    static TreePtr attach_up_up(TreePtr a, TreePtr b);
    static TreePtr attach_mixed(TreePtr up_child, TreePtr down_child);

    Kind kind() const { return kind_; }
    bool is_leaf() const { return kind_ == Kind::Leaf; }

    // UpUp: child with the smaller encoding / Mixed: the up child.
    const TreePtr& first() const { return first_; }
    // UpUp: child with the larger encoding / Mixed: the down child.
    const TreePtr& second() const { return second_; }

    int saddle_count() const { return saddles_; }
    int leaf_count() const { return saddles_ + 1; }

    // Canonical encoding; equality decides rooted oriented isomorphism.
    const std::string& encoding() const { return enc_; }

private:
    RootedTree(Kind kind, TreePtr a, TreePtr b, int saddles, std::string enc)
        : kind_(kind),
          first_(std::move(a)),
          second_(std::move(b)),
          saddles_(saddles),
          enc_(std::move(enc)) {}

    Kind kind_;
    TreePtr first_;
    TreePtr second_;
    int saddles_;
    std::string enc_;
};

// A full Reeb graph: two rooted trees glued at the unique degree-2 saddle.
// The pair is ordered (the function increases from lower to upper); no global
// flip identification is applied.
struct FullReebGraph {
    TreePtr lower;
    TreePtr upper;
    std::string enc;  // "[" + lower + "|" + upper + "]"

    // Total saddles; the degree-2 gluing vertex counts as one.
    int saddle_count() const {
        return lower->saddle_count() + upper->saddle_count() + 1;
    }
    const std::string& encoding() const { return enc; }
};

FullReebGraph glue(TreePtr lower, TreePtr upper);

// Flat oriented graph: each edge (u, v) means the function increases from u
// to v.  May hold arbitrary input pending validation.
struct ExplicitGraph {
    int vertex_count = 0;
    std::vector<std::pair<int, int>> edges;

    bool operator==(const ExplicitGraph&) const = default;
};

// Flattens a full graph to an explicit graph with deterministic preorder
// numbering: lower tree first, then the degree-2 vertex, then the upper tree.
// Lower-tree edges are emitted orientation-reversed (that part hangs below).
ExplicitGraph to_explicit(const FullReebGraph& g);

// Flattens a rooted tree; the root half-edge becomes an edge from an extra
// stub vertex (index 0) directed into the tree.
ExplicitGraph to_explicit(const TreePtr& t);

// Reverses every edge; involution.
ExplicitGraph reverse(const ExplicitGraph& g);

}  // namespace reeb

#endif
