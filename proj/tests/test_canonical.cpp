#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "reeb/canonical.hpp"
#include "reeb/enumerate.hpp"
#include "reeb/errors.hpp"

using namespace reeb;
using namespace reeb::canon;

namespace {

ExplicitGraph relabel(const ExplicitGraph& g, std::mt19937& rng) {
    std::vector<int> perm(g.vertex_count);
    for (int i = 0; i < g.vertex_count; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    ExplicitGraph out;
    out.vertex_count = g.vertex_count;
    for (auto [u, v] : g.edges) out.edges.emplace_back(perm[u], perm[v]);
    std::shuffle(out.edges.begin(), out.edges.end(), rng);
    return out;
}

}  // namespace

TEST_CASE("encode_rooted basics") {
    auto l = RootedTree::leaf();
    CHECK(encode_rooted(l) == "*");
    auto one = RootedTree::attach_up_up(l, l);
    CHECK(encode_rooted(RootedTree::attach_mixed(l, one)) == "(*^(*^*^)v)");
}

TEST_CASE("the two 1-saddle trees") {
    std::set<std::string> got;
    for (const auto& t : enumeration::enum_rooted(1))
        got.insert(t->encoding());
    CHECK(got == std::set<std::string>{"(*^*^)", "(*^*v)"});
}

TEST_CASE("parse_rooted round trip and leniency") {
    auto l = RootedTree::leaf();
    CHECK(parse_rooted("*") == l);
    CHECK(parse_rooted("((*^*v)^*v)")->encoding() ==
          RootedTree::attach_mixed(RootedTree::attach_mixed(l, l), l)
              ->encoding());
    // out-of-order up-up operands are accepted and normalized
    CHECK(parse_rooted("((*^*^)^*^)")->encoding() == "(*^(*^*^)^)");
}

TEST_CASE("parse errors report the byte offset") {
    CHECK_THROWS_AS(parse_rooted("(*^"), ParseError);
    try {
        parse_rooted("(*^");
    } catch (const ParseError& e) {
        CHECK(e.offset() == 3);
    }
    CHECK_THROWS_AS(parse_rooted(""), ParseError);
    CHECK_THROWS_AS(parse_rooted("**"), ParseError);
    CHECK_THROWS_AS(parse_rooted("(*^*x)"), ParseError);
    CHECK_THROWS_AS(parse_full("[*|*"), ParseError);
    CHECK_THROWS_AS(parse_full("*"), ParseError);
}

TEST_CASE("encode/parse round trip on whole levels") {
    enumeration::Enumerator en;
    for (int k = 0; k <= 4; ++k)
        for (const auto& t : en.rooted(k))
            CHECK(parse_rooted(t->encoding())->encoding() == t->encoding());
    for (const auto& g : en.full(4))
        CHECK(parse_full(g.enc).enc == g.enc);
}

TEST_CASE("full_from_explicit recovers the one-saddle graph") {
    ExplicitGraph g{3, {{0, 1}, {1, 2}}};
    CHECK(full_from_explicit(g).enc == "[*|*]");
}

TEST_CASE("full_from_explicit rejects invalid structures") {
    // two degree-2 vertices
    ExplicitGraph g{4, {{0, 1}, {1, 2}, {2, 3}}};
    CHECK_THROWS_AS(full_from_explicit(g), InvalidStructureError);
}

TEST_CASE("to_explicit / full_from_explicit round trip") {
    enumeration::Enumerator en;
    for (int k = 1; k <= 6; ++k)
        for (const auto& g : en.full(k))
            CHECK(full_from_explicit(to_explicit(g)).enc == g.enc);
}

TEST_CASE("is_isomorphic is invariant under relabeling") {
    std::mt19937 rng(20240817);
    enumeration::Enumerator en;
    for (int k = 1; k <= 4; ++k)
        for (const auto& g : en.full(k)) {
            auto e = to_explicit(g);
            for (int rep = 0; rep < 5; ++rep)
                CHECK(is_isomorphic(e, relabel(e, rng)));
        }
}

TEST_CASE("the four 2-saddle graphs are pairwise non-isomorphic") {
    auto graphs = enumeration::enum_full(2);
    REQUIRE(graphs.size() == 4);
    for (std::size_t i = 0; i < graphs.size(); ++i)
        for (std::size_t j = i + 1; j < graphs.size(); ++j)
            CHECK_FALSE(is_isomorphic(to_explicit(graphs[i]),
                                      to_explicit(graphs[j])));
}

TEST_CASE("glue order matters") {
    auto l = RootedTree::leaf();
    auto one = RootedTree::attach_up_up(l, l);
    CHECK_FALSE(is_isomorphic(to_explicit(glue(l, one)),
                              to_explicit(glue(one, l))));
}

TEST_CASE("encoding equality decides isomorphism (brute force)") {
    // distinct trees within a level always flatten to non-isomorphic graphs
    enumeration::Enumerator en;
    for (int k = 0; k <= 3; ++k) {
        const auto& level = en.rooted(k);
        std::set<std::string> encs;
        for (const auto& t : level) encs.insert(t->encoding());
        CHECK(encs.size() == level.size());
    }
}

TEST_CASE("balanced alphabet") {
    for (const auto& g : enumeration::enum_full(4)) {
        auto count = [&](char c) {
            return std::count(g.enc.begin(), g.enc.end(), c);
        };
        CHECK(count('(') == count(')'));
        CHECK(count('|') == 1);
        CHECK(count('^') + count('v') == 2 * count('('));
    }
}
