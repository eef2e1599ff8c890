#include "reeb/io.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <sstream>
#include <vector>

#include "reeb/errors.hpp"

namespace reeb::io {

ExplicitGraph parse_edge_list(std::istream& in) {
    ExplicitGraph g;
    std::string line;
    int lineno = 0;
    bool saw_header = false, saw_vertices = false;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string word;
        if (!(ls >> word) || word[0] == '#') continue;
        if (!saw_header) {
            std::string ver;
            if (word != "reeb" || !(ls >> ver) || ver != "v1")
                throw FileParseError("expected header 'reeb v1'", lineno);
            saw_header = true;
            continue;
        }
        if (word == "vertices") {
            if (saw_vertices)
                throw FileParseError("duplicate 'vertices' line", lineno);
            long n;
            if (!(ls >> n) || n < 1)
                throw FileParseError("'vertices' needs a count >= 1", lineno);
            g.vertex_count = (int)n;
            saw_vertices = true;
        } else if (word == "edge") {
            if (!saw_vertices)
                throw FileParseError("'edge' before 'vertices'", lineno);
            long u, v;
            if (!(ls >> u >> v))
                throw FileParseError("'edge' needs two vertex indices",
                                     lineno);
            if (u < 0 || u >= g.vertex_count || v < 0 ||
                v >= g.vertex_count)
                throw FileParseError("vertex index out of range", lineno);
            g.edges.emplace_back((int)u, (int)v);
        } else {
            throw FileParseError("unknown directive '" + word + "'", lineno);
        }
        std::string extra;
        if (ls >> extra && extra[0] != '#')
            throw FileParseError("trailing tokens", lineno);
    }
    if (!saw_header) throw FileParseError("missing header 'reeb v1'", lineno);
    if (!saw_vertices)
        throw FileParseError("missing 'vertices' line", lineno);
    return g;
}

ExplicitGraph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    return parse_edge_list(in);
}

std::string print_edge_list(const ExplicitGraph& g) {
    std::ostringstream os;
    os << "reeb v1\n";
    os << "vertices " << g.vertex_count << "\n";
    for (auto [u, v] : g.edges) os << "edge " << u << " " << v << "\n";
    return os.str();
}

namespace {

// longest-path level from the sources; empty if the graph has a cycle
std::vector<int> levels_by_longest_path(const ExplicitGraph& g) {
    int n = g.vertex_count;
    std::vector<int> indeg(n, 0);
    for (auto [u, v] : g.edges) ++indeg[v];
    std::vector<int> level(n, 0);
    std::queue<int> ready;
    for (int v = 0; v < n; ++v)
        if (indeg[v] == 0) ready.push(v);
    int seen = 0;
    while (!ready.empty()) {
        int u = ready.front();
        ready.pop();
        ++seen;
        for (auto [a, b] : g.edges) {
            if (a != u) continue;
            level[b] = std::max(level[b], level[u] + 1);
            if (--indeg[b] == 0) ready.push(b);
        }
    }
    if (seen != n) return {};
    return level;
}

}  // namespace

std::string to_dot(const ExplicitGraph& g) {
    int n = g.vertex_count;
    std::vector<int> deg(n, 0);
    for (auto [u, v] : g.edges) {
        ++deg[u];
        ++deg[v];
    }
    std::ostringstream os;
    os << "digraph reeb {\n";
    os << "  rankdir=BT;\n";
    for (int v = 0; v < n; ++v) {
        const char* shape = "ellipse";
        if (deg[v] == 2)
            shape = "doublecircle";
        else if (deg[v] == 3)
            shape = "point";
        os << "  v" << v << " [shape=" << shape << "];\n";
    }
    auto level = levels_by_longest_path(g);
    if (!level.empty()) {
        std::map<int, std::vector<int>> by_level;
        for (int v = 0; v < n; ++v) by_level[level[v]].push_back(v);
        for (auto& [l, vs] : by_level) {
            os << "  { rank=same;";
            for (int v : vs) os << " v" << v << ";";
            os << " }\n";
        }
    }
    auto edges = g.edges;
    std::sort(edges.begin(), edges.end());
    for (auto [u, v] : edges) os << "  v" << u << " -> v" << v << ";\n";
    os << "}\n";
    return os.str();
}

std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace reeb::io
