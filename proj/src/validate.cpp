#include "reeb/validate.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "reeb/errors.hpp"

namespace reeb::validate {

const char* condition_name(Condition c) {
    switch (c) {
        case Condition::Connected: return "CONNECTED";
        case Condition::AcyclicTree: return "ACYCLIC_TREE";
        case Condition::DegreeProfile: return "DEGREE_PROFILE";
        case Condition::UniqueDeg2: return "UNIQUE_DEG2";
        case Condition::LeafOrientation: return "LEAF_ORIENTATION";
        case Condition::SaddleOrientation: return "SADDLE_ORIENTATION";
    }
    return "?";
}

bool ValidationReport::passed(Condition c) const {
    for (const auto& r : checks)
        if (r.id == c) return r.pass;
    return false;
}

std::string ValidationReport::summary() const {
    std::ostringstream os;
    for (const auto& r : checks) {
        os << (r.pass ? "pass" : "FAIL") << ' ' << condition_name(r.id);
        if (!r.detail.empty()) os << ": " << r.detail;
        os << '\n';
    }
    os << (is_valid ? "valid" : "invalid") << '\n';
    return os.str();
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    // false if x and y were already joined
    bool unite(int x, int y) {
        int rx = find(x), ry = find(y);
        if (rx == ry) return false;
        parent[rx] = ry;
        return true;
    }
};

std::string edge_str(std::pair<int, int> e) {
    return "(" + std::to_string(e.first) + "," + std::to_string(e.second) + ")";
}

}  // namespace

ValidationReport check_reeb_structure(const ExplicitGraph& g) {
    ValidationReport rep;
    int n = g.vertex_count;
    std::vector<int> in(n, 0), out(n, 0);
    bool index_ok = true;
    for (auto [u, v] : g.edges) {
        if (u < 0 || u >= n || v < 0 || v >= n) {
            index_ok = false;
            continue;
        }
        ++out[u];
        ++in[v];
    }

    // CONNECTED
    {
        UnionFind uf(std::max(n, 1));
        for (auto [u, v] : g.edges)
            if (u >= 0 && u < n && v >= 0 && v < n) uf.unite(u, v);
        bool ok = index_ok && n >= 1;
        std::string detail;
        if (n < 1) {
            ok = false;
            detail = "empty graph";
        } else if (!index_ok) {
            detail = "edge endpoint out of range";
        } else {
            for (int v = 1; v < n; ++v) {
                if (uf.find(v) != uf.find(0)) {
                    ok = false;
                    detail = "vertex " + std::to_string(v) +
                             " not reachable from vertex 0";
                    break;
                }
            }
        }
        rep.checks.push_back({Condition::Connected, ok, detail});
    }

    // ACYCLIC_TREE: |E| = |V| - 1 and no cycle (multi-edges and self-loops
    // close cycles)
    {
        bool ok = index_ok && n >= 1;
        std::string detail = index_ok ? "" : "edge endpoint out of range";
        if (ok) {
            UnionFind uf(n);
            for (auto e : g.edges) {
                if (e.first == e.second || !uf.unite(e.first, e.second)) {
                    ok = false;
                    detail = "edge " + edge_str(e) + " closes a cycle";
                    break;
                }
            }
        }
        if (ok && (int)g.edges.size() != n - 1) {
            ok = false;
            detail = "edge count " + std::to_string(g.edges.size()) +
                     " != vertex count - 1 = " + std::to_string(n - 1);
        }
        rep.checks.push_back({Condition::AcyclicTree, ok, detail});
    }

    // DEGREE_PROFILE: every degree in {1, 2, 3}
    {
        bool ok = true;
        std::string detail;
        for (int v = 0; v < n; ++v) {
            int d = in[v] + out[v];
            if (d < 1 || d > 3) {
                ok = false;
                detail = "vertex " + std::to_string(v) + " has degree " +
                         std::to_string(d);
                break;
            }
        }
        rep.checks.push_back({Condition::DegreeProfile, ok, detail});
    }

    // UNIQUE_DEG2: exactly one vertex of total degree 2
    {
        std::vector<int> deg2;
        for (int v = 0; v < n; ++v)
            if (in[v] + out[v] == 2) deg2.push_back(v);
        bool ok = deg2.size() == 1;
        std::string detail;
        if (deg2.empty()) {
            detail = "no degree-2 vertex";
        } else if (deg2.size() > 1) {
            detail = "degree-2 vertices:";
            for (int v : deg2) detail += " " + std::to_string(v);
        }
        rep.checks.push_back({Condition::UniqueDeg2, ok, detail});
    }

    // LEAF_ORIENTATION: every degree-1 vertex is a source or a sink
    {
        bool ok = true;
        std::string detail;
        for (int v = 0; v < n; ++v) {
            if (in[v] + out[v] != 1) continue;
            if (!((in[v] == 1 && out[v] == 0) || (in[v] == 0 && out[v] == 1))) {
                ok = false;
                detail = "vertex " + std::to_string(v);
                break;
            }
        }
        rep.checks.push_back({Condition::LeafOrientation, ok, detail});
    }

    // SADDLE_ORIENTATION: no internal vertex is a source or sink.  Degree-3
    // vertices need (in,out) in {(1,2),(2,1)}; the degree-2 vertex needs
    // (1,1) (inferred: one part below, one above).
    {
        bool ok = true;
        std::string detail;
        for (int v = 0; v < n; ++v) {
            int d = in[v] + out[v];
            bool bad = (d == 2 && !(in[v] == 1 && out[v] == 1)) ||
                       (d == 3 && (in[v] == 0 || out[v] == 0));
            if (bad) {
                ok = false;
                detail = "vertex " + std::to_string(v) + " has (in,out)=(" +
                         std::to_string(in[v]) + "," + std::to_string(out[v]) +
                         ")";
                break;
            }
        }
        rep.checks.push_back({Condition::SaddleOrientation, ok, detail});
    }

    rep.is_valid = std::all_of(rep.checks.begin(), rep.checks.end(),
                               [](const CheckResult& r) { return r.pass; });
    return rep;
}

Condition predicted_failure(MutationMode mode) {
    switch (mode) {
        case MutationMode::AddCycle: return Condition::AcyclicTree;
        case MutationMode::SplitDeg2: return Condition::UniqueDeg2;
        case MutationMode::FlipInternalToSink:
            return Condition::SaddleOrientation;
    }
    return Condition::AcyclicTree;
}

ExplicitGraph mutate_for_tests(const ExplicitGraph& g, MutationMode mode) {
    ExplicitGraph out = g;
    switch (mode) {
        case MutationMode::AddCycle: {
            if (g.vertex_count < 2)
                throw MutationError("add-cycle needs at least two vertices");
            std::set<std::pair<int, int>> have;
            for (auto [u, v] : g.edges) {
                have.insert({u, v});
                have.insert({v, u});
            }
            for (int u = 0; u < g.vertex_count; ++u)
                for (int v = u + 1; v < g.vertex_count; ++v)
                    if (!have.count({u, v})) {
                        out.edges.emplace_back(u, v);
                        return out;
                    }
            throw MutationError("add-cycle: no non-adjacent vertex pair");
        }
        case MutationMode::SplitDeg2: {
            // Subdivide the first edge; the new vertex has (in,out)=(1,1) so
            // a valid input ends up with two degree-2 vertices.
            if (g.edges.empty())
                throw MutationError(
                    "split-deg2 needs at least one edge "
                    "(UNIQUE_DEG2 would trip on the unmodified graph anyway "
                    "only if a degree-2 vertex already exists)");
            auto [u, v] = out.edges.front();
            int w = out.vertex_count++;
            out.edges.front() = {u, w};
            out.edges.emplace_back(w, v);
            return out;
        }
        case MutationMode::FlipInternalToSink: {
            for (int v = 0; v < g.vertex_count; ++v) {
                int deg = 0;
                for (auto [a, b] : g.edges) deg += (a == v) + (b == v);
                if (deg < 2) continue;
                for (auto& e : out.edges)
                    if (e.first == v) std::swap(e.first, e.second);
                return out;
            }
            throw MutationError(
                "flip-internal-to-sink needs an internal vertex "
                "(all vertices have degree < 2)");
        }
    }
    throw MutationError("unknown mutation mode");
}

}  // namespace reeb::validate
