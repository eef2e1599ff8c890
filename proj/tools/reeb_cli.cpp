// Command-line front end: counting, enumeration, formula-vs-construction
// verification, structural checking, and isomorphism of Reeb graphs of
// simple Morse functions on the projective plane.
//
// Exit codes: 0 success, 1 semantic failure (mismatch / not-isomorphic /
// invalid graph), 2 usage or parse error, 3 resource cap, 4 I/O error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "reeb/canonical.hpp"
#include "reeb/count.hpp"
#include "reeb/core.hpp"
#include "reeb/enumerate.hpp"
#include "reeb/errors.hpp"
#include "reeb/io.hpp"
#include "reeb/validate.hpp"

namespace fs = std::filesystem;
using json = nlohmann::json;

namespace {

constexpr int kExitSemantic = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;
constexpr int kExitIo = 4;

std::string n10_note() {
    return "N(10) = " + reeb::counting::N(10).get_str() +
           " per the convolution formula; a published table prints " +
           std::to_string(reeb::counting::kPublishedN10) +
           " instead (erratum)";
}

int cmd_count(int max_saddles, bool rooted, bool as_json) {
    auto kind = rooted ? reeb::counting::Kind::Rooted
                       : reeb::counting::Kind::Full;
    auto values = reeb::counting::table(max_saddles, kind);
    bool note = !rooted && max_saddles >= 10;
    if (as_json) {
        json doc;
        doc["kind"] = rooted ? "rooted" : "full";
        doc["values"] = json::array();
        for (const auto& [k, v] : values)
            doc["values"].push_back({{"k", k}, {"value", v.get_str()}});
        if (note) doc["notes"] = json::array({{{"k", 10}, {"note", n10_note()}}});
        std::cout << doc.dump(2) << "\n";
    } else {
        for (const auto& [k, v] : values)
            std::cout << k << "\t" << v.get_str() << "\n";
        if (note) std::cout << "# note: " << n10_note() << "\n";
    }
    return 0;
}

int cmd_enumerate(int saddles, bool rooted, const std::string& format,
                  const std::string& out_dir, std::size_t cap) {
    reeb::enumeration::Enumerator en(cap);
    std::vector<std::string> canon;
    std::vector<reeb::ExplicitGraph> graphs;
    if (rooted) {
        for (const auto& t : en.rooted(saddles)) {
            canon.push_back(t->encoding());
            if (format != "canon") graphs.push_back(reeb::to_explicit(t));
        }
    } else {
        for (const auto& g : en.full(saddles)) {
            canon.push_back(g.enc);
            if (format != "canon") graphs.push_back(reeb::to_explicit(g));
        }
    }

    std::error_code ec;
    fs::create_directories(out_dir, ec);
    if (ec) {
        std::cerr << "error: cannot create " << out_dir << ": "
                  << ec.message() << "\n";
        return kExitIo;
    }
    const char* ext = format == "canon" ? "canon"
                      : format == "dot" ? "dot"
                                        : "edges";
    for (std::size_t i = 0; i < canon.size(); ++i) {
        char name[64];
        std::snprintf(name, sizeof name, "%06zu_%016llx.%s", i,
                      (unsigned long long)reeb::io::fnv1a(canon[i]), ext);
        std::ofstream f(fs::path(out_dir) / name);
        if (format == "canon")
            f << canon[i] << "\n";
        else if (format == "dot")
            f << reeb::io::to_dot(graphs[i]);
        else
            f << reeb::io::print_edge_list(graphs[i]);
        if (!f) {
            std::cerr << "error: cannot write " << name << "\n";
            return kExitIo;
        }
    }
    // manifest written last as the commit marker
    std::ofstream mf(fs::path(out_dir) / "manifest.txt");
    for (const auto& s : canon) mf << s << "\n";
    if (!mf) {
        std::cerr << "error: cannot write manifest\n";
        return kExitIo;
    }
    std::cout << canon.size() << " graphs written to " << out_dir << "\n";
    return 0;
}

int cmd_verify(int max_saddles, int rooted_cap, int full_cap,
               bool inject_fault) {
    reeb::enumeration::Enumerator en;
    bool all_ok = true;
    std::cout << "kind\tk\tformula\tenumerated\tresult\n";
    for (int k = 0; k <= std::min(max_saddles, rooted_cap); ++k) {
        auto formula = reeb::counting::K(k);
        if (inject_fault) formula += 1;
        std::size_t built = en.rooted(k).size();
        bool ok = formula == (unsigned long)built;
        all_ok &= ok;
        std::cout << "rooted\t" << k << "\t" << formula.get_str() << "\t"
                  << built << "\t" << (ok ? "match" : "MISMATCH") << "\n";
    }
    for (int k = 1; k <= std::min(max_saddles, full_cap); ++k) {
        auto formula = reeb::counting::N(k);
        if (inject_fault) formula += 1;
        auto graphs = en.full(k);
        bool ok = formula == (unsigned long)graphs.size();
        long long invalid = 0;
#pragma omp parallel for schedule(dynamic) reduction(+ : invalid)
        for (long long i = 0; i < (long long)graphs.size(); ++i) {
            auto rep =
                reeb::validate::check_reeb_structure(reeb::to_explicit(graphs[i]));
            if (!rep.is_valid) ++invalid;
        }
        ok = ok && invalid == 0;
        all_ok &= ok;
        std::cout << "full\t" << k << "\t" << formula.get_str() << "\t"
                  << graphs.size() << "\t"
                  << (ok ? "match"
                         : invalid ? "INVALID_GRAPHS" : "MISMATCH")
                  << "\n";
    }
    std::cout << (all_ok ? "verify: all levels match\n"
                         : "verify: FAILURES found\n");
    return all_ok ? 0 : kExitSemantic;
}

reeb::ExplicitGraph load_graph(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::ios_base::failure("cannot open " + path);
    return reeb::io::parse_edge_list(f);
}

int cmd_check(const std::string& path, bool as_json) {
    auto g = load_graph(path);
    auto rep = reeb::validate::check_reeb_structure(g);
    if (as_json) {
        json doc;
        doc["is_valid"] = rep.is_valid;
        doc["checks"] = json::array();
        for (const auto& c : rep.checks)
            doc["checks"].push_back(
                {{"condition", reeb::validate::condition_name(c.id)},
                 {"pass", c.pass},
                 {"detail", c.detail}});
        if (rep.is_valid)
            doc["canon"] = reeb::canon::full_from_explicit(g).enc;
        std::cout << doc.dump(2) << "\n";
        return rep.is_valid ? 0 : kExitSemantic;
    }
    std::cout << rep.summary();
    if (!rep.is_valid) return kExitSemantic;
    std::cout << "canon " << reeb::canon::full_from_explicit(g).enc << "\n";
    return 0;
}

int cmd_iso(const std::string& path1, const std::string& path2) {
    auto g1 = load_graph(path1);
    auto g2 = load_graph(path2);
    bool iso = reeb::canon::is_isomorphic(g1, g2);
    std::cout << (iso ? "isomorphic" : "not-isomorphic") << "\n";
    return iso ? 0 : kExitSemantic;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Reeb graphs of simple Morse functions on the projective "
                 "plane: count, enumerate, verify, check, iso"};
    app.require_subcommand(1);

    int max_saddles = 0, saddles = 0;
    bool rooted = false, full = false, as_json = false, inject_fault = false;
    std::string format = "canon", out_dir = "out", file1, file2;
    std::size_t cap = reeb::enumeration::kDefaultCap;
    int rooted_cap = 8, full_cap = 9;

    auto* count = app.add_subcommand("count", "print K or N value table");
    count->add_option("--max-saddles", max_saddles, "largest k")->required();
    auto* cr = count->add_flag("--rooted", rooted, "rooted trees (K)");
    count->add_flag("--full", full, "full graphs (N)")->excludes(cr);
    count->add_flag("--json", as_json, "structured output");

    auto* enumerate =
        app.add_subcommand("enumerate", "write every graph of a level");
    enumerate->add_option("--saddles", saddles, "saddle count")->required();
    auto* er = enumerate->add_flag("--rooted", rooted, "rooted trees");
    enumerate->add_flag("--full", full, "full graphs")->excludes(er);
    enumerate->add_option("--format", format, "canon|dot|edgelist")
        ->check(CLI::IsMember({"canon", "dot", "edgelist"}));
    enumerate->add_option("--out", out_dir, "output directory");
    enumerate->add_option("--cap", cap, "resource cap on object count");

    auto* verify = app.add_subcommand(
        "verify", "cross-check recurrence values against construction");
    verify->add_option("--max-saddles", max_saddles, "largest k")->required();
    verify->add_option("--rooted-cap", rooted_cap, "rooted enumeration cap");
    verify->add_option("--full-cap", full_cap, "full enumeration cap");
    verify->add_flag("--inject-fault", inject_fault,
                     "perturb formula values (negative control)")
        ->group("");  // hidden

    auto* check =
        app.add_subcommand("check", "validate an edge-list file");
    check->add_option("file", file1, "edge-list file")->required();
    check->add_flag("--json", as_json, "structured report");

    auto* iso = app.add_subcommand("iso", "decide isomorphism of two files");
    iso->add_option("file1", file1, "edge-list file")->required();
    iso->add_option("file2", file2, "edge-list file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (count->parsed()) {
            if (rooted == full) {
                std::cerr << "error: pass exactly one of --rooted / --full\n";
                return kExitUsage;
            }
            return cmd_count(max_saddles, rooted, as_json);
        }
        if (enumerate->parsed()) {
            if (rooted == full) {
                std::cerr << "error: pass exactly one of --rooted / --full\n";
                return kExitUsage;
            }
            return cmd_enumerate(saddles, rooted, format, out_dir, cap);
        }
        if (verify->parsed())
            return cmd_verify(max_saddles, rooted_cap, full_cap, inject_fault);
        if (check->parsed()) return cmd_check(file1, as_json);
        if (iso->parsed()) return cmd_iso(file1, file2);
    } catch (const reeb::ResourceLimitError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitResource;
    } catch (const reeb::FileParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const reeb::InvalidStructureError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSemantic;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return 0;
}
