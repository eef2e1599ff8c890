// Acceptance suite: one pass/fail line per criterion, nonzero exit if any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "reeb/canonical.hpp"
#include "reeb/count.hpp"
#include "reeb/core.hpp"
#include "reeb/enumerate.hpp"
#include "reeb/validate.hpp"

using namespace reeb;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void criterion(int id, const std::string& name,
               const std::function<bool(std::string&)>& body) {
    std::string detail;
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << id << ": " << name;
    if (!detail.empty()) std::cout << " (" << detail << ")";
    std::cout << "\n";
    if (!ok) ++failures;
}

double elapsed(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

}  // namespace

int main() {
    criterion(1, "rooted counts K(0..14), exact, <1s", [](std::string& d) {
        const char* expected[] = {
            "1",       "2",        "6",        "25",        "111",
            "540",     "2736",     "14396",    "77649",     "427608",
            "2392866", "13570386", "77815161", "450418536", "2628225684"};
        auto t0 = Clock::now();
        bool ok = true;
        for (int k = 0; k <= 14; ++k)
            ok &= counting::K(k) == counting::BigCount(expected[k]);
        double secs = elapsed(t0);
        d = std::to_string(secs) + "s";
        return ok && secs < 1.0;
    });

    criterion(2, "full counts N(1..15), exact, N(10) by formula, <1s",
              [](std::string& d) {
                  const char* expected[] = {
                      "1",        "4",         "16",        "74",
                      "358",      "1824",      "9589",      "51766",
                      "285035",   "1595244",   "9046744",   "51876774",
                      "300278112", "1752150456", "10295599780"};
                  auto t0 = Clock::now();
                  bool ok = true;
                  for (int k = 1; k <= 15; ++k)
                      ok &= counting::N(k) ==
                            counting::BigCount(expected[k - 1]);
                  // the discrepant printed value is surfaced, not returned
                  ok &= counting::kPublishedN10 == 2178244;
                  ok &= counting::N(10) != counting::kPublishedN10;
                  double secs = elapsed(t0);
                  d = std::to_string(secs) + "s";
                  return ok && secs < 1.0;
              });

    criterion(3, "enumeration matches formulas (rooted k<=8, full k<=9), <60s",
              [](std::string& d) {
                  auto t0 = Clock::now();
                  enumeration::Enumerator en;
                  bool ok = true;
                  for (int k = 0; k <= 8; ++k)
                      ok &= counting::K(k) ==
                            (unsigned long)en.rooted(k).size();
                  for (int k = 1; k <= 9; ++k)
                      ok &= counting::N(k) == (unsigned long)en.full(k).size();
                  double secs = elapsed(t0);
                  d = std::to_string(secs) + "s";
                  return ok && secs < 60.0;
              });

    criterion(4, "figure-level counts 1, 4, 16, 74", [](std::string&) {
        enumeration::Enumerator en;
        return en.full(1).size() == 1 && en.full(2).size() == 4 &&
               en.full(3).size() == 16 && en.full(4).size() == 74;
    });

    criterion(5, "validation: all positives k<=7 pass, all mutants k<=4 fail "
                 "as predicted",
              [](std::string& d) {
                  enumeration::Enumerator en;
                  long long bad_pos = 0, bad_mut = 0;
                  for (int k = 1; k <= 7; ++k) {
                      auto graphs = en.full(k);
#pragma omp parallel for schedule(dynamic) reduction(+ : bad_pos)
                      for (long long i = 0; i < (long long)graphs.size(); ++i)
                          if (!validate::check_reeb_structure(
                                   to_explicit(graphs[i]))
                                   .is_valid)
                              ++bad_pos;
                  }
                  for (int k = 1; k <= 4; ++k)
                      for (const auto& fg : en.full(k)) {
                          auto g = to_explicit(fg);
                          for (auto mode : {validate::MutationMode::AddCycle,
                                            validate::MutationMode::SplitDeg2,
                                            validate::MutationMode::
                                                FlipInternalToSink}) {
                              auto rep = validate::check_reeb_structure(
                                  validate::mutate_for_tests(g, mode));
                              if (rep.is_valid ||
                                  rep.passed(validate::predicted_failure(mode)))
                                  ++bad_mut;
                          }
                      }
                  d = std::to_string(bad_pos) + " bad positives, " +
                      std::to_string(bad_mut) + " bad mutants";
                  return bad_pos == 0 && bad_mut == 0;
              });

    criterion(6, "canonical-form properties (relabeling, round trip, "
                 "distinctness, Euler invariant)",
              [](std::string& d) {
                  enumeration::Enumerator en;
                  long long fails = 0;
                  std::mt19937 rng(12345);
                  // 100 random relabelings per graph, k <= 5
                  for (int k = 1; k <= 5; ++k)
                      for (const auto& fg : en.full(k)) {
                          auto g = to_explicit(fg);
                          std::vector<int> perm(g.vertex_count);
                          for (int i = 0; i < g.vertex_count; ++i)
                              perm[i] = i;
                          for (int rep = 0; rep < 100; ++rep) {
                              std::shuffle(perm.begin(), perm.end(), rng);
                              ExplicitGraph h;
                              h.vertex_count = g.vertex_count;
                              for (auto [u, v] : g.edges)
                                  h.edges.emplace_back(perm[u], perm[v]);
                              if (!canon::is_isomorphic(g, h)) ++fails;
                          }
                      }
                  // encode/parse round trip, k <= 6
                  for (int k = 1; k <= 6; ++k)
                      for (const auto& fg : en.full(k))
                          if (canon::parse_full(fg.enc).enc != fg.enc)
                              ++fails;
                  // all-distinct within each level
                  for (int k = 1; k <= 6; ++k) {
                      auto graphs = en.full(k);
                      std::set<std::string> encs;
                      for (const auto& g : graphs) encs.insert(g.enc);
                      if (encs.size() != graphs.size()) ++fails;
                  }
                  // Euler invariant: #degree-1 - #saddles = 1
                  for (int k = 1; k <= 6; ++k)
                      for (const auto& fg : en.full(k)) {
                          auto g = to_explicit(fg);
                          std::vector<int> deg(g.vertex_count, 0);
                          for (auto [u, v] : g.edges) {
                              ++deg[u];
                              ++deg[v];
                          }
                          int deg1 = 0, saddles = 0;
                          for (int v = 0; v < g.vertex_count; ++v)
                              deg[v] == 1 ? ++deg1 : ++saddles;
                          if (deg1 - saddles != 1) ++fails;
                      }
                  d = std::to_string(fails) + " property failures";
                  return fails == 0;
              });

    criterion(7, "odd-case division exact for every level up to k=40",
              [](std::string&) {
                  // K throws std::logic_error if the divisibility guard
                  // ever trips
                  auto v = counting::K(40);
                  counting::BigCount check = 1;
                  for (int n = 0; n <= 40; ++n) {
                      auto kn = counting::K(n);
                      if (kn * (3 * kn + 1) % 2 != 0) return false;
                  }
                  return v > 0;
              });

    std::cout << (failures == 0 ? "ACCEPTANCE: all criteria passed"
                                : "ACCEPTANCE: " + std::to_string(failures) +
                                      " criterion(s) failed")
              << "\n";
    return failures == 0 ? 0 : 1;
}
