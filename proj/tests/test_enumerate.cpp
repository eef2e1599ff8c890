#include <doctest.h>

#include <set>

#include "reeb/count.hpp"
#include "reeb/enumerate.hpp"
#include "reeb/errors.hpp"
#include "reeb/validate.hpp"

using namespace reeb;
using namespace reeb::enumeration;

TEST_CASE("level 0 and 1") {
    CHECK(enum_rooted(0).size() == 1);
    CHECK(enum_rooted(0)[0]->encoding() == "*");
    CHECK(enum_rooted(1).size() == 2);
}

TEST_CASE("the six 2-saddle rooted trees") {
    std::set<std::string> got;
    for (const auto& t : enum_rooted(2)) got.insert(t->encoding());
    CHECK(got == std::set<std::string>{"(*^(*^*^)^)", "(*^(*^*v)^)",
                                       "(*^(*^*^)v)", "(*^(*^*v)v)",
                                       "((*^*^)^*v)", "((*^*v)^*v)"});
}

TEST_CASE("cardinalities match the recurrences") {
    Enumerator en;
    for (int k = 0; k <= 6; ++k)
        CHECK(counting::K(k) == (unsigned long)en.rooted(k).size());
    for (int k = 1; k <= 6; ++k)
        CHECK(counting::N(k) == (unsigned long)en.full(k).size());
}

TEST_CASE("figure-level full counts") {
    CHECK(enum_full(1).size() == 1);
    CHECK(enum_full(2).size() == 4);
    CHECK(enum_full(3).size() == 16);
    CHECK(enum_full(4).size() == 74);
}

TEST_CASE("no duplicate encodings within a level") {
    Enumerator en;
    for (int k = 0; k <= 6; ++k) {
        std::set<std::string> encs;
        for (const auto& t : en.rooted(k)) encs.insert(t->encoding());
        CHECK(encs.size() == en.rooted(k).size());
    }
    for (int k = 1; k <= 5; ++k) {
        auto graphs = en.full(k);
        std::set<std::string> encs;
        for (const auto& g : graphs) encs.insert(g.enc);
        CHECK(encs.size() == graphs.size());
    }
}

TEST_CASE("structural census: k saddles, k+1 leaves") {
    Enumerator en;
    for (int k = 0; k <= 6; ++k)
        for (const auto& t : en.rooted(k)) {
            CHECK(t->saddle_count() == k);
            CHECK(t->leaf_count() == k + 1);
        }
}

TEST_CASE("every enumerated full graph validates") {
    Enumerator en;
    for (int k = 1; k <= 5; ++k)
        for (const auto& g : en.full(k)) {
            auto rep = validate::check_reeb_structure(to_explicit(g));
            CHECK(rep.is_valid);
        }
}

TEST_CASE("deterministic order, serial == parallel") {
    for (int k : {3, 5, 7}) {
        auto serial = enum_rooted(k, kDefaultCap, false);
        auto parallel = enum_rooted(k, kDefaultCap, true);
        REQUIRE(serial.size() == parallel.size());
        for (std::size_t i = 0; i < serial.size(); ++i)
            CHECK(serial[i]->encoding() == parallel[i]->encoding());
    }
    auto fs = enum_full(5, kDefaultCap, false);
    auto fp = enum_full(5, kDefaultCap, true);
    REQUIRE(fs.size() == fp.size());
    for (std::size_t i = 0; i < fs.size(); ++i) CHECK(fs[i].enc == fp[i].enc);
}

TEST_CASE("resource cap") {
    CHECK_THROWS_AS(enum_rooted(8, /*cap=*/1000), ResourceLimitError);
    CHECK_THROWS_AS(enum_full(6, /*cap=*/100), ResourceLimitError);
    CHECK_NOTHROW(enum_rooted(3, /*cap=*/25));
}

TEST_CASE("bad arguments") {
    Enumerator en;
    CHECK_THROWS_AS(en.rooted(-1), std::invalid_argument);
    CHECK_THROWS_AS(en.full(0), std::invalid_argument);
}
