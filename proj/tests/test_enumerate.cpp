#include <doctest.h>

#include <schreier/enumerate.hpp>

#include <algorithm>

#include "support.hpp"

using namespace schreier;
using test_support::naive_count;
using test_support::naive_members;

namespace {

std::vector<std::vector<std::int64_t>> raw(const std::vector<FiniteSet>& sets) {
    std::vector<std::vector<std::int64_t>> out;
    for (const auto& s : sets) out.push_back(s.elements());
    return out;
}

} // namespace

TEST_CASE("enumerate_with_max returns the expected small families") {
    CHECK(raw(enumerate_with_max(FamilyParams(1), 3)) ==
          std::vector<std::vector<std::int64_t>>{{2, 3}, {3}});
    CHECK(enumerate_with_max(FamilyParams(2), 1).empty());
    CHECK(raw(enumerate_with_max(FamilyParams(1, 2), 4)) ==
          std::vector<std::vector<std::int64_t>>{{2, 4}, {3, 4}, {4}});
}

TEST_CASE("enumeration output is sorted, duplicate-free, and members only") {
    for (auto params : {FamilyParams(1), FamilyParams(2), FamilyParams(1, 2),
                        FamilyParams(2, 3), FamilyParams(3, 2)}) {
        for (std::int64_t n = 1; n <= 12; ++n) {
            const auto sets = enumerate_with_max(params, n);
            CHECK(std::is_sorted(sets.begin(), sets.end()));
            CHECK(std::adjacent_find(sets.begin(), sets.end()) == sets.end());
            for (const auto& s : sets) {
                CHECK(s.max() == n);
                CHECK(is_member(s, params));
            }
        }
    }
}

TEST_CASE("enumeration is exhaustive against a full powerset sweep") {
    for (auto params : {FamilyParams(1), FamilyParams(2), FamilyParams(3),
                        FamilyParams(1, 2), FamilyParams(1, 3), FamilyParams(2, 3),
                        FamilyParams(2, 2), FamilyParams(3, 1)}) {
        for (int n = 1; n <= 14; ++n) {
            CHECK(raw(enumerate_with_max(params, n)) == naive_members(params, n));
        }
    }
    // one deeper spot check
    CHECK(raw(enumerate_with_max(FamilyParams(1), 17)) == naive_members(FamilyParams(1), 17));
}

TEST_CASE("oracle_count equals the enumeration length") {
    CHECK(oracle_count(FamilyParams(1), 5) == 5);
    CHECK(oracle_count(FamilyParams(2), 8) == 6);
    CHECK(oracle_count(FamilyParams(1, 2), 7) == 9);
    for (auto params : {FamilyParams(1), FamilyParams(2, 3)}) {
        for (std::int64_t n = 1; n <= 15; ++n) {
            CHECK(oracle_count(params, n) ==
                  static_cast<unsigned long>(enumerate_with_max(params, n).size()));
        }
    }
}

TEST_CASE("larger thresholds give nested families") {
    for (std::int64_t p = 1; p <= 3; ++p) {
        for (int n = 1; n <= 12; ++n) {
            const auto tighter = raw(enumerate_with_max(FamilyParams(p + 1), n));
            const auto looser = raw(enumerate_with_max(FamilyParams(p), n));
            CHECK(std::includes(looser.begin(), looser.end(), tighter.begin(),
                                tighter.end()));
        }
    }
}

TEST_CASE("q <= p makes the second threshold redundant") {
    for (auto [p, q] : {std::pair<std::int64_t, std::int64_t>{2, 2}, {3, 2}, {4, 1}}) {
        for (std::int64_t n = 1; n <= 12; ++n) {
            CHECK(raw(enumerate_with_max(FamilyParams(p, q), n)) ==
                  raw(enumerate_with_max(FamilyParams(p), n)));
        }
    }
}

TEST_CASE("the resource guard rejects n above the ceiling") {
    CHECK_THROWS_AS(enumerate_with_max(FamilyParams(1), 41), OracleRangeError);
    CHECK_THROWS_AS(oracle_count(FamilyParams(1), 100), OracleRangeError);
    CHECK_THROWS_AS(oracle_count(FamilyParams(1), 11, 10), OracleRangeError);
    CHECK_NOTHROW(oracle_count(FamilyParams(1), 11, 11));
    CHECK_THROWS_AS(oracle_count(FamilyParams(1), 0), std::invalid_argument);

    try {
        oracle_count(FamilyParams(1), 99);
        FAIL("expected OracleRangeError");
    } catch (const OracleRangeError& e) {
        CHECK(e.n() == 99);
        CHECK(e.ceiling() == kDefaultOracleCeiling);
        CHECK(std::string(e.what()).find("oracle range exceeded") != std::string::npos);
    }
}

TEST_CASE("enumeration_table collects counts for n = 1..max_n") {
    const auto table = enumeration_table(FamilyParams(2), 10);
    CHECK(table.method == Method::enumeration);
    CHECK(table.first_index == 1);
    CHECK(table.values == test_support::to_ints({0, 1, 1, 1, 2, 3, 4, 6, 9, 13}));
}
