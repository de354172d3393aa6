#include "ham/core.hpp"
#include "ham/temps.hpp"

#include <doctest.h>

#include <algorithm>

using namespace ham;

TEST_CASE("mappings for small temperature pairs") {
    auto m = find_uniform_mapping(2, 4);
    REQUIRE(m);
    CHECK(m->table == std::vector<int>{2, 4});
    CHECK_FALSE(find_uniform_mapping(3, 4));
    CHECK(find_uniform_mapping(3, 3)->table == std::vector<int>{1, 2, 3});
    CHECK_THROWS_AS(find_uniform_mapping(4, 3), InputError);
}

TEST_CASE("knapsack oracle agrees with literal enumeration") {
    for (int tau = 1; tau <= 4; ++tau)
        for (int tp = tau; tp <= 7; ++tp)
            for (int c = 1; c <= tp; ++c) {
                std::vector<int> table;
                for (int x = 1; x < tau; ++x) table.push_back(c * x);
                table.push_back(tp);
                if (*std::max_element(table.begin(), table.end()) > tp) continue;
                CHECK(is_uniform_mapping_oracle(table, tau, tp) == is_uniform_mapping_exhaustive(table, tau, tp));
            }
}

TEST_CASE("counterexamples name a violating multiset") {
    auto ce = find_mapping_counterexample({1, 2, 4}, 3, 4);
    REQUIRE(ce);
    int sum = 0;
    for (int x : ce->multiset) sum += x;
    CHECK(sum == ce->sum);
    CHECK((ce->sum >= 3) != (ce->mapped_sum >= 4));
}

TEST_CASE("gaps") {
    CHECK(no_mapping_gaps(3, 20) == std::vector<int>{4});
    CHECK(no_mapping_gaps(2, 20).empty());
    CHECK(check_gap_implication(3, 4));
}
