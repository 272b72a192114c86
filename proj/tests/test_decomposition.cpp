// Copyright 2026 The HADOF Authors
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.

#include <algorithm>
#include <numeric>
#include <vector>

#include "catch2/catch_amalgamated.hpp"
#include "hadof/decomposition.hpp"
#include "oracles.hpp"

namespace hadof {

using Subsets = std::vector<std::vector<std::size_t>>;

TEST_CASE("partition_variables", "[decomposition]") {
    CHECK(partition_variables(10, 5).subsets == Subsets{{0, 1, 2, 3, 4}, {5, 6, 7, 8, 9}});
    CHECK(partition_variables(7, 3).subsets == Subsets{{0, 1, 2}, {3, 4, 5}, {6}});
    const auto single = partition_variables(5, 5);
    CHECK(single.num_subsets() == 1);
    CHECK(single.subsets[0] == std::vector<std::size_t>{0, 1, 2, 3, 4});
    CHECK_THROWS_AS(partition_variables(5, 0), std::invalid_argument);
    CHECK_THROWS_AS(partition_variables(5, 6), std::invalid_argument);
}

TEST_CASE("partitions cover every index exactly once", "[decomposition][property]") {
    for (std::size_t n = 1; n <= 40; ++n) {
        for (std::size_t k = 1; k <= n; ++k) {
            const auto plan = partition_variables(n, k);
            CHECK_NOTHROW(validate_plan(plan, n));
            std::vector<std::size_t> flat;
            for (const auto& s : plan.subsets) flat.insert(flat.end(), s.begin(), s.end());
            std::vector<std::size_t> expected(n);
            std::iota(expected.begin(), expected.end(), 0);
            CHECK(flat == expected);
            CHECK(plan.num_subsets() == (n + k - 1) / k);
        }
    }
}

TEST_CASE("validate_plan rejects bad plans", "[decomposition]") {
    CHECK_THROWS(validate_plan(SubsetPlan{{{0, 1}, {1, 2}}, 2}, 3));
    CHECK_THROWS(validate_plan(SubsetPlan{{{0, 1}}, 2}, 3));
    CHECK_THROWS(validate_plan(SubsetPlan{{{1, 0}, {2}}, 2}, 3));
    CHECK_THROWS(validate_plan(SubsetPlan{{{0, 1, 2}}, 2}, 3));
    CHECK_NOTHROW(validate_plan(SubsetPlan{{{2}, {0, 1}}, 2}, 3));
}

TEST_CASE("init_marginals", "[decomposition]") {
    CHECK(init_marginals(1).values()[0] == 0.5);
    const auto p = init_marginals(20);
    CHECK(p.size() == 20);
    CHECK(std::all_of(p.values().begin(), p.values().end(), [](double v) { return v == 0.5; }));
    CHECK_THROWS_AS(MarginalVector(std::vector<double>{0.2, 1.5}), std::domain_error);
}

TEST_CASE("build_sub_qubo hand expansion", "[decomposition]") {
    QuboMatrix q(3);
    q.set(0, 0, 1.0);
    q.set(1, 1, 2.0);
    q.set(0, 1, 3.0);
    q.set(0, 2, 4.0);
    q.set(1, 2, -2.0);
    q.set(2, 2, 5.0);
    const std::vector<std::size_t> s{0, 1};
    const auto sub = build_sub_qubo(q, s, MarginalVector(std::vector<double>{0.3, 0.9, 0.5}));
    CHECK(sub.indices == s);
    CHECK(sub.sub_q.size() == 2);
    CHECK(sub.sub_q.get(0, 0) == 3.0);
    CHECK(sub.sub_q.get(1, 1) == 1.0);
    CHECK(sub.sub_q.get(0, 1) == 3.0);
    CHECK(sub.offset == 2.5);
}

TEST_CASE("clamping to zero restricts Q", "[decomposition]") {
    const auto q = generate_random_qubo(6, 11);
    const std::vector<std::size_t> s{1, 3, 4};
    const auto sub = build_sub_qubo(q, s, MarginalVector(6, 0.0));
    CHECK(sub.offset == 0.0);
    for (std::size_t a = 0; a < 3; ++a)
        for (std::size_t b = a; b < 3; ++b) CHECK(sub.sub_q.get(a, b) == q.get(s[a], s[b]));
}

TEST_CASE("full subset returns Q itself", "[decomposition]") {
    const auto q = generate_random_qubo(7, 2);
    const std::vector<std::size_t> all{0, 1, 2, 3, 4, 5, 6};
    const auto sub = build_sub_qubo(q, all, init_marginals(7));
    CHECK(sub.sub_q == q);
    CHECK(sub.offset == 0.0);
}

TEST_CASE("symmetric couplings under initial marginals shift linear terms by c/2", "[decomposition]") {
    const double c = 3.0;
    QuboMatrix q(4);
    q.set(0, 2, c);
    q.set(0, 3, c);
    q.set(1, 2, -c);
    q.set(1, 3, c);
    q.set(0, 0, 1.0);
    const auto sub = build_sub_qubo(q, std::vector<std::size_t>{0, 1}, init_marginals(4));
    CHECK(sub.sub_q.get(0, 0) == 1.0 + c / 2 + c / 2);
    CHECK(sub.sub_q.get(1, 1) == -c / 2 + c / 2);
    CHECK(sub.offset == 0.0);
}

TEST_CASE("clamping identity against the exhaustive expectation", "[decomposition][oracle]") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto q = generate_random_qubo(6, 500 + seed);
        Rng rng(seed);
        std::vector<double> pv(6);
        for (auto& v : pv) v = rng.uniform();
        const MarginalVector p(pv);
        const std::vector<std::size_t> s{0, 1, 2};
        const auto sub = build_sub_qubo(q, s, p);
        for (std::uint64_t y = 0; y < 8; ++y) {
            const auto ya = oracle::bits_to_assignment(y, 3);
            CHECK(evaluate(sub.sub_q, ya) + sub.offset ==
                  Catch::Approx(oracle::clamped_expectation(q, s, pv, ya)).margin(1e-9));
        }
    }
}

TEST_CASE("build_sub_qubo errors", "[decomposition]") {
    const auto q = generate_random_qubo(4, 1);
    const auto p = init_marginals(4);
    CHECK_THROWS_AS(build_sub_qubo(q, std::vector<std::size_t>{0, 4}, p), std::out_of_range);
    CHECK_THROWS_AS(build_sub_qubo(q, std::vector<std::size_t>{1, 1}, p), std::invalid_argument);
    CHECK_THROWS_AS(build_sub_qubo(q, std::vector<std::size_t>{2, 1}, p), std::invalid_argument);
    CHECK_THROWS_AS(build_sub_qubo(q, std::vector<std::size_t>{}, p), std::invalid_argument);
    CHECK_THROWS_AS(build_sub_qubo(q, std::vector<std::size_t>{0}, init_marginals(3)),
                    std::invalid_argument);
}

}  // namespace hadof
