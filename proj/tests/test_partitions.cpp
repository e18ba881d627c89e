#include "oracles.hpp"

#include "ulp/partition.hpp"

#include <doctest.h>

#include <atomic>
#include <set>
#include <stdexcept>
#include <thread>

using ulp::Partition;

TEST_CASE("partitions strip trailing zeros") {
    const Partition a({2, 1, 0, 0});
    CHECK(a == Partition({2, 1}));
    CHECK(a.length() == 2);
    CHECK(a.degree() == 3);
    CHECK(a[5] == 0);
    CHECK(a.padded(4) == std::vector<int>{2, 1, 0, 0});
    CHECK_THROWS_AS(a.padded(1), std::invalid_argument);
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({1, -1}), std::invalid_argument);
    CHECK(Partition{}.to_string() == "[]");
    CHECK(a.to_string() == "[2,1]");
}

TEST_CASE("generate_partitions small lists") {
    CHECK(ulp::generate_partitions(0, 2) == std::vector<Partition>{Partition{}});
    CHECK(ulp::generate_partitions(2, 2) ==
          std::vector<Partition>{Partition{}, Partition{1}, Partition{2}, Partition{1, 1}});
    CHECK(ulp::generate_partitions(3, 1) ==
          std::vector<Partition>{Partition{}, Partition{1}, Partition{2}, Partition{3}});
    CHECK_THROWS(ulp::generate_partitions(-1, 2));
    CHECK_THROWS(ulp::generate_partitions(3, 0));
}

TEST_CASE("generate_partitions counts follow the recurrence") {
    for (int k = 1; k <= 6; ++k) {
        const auto all = ulp::generate_partitions(20, k);
        std::int64_t expected = 0;
        for (int d = 0; d <= 20; ++d) expected += oracle::partition_count(d, k);
        CHECK(static_cast<std::int64_t>(all.size()) == expected);
        CHECK(std::set<Partition>(all.begin(), all.end()).size() == all.size());
        for (std::size_t i = 1; i < all.size(); ++i) {
            const auto& p = all[i - 1];
            const auto& q = all[i];
            CHECK(q.length() <= k);
            // degree first, then reverse lexicographic within a degree
            const bool ordered = p.degree() < q.degree() ||
                                 (p.degree() == q.degree() &&
                                  std::lexicographical_compare(q.parts().begin(), q.parts().end(),
                                                               p.parts().begin(), p.parts().end()));
            CHECK(ordered);
        }
    }
}

TEST_CASE("dominance") {
    CHECK(ulp::dominates({2, 1}, {1, 1, 1}));
    CHECK_FALSE(ulp::dominates({1, 1, 1}, {2, 1}));
    CHECK_FALSE(ulp::dominates({2, 2}, {3, 1}));
    CHECK(ulp::dominates({3, 1}, {2, 2}));
    CHECK_THROWS_AS(ulp::dominates({2}, {1}), std::invalid_argument);
}

TEST_CASE("kostka small values") {
    CHECK(ulp::kostka({2, 1}, {2, 1}) == 1);
    CHECK(ulp::kostka({2, 1}, {1, 1, 1}) == 2);
    CHECK(ulp::kostka({1, 1, 1}, {2, 1}) == 0);
    CHECK(ulp::kostka({3, 2, 1}, {1, 1, 1, 1, 1, 1}) == 16);  // standard tableaux of [3,2,1]
    CHECK_THROWS_AS(ulp::kostka({2}, {1}), std::invalid_argument);
}

TEST_CASE("kostka matches tableau filling and dominance up to degree 7") {
    for (int d = 0; d <= 7; ++d) {
        const auto ps = ulp::partitions_of(d, d == 0 ? 1 : d);
        for (const auto& lambda : ps)
            for (const auto& mu : ps) {
                const auto k = ulp::kostka(lambda, mu);
                CHECK(k == oracle::kostka_brute(lambda, mu));
                CHECK((k > 0) == ulp::dominates(lambda, mu));
            }
    }
}

TEST_CASE("kostka is consistent under concurrent use") {
    // The memo is shared; hammer it from several threads on fresh shapes.
    std::vector<std::thread> pool;
    std::atomic<int> mismatches{0};
    const auto ps = ulp::partitions_of(9, 9);
    for (int t = 0; t < 4; ++t)
        pool.emplace_back([&, t] {
            for (std::size_t i = static_cast<std::size_t>(t); i < ps.size(); i += 2)
                for (std::size_t j = 0; j < ps.size(); j += 3)
                    if (ulp::kostka(ps[i], ps[j]) != ulp::kostka(ps[i], ps[j])) ++mismatches;
        });
    for (auto& th : pool) th.join();
    CHECK(mismatches == 0);
    CHECK(ulp::kostka({5, 4}, {3, 3, 3}) == oracle::kostka_brute({5, 4}, {3, 3, 3}));
}
