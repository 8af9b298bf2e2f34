#include <doctest.h>

#include <set>

#include "coha/partitions.hpp"

using namespace coha;

TEST_CASE("index_to_partition") {
    CHECK(index_to_partition(WedgeIndex{0, 1, 2}) == Partition{});
    CHECK(index_to_partition(WedgeIndex{1, 3}) == Partition{2, 1});
    CHECK(index_to_partition(WedgeIndex{2}) == Partition{2});
    CHECK(index_to_partition(WedgeIndex{1, 3}).weight() == 1 + 3 - 1);
}

TEST_CASE("partition_to_index") {
    CHECK(partition_to_index(Partition{}, 3) == WedgeIndex{0, 1, 2});
    CHECK(partition_to_index(Partition{2, 1}, 2) == WedgeIndex{1, 3});
    CHECK(partition_to_index(Partition{1}, 2) == WedgeIndex{0, 2});
    CHECK_THROWS_AS(partition_to_index(Partition{1, 1, 1}, 2), std::invalid_argument);
}

TEST_CASE("transpose") {
    CHECK(transpose(Partition{}) == Partition{});
    CHECK(transpose(Partition{2, 1}) == Partition{2, 1});
    CHECK(transpose(Partition{3, 1}) == Partition{2, 1, 1});
}

TEST_CASE("fits_box") {
    CHECK(fits_box(Partition{}, BoxShape(2, 4)));
    CHECK(fits_box(Partition{2, 1}, BoxShape(2, 4)));
    CHECK_FALSE(fits_box(Partition{3}, BoxShape(2, 4)));
    CHECK_FALSE(fits_box(Partition{1, 1, 1}, BoxShape(2, 4)));
}

TEST_CASE("transpose_index") {
    CHECK(transpose_index(WedgeIndex{0, 1}, 2) == WedgeIndex{});
    CHECK(transpose_index(WedgeIndex{1, 3}, 4) == WedgeIndex{1, 3});
    CHECK(transpose_index(WedgeIndex{0}, 2) == WedgeIndex{0});
    CHECK_THROWS_AS(transpose_index(WedgeIndex{0, 2}, 2), std::invalid_argument);
}

TEST_CASE("invalid values are rejected") {
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({2, -1}), std::invalid_argument);
    CHECK(Partition({2, 1, 0, 0}) == Partition{2, 1});
    CHECK_THROWS_AS(WedgeIndex({1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(WedgeIndex({-1}), std::invalid_argument);
    CHECK_THROWS_AS(BoxShape(3, 2), std::invalid_argument);
}

TEST_CASE("round trip index -> partition -> index") {
    for (int n = 0; n <= 7; ++n)
        for (const auto& k : all_indices(n)) CHECK(partition_to_index(index_to_partition(k), k.degree()) == k);
}

TEST_CASE("transpose is a weight-preserving involution on every box, n <= 6") {
    for (int n = 0; n <= 6; ++n) {
        for (int d = 0; d <= n; ++d) {
            for (const auto& lambda : box_partitions(BoxShape(d, n))) {
                const Partition t = transpose(lambda);
                CHECK(transpose(t) == lambda);
                CHECK(t.weight() == lambda.weight());
                CHECK(fits_box(t, BoxShape(n - d, n)));
            }
        }
    }
}

TEST_CASE("complement property of transpose_index") {
    for (int n = 1; n <= 7; ++n) {
        for (const auto& k : all_indices(n)) {
            const WedgeIndex kt = transpose_index(k, n);
            REQUIRE(kt.degree() == n - k.degree());
            std::set<int> seen(k.indices().begin(), k.indices().end());
            for (int j : kt.indices()) {
                const int partner = n - 1 - j;
                CHECK_FALSE(seen.count(partner));
                seen.insert(partner);
            }
            CHECK(seen.size() == static_cast<std::size_t>(n));
        }
    }
}

TEST_CASE("fits_box agrees with the index bound") {
    for (int n = 1; n <= 6; ++n) {
        for (int d = 0; d <= n; ++d) {
            // All partitions with at most d parts and parts <= n (a superset of the box).
            for (const auto& lambda : box_partitions(BoxShape(d, d + n))) {
                const WedgeIndex k = partition_to_index(lambda, d);
                CHECK(fits_box(lambda, BoxShape(d, n)) == (k.max_entry() <= n - 1));
            }
        }
    }
}

TEST_CASE("box enumeration sizes are binomial coefficients") {
    auto binom = [](int n, int k) {
        long r = 1;
        for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
        return r;
    };
    for (int n = 0; n <= 8; ++n)
        for (int d = 0; d <= n; ++d) {
            CHECK(static_cast<long>(box_partitions(BoxShape(d, n)).size()) == binom(n, d));
            CHECK(static_cast<long>(indices_of_degree(n, d).size()) == binom(n, d));
        }
}

TEST_CASE("mask conversion") {
    const WedgeIndex k{0, 3, 5};
    CHECK(k.mask() == 0b101001u);
    CHECK(WedgeIndex::from_mask(k.mask()) == k);
    CHECK(k.position(3) == 2);
    CHECK(k.position(4) == 0);
}
