#include <doctest.h>

#include "jmeet/generators.hpp"
#include "jmeet/partition.hpp"
#include "oracles.hpp"

using namespace jmeet;

namespace {

Partition make(std::size_t n, std::vector<std::vector<Index>> blocks) { return Partition{n, std::move(blocks)}; }

}  // namespace

TEST_CASE("find and unite") {
    DisjointSet ds(5);
    for (Index i = 0; i < 5; ++i) CHECK(ds.find(i) == i);
    ds.unite(0, 1);
    ds.unite(1, 2);
    CHECK(ds.find(0) == ds.find(2));
    CHECK_FALSE(ds.same(0, 3));
    CHECK_FALSE(ds.unite(2, 0));
    CHECK(ds.stats().unions == 3);
}

TEST_CASE("random union scripts match connected components") {
    Rng rng(21);
    for (int t = 0; t < 50; ++t) {
        const std::size_t n = 10;
        DisjointSet ds(n);
        std::vector<std::pair<std::size_t, std::size_t>> edges;
        std::uniform_int_distribution<Index> pick(0, n - 1);
        for (int k = 0; k < 6; ++k) {
            const Index a = pick(rng), b = pick(rng);
            ds.unite(a, b);
            edges.emplace_back(a, b);
        }
        const auto label = oracle::components(n, edges);
        for (Index i = 0; i < n; ++i) {
            for (Index j = 0; j < n; ++j) REQUIRE(ds.same(i, j) == (label[i] == label[j]));
        }
    }
}

TEST_CASE("intersection") {
    const Partition a = make(5, {{0, 1, 2}, {3, 4}});
    const Partition b = make(5, {{0, 1}, {2, 3, 4}});
    DisjointSet ra = partition_to_ds(a), rb = partition_to_ds(b);
    DisjointSet q = intersection(ra, rb);
    CHECK(ds_to_partition(q) == make(5, {{0, 1}, {2}, {3, 4}}));

    DisjointSet singles(5);
    DisjointSet q2 = intersection(ra, singles);
    CHECK(ds_to_partition(q2) == make(5, {{0}, {1}, {2}, {3}, {4}}));

    DisjointSet ra2 = partition_to_ds(a);
    DisjointSet self = intersection(ra, ra2);
    CHECK(equal(self, ra));

    DisjointSet other(4);
    CHECK_THROWS_AS(intersection(ra, other), Error);
}

TEST_CASE("intersection against the pairwise definition") {
    Rng rng(22);
    for (int t = 0; t < 100; ++t) {
        std::uniform_int_distribution<std::size_t> size(1, 200);
        const std::size_t n = size(rng);
        const Partition a = random_partition(n, rng), b = random_partition(n, rng);
        DisjointSet ra = partition_to_ds(a), rb = partition_to_ds(b);
        DisjointSet q = intersection(ra, rb);
        REQUIRE(oracle::is_pairwise_intersection(a, b, ds_to_partition(q)));
    }
}

TEST_CASE("intersection is commutative and associative up to equivalence") {
    Rng rng(23);
    for (int t = 0; t < 30; ++t) {
        const std::size_t n = 60;
        const Partition a = random_partition(n, rng), b = random_partition(n, rng), c = random_partition(n, rng);
        DisjointSet ra = partition_to_ds(a), rb = partition_to_ds(b), rc = partition_to_ds(c);
        DisjointSet ab = intersection(ra, rb), ba = intersection(rb, ra);
        REQUIRE(equal(ab, ba));
        DisjointSet bc = intersection(rb, rc);
        DisjointSet left = intersection(ab, rc), right = intersection(ra, bc);
        REQUIRE(equal(left, right));
    }
}

TEST_CASE("canonical form") {
    DisjointSet singles(4);
    CHECK(canonical(singles) == std::vector<Index>{0, 1, 2, 3});
    DisjointSet one(4);
    one.unite(3, 2);
    one.unite(1, 3);
    one.unite(0, 1);
    CHECK(canonical(one) == std::vector<Index>{0, 0, 0, 0});

    Rng rng(24);
    for (int t = 0; t < 50; ++t) {
        const Partition p = random_partition(80, rng);
        DisjointSet ds = partition_to_ds(p);
        const auto r = canonical(ds);
        const auto blocks = oracle::block_of(p);
        for (std::size_t i = 0; i < p.n; ++i) {
            std::size_t least = i;
            for (std::size_t j = 0; j < p.n; ++j) {
                if (blocks[j] == blocks[i]) least = std::min(least, j);
            }
            REQUIRE(r[i] == least);
            REQUIRE(r[r[i]] == r[i]);
            REQUIRE(r[i] <= i);
        }
    }
}

TEST_CASE("equality") {
    DisjointSet a(3), b(3);
    a.unite(0, 1);
    b.unite(1, 0);
    CHECK(equal(a, a));
    CHECK(equal(a, b));
    DisjointSet c(3);
    c.unite(0, 2);
    CHECK_FALSE(equal(a, c));
    DisjointSet d(4);
    CHECK_THROWS_AS(equal(a, d), Error);
}

TEST_CASE("representative arrays") {
    const std::vector<Index> good{0, 0, 2, 2};
    DisjointSet ds = DisjointSet::from_representatives(good);
    CHECK(ds.same(0, 1));
    CHECK_FALSE(ds.same(1, 2));
    const std::vector<Index> bad{1, 2, 2};
    CHECK_THROWS_AS(DisjointSet::from_representatives(bad), Error);
}

TEST_CASE("partition conversions") {
    DisjointSet empty(0);
    CHECK(ds_to_partition(empty) == Partition{});
    CHECK(normalized(make(3, {{2, 0}, {1}})) == make(3, {{0, 2}, {1}}));
    CHECK_THROWS_AS(partition_to_ds(make(3, {{0, 1}, {1, 2}})), Error);
    CHECK_THROWS_AS(partition_to_ds(make(3, {{0, 1}})), Error);
    CHECK_THROWS_AS(partition_to_ds(make(3, {{0, 1, 2}, {}})), Error);
    CHECK_THROWS_AS(partition_to_ds(make(2, {{0, 5}})), Error);

    Rng rng(25);
    for (int t = 0; t < 100; ++t) {
        const Partition p = random_partition(50, rng);
        DisjointSet ds = partition_to_ds(p);
        const Partition back = ds_to_partition(ds);
        DisjointSet again = partition_to_ds(back);
        REQUIRE(equal(ds, again));
        REQUIRE(back == normalized(p));
    }
}

TEST_CASE("components of graphs intersected") {
    // Nodes linked in both graphs' component structure: the intersection of
    // the two component partitions is the "connected in both" relation.
    Rng rng(26);
    for (int t = 0; t < 30; ++t) {
        const std::size_t n = 20;
        std::uniform_int_distribution<std::size_t> pick(0, n - 1);
        std::vector<std::pair<std::size_t, std::size_t>> e1, e2;
        for (int k = 0; k < 12; ++k) e1.emplace_back(pick(rng), pick(rng));
        for (int k = 0; k < 12; ++k) e2.emplace_back(pick(rng), pick(rng));
        DisjointSet g1(n), g2(n);
        for (auto [a, b] : e1) g1.unite(static_cast<Index>(a), static_cast<Index>(b));
        for (auto [a, b] : e2) g2.unite(static_cast<Index>(a), static_cast<Index>(b));
        DisjointSet q = intersection(g1, g2);
        const auto c1 = oracle::components(n, e1), c2 = oracle::components(n, e2);
        for (Index i = 0; i < n; ++i) {
            for (Index j = 0; j < n; ++j) REQUIRE(q.same(i, j) == (c1[i] == c1[j] && c2[i] == c2[j]));
        }
    }
}

TEST_CASE("operation count grows linearly") {
    Rng rng(27);
    for (std::size_t n : {1000, 10000, 100000}) {
        const Partition a = random_partition(n, rng), b = random_partition(n, rng);
        DisjointSet ra = partition_to_ds(a), rb = partition_to_ds(b);
        ra.reset_stats();
        rb.reset_stats();
        intersection(ra, rb);
        const auto ops = ra.stats().finds + rb.stats().finds;
        CHECK(ops == 2 * n);
    }
}
