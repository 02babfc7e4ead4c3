#include <doctest.h>

#include <map>

#include "jmeet/generators.hpp"
#include "jmeet/io.hpp"
#include "oracles.hpp"

using namespace jmeet;

TEST_CASE("fixed lattices") {
    CHECK(powerset_lattice(0).size() == 1);
    const Lattice p4 = powerset_lattice(4);
    CHECK(p4.size() == 16);
    CHECK(p4.join_irreducibles().size() == 4);

    const Lattice m2 = mn_lattice(2);
    CHECK(m2.size() == 4);
    CHECK(m2.lower_covers(3).to_vector() == std::vector<Element>{1, 2});
    CHECK(m2.is_distributive());
    CHECK_FALSE(mn_lattice(3).is_distributive());
    const Lattice m1 = mn_lattice(1);
    CHECK(m1.size() == 3);
    CHECK(format_lattice(m1) == format_lattice(chain_lattice(3)));

    const Lattice c = chain_lattice(5);
    CHECK(c.join_irreducibles().size() == 4);
    CHECK_THROWS_AS(chain_lattice(0), Error);
}

TEST_CASE("posets") {
    const Poset chain = Poset::chain(3);
    CHECK(chain.below == std::vector<std::uint32_t>{0, 0b1, 0b11});
    Rng rng(51);
    for (int t = 0; t < 50; ++t) {
        const Poset p = random_poset(8, rng);
        for (std::size_t j = 0; j < p.k; ++j) {
            REQUIRE((p.below[j] >> j) == 0);  // only smaller labels below
            for (std::size_t i = 0; i < p.k; ++i) {
                if ((p.below[j] >> i) & 1U) REQUIRE((p.below[i] & ~p.below[j]) == 0);  // closed
            }
        }
    }
}

TEST_CASE("down-set lattices") {
    const Lattice anti = downset_lattice(Poset::antichain(3));
    CHECK(anti.size() == 8);
    CHECK(anti.join_irreducibles().size() == 3);
    CHECK(anti.is_distributive());
    CHECK(anti.cover_edge_count() == powerset_lattice(3).cover_edge_count());

    const Lattice chain = downset_lattice(Poset::chain(3));
    CHECK(format_lattice(chain) == format_lattice(chain_lattice(4)));

    CHECK_THROWS_AS(downset_lattice(Poset::antichain(10), 100), Error);
}

TEST_CASE("random distributive lattices") {
    Rng rng(42);
    const Lattice L = random_distributive(5, rng);
    CHECK(L.is_distributive());
    CHECK(oracle::is_distributive(L));
    for (int t = 0; t < 30; ++t) {
        const Lattice d = random_distributive(7, rng);
        REQUIRE(d.is_distributive());
        // Birkhoff: join-irreducibles correspond to the poset points
        REQUIRE(d.join_irreducibles().size() == 7);
    }
    CHECK_THROWS_AS(random_distributive(16, rng, {0.0, 100, 3}), Error);
    CHECK_THROWS_AS(random_distributive(17, rng), Error);
}

TEST_CASE("lattices from set families") {
    const Lattice diamond = lattice_from_family(3, {0b001, 0b010, 0b100});
    CHECK(format_lattice(diamond) == format_lattice(mn_lattice(3)));
    const Lattice nested = lattice_from_family(3, {0b001, 0b011});
    CHECK(format_lattice(nested) == format_lattice(chain_lattice(3)));
    CHECK_THROWS_AS(lattice_from_family(2, {0b100}), Error);
}

TEST_CASE("random arbitrary lattices") {
    Rng rng(52);
    int non_distributive = 0;
    for (int t = 0; t < 50; ++t) {
        std::uniform_int_distribution<std::size_t> size(1, 100);
        const std::size_t target = size(rng);
        const Lattice L = random_arbitrary(target, rng);
        REQUIRE(L.size() <= target);
        REQUIRE(L.size() >= 1);
        REQUIRE_NOTHROW(parse_lattice(format_lattice(L)));
        if (!L.is_distributive()) ++non_distributive;
    }
    CHECK(non_distributive > 25);
    CHECK_THROWS_AS(random_arbitrary(513, rng), Error);
}

TEST_CASE("uniform random partitions") {
    Rng rng(53);
    CHECK(random_partition(0, rng) == Partition{});
    CHECK(random_partition(1, rng) == Partition{1, {{0}}});

    // Bell(3) = 5 partitions, each with probability 1/5.
    std::map<std::vector<std::vector<Index>>, int> counts;
    const int samples = 100000;
    for (int s = 0; s < samples; ++s) ++counts[random_partition(3, rng).blocks];
    CHECK(counts.size() == 5);
    double chi2 = 0;
    for (const auto& [blocks, count] : counts) {
        const double freq = static_cast<double>(count) / samples;
        CHECK(freq == doctest::Approx(0.2).epsilon(0.05));  // 0.2 +- 0.01
        chi2 += (count - samples / 5.0) * (count - samples / 5.0) / (samples / 5.0);
    }
    CHECK(chi2 < 18.47);  // 4 degrees of freedom, p = 0.001

    // Bell(5) = 52
    std::map<std::vector<std::vector<Index>>, int> five;
    for (int s = 0; s < 52000; ++s) ++five[random_partition(5, rng).blocks];
    CHECK(five.size() == 52);
    double chi5 = 0;
    for (const auto& [blocks, count] : five) chi5 += (count - 1000.0) * (count - 1000.0) / 1000.0;
    CHECK(chi5 < 94.5);  // 51 degrees of freedom, p = 0.001
}

TEST_CASE("urn sampler block counts") {
    // Above the exact-table limit the expected block count is
    // B(n+1)/B(n) - 1, which is 341.72 for n = 2000.
    Rng rng(54);
    double total = 0;
    for (int s = 0; s < 40; ++s) {
        const Partition p = random_partition(2000, rng);
        validate_partition(p);
        total += static_cast<double>(p.blocks.size());
    }
    const double mean = total / 40;
    CHECK(mean > 335);
    CHECK(mean < 349);
}

TEST_CASE("partition generation is deterministic and valid") {
    Rng a(7), b(7);
    const Partition pa = random_partition(10000, a);
    const Partition pb = random_partition(10000, b);
    CHECK(pa == pb);
    validate_partition(pa);
    CHECK(pa == normalized(pa));
    Rng c(8);
    const Partition big = random_partition(1000000, c);
    CHECK(big.n == 1000000);
    CHECK_THROWS_AS(random_partition(1000001, c), Error);
}

TEST_CASE("random maps") {
    Rng rng(55);
    const Lattice L = mn_lattice(4);
    const Map m = random_map(L, rng);
    CHECK(m.size() == L.size());
    for (Element x : m) CHECK(x < L.size());
}

TEST_CASE("generator configs are reproducible") {
    for (const char* kind : {"powerset", "mn", "chain", "dist", "arb"}) {
        const GenConfig config{99, kind, 6, false};
        CHECK(format_lattice(generate_lattice(config)) == format_lattice(generate_lattice(config)));
    }
    CHECK(generate_lattice({1, "random", 5, true}).is_distributive());
    CHECK_THROWS_AS(generate_lattice({1, "bogus", 5, false}), Error);
}
