#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "jmeet/error.hpp"

namespace jmeet {

using Index = std::uint32_t;

/// Union-find over 0..n-1 with path compression and union by rank.
///
/// Viewed as a representative function r with r(r(i)) = r(i): i and j are
/// equivalent iff find(i) == find(j). `find` compresses paths and therefore
/// mutates; a DisjointSet must not be shared between threads. Canonical
/// arrays and Partitions are the immutable, shareable forms.
class DisjointSet {
public:
    /// Operation tallies: calls to find/unite and parent-pointer hops.
    struct Stats {
        std::uint64_t finds = 0;
        std::uint64_t unions = 0;
        std::uint64_t hops = 0;
    };

    DisjointSet() = default;
    explicit DisjointSet(std::size_t n);

    /// Builds a flat forest from an idempotent representative array.
    /// Throws Error{not_a_partition} if rep[rep[i]] != rep[i] somewhere.
    static DisjointSet from_representatives(std::span<const Index> rep);

    std::size_t size() const noexcept { return parent_.size(); }
    Index find(Index i);
    /// Links the classes of i and j; returns false if they were already linked.
    bool unite(Index i, Index j);
    bool same(Index i, Index j) { return find(i) == find(j); }

    const Stats& stats() const noexcept { return stats_; }
    void reset_stats() noexcept { stats_ = {}; }

private:
    std::vector<Index> parent_;
    std::vector<std::uint8_t> rank_;
    Stats stats_;
};

/// A set partition of 0..n-1 as a list of blocks.
struct Partition {
    std::size_t n = 0;
    std::vector<std::vector<Index>> blocks;

    friend bool operator==(const Partition&, const Partition&) = default;
};

/// Throws Error{not_a_partition} unless the blocks are non-empty, pairwise
/// disjoint and cover exactly 0..n-1.
void validate_partition(const Partition& partition);

/// Blocks sorted internally, then ordered by their minimum element.
Partition normalized(Partition partition);

/// i ~ j iff i ~ j in both inputs; the result is a flat forest q with
/// q(q(i)) = q(i). Pair keys are packed into one 64-bit hash key, and the
/// last index written for each key is its representative. Linear apart from
/// the finds on the inputs.
DisjointSet intersection(DisjointSet& first, DisjointSet& second);

/// Minimum-element representative array: same classes as r, r^(r^(i)) =
/// r^(i) and r^(i) <= i.
std::vector<Index> canonical(DisjointSet& ds);

/// Same equivalence, decided by comparing canonical arrays.
bool equal(DisjointSet& first, DisjointSet& second);

DisjointSet partition_to_ds(const Partition& partition);
/// Blocks by ascending minimum, elements ascending within each block.
Partition ds_to_partition(DisjointSet& ds);

}  // namespace jmeet
