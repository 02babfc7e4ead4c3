#include "jmeet/partition.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

namespace jmeet {

namespace {

void require_same_size(std::size_t a, std::size_t b) {
    if (a != b) {
        throw Error(Errc::size_mismatch, "disjoint sets over " + std::to_string(a) + " and " + std::to_string(b) +
                                             " elements");
    }
}

}  // namespace

DisjointSet::DisjointSet(std::size_t n) : parent_(n), rank_(n, 0) {
    for (std::size_t i = 0; i < n; ++i) parent_[i] = static_cast<Index>(i);
}

DisjointSet DisjointSet::from_representatives(std::span<const Index> rep) {
    DisjointSet ds(rep.size());
    for (std::size_t i = 0; i < rep.size(); ++i) {
        if (rep[i] >= rep.size() || rep[rep[i]] != rep[i]) {
            throw Error(Errc::not_a_partition, "representative array is not idempotent at " + std::to_string(i));
        }
        ds.parent_[i] = rep[i];
        if (rep[i] != i) ds.rank_[rep[i]] = 1;
    }
    return ds;
}

Index DisjointSet::find(Index i) {
    ++stats_.finds;
    Index root = i;
    while (parent_[root] != root) {
        root = parent_[root];
        ++stats_.hops;
    }
    while (parent_[i] != root) {
        const Index next = parent_[i];
        parent_[i] = root;
        i = next;
    }
    return root;
}

bool DisjointSet::unite(Index i, Index j) {
    ++stats_.unions;
    Index a = find(i);
    Index b = find(j);
    if (a == b) return false;
    if (rank_[a] < rank_[b]) std::swap(a, b);
    parent_[b] = a;
    if (rank_[a] == rank_[b]) ++rank_[a];
    return true;
}

void validate_partition(const Partition& partition) {
    std::vector<bool> seen(partition.n, false);
    std::size_t count = 0;
    for (const auto& block : partition.blocks) {
        if (block.empty()) throw Error(Errc::not_a_partition, "empty block");
        for (Index x : block) {
            if (x >= partition.n) throw Error(Errc::not_a_partition, "element " + std::to_string(x) + " out of range");
            if (seen[x]) throw Error(Errc::not_a_partition, "element " + std::to_string(x) + " appears twice");
            seen[x] = true;
            ++count;
        }
    }
    if (count != partition.n) {
        throw Error(Errc::not_a_partition, std::to_string(partition.n - count) + " elements missing from the blocks");
    }
}

Partition normalized(Partition partition) {
    for (auto& block : partition.blocks) std::sort(block.begin(), block.end());
    std::sort(partition.blocks.begin(), partition.blocks.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return partition;
}

DisjointSet intersection(DisjointSet& first, DisjointSet& second) {
    require_same_size(first.size(), second.size());
    const std::size_t n = first.size();
    std::vector<std::uint64_t> key(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto idx = static_cast<Index>(i);
        key[i] = (std::uint64_t{first.find(idx)} << 32) | second.find(idx);
    }
    std::unordered_map<std::uint64_t, Index> section;
    section.reserve(n);
    for (std::size_t i = 0; i < n; ++i) section[key[i]] = static_cast<Index>(i);
    std::vector<Index> q(n);
    for (std::size_t i = 0; i < n; ++i) q[i] = section[key[i]];
    return DisjointSet::from_representatives(q);
}

std::vector<Index> canonical(DisjointSet& ds) {
    const std::size_t n = ds.size();
    std::vector<Index> rep(n);
    for (std::size_t i = 0; i < n; ++i) rep[i] = ds.find(static_cast<Index>(i));
    // Representatives are themselves indices, so the table t is a flat array.
    std::vector<Index> least(n);
    for (std::size_t i = 0; i < n; ++i) least[rep[i]] = rep[i];
    for (std::size_t i = 0; i < n; ++i) least[rep[i]] = std::min(least[rep[i]], static_cast<Index>(i));
    std::vector<Index> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = least[rep[i]];
    return out;
}

bool equal(DisjointSet& first, DisjointSet& second) {
    require_same_size(first.size(), second.size());
    return canonical(first) == canonical(second);
}

DisjointSet partition_to_ds(const Partition& partition) {
    validate_partition(partition);
    DisjointSet ds(partition.n);
    for (const auto& block : partition.blocks) {
        for (std::size_t k = 1; k < block.size(); ++k) ds.unite(block[0], block[k]);
    }
    return ds;
}

Partition ds_to_partition(DisjointSet& ds) {
    const auto rep = canonical(ds);
    Partition out;
    out.n = ds.size();
    std::vector<std::size_t> slot(out.n, 0);
    for (std::size_t i = 0; i < out.n; ++i) {
        if (rep[i] == i) {
            slot[i] = out.blocks.size();
            out.blocks.emplace_back();
        }
        out.blocks[slot[rep[i]]].push_back(static_cast<Index>(i));
    }
    return out;
}

}  // namespace jmeet
