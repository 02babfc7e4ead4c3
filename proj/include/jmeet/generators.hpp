#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "jmeet/endo.hpp"
#include "jmeet/lattice.hpp"
#include "jmeet/partition.hpp"

namespace jmeet {

/// Subsets of a k-element set as bitmasks; Error{too_large} for k > 24.
Lattice powerset_lattice(unsigned k);

/// Bottom 0, atoms 1..n, top n + 1.
Lattice mn_lattice(std::size_t n);

/// 0 < 1 < ... < n - 1. Error{not_bounded} for n = 0.
Lattice chain_lattice(std::size_t n);

/// A finite poset on points 0..k-1 (k <= 32), stored as strict down-sets:
/// bit j of below[i] is set iff j < i in the order.
struct Poset {
    std::size_t k = 0;
    std::vector<std::uint32_t> below;

    static Poset antichain(std::size_t k);
    static Poset chain(std::size_t k);
};

inline constexpr double default_cover_probability = 0.3;

/// Each pair i < j becomes a relation with probability p; the result is
/// transitively closed.
Poset random_poset(std::size_t k, Rng& rng, double p = default_cover_probability);

/// Down-sets of the poset ordered by inclusion, discovered breadth-first
/// from the empty set by adding one minimal missing point at a time; the
/// empty set is element 0. Error{output_too_large} above `max_size` elements.
Lattice downset_lattice(const Poset& poset, std::size_t max_size = Lattice::max_tabled_size);

struct DistributiveOptions {
    double p = default_cover_probability;
    std::size_t max_size = 512;
    unsigned attempts = 32;
};

/// Down-set lattice of a random poset on k <= 16 points; always
/// distributive. Fresh posets are drawn while the output is too large;
/// Error{output_too_large} once the attempts run out.
Lattice random_distributive(std::size_t k, Rng& rng, const DistributiveOptions& options = {});

/// Closes `family` (subsets of a ground set of at most 64 points) under
/// intersection, adds the full ground set as top and orders the result by
/// inclusion. Elements are indexed by (size, code), so the bottom is 0 and
/// the top is n - 1. Error{too_large} past the table limit.
Lattice lattice_from_family(unsigned ground, const std::vector<std::uint64_t>& family);

/// Intersection closure of random subsets grown until it reaches about
/// `target_n` elements (target_n <= 512). Usually not distributive.
Lattice random_arbitrary(std::size_t target_n, Rng& rng);

inline constexpr std::size_t exact_partition_limit = 1000;
inline constexpr std::size_t max_partition_size = 1'000'000;

/// Uniformly random set partition of 0..n-1, returned normalized.
///
/// Up to 1000 elements the block count is drawn with Stirling weights and
/// elements are placed by the conditional recurrence
/// S(m, k) = k S(m-1, k) + S(m-1, k-1); the Stirling numbers are exact
/// big integers reduced to double ratios and cached. Beyond that the block
/// count K is drawn with weight K^n / K! and elements are thrown uniformly
/// into K urns, keeping the non-empty ones. Both are uniform up to double
/// rounding of the weights. Error{too_large} above 10^6 elements.
Partition random_partition(std::size_t n, Rng& rng);

/// Uniformly random self-map, not necessarily join-preserving.
Map random_map(const Lattice& lattice, Rng& rng);

/// Declarative lattice request used by the command line and benchmarks.
struct GenConfig {
    std::uint64_t seed = 0;
    std::string kind = "powerset";  // powerset | mn | chain | dist | arb | random
    std::size_t param = 4;
    bool distributive = false;  // kind "random" means dist when set, arb otherwise
};

/// Same config, same lattice. Error{parse_error} for an unknown kind.
Lattice generate_lattice(const GenConfig& config);

}  // namespace jmeet
