#pragma once

#include <string>
#include <vector>

#include "jmeet/generators.hpp"
#include "jmeet/lattice.hpp"

namespace fixture {

using jmeet::CoverPair;
using jmeet::Element;
using jmeet::Lattice;
using jmeet::Map;

// M2 is mn_lattice(2): bottom 0, atoms 1 and 2, top 3.
inline const Map m2_f{0, 2, 1, 3};
inline const Map m2_g{0, 3, 2, 3};
inline const Map m2_meet{0, 2, 0, 2};
inline const Map m2_pointwise{0, 2, 0, 3};

// M3 is mn_lattice(3): bottom 0, atoms 1, 2, 3, top 4.
inline const Map m3_f{0, 1, 3, 2, 4};
inline const Map m3_g{0, 4, 2, 3, 4};
inline const Map m3_meet{0, 0, 0, 0, 0};

struct Named {
    std::string name;
    Lattice lattice;
};

/// Every lattice on n <= max_n elements, up to isomorphism but with
/// repeats: the inner n - 2 points get every naturally labelled order
/// (pairs i < j related or not, then closed transitively), bottom and top
/// are added, and the candidates that are lattices are kept.
inline std::vector<Named> all_small_lattices(std::size_t max_n) {
    std::vector<Named> out;
    out.push_back({"n1", jmeet::chain_lattice(1)});
    for (std::size_t n = 2; n <= max_n; ++n) {
        const std::size_t inner = n - 2;
        std::vector<std::pair<std::size_t, std::size_t>> pairs;
        for (std::size_t i = 0; i < inner; ++i) {
            for (std::size_t j = i + 1; j < inner; ++j) pairs.emplace_back(i, j);
        }
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
            std::vector<CoverPair> edges;
            const auto top = static_cast<Element>(n - 1);
            for (std::size_t i = 0; i < inner; ++i) {
                edges.emplace_back(0, static_cast<Element>(i + 1));
                edges.emplace_back(static_cast<Element>(i + 1), top);
            }
            if (inner == 0) edges.emplace_back(0, top);
            for (std::size_t p = 0; p < pairs.size(); ++p) {
                if ((mask >> p) & 1U) {
                    edges.emplace_back(static_cast<Element>(pairs[p].first + 1), static_cast<Element>(pairs[p].second + 1));
                }
            }
            try {
                out.push_back({"n" + std::to_string(n) + "_" + std::to_string(mask), Lattice::from_covers(n, edges)});
            } catch (const jmeet::Error&) {
                // not a lattice
            }
        }
    }
    return out;
}

/// Chains up to 6, M1..M5 and the powersets of 2 and 3 points.
inline std::vector<Named> named_small_lattices() {
    std::vector<Named> out;
    for (std::size_t n = 1; n <= 6; ++n) out.push_back({"chain" + std::to_string(n), jmeet::chain_lattice(n)});
    for (std::size_t n = 1; n <= 5; ++n) out.push_back({"M" + std::to_string(n), jmeet::mn_lattice(n)});
    for (unsigned k = 2; k <= 3; ++k) out.push_back({"powerset" + std::to_string(k), jmeet::powerset_lattice(k)});
    return out;
}

}  // namespace fixture
