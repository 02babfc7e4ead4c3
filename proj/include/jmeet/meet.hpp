#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

#include "jmeet/endo.hpp"
#include "jmeet/lattice.hpp"

namespace jmeet {

struct MeetResult {
    Endo result;
    OpCounters counters;
    std::uint64_t iterations = 0;  // conflict fixes, or outer passes for the lazy variant
};

// ---------------------------------------------------------------------------
// Distributive lattices. Both take join-endomorphisms f, g and return their
// greatest lower bound in the lattice of join-endomorphisms. Inputs that are
// not yet validated are checked; Error{not_join_endo} if the check fails,
// Error{not_distributive} on a non-distributive lattice.
// ---------------------------------------------------------------------------

/// Quadratic baseline: h(c) = meet over a <= c of f(a) v g(c - a).
/// Each term costs one counted join and one counted meet (the fold starts at
/// top); subtraction is uncounted.
MeetResult dmeet(const Lattice& lattice, const Endo& f, const Endo& g);

/// Linear cover recursion: h(a) = f(a) ^ g(a) on join-irreducibles,
/// h(bottom) = bottom, and h(a) = h(b) v h(c) for the first two lower covers
/// b < c of any other a. Exactly |J(L)| meets and n - |J(L)| - 1 joins.
MeetResult dmeet_plus(const Lattice& lattice, const Endo& f, const Endo& g);

// ---------------------------------------------------------------------------
// Arbitrary lattices. Each computes the greatest join-endomorphism below an
// arbitrary map h0; applied to the pointwise meet of f and g that is the
// meet of f and g. The image of bottom is reset to bottom before the loop
// since every join-endomorphism fixes it.
//
// Conflict search runs over pairs (a, b) with a <= b by index in row-major
// order. The plain variants restart from the first pair after every fix;
// the starred variants resume after the pair just fixed and stop once a
// full cycle of pairs passes without a conflict.
// ---------------------------------------------------------------------------

MeetResult gmeet(const Lattice& lattice, std::span<const Element> h0);
MeetResult gmeet_star(const Lattice& lattice, std::span<const Element> h0);
MeetResult gmeet_mono(const Lattice& lattice, std::span<const Element> h0);
MeetResult gmeet_mono_star(const Lattice& lattice, std::span<const Element> h0);
MeetResult gmeet_mono_lazy(const Lattice& lattice, std::span<const Element> h0);

/// Greatest monotone map below h0. One counted meet per cover edge.
Map mono_below(const Lattice& lattice, std::span<const Element> h0);
Map mono_below(const Lattice& lattice, std::span<const Element> h0, OpCounters& counters);

struct BruteForceLimits {
    /// Bound on the product, over join-irreducibles j, of |down(h0(j))|.
    std::uint64_t max_assignments = 10'000'000;
};

/// Exhaustive oracle: the pointwise join of every join-endomorphism below
/// h0. A join-endomorphism is fixed by its values on J(L), so the search
/// enumerates those values (pruned by monotonicity and h <= h0) and keeps
/// the extensions that preserve joins. Error{instance_too_large} past the
/// budget.
Endo brute_force_max_endo_below(const Lattice& lattice, std::span<const Element> h0,
                                const BruteForceLimits& limits = {});

enum class Algorithm { dmeet, dmeet_plus, gmeet, gmeet_star, gmeet_mono, gmeet_mono_star, gmeet_mono_lazy, brute };

inline constexpr Algorithm all_algorithms[] = {
    Algorithm::dmeet,      Algorithm::dmeet_plus,      Algorithm::gmeet,           Algorithm::gmeet_star,
    Algorithm::gmeet_mono, Algorithm::gmeet_mono_star, Algorithm::gmeet_mono_lazy, Algorithm::brute,
};

/// Names used on the command line: dmeet, dmeet+, gmeet, gmeet*, gmeet_mono,
/// gmeet_mono*, gmeet_mono_lazy, brute.
std::string_view algorithm_name(Algorithm algorithm) noexcept;
std::optional<Algorithm> parse_algorithm(std::string_view name) noexcept;
bool requires_distributive(Algorithm algorithm) noexcept;

/// Meet of f and g by the chosen algorithm. The general algorithms and the
/// brute-force oracle run on the pointwise meet of f and g.
MeetResult compute_meet(Algorithm algorithm, const Lattice& lattice, const Endo& f, const Endo& g,
                        const BruteForceLimits& limits = {});

}  // namespace jmeet
