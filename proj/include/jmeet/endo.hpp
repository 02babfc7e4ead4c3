#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <utility>
#include <vector>

#include "jmeet/lattice.hpp"

namespace jmeet {

using Map = std::vector<Element>;
using Rng = std::mt19937_64;

/// A self-map on a lattice stored as its image array: map()[a] is the image
/// of a. Maps are first-class whether or not they preserve joins; the
/// `is_validated` flag records that this value is known to be a
/// join-endomorphism, either because it was produced by a construction that
/// guarantees it or because `validate` checked it.
class Endo {
public:
    Endo() = default;
    explicit Endo(Map map) : map_(std::move(map)) {}

    /// Wraps a map the caller guarantees to be a join-endomorphism.
    static Endo assume_join_endo(Map map) {
        Endo e(std::move(map));
        e.validated_ = true;
        return e;
    }

    const Map& map() const noexcept { return map_; }
    std::span<const Element> view() const noexcept { return map_; }
    std::size_t size() const noexcept { return map_.size(); }
    Element operator[](Element a) const noexcept { return map_[a]; }
    Element operator()(Element a) const noexcept { return map_[a]; }

    bool is_validated() const noexcept { return validated_; }
    /// Checks the join-endomorphism laws once and remembers a positive result.
    bool validate(const Lattice& lattice);

    friend bool operator==(const Endo& a, const Endo& b) noexcept { return a.map_ == b.map_; }

private:
    Map map_;
    bool validated_ = false;
};

/// Set of pairs (a, b) of join-irreducibles, sorted and duplicate-free.
using JIRelation = std::vector<std::pair<Element, Element>>;

/// f(bottom) = bottom and f(a v b) = f(a) v f(b) for all pairs.
bool is_join_endo(const Lattice& lattice, std::span<const Element> map);

/// First pair (a, b), a <= b by index, at which f(a v b) != f(a) v f(b).
/// Returns nothing when the map preserves binary joins.
std::optional<std::pair<Element, Element>> join_violation(const Lattice& lattice, std::span<const Element> map);

bool is_monotone(const Lattice& lattice, std::span<const Element> map);

/// f <= g pointwise.
bool pointwise_leq(const Lattice& lattice, std::span<const Element> f, std::span<const Element> g);

Endo pointwise_meet(const Lattice& lattice, const Endo& f, const Endo& g);
/// The join of two validated join-endomorphisms is again one and is flagged so.
Endo pointwise_join(const Lattice& lattice, const Endo& f, const Endo& g);

Endo identity_endo(const Lattice& lattice);
Endo bottom_endo(const Lattice& lattice);

/// f_{a,b}: x maps to b when a <= x, to bottom otherwise. Throws
/// Error{not_join_irreducible} unless a is join-irreducible. The result is a
/// join-endomorphism, and flagged as validated, when a is join-prime (always
/// the case in a distributive lattice) or b is bottom; in M3, f_{1,1} sends
/// 2 and 3 to bottom but their join to 1.
Endo f_ab(const Lattice& lattice, Element a, Element b);

/// R = {(a, b) in J(L)^2 | a <= f(b)}. Distributive lattices only.
JIRelation to_ji_relation(const Lattice& lattice, const Endo& f);

/// F_R(c) = join of {a in J(L) | (a, b) in R and b <= c for some b}.
/// Distributive lattices only.
Endo from_ji_relation(const Lattice& lattice, const JIRelation& relation);

/// {f_{a,b} | a, b in J(L)} without duplicates, ordered by (a, b).
std::vector<Endo> ji_endos(const Lattice& lattice);

/// Elements with exactly one upper cover.
std::vector<Element> meet_irreducibles(const Lattice& lattice);

/// Pointwise join of `density` maps g_{c,b}, c uniform among the
/// meet-irreducibles and b uniform in L, where g_{c,b}(x) is bottom for
/// x <= c and b otherwise. Each g_{c,b} preserves joins in any lattice; in a
/// distributive lattice the g_{c,b} are exactly the f_{a,b} (c the largest
/// element not above a), so there this samples joins of f_{a,b} with a
/// uniform in J(L).
Endo random_endo(const Lattice& lattice, Rng& rng, std::size_t density);
Endo random_endo(const Lattice& lattice, Rng& rng, std::size_t density);
/// Same with the default density |J(L)|.
Endo random_endo(const Lattice& lattice, Rng& rng);

}  // namespace jmeet
