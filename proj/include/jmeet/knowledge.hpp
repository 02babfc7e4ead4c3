#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "jmeet/endo.hpp"
#include "jmeet/partition.hpp"

namespace jmeet {

/// Event over states 0..n-1: bit k is set iff state k belongs to the event.
using EventCode = std::uint64_t;

inline constexpr EventCode full_event(unsigned n) noexcept {
    return n >= 64 ? ~EventCode{0} : (EventCode{1} << n) - 1;
}

/// Accessibility relation on n states as a dense boolean matrix.
class Relation {
public:
    Relation() = default;
    explicit Relation(std::size_t n) : n_(n), cells_(n * n, 0) {}

    static Relation identity(std::size_t n);
    static Relation full(std::size_t n);
    static Relation from_partition(const Partition& partition);

    std::size_t size() const noexcept { return n_; }
    bool contains(std::size_t from, std::size_t to) const noexcept { return cells_[from * n_ + to] != 0; }
    void set(std::size_t from, std::size_t to, bool value = true) noexcept { cells_[from * n_ + to] = value ? 1 : 0; }

    /// States accessible from `from`, as an event code. Needs n <= 64.
    EventCode row_mask(std::size_t from) const;

    bool is_reflexive() const noexcept;
    bool is_symmetric() const noexcept;
    bool is_transitive() const noexcept;
    bool is_euclidean() const noexcept;
    bool is_equivalence() const noexcept { return is_reflexive() && is_symmetric() && is_transitive(); }

    /// Block form of an equivalence, normalized; nothing otherwise.
    std::optional<Partition> to_partition() const;

    friend bool operator==(const Relation&, const Relation&) = default;

private:
    std::size_t n_ = 0;
    std::vector<std::uint8_t> cells_;
};

/// Pointwise conjunction of two relations on the same states.
Relation intersect(const Relation& first, const Relation& second);

/// K(E) = {w | R(w) is a subset of E}.
EventCode k_of(const Relation& relation, EventCode event);

/// D(E) = {w | R_i(w) and R_j(w) together lie inside E} = K of R_i and R_j.
EventCode dk_of(const Relation& first, const Relation& second, EventCode event);

/// Knowledge operator tabulated over all 2^n events: vk[E] = K(E).
struct KOpArray {
    unsigned n = 0;
    std::vector<std::uint32_t> vk;

    friend bool operator==(const KOpArray&, const KOpArray&) = default;
};

inline constexpr unsigned default_kop_cap = 20;

/// Error{too_many_states} when n exceeds `cap` (at most 32).
KOpArray build_kop_array(const Relation& relation, unsigned cap = default_kop_cap);

/// R(w, w') iff w lies outside K(complement of {w'}).
Relation relation_from_kop(const KOpArray& kop);

/// Decides K_m = D_{i,j} from the operator arrays alone by probing the n
/// join-irreducible events p_k = (2^n - 1) - 2^k of the reverse-inclusion
/// lattice: true iff vk_m[p_k] == vk_i[p_k] | vk_j[p_k] for every k.
bool decide_dk_operators(const KOpArray& ki, const KOpArray& kj, const KOpArray& km);

/// R_m == R_i and R_j, cell by cell.
bool decide_dk_relations(const Relation& ri, const Relation& rj, const Relation& rm);

/// Partition form: intersects P_i and P_j with union-find and compares the
/// canonical forms with P_m.
bool decide_dk_partitions(const Partition& pi, const Partition& pj, const Partition& pm);

/// The lattice of events ordered by reverse inclusion: join is
/// intersection, meet is union, bottom is the full event. Element indices
/// are event codes.
Lattice event_lattice(unsigned n);

/// A knowledge operator as a self-map of the event lattice.
Endo kop_as_endo(const KOpArray& kop);
/// Inverse of kop_as_endo; the map must come from a lattice of 2^n events.
KOpArray endo_as_kop(const Endo& endo, unsigned n);

inline constexpr unsigned max_endo_meet_states = 12;

/// Distributed knowledge as the meet, in the lattice of join-endomorphisms
/// of the event lattice, of the two agents' operators (computed with the
/// linear cover recursion). Error{too_many_states} above 12 states.
Endo dk_as_endo_meet(const Relation& ri, const Relation& rj);

/// States plus named agents. Agents whose relation is an equivalence carry
/// the block form as well (an Aumann structure when all of them do).
class KnowledgeStructure {
public:
    struct Agent {
        std::string name;
        Relation relation;
        std::optional<Partition> partition;
    };

    explicit KnowledgeStructure(std::size_t states) : states_(states) {}

    std::size_t states() const noexcept { return states_; }
    const std::vector<Agent>& agents() const noexcept { return agents_; }
    const Agent& agent(const std::string& name) const;

    /// Error{size_mismatch} when the relation is over a different state set.
    void add_agent(std::string name, Relation relation);
    void add_agent(std::string name, const Partition& partition);
    /// Adds an agent whose relation is the intersection of two existing
    /// agents' relations; its operator is their distributed knowledge.
    /// Chaining this composes distributed knowledge of larger groups.
    void add_distributed(std::string name, const std::string& first, const std::string& second);

    bool is_aumann() const noexcept;

    EventCode knows(const std::string& name, EventCode event) const;

private:
    std::size_t states_;
    std::vector<Agent> agents_;
};

}  // namespace jmeet
