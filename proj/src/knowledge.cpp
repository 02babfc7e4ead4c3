#include "jmeet/knowledge.hpp"

#include <algorithm>
#include <bit>

#include "jmeet/meet.hpp"

namespace jmeet {

namespace {

void require_same_states(std::size_t a, std::size_t b) {
    if (a != b) {
        throw Error(Errc::size_mismatch, "state sets of size " + std::to_string(a) + " and " + std::to_string(b));
    }
}

}  // namespace

Relation Relation::identity(std::size_t n) {
    Relation r(n);
    for (std::size_t w = 0; w < n; ++w) r.set(w, w);
    return r;
}

Relation Relation::full(std::size_t n) {
    Relation r(n);
    std::fill(r.cells_.begin(), r.cells_.end(), 1);
    return r;
}

Relation Relation::from_partition(const Partition& partition) {
    validate_partition(partition);
    Relation r(partition.n);
    for (const auto& block : partition.blocks) {
        for (Index a : block) {
            for (Index b : block) r.set(a, b);
        }
    }
    return r;
}

EventCode Relation::row_mask(std::size_t from) const {
    if (n_ > 64) throw Error(Errc::too_many_states, "event codes hold at most 64 states");
    EventCode mask = 0;
    for (std::size_t to = 0; to < n_; ++to) {
        if (contains(from, to)) mask |= EventCode{1} << to;
    }
    return mask;
}

bool Relation::is_reflexive() const noexcept {
    for (std::size_t w = 0; w < n_; ++w) {
        if (!contains(w, w)) return false;
    }
    return true;
}

bool Relation::is_symmetric() const noexcept {
    for (std::size_t a = 0; a < n_; ++a) {
        for (std::size_t b = a + 1; b < n_; ++b) {
            if (contains(a, b) != contains(b, a)) return false;
        }
    }
    return true;
}

bool Relation::is_transitive() const noexcept {
    for (std::size_t a = 0; a < n_; ++a) {
        for (std::size_t b = 0; b < n_; ++b) {
            if (!contains(a, b)) continue;
            for (std::size_t c = 0; c < n_; ++c) {
                if (contains(b, c) && !contains(a, c)) return false;
            }
        }
    }
    return true;
}

bool Relation::is_euclidean() const noexcept {
    for (std::size_t a = 0; a < n_; ++a) {
        for (std::size_t b = 0; b < n_; ++b) {
            if (!contains(a, b)) continue;
            for (std::size_t c = 0; c < n_; ++c) {
                if (contains(a, c) && !contains(b, c)) return false;
            }
        }
    }
    return true;
}

std::optional<Partition> Relation::to_partition() const {
    if (!is_equivalence()) return std::nullopt;
    Partition p;
    p.n = n_;
    std::vector<bool> placed(n_, false);
    for (std::size_t a = 0; a < n_; ++a) {
        if (placed[a]) continue;
        auto& block = p.blocks.emplace_back();
        for (std::size_t b = a; b < n_; ++b) {
            if (contains(a, b)) {
                block.push_back(static_cast<Index>(b));
                placed[b] = true;
            }
        }
    }
    return p;
}

Relation intersect(const Relation& first, const Relation& second) {
    require_same_states(first.size(), second.size());
    Relation out(first.size());
    for (std::size_t a = 0; a < first.size(); ++a) {
        for (std::size_t b = 0; b < first.size(); ++b) out.set(a, b, first.contains(a, b) && second.contains(a, b));
    }
    return out;
}

EventCode k_of(const Relation& relation, EventCode event) {
    EventCode out = 0;
    for (std::size_t w = 0; w < relation.size(); ++w) {
        if ((relation.row_mask(w) & ~event) == 0) out |= EventCode{1} << w;
    }
    return out;
}

EventCode dk_of(const Relation& first, const Relation& second, EventCode event) {
    require_same_states(first.size(), second.size());
    EventCode out = 0;
    for (std::size_t w = 0; w < first.size(); ++w) {
        if ((first.row_mask(w) & second.row_mask(w) & ~event) == 0) out |= EventCode{1} << w;
    }
    return out;
}

KOpArray build_kop_array(const Relation& relation, unsigned cap) {
    const std::size_t n = relation.size();
    if (n > std::min(cap, 32U)) {
        throw Error(Errc::too_many_states, std::to_string(n) + " states exceed the operator-array cap of " +
                                               std::to_string(std::min(cap, 32U)));
    }
    std::vector<EventCode> rows(n);
    for (std::size_t w = 0; w < n; ++w) rows[w] = relation.row_mask(w);
    KOpArray out;
    out.n = static_cast<unsigned>(n);
    out.vk.resize(std::size_t{1} << n);
    for (std::size_t e = 0; e < out.vk.size(); ++e) {
        std::uint32_t k = 0;
        for (std::size_t w = 0; w < n; ++w) {
            if ((rows[w] & ~EventCode{e}) == 0) k |= std::uint32_t{1} << w;
        }
        out.vk[e] = k;
    }
    return out;
}

Relation relation_from_kop(const KOpArray& kop) {
    const unsigned n = kop.n;
    if (kop.vk.size() != (std::size_t{1} << n)) throw Error(Errc::size_mismatch, "operator array has the wrong length");
    const EventCode all = full_event(n);
    Relation out(n);
    for (unsigned to = 0; to < n; ++to) {
        const EventCode known = kop.vk[all & ~(EventCode{1} << to)];
        for (unsigned from = 0; from < n; ++from) out.set(from, to, ((known >> from) & 1U) == 0);
    }
    return out;
}

bool decide_dk_operators(const KOpArray& ki, const KOpArray& kj, const KOpArray& km) {
    if (ki.n != kj.n || ki.n != km.n || ki.vk.size() != kj.vk.size() || ki.vk.size() != km.vk.size() ||
        ki.vk.size() != (std::size_t{1} << ki.n)) {
        throw Error(Errc::size_mismatch, "operator arrays differ in size");
    }
    const EventCode all = full_event(ki.n);
    for (unsigned k = 0; k < ki.n; ++k) {
        const EventCode p = all - (EventCode{1} << k);
        if (km.vk[p] != (ki.vk[p] | kj.vk[p])) return false;
    }
    return true;
}

bool decide_dk_relations(const Relation& ri, const Relation& rj, const Relation& rm) {
    require_same_states(ri.size(), rj.size());
    require_same_states(ri.size(), rm.size());
    const std::size_t n = ri.size();
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            if (rm.contains(a, b) != (ri.contains(a, b) && rj.contains(a, b))) return false;
        }
    }
    return true;
}

bool decide_dk_partitions(const Partition& pi, const Partition& pj, const Partition& pm) {
    require_same_states(pi.n, pj.n);
    require_same_states(pi.n, pm.n);
    DisjointSet ri = partition_to_ds(pi);
    DisjointSet rj = partition_to_ds(pj);
    DisjointSet rm = partition_to_ds(pm);
    DisjointSet q = intersection(ri, rj);
    return equal(q, rm);
}

Lattice event_lattice(unsigned n) { return Lattice::dual_powerset(n); }

Endo kop_as_endo(const KOpArray& kop) {
    return Endo(Map(kop.vk.begin(), kop.vk.end()));
}

KOpArray endo_as_kop(const Endo& endo, unsigned n) {
    if (endo.size() != (std::size_t{1} << n)) throw Error(Errc::size_mismatch, "map is not over 2^n events");
    KOpArray out;
    out.n = n;
    out.vk.assign(endo.map().begin(), endo.map().end());
    return out;
}

Endo dk_as_endo_meet(const Relation& ri, const Relation& rj) {
    require_same_states(ri.size(), rj.size());
    if (ri.size() > max_endo_meet_states) {
        throw Error(Errc::too_many_states, "event lattice limited to " + std::to_string(max_endo_meet_states) + " states");
    }
    const auto n = static_cast<unsigned>(ri.size());
    const Lattice lattice = event_lattice(n);
    // Knowledge operators preserve intersections and the full event, i.e.
    // they are join-endomorphisms of the reverse-inclusion lattice.
    const Endo ki = Endo::assume_join_endo(kop_as_endo(build_kop_array(ri, n)).map());
    const Endo kj = Endo::assume_join_endo(kop_as_endo(build_kop_array(rj, n)).map());
    return dmeet_plus(lattice, ki, kj).result;
}

const KnowledgeStructure::Agent& KnowledgeStructure::agent(const std::string& name) const {
    auto it = std::find_if(agents_.begin(), agents_.end(), [&](const Agent& a) { return a.name == name; });
    if (it == agents_.end()) throw Error(Errc::index_out_of_range, "no agent named " + name);
    return *it;
}

void KnowledgeStructure::add_agent(std::string name, Relation relation) {
    require_same_states(states_, relation.size());
    auto partition = relation.to_partition();
    agents_.push_back({std::move(name), std::move(relation), std::move(partition)});
}

void KnowledgeStructure::add_agent(std::string name, const Partition& partition) {
    require_same_states(states_, partition.n);
    agents_.push_back({std::move(name), Relation::from_partition(partition), normalized(partition)});
}

void KnowledgeStructure::add_distributed(std::string name, const std::string& first, const std::string& second) {
    add_agent(std::move(name), intersect(agent(first).relation, agent(second).relation));
}

bool KnowledgeStructure::is_aumann() const noexcept {
    return std::all_of(agents_.begin(), agents_.end(), [](const Agent& a) { return a.partition.has_value(); });
}

EventCode KnowledgeStructure::knows(const std::string& name, EventCode event) const {
    return k_of(agent(name).relation, event);
}

}  // namespace jmeet
