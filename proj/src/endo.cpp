#include "jmeet/endo.hpp"

#include <algorithm>
#include <optional>
#include <string>

namespace jmeet {

namespace {

void require_same_size(const Lattice& lattice, std::span<const Element> map) {
    if (map.size() != lattice.size()) {
        throw Error(Errc::size_mismatch, "map has " + std::to_string(map.size()) + " entries, lattice has " +
                                             std::to_string(lattice.size()));
    }
}

void require_distributive(const Lattice& lattice) {
    if (!lattice.is_distributive()) throw Error(Errc::not_distributive, "lattice is not distributive");
}

}  // namespace

bool Endo::validate(const Lattice& lattice) {
    if (!validated_) validated_ = is_join_endo(lattice, map_);
    return validated_;
}

std::optional<std::pair<Element, Element>> join_violation(const Lattice& lattice, std::span<const Element> map) {
    require_same_size(lattice, map);
    const auto n = static_cast<Element>(lattice.size());
    for (Element a = 0; a < n; ++a) {
        for (Element b = a; b < n; ++b) {
            if (map[lattice.join(a, b)] != lattice.join(map[a], map[b])) return std::pair{a, b};
        }
    }
    return std::nullopt;
}

bool is_join_endo(const Lattice& lattice, std::span<const Element> map) {
    if (map.size() != lattice.size()) return false;
    if (map[lattice.bottom()] != lattice.bottom()) return false;
    return !join_violation(lattice, map).has_value();
}

bool is_monotone(const Lattice& lattice, std::span<const Element> map) {
    require_same_size(lattice, map);
    for (Element b = 0; b < lattice.size(); ++b) {
        for (Element a : lattice.lower_covers(b)) {
            if (!lattice.leq(map[a], map[b])) return false;
        }
    }
    return true;
}

bool pointwise_leq(const Lattice& lattice, std::span<const Element> f, std::span<const Element> g) {
    require_same_size(lattice, f);
    require_same_size(lattice, g);
    for (std::size_t a = 0; a < f.size(); ++a) {
        if (!lattice.leq(f[a], g[a])) return false;
    }
    return true;
}

Endo pointwise_meet(const Lattice& lattice, const Endo& f, const Endo& g) {
    require_same_size(lattice, f.view());
    require_same_size(lattice, g.view());
    Map out(lattice.size());
    for (std::size_t a = 0; a < out.size(); ++a) out[a] = lattice.meet(f[a], g[a]);
    if (f == g && f.is_validated()) return Endo::assume_join_endo(std::move(out));
    return Endo(std::move(out));
}

Endo pointwise_join(const Lattice& lattice, const Endo& f, const Endo& g) {
    require_same_size(lattice, f.view());
    require_same_size(lattice, g.view());
    Map out(lattice.size());
    for (std::size_t a = 0; a < out.size(); ++a) out[a] = lattice.join(f[a], g[a]);
    if (f.is_validated() && g.is_validated()) return Endo::assume_join_endo(std::move(out));
    return Endo(std::move(out));
}

Endo identity_endo(const Lattice& lattice) {
    Map out(lattice.size());
    for (Element a = 0; a < out.size(); ++a) out[a] = a;
    return Endo::assume_join_endo(std::move(out));
}

Endo bottom_endo(const Lattice& lattice) {
    return Endo::assume_join_endo(Map(lattice.size(), lattice.bottom()));
}

Endo f_ab(const Lattice& lattice, Element a, Element b) {
    if (a >= lattice.size() || b >= lattice.size()) {
        throw Error(Errc::index_out_of_range, "f_ab arguments outside the lattice");
    }
    if (!lattice.is_join_irreducible(a)) {
        throw Error(Errc::not_join_irreducible, std::to_string(a) + " is not join-irreducible");
    }
    Map out(lattice.size());
    for (Element x = 0; x < out.size(); ++x) out[x] = lattice.leq(a, x) ? b : lattice.bottom();
    // Join-preserving exactly when the elements outside the up-set of a have
    // a join that still lies outside it, i.e. a is join-prime.
    Element outside = lattice.bottom();
    for (Element x = 0; x < out.size(); ++x) {
        if (!lattice.leq(a, x)) outside = lattice.join(outside, x);
    }
    if (b == lattice.bottom() || !lattice.leq(a, outside)) return Endo::assume_join_endo(std::move(out));
    return Endo(std::move(out));
}

JIRelation to_ji_relation(const Lattice& lattice, const Endo& f) {
    require_distributive(lattice);
    require_same_size(lattice, f.view());
    JIRelation rel;
    for (Element a : lattice.join_irreducibles()) {
        for (Element b : lattice.join_irreducibles()) {
            if (lattice.leq(a, f[b])) rel.emplace_back(a, b);
        }
    }
    return rel;
}

Endo from_ji_relation(const Lattice& lattice, const JIRelation& relation) {
    require_distributive(lattice);
    for (const auto& [a, b] : relation) {
        if (a >= lattice.size() || b >= lattice.size() || !lattice.is_join_irreducible(a) ||
            !lattice.is_join_irreducible(b)) {
            throw Error(Errc::not_join_irreducible, "relation members must be join-irreducible");
        }
    }
    Map out(lattice.size(), lattice.bottom());
    for (Element c = 0; c < out.size(); ++c) {
        for (const auto& [a, b] : relation) {
            if (lattice.leq(b, c)) out[c] = lattice.join(out[c], a);
        }
    }
    return Endo::assume_join_endo(std::move(out));
}

std::vector<Endo> ji_endos(const Lattice& lattice) {
    require_distributive(lattice);
    std::vector<Endo> out;
    for (Element a : lattice.join_irreducibles()) {
        for (Element b : lattice.join_irreducibles()) {
            Endo f = f_ab(lattice, a, b);
            if (std::find(out.begin(), out.end(), f) == out.end()) out.push_back(std::move(f));
        }
    }
    return out;
}

std::vector<Element> meet_irreducibles(const Lattice& lattice) {
    std::vector<std::uint32_t> upper(lattice.size(), 0);
    for (Element x = 0; x < lattice.size(); ++x) {
        for (Element y : lattice.lower_covers(x)) ++upper[y];
    }
    std::vector<Element> out;
    for (Element x = 0; x < lattice.size(); ++x) {
        if (upper[x] == 1) out.push_back(x);
    }
    return out;
}

Endo random_endo(const Lattice& lattice, Rng& rng, std::size_t density) {
    const auto mi = meet_irreducibles(lattice);
    Map acc(lattice.size(), lattice.bottom());
    if (mi.empty()) return Endo::assume_join_endo(std::move(acc));
    std::uniform_int_distribution<std::size_t> pick_c(0, mi.size() - 1);
    std::uniform_int_distribution<std::size_t> pick_b(0, lattice.size() - 1);
    for (std::size_t i = 0; i < density; ++i) {
        const Element c = mi[pick_c(rng)];
        const auto b = static_cast<Element>(pick_b(rng));
        for (Element x = 0; x < acc.size(); ++x) {
            if (!lattice.leq(x, c)) acc[x] = lattice.join(acc[x], b);
        }
    }
    return Endo::assume_join_endo(std::move(acc));
}

Endo random_endo(const Lattice& lattice, Rng& rng) {
    return random_endo(lattice, rng, lattice.join_irreducibles().size());
}

}  // namespace jmeet
