#include "jmeet/meet.hpp"

#include <string>

namespace jmeet {

namespace {

void require_distributive(const Lattice& lattice) {
    if (!lattice.is_distributive()) throw Error(Errc::not_distributive, "algorithm needs a distributive lattice");
}

void require_join_endo(const Lattice& lattice, const Endo& f, const char* which) {
    if (f.size() != lattice.size()) {
        throw Error(Errc::size_mismatch, std::string(which) + " does not match the lattice size");
    }
    if (!f.is_validated() && !is_join_endo(lattice, f.view())) {
        throw Error(Errc::not_join_endo, std::string(which) + " is not a join-endomorphism");
    }
}

Map start_map(const Lattice& lattice, std::span<const Element> h0) {
    if (h0.size() != lattice.size()) throw Error(Errc::size_mismatch, "input map does not match the lattice size");
    for (Element v : h0) {
        if (v >= lattice.size()) throw Error(Errc::index_out_of_range, "input map leaves the lattice");
    }
    return Map(h0.begin(), h0.end());
}

// Row-major cursor over pairs (a, b) with a <= b.
struct PairCursor {
    Element n;
    Element a = 0;
    Element b = 0;

    void advance() noexcept {
        if (++b == n) {
            if (++a == n) a = 0;
            b = a;
        }
    }
    std::uint64_t pair_count() const noexcept { return std::uint64_t{n} * (n + 1) / 2; }
};

// One step of the general fix: returns true when (a, b) was a conflict.
bool gmeet_fix(const Lattice& lat, Map& h, Element a, Element b, OpCounters& cnt) {
    const Element ab = lat.join(a, b, cnt);
    const Element sum = lat.join(h[a], h[b], cnt);
    if (h[ab] == sum) return false;
    if (lat.less(sum, h[ab])) {
        h[ab] = sum;
    } else {
        // covers both h(a v b) below and incomparable to h(a) v h(b)
        h[a] = lat.meet(h[a], h[ab], cnt);
        h[b] = lat.meet(h[b], h[ab], cnt);
    }
    return true;
}

// Monotone variant: only h(a v b) strictly above h(a) v h(b) is a conflict;
// the fix caps the whole down-set of a v b.
bool mono_fix(const Lattice& lat, Map& h, Element a, Element b, OpCounters& cnt) {
    const Element ab = lat.join(a, b, cnt);
    const Element sum = lat.join(h[a], h[b], cnt);
    if (!lat.less(sum, h[ab])) return false;
    const auto n = static_cast<Element>(lat.size());
    for (Element x = 0; x < n; ++x) {
        if (lat.leq(x, ab)) h[x] = lat.meet(h[x], sum, cnt);
    }
    return true;
}

template <typename Fix>
MeetResult restart_loop(const Lattice& lat, Map h, Fix fix) {
    MeetResult out;
    const auto n = static_cast<Element>(lat.size());
    for (;;) {
        bool fixed = false;
        for (Element a = 0; a < n && !fixed; ++a) {
            for (Element b = a; b < n; ++b) {
                if (fix(lat, h, a, b, out.counters)) {
                    fixed = true;
                    break;
                }
            }
        }
        if (!fixed) break;
        ++out.iterations;
    }
    out.result = Endo::assume_join_endo(std::move(h));
    return out;
}

template <typename Fix>
MeetResult cyclic_loop(const Lattice& lat, Map h, Fix fix) {
    MeetResult out;
    PairCursor cursor{static_cast<Element>(lat.size())};
    const std::uint64_t total = cursor.pair_count();
    std::uint64_t clean = 0;
    while (clean < total) {
        if (fix(lat, h, cursor.a, cursor.b, out.counters)) {
            clean = 0;
            ++out.iterations;
        } else {
            ++clean;
        }
        cursor.advance();
    }
    out.result = Endo::assume_join_endo(std::move(h));
    return out;
}

}  // namespace

MeetResult dmeet(const Lattice& lattice, const Endo& f, const Endo& g) {
    require_distributive(lattice);
    require_join_endo(lattice, f, "f");
    require_join_endo(lattice, g, "g");
    MeetResult out;
    const auto n = static_cast<Element>(lattice.size());
    Map h(n);
    for (Element c = 0; c < n; ++c) {
        Element acc = lattice.top();
        for (Element a = 0; a < n; ++a) {
            if (!lattice.leq(a, c)) continue;
            const Element term = lattice.join(f[a], g[lattice.subtract(c, a)], out.counters);
            acc = lattice.meet(acc, term, out.counters);
            ++out.iterations;
        }
        h[c] = acc;
    }
    out.result = Endo::assume_join_endo(std::move(h));
    return out;
}

MeetResult dmeet_plus(const Lattice& lattice, const Endo& f, const Endo& g) {
    require_distributive(lattice);
    require_join_endo(lattice, f, "f");
    require_join_endo(lattice, g, "g");
    MeetResult out;
    Map h(lattice.size(), lattice.bottom());
    for (Element a : lattice.topo()) {
        if (a == lattice.bottom()) continue;
        const CoverRange covers = lattice.lower_covers(a);
        if (covers.size() == 1) {
            h[a] = lattice.meet(f[a], g[a], out.counters);
        } else if (covers.size() >= 2) {
            auto it = covers.begin();
            const Element b = *it++;
            const Element c = *it;
            h[a] = lattice.join(h[b], h[c], out.counters);
        } else {
            throw Error(Errc::missing_two_covers, "element " + std::to_string(a) + " has no lower cover");
        }
        ++out.iterations;
    }
    out.result = Endo::assume_join_endo(std::move(h));
    return out;
}

Map mono_below(const Lattice& lattice, std::span<const Element> h0, OpCounters& counters) {
    Map h = start_map(lattice, h0);
    const auto topo = lattice.topo();
    for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
        const Element b = *it;
        for (Element a : lattice.lower_covers(b)) h[a] = lattice.meet(h[a], h[b], counters);
    }
    return h;
}

Map mono_below(const Lattice& lattice, std::span<const Element> h0) {
    OpCounters scratch;
    return mono_below(lattice, h0, scratch);
}

MeetResult gmeet(const Lattice& lattice, std::span<const Element> h0) {
    Map h = start_map(lattice, h0);
    h[lattice.bottom()] = lattice.bottom();
    return restart_loop(lattice, std::move(h), gmeet_fix);
}

MeetResult gmeet_star(const Lattice& lattice, std::span<const Element> h0) {
    Map h = start_map(lattice, h0);
    h[lattice.bottom()] = lattice.bottom();
    return cyclic_loop(lattice, std::move(h), gmeet_fix);
}

MeetResult gmeet_mono(const Lattice& lattice, std::span<const Element> h0) {
    OpCounters pre;
    Map h = mono_below(lattice, h0, pre);
    h[lattice.bottom()] = lattice.bottom();
    MeetResult out = restart_loop(lattice, std::move(h), mono_fix);
    out.counters.meets += pre.meets;
    return out;
}

MeetResult gmeet_mono_star(const Lattice& lattice, std::span<const Element> h0) {
    OpCounters pre;
    Map h = mono_below(lattice, h0, pre);
    h[lattice.bottom()] = lattice.bottom();
    MeetResult out = cyclic_loop(lattice, std::move(h), mono_fix);
    out.counters.meets += pre.meets;
    return out;
}

MeetResult gmeet_mono_lazy(const Lattice& lattice, std::span<const Element> h0) {
    MeetResult out;
    Map h = mono_below(lattice, h0, out.counters);
    h[lattice.bottom()] = lattice.bottom();
    const auto n = static_cast<Element>(lattice.size());
    Map previous;
    do {
        previous = h;
        for (Element a = 0; a < n; ++a) {
            for (Element b = a; b < n; ++b) {
                const Element ab = lattice.join(a, b, out.counters);
                h[ab] = lattice.meet(h[ab], lattice.join(h[a], h[b], out.counters), out.counters);
            }
        }
        h = mono_below(lattice, h, out.counters);
        ++out.iterations;
    } while (h != previous);
    out.result = Endo::assume_join_endo(std::move(h));
    return out;
}

Endo brute_force_max_endo_below(const Lattice& lattice, std::span<const Element> h0, const BruteForceLimits& limits) {
    const Map target = start_map(lattice, h0);
    const auto n = static_cast<Element>(lattice.size());

    // Join-irreducibles in topo order so that smaller ones are assigned first.
    std::vector<Element> ji;
    for (Element x : lattice.topo()) {
        if (lattice.is_join_irreducible(x)) ji.push_back(x);
    }
    const std::size_t m = ji.size();

    std::vector<std::vector<Element>> candidates(m);
    std::uint64_t budget = 1;
    for (std::size_t p = 0; p < m; ++p) {
        candidates[p] = downset(lattice, target[ji[p]]);
        budget = candidates[p].size() > limits.max_assignments / budget ? limits.max_assignments + 1
                                                                        : budget * candidates[p].size();
        if (budget > limits.max_assignments) {
            throw Error(Errc::instance_too_large, "assignment space exceeds " + std::to_string(limits.max_assignments));
        }
    }

    // For every element, the positions of the join-irreducibles below it and
    // the position at which the last of them gets assigned.
    std::vector<std::vector<std::size_t>> below(n);
    std::vector<std::vector<Element>> completed_at(m);
    for (Element e = 0; e < n; ++e) {
        for (std::size_t p = 0; p < m; ++p) {
            if (lattice.leq(ji[p], e)) below[e].push_back(p);
        }
        if (!below[e].empty()) completed_at[below[e].back()].push_back(e);
    }

    Map assigned(m, lattice.bottom());
    Map value(n, lattice.bottom());
    Map best(n, lattice.bottom());

    auto search = [&](auto&& self, std::size_t p) -> void {
        if (p == m) {
            if (is_join_endo(lattice, value)) {
                for (Element e = 0; e < n; ++e) best[e] = lattice.join(best[e], value[e]);
            }
            return;
        }
        for (Element y : candidates[p]) {
            bool ok = true;
            for (std::size_t q = 0; q < p && ok; ++q) {
                if (lattice.leq(ji[q], ji[p]) && !lattice.leq(assigned[q], y)) ok = false;
            }
            if (!ok) continue;
            assigned[p] = y;
            for (Element e : completed_at[p]) {
                Element v = lattice.bottom();
                for (std::size_t q : below[e]) v = lattice.join(v, assigned[q]);
                if (!lattice.leq(v, target[e])) {
                    ok = false;
                    break;
                }
                value[e] = v;
            }
            if (ok) self(self, p + 1);
        }
    };
    search(search, 0);
    return Endo::assume_join_endo(std::move(best));
}

std::string_view algorithm_name(Algorithm algorithm) noexcept {
    switch (algorithm) {
    case Algorithm::dmeet: return "dmeet";
    case Algorithm::dmeet_plus: return "dmeet+";
    case Algorithm::gmeet: return "gmeet";
    case Algorithm::gmeet_star: return "gmeet*";
    case Algorithm::gmeet_mono: return "gmeet_mono";
    case Algorithm::gmeet_mono_star: return "gmeet_mono*";
    case Algorithm::gmeet_mono_lazy: return "gmeet_mono_lazy";
    case Algorithm::brute: return "brute";
    }
    return "?";
}

std::optional<Algorithm> parse_algorithm(std::string_view name) noexcept {
    for (Algorithm a : all_algorithms) {
        if (algorithm_name(a) == name) return a;
    }
    return std::nullopt;
}

bool requires_distributive(Algorithm algorithm) noexcept {
    return algorithm == Algorithm::dmeet || algorithm == Algorithm::dmeet_plus;
}

MeetResult compute_meet(Algorithm algorithm, const Lattice& lattice, const Endo& f, const Endo& g,
                        const BruteForceLimits& limits) {
    switch (algorithm) {
    case Algorithm::dmeet: return dmeet(lattice, f, g);
    case Algorithm::dmeet_plus: return dmeet_plus(lattice, f, g);
    default: break;
    }
    const Endo h0 = pointwise_meet(lattice, f, g);
    switch (algorithm) {
    case Algorithm::gmeet: return gmeet(lattice, h0.view());
    case Algorithm::gmeet_star: return gmeet_star(lattice, h0.view());
    case Algorithm::gmeet_mono: return gmeet_mono(lattice, h0.view());
    case Algorithm::gmeet_mono_star: return gmeet_mono_star(lattice, h0.view());
    case Algorithm::gmeet_mono_lazy: return gmeet_mono_lazy(lattice, h0.view());
    default: break;
    }
    MeetResult out;
    out.result = brute_force_max_endo_below(lattice, h0.view(), limits);
    return out;
}

}  // namespace jmeet
