#include "jmeet/lattice.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <sstream>

namespace jmeet {

namespace {

struct BitRows {
    std::size_t words;
    std::vector<std::uint64_t> bits;

    BitRows(std::size_t rows, std::size_t cols) : words((cols + 63) / 64), bits(rows * words, 0) {}

    std::uint64_t* row(std::size_t r) { return bits.data() + r * words; }
    const std::uint64_t* row(std::size_t r) const { return bits.data() + r * words; }
    void set(std::size_t r, std::size_t c) { row(r)[c / 64] |= std::uint64_t{1} << (c % 64); }
};

std::string pair_text(Element a, Element b) {
    std::ostringstream out;
    out << "(" << a << ", " << b << ")";
    return out.str();
}

}  // namespace

Lattice Lattice::from_covers(std::size_t n, std::span<const CoverPair> covers) {
    if (n == 0) throw Error(Errc::not_bounded, "empty element set has no bottom");
    if (n > max_tabled_size) {
        throw Error(Errc::too_large, "tabled lattices are limited to " + std::to_string(max_tabled_size) + " elements");
    }

    std::vector<std::vector<Element>> uppers(n), lowers(n);
    for (const auto& [lo, hi] : covers) {
        if (lo >= n || hi >= n) throw Error(Errc::index_out_of_range, "cover pair " + pair_text(lo, hi));
        if (lo == hi) throw Error(Errc::cycle_detected, "self-loop at " + std::to_string(lo));
        uppers[lo].push_back(hi);
        lowers[hi].push_back(lo);
    }
    for (auto* adj : {&uppers, &lowers}) {
        for (auto& list : *adj) {
            std::sort(list.begin(), list.end());
            list.erase(std::unique(list.begin(), list.end()), list.end());
        }
    }

    Lattice lat;
    lat.backend_ = Backend::tabled;
    lat.n_ = n;

    // Repeated minimal-element extraction, smallest index first.
    std::vector<std::size_t> pending(n);
    std::priority_queue<Element, std::vector<Element>, std::greater<>> ready;
    for (Element x = 0; x < n; ++x) {
        pending[x] = lowers[x].size();
        if (pending[x] == 0) ready.push(x);
    }
    while (!ready.empty()) {
        const Element x = ready.top();
        ready.pop();
        lat.topo_.push_back(x);
        for (Element y : uppers[x]) {
            if (--pending[y] == 0) ready.push(y);
        }
    }
    if (lat.topo_.size() != n) throw Error(Errc::cycle_detected, "cover relation contains a cycle");

    std::vector<Element> minimal, maximal;
    for (Element x = 0; x < n; ++x) {
        if (lowers[x].empty()) minimal.push_back(x);
        if (uppers[x].empty()) maximal.push_back(x);
    }
    if (minimal.size() != 1) {
        throw Error(Errc::not_bounded, std::to_string(minimal.size()) + " minimal elements, need exactly one bottom");
    }
    if (maximal.size() != 1) {
        throw Error(Errc::not_bounded, std::to_string(maximal.size()) + " maximal elements, need exactly one top");
    }
    lat.bottom_ = minimal.front();
    lat.top_ = maximal.front();

    lat.pos_.resize(n);
    for (std::size_t p = 0; p < n; ++p) lat.pos_[lat.topo_[p]] = static_cast<std::uint32_t>(p);

    // Up-sets and down-sets as bit rows indexed by topo position.
    BitRows up(n, n), down(n, n);
    const std::size_t words = up.words;
    for (std::size_t p = n; p-- > 0;) {
        const Element x = lat.topo_[p];
        up.set(x, p);
        for (Element y : uppers[x]) {
            auto* dst = up.row(x);
            const auto* src = up.row(y);
            for (std::size_t w = 0; w < words; ++w) dst[w] |= src[w];
        }
    }
    for (std::size_t p = 0; p < n; ++p) {
        const Element x = lat.topo_[p];
        down.set(x, p);
        for (Element y : lowers[x]) {
            auto* dst = down.row(x);
            const auto* src = down.row(y);
            for (std::size_t w = 0; w < words; ++w) dst[w] |= src[w];
        }
    }
    lat.words_ = words;

    // A common upper-bound set is an up-set; it has a least element iff its
    // first member in topo order generates all of it.
    lat.join_.assign(n * n, 0);
    lat.meet_.assign(n * n, 0);
    std::vector<std::uint64_t> common(words);
    for (Element a = 0; a < n; ++a) {
        for (Element b = a; b < n; ++b) {
            const auto* ua = up.row(a);
            const auto* ub = up.row(b);
            std::size_t first = n;
            for (std::size_t w = 0; w < words; ++w) {
                common[w] = ua[w] & ub[w];
                if (first == n && common[w]) first = w * 64 + static_cast<std::size_t>(std::countr_zero(common[w]));
            }
            const Element j = lat.topo_[first];
            if (!std::equal(common.begin(), common.end(), up.row(j))) {
                throw Error(Errc::not_a_lattice, "no least upper bound for " + pair_text(a, b));
            }
            lat.join_[a * n + b] = lat.join_[b * n + a] = j;

            const auto* da = down.row(a);
            const auto* db = down.row(b);
            std::size_t last = n;
            for (std::size_t w = words; w-- > 0;) {
                common[w] = da[w] & db[w];
                if (last == n && common[w]) last = w * 64 + 63 - static_cast<std::size_t>(std::countl_zero(common[w]));
            }
            const Element m = lat.topo_[last];
            if (!std::equal(common.begin(), common.end(), down.row(m))) {
                throw Error(Errc::not_a_lattice, "no greatest lower bound for " + pair_text(a, b));
            }
            lat.meet_[a * n + b] = lat.meet_[b * n + a] = m;
        }
    }
    lat.up_ = std::move(up.bits);

    // Every cover appears among the input edges, so the true covers of x are
    // the maximal members of its input lowers.
    lat.cover_offsets_.assign(n + 1, 0);
    for (Element x = 0; x < n; ++x) {
        for (Element lo : lowers[x]) {
            const bool maximal_below = std::none_of(lowers[x].begin(), lowers[x].end(), [&](Element other) {
                return other != lo && lat.leq(lo, other);
            });
            if (maximal_below) lat.covers_.push_back(lo);
        }
        lat.cover_offsets_[x + 1] = lat.covers_.size();
    }

    for (Element x = 0; x < n; ++x) {
        if (lat.lower_covers(x).size() == 1) lat.ji_.push_back(x);
    }
    lat.distributive_ = lat.compute_distributive();
    return lat;
}

Lattice Lattice::powerset(unsigned k) {
    if (k > max_powerset_rank) {
        throw Error(Errc::too_large, "powerset rank " + std::to_string(k) + " exceeds " + std::to_string(max_powerset_rank));
    }
    Lattice lat;
    lat.backend_ = Backend::powerset;
    lat.rank_ = k;
    lat.n_ = std::size_t{1} << k;
    lat.bottom_ = 0;
    lat.top_ = lat.full_mask();
    lat.topo_.resize(lat.n_);
    std::iota(lat.topo_.begin(), lat.topo_.end(), Element{0});
    for (unsigned i = 0; i < k; ++i) lat.ji_.push_back(Element{1} << i);
    lat.distributive_ = true;
    return lat;
}

Lattice Lattice::dual_powerset(unsigned k) {
    if (k > max_powerset_rank) {
        throw Error(Errc::too_large, "powerset rank " + std::to_string(k) + " exceeds " + std::to_string(max_powerset_rank));
    }
    Lattice lat;
    lat.backend_ = Backend::dual_powerset;
    lat.rank_ = k;
    lat.n_ = std::size_t{1} << k;
    lat.bottom_ = lat.full_mask();
    lat.top_ = 0;
    lat.topo_.resize(lat.n_);
    for (std::size_t i = 0; i < lat.n_; ++i) lat.topo_[i] = static_cast<Element>(lat.n_ - 1 - i);
    // Complements of singletons, ascending.
    for (unsigned i = k; i-- > 0;) lat.ji_.push_back(lat.full_mask() ^ (Element{1} << i));
    lat.distributive_ = true;
    return lat;
}

std::size_t Lattice::cover_edge_count() const noexcept {
    if (backend_ == Backend::tabled) return covers_.size();
    return static_cast<std::size_t>(rank_) * (n_ / 2);
}

// A finite lattice is distributive iff every join-irreducible j is
// join-prime, i.e. the complement of the up-set of j is closed under joins.
// That complement is a down-set, so it is join-closed iff its join stays
// outside the up-set of j.
bool Lattice::compute_distributive() const {
    for (Element j : ji_) {
        Element acc = bottom_;
        for (Element x = 0; x < n_; ++x) {
            if (!leq(j, x)) acc = join(acc, x);
        }
        if (leq(j, acc)) return false;
    }
    return true;
}

Element Lattice::subtract(Element c, Element a) const {
    if (!distributive_) throw Error(Errc::not_distributive, "subtraction needs a distributive lattice");
    switch (backend_) {
    case Backend::powerset: return c & ~a;
    case Backend::dual_powerset: return (c | ~a) & full_mask();
    default: break;
    }
    Element acc = top_;
    for (Element e = 0; e < n_; ++e) {
        if (leq(c, join(a, e))) acc = meet(acc, e);
    }
    return acc;
}

std::vector<Element> ji_downset(const Lattice& lattice, Element e) {
    std::vector<Element> out;
    for (Element j : lattice.join_irreducibles()) {
        if (lattice.leq(j, e)) out.push_back(j);
    }
    return out;
}

std::vector<Element> downset(const Lattice& lattice, Element e) {
    std::vector<Element> out;
    if (lattice.backend() == Lattice::Backend::powerset) {
        // submasks of e, ascending
        Element sub = 0;
        do {
            out.push_back(sub);
            sub = (sub - e) & e;
        } while (sub != 0);
        return out;
    }
    for (Element x = 0; x < lattice.size(); ++x) {
        if (lattice.leq(x, e)) out.push_back(x);
    }
    return out;
}

}  // namespace jmeet
