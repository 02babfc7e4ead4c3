#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "jmeet/error.hpp"

namespace jmeet {

/// Elements of a finite lattice are the indices 0..n-1.
using Element = std::uint32_t;
using CoverPair = std::pair<Element, Element>;  // (lower, upper)

/// Tallies of binary lattice operations. Passed explicitly to every
/// algorithm entry point and handed back with the result.
struct OpCounters {
    std::uint64_t joins = 0;
    std::uint64_t meets = 0;

    std::uint64_t total() const noexcept { return joins + meets; }
    friend bool operator==(const OpCounters&, const OpCounters&) = default;
};

/// Lower covers of one element, in ascending index order. Either a view
/// into a stored adjacency list or, for the bitmask backends, generated on
/// the fly from the element code.
class CoverRange {
public:
    class iterator {
    public:
        using value_type = Element;
        using difference_type = std::ptrdiff_t;

        iterator() = default;
        Element operator*() const noexcept {
            if (ptr_) return *ptr_;
            if (dual_) return base_ | (rest_ & (~rest_ + 1));
            return base_ ^ std::bit_floor(rest_);
        }
        iterator& operator++() noexcept {
            if (ptr_) {
                ++ptr_;
            } else if (dual_) {
                rest_ &= rest_ - 1;
            } else {
                rest_ ^= std::bit_floor(rest_);
            }
            return *this;
        }
        iterator operator++(int) noexcept {
            auto copy = *this;
            ++*this;
            return copy;
        }
        friend bool operator==(const iterator& a, const iterator& b) noexcept {
            return a.ptr_ == b.ptr_ && a.rest_ == b.rest_;
        }

    private:
        friend class CoverRange;
        const Element* ptr_ = nullptr;
        Element base_ = 0;
        Element rest_ = 0;
        bool dual_ = false;
    };

    explicit CoverRange(std::span<const Element> list) : list_(list) {}
    CoverRange(Element base, Element candidates, bool dual)
        : base_(base), candidates_(candidates), dual_(dual), generated_(true) {}

    iterator begin() const noexcept {
        iterator it;
        if (generated_) {
            it.base_ = base_;
            it.rest_ = candidates_;
            it.dual_ = dual_;
        } else {
            it.ptr_ = list_.data();
        }
        return it;
    }
    iterator end() const noexcept {
        iterator it;
        if (!generated_) it.ptr_ = list_.data() + list_.size();
        return it;
    }
    std::size_t size() const noexcept {
        return generated_ ? static_cast<std::size_t>(std::popcount(candidates_)) : list_.size();
    }
    bool empty() const noexcept { return size() == 0; }
    std::vector<Element> to_vector() const { return {begin(), end()}; }

private:
    std::span<const Element> list_;
    Element base_ = 0;
    Element candidates_ = 0;
    bool dual_ = false;
    bool generated_ = false;
};

/// A finite lattice. Immutable once built and safe to share between threads.
///
/// Three backends sit behind the same interface:
///  - tabled: built from a cover relation, with precomputed n x n join and
///    meet tables;
///  - powerset: the subsets of a k-element set coded as bitmasks, ordered by
///    inclusion (join = OR, meet = AND);
///  - dual_powerset: the same codes ordered by reverse inclusion, so join is
///    intersection, meet is union and the bottom is the full set.
class Lattice {
public:
    enum class Backend { tabled, powerset, dual_powerset };

    /// Validates the order generated by `covers` and resolves every join and
    /// meet. Pairs may include non-cover edges; the true covers are derived
    /// from the order. Throws Error{cycle_detected | not_bounded | not_a_lattice}.
    static Lattice from_covers(std::size_t n, std::span<const CoverPair> covers);
    static Lattice powerset(unsigned k);
    static Lattice dual_powerset(unsigned k);

    static constexpr std::size_t max_tabled_size = 4096;
    static constexpr unsigned max_powerset_rank = 24;

    Backend backend() const noexcept { return backend_; }
    std::size_t size() const noexcept { return n_; }
    Element bottom() const noexcept { return bottom_; }
    Element top() const noexcept { return top_; }
    /// Rank of the underlying set for the bitmask backends, 0 otherwise.
    unsigned rank() const noexcept { return rank_; }

    bool leq(Element a, Element b) const noexcept {
        switch (backend_) {
        case Backend::powerset: return (a & ~b) == 0;
        case Backend::dual_powerset: return (b & ~a) == 0;
        default: {
            const std::size_t p = pos_[b];
            return (up_[a * words_ + p / 64] >> (p % 64)) & 1U;
        }
        }
    }
    bool less(Element a, Element b) const noexcept { return a != b && leq(a, b); }

    /// Uncounted join and meet.
    Element join(Element a, Element b) const noexcept {
        switch (backend_) {
        case Backend::powerset: return a | b;
        case Backend::dual_powerset: return a & b;
        default: return join_[a * n_ + b];
        }
    }
    Element meet(Element a, Element b) const noexcept {
        switch (backend_) {
        case Backend::powerset: return a & b;
        case Backend::dual_powerset: return a | b;
        default: return meet_[a * n_ + b];
        }
    }

    /// Counted join and meet; every algorithm routes its lattice operations
    /// through these.
    Element join(Element a, Element b, OpCounters& counters) const noexcept {
        ++counters.joins;
        return join(a, b);
    }
    Element meet(Element a, Element b, OpCounters& counters) const noexcept {
        ++counters.meets;
        return meet(a, b);
    }

    CoverRange lower_covers(Element a) const noexcept {
        switch (backend_) {
        case Backend::powerset: return CoverRange(a, a, false);
        case Backend::dual_powerset: return CoverRange(a, ~a & full_mask(), true);
        default:
            return CoverRange(std::span<const Element>(covers_).subspan(
                cover_offsets_[a], cover_offsets_[a + 1] - cover_offsets_[a]));
        }
    }
    /// Number of cover edges (Hasse diagram edges).
    std::size_t cover_edge_count() const noexcept;

    /// Linear extension of the order, bottom first; ties broken by index.
    std::span<const Element> topo() const noexcept { return topo_; }
    /// Join-irreducible elements in ascending index order.
    std::span<const Element> join_irreducibles() const noexcept { return ji_; }
    bool is_join_irreducible(Element a) const noexcept { return lower_covers(a).size() == 1; }

    bool is_distributive() const noexcept { return distributive_; }

    /// c minus a: the least e with a v e >= c. Defined on distributive
    /// lattices only; throws Error{not_distributive} otherwise. Uncounted.
    Element subtract(Element c, Element a) const;

private:
    Lattice() = default;
    Element full_mask() const noexcept { return rank_ >= 32 ? ~Element{0} : (Element{1} << rank_) - 1; }
    void finish_bitmask_backend();
    bool compute_distributive() const;

    Backend backend_ = Backend::tabled;
    std::size_t n_ = 0;
    unsigned rank_ = 0;
    Element bottom_ = 0;
    Element top_ = 0;

    std::vector<Element> topo_;
    std::vector<Element> ji_;
    bool distributive_ = false;

    // tabled backend only
    std::size_t words_ = 0;
    std::vector<std::uint32_t> pos_;
    std::vector<std::uint64_t> up_;  // row x: bit p set iff topo_[p] >= x
    std::vector<Element> join_;
    std::vector<Element> meet_;
    std::vector<std::size_t> cover_offsets_;
    std::vector<Element> covers_;
};

/// Free-function spellings of the core operations.
inline Lattice build_from_covers(std::size_t n, std::span<const CoverPair> covers) {
    return Lattice::from_covers(n, covers);
}
inline bool is_distributive(const Lattice& lattice) noexcept { return lattice.is_distributive(); }

/// Join-irreducibles below or equal to e, ascending. Their join is e.
std::vector<Element> ji_downset(const Lattice& lattice, Element e);

/// Elements x with x <= e, ascending index order.
std::vector<Element> downset(const Lattice& lattice, Element e);

}  // namespace jmeet
