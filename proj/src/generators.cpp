#include "jmeet/generators.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <deque>
#include <mutex>
#include <unordered_map>
#include <unordered_set>

#include <boost/multiprecision/cpp_int.hpp>

namespace jmeet {

namespace {

using boost::multiprecision::cpp_int;

double uniform01(Rng& rng) { return std::uniform_real_distribution<double>(0.0, 1.0)(rng); }

// num / den as a double for 0 <= num <= den, after shifting both down to
// about 62 significant bits.
double ratio(const cpp_int& num, const cpp_int& den) {
    if (num == 0) return 0.0;
    const auto top = static_cast<long>(boost::multiprecision::msb(den));
    const long shift = std::max(0L, top - 62);
    const cpp_int a = num >> shift;
    const cpp_int b = den >> shift;
    return a.convert_to<double>() / b.convert_to<double>();
}

// Triangular tables over 1 <= k <= m <= limit:
//   single(m, k) = S(m-1, k-1) / S(m, k), the chance that element m starts
//                  a block given k blocks among the first m elements;
//   weight(m, k) = S(m, k) / B(m), the block-count distribution.
// Rows are derived from exact big-integer Stirling numbers and extended on
// demand; only the last big-integer row is kept.
class StirlingTable {
public:
    void ensure(std::size_t n) {
        std::lock_guard lock(mutex_);
        if (row_.empty()) {
            row_ = {cpp_int(1)};  // S(0, 0)
            single_.push_back(0.0);
            weight_.push_back(1.0);
        }
        while (limit_ < n) extend();
    }

    double single(std::size_t m, std::size_t k) const { return single_[offset(m) + k]; }
    double weight(std::size_t m, std::size_t k) const { return weight_[offset(m) + k]; }

private:
    static std::size_t offset(std::size_t m) { return m * (m + 1) / 2; }

    void extend() {
        const std::size_t m = ++limit_;
        std::vector<cpp_int> next(m + 1);
        next[0] = 0;
        for (std::size_t k = 1; k <= m; ++k) {
            next[k] = (k < m ? cpp_int(row_[k]) * k : cpp_int(0)) + row_[k - 1];
        }
        cpp_int bell = 0;
        for (const auto& s : next) bell += s;
        for (std::size_t k = 0; k <= m; ++k) {
            single_.push_back(k == 0 ? 0.0 : ratio(row_[k - 1], next[k]));
            weight_.push_back(ratio(next[k], bell));
        }
        row_ = std::move(next);
    }

    std::mutex mutex_;
    std::size_t limit_ = 0;
    std::vector<cpp_int> row_;
    std::vector<double> single_;
    std::vector<double> weight_;
};

StirlingTable& stirling_table() {
    static StirlingTable table;
    return table;
}

std::size_t draw_index(std::span<const double> weights, Rng& rng) {
    double total = 0.0;
    for (double w : weights) total += w;
    double u = uniform01(rng) * total;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        if (u < weights[i]) return i;
        u -= weights[i];
    }
    // Rounding can leave u just past the last positive weight.
    for (std::size_t i = weights.size(); i-- > 0;) {
        if (weights[i] > 0.0) return i;
    }
    return 0;
}

Partition from_labels(std::size_t n, std::span<const std::uint32_t> label) {
    Partition out;
    out.n = n;
    std::unordered_map<std::uint32_t, std::size_t> slot;
    for (std::size_t i = 0; i < n; ++i) {
        auto [it, fresh] = slot.try_emplace(label[i], out.blocks.size());
        if (fresh) out.blocks.emplace_back();
        out.blocks[it->second].push_back(static_cast<Index>(i));
    }
    return out;
}

Partition exact_partition(std::size_t n, Rng& rng) {
    auto& table = stirling_table();
    table.ensure(n);
    std::vector<double> weights(n);
    for (std::size_t k = 1; k <= n; ++k) weights[k - 1] = table.weight(n, k);
    std::size_t k = draw_index(weights, rng) + 1;

    // Labels follow block minima: the block whose minimum is met first on
    // the way down gets the highest free label.
    std::vector<std::uint32_t> label(n);
    for (std::size_t m = n; m >= 1; --m) {
        if (uniform01(rng) < table.single(m, k)) {
            --k;
            label[m - 1] = static_cast<std::uint32_t>(k);
        } else {
            label[m - 1] = std::uniform_int_distribution<std::uint32_t>(0, static_cast<std::uint32_t>(k - 1))(rng);
        }
    }
    return from_labels(n, label);
}

Partition urn_partition(std::size_t n, Rng& rng) {
    // P(K = k) is proportional to k^n / k!; the weights peak near
    // n / ln n and fall off quickly on both sides.
    const double dn = static_cast<double>(n);
    std::vector<double> logw;
    double best = -INFINITY;
    for (std::size_t k = 1;; ++k) {
        const double w = dn * std::log(static_cast<double>(k)) - std::lgamma(static_cast<double>(k) + 1.0);
        logw.push_back(w);
        best = std::max(best, w);
        if (w < best - 60.0) break;
    }
    std::vector<double> weights(logw.size());
    for (std::size_t i = 0; i < logw.size(); ++i) weights[i] = std::exp(logw[i] - best);
    const auto urns = static_cast<std::uint32_t>(draw_index(weights, rng) + 1);
    std::uniform_int_distribution<std::uint32_t> pick(0, urns - 1);
    std::vector<std::uint32_t> label(n);
    for (auto& l : label) l = pick(rng);
    return from_labels(n, label);
}

// Adds `set` and its intersections with the current members; the family
// stays intersection-closed.
void close_with(std::vector<std::uint64_t>& members, std::unordered_set<std::uint64_t>& seen, std::uint64_t set) {
    if (seen.contains(set)) return;
    const std::size_t before = members.size();
    members.push_back(set);
    seen.insert(set);
    for (std::size_t i = 0; i < before; ++i) {
        const std::uint64_t x = members[i] & set;
        if (seen.insert(x).second) members.push_back(x);
    }
}

std::size_t closure_growth(const std::unordered_set<std::uint64_t>& seen, const std::vector<std::uint64_t>& members,
                           std::uint64_t set) {
    if (seen.contains(set)) return 0;
    std::unordered_set<std::uint64_t> fresh{set};
    for (std::uint64_t m : members) {
        const std::uint64_t x = m & set;
        if (!seen.contains(x)) fresh.insert(x);
    }
    return fresh.size();
}

}  // namespace

Lattice powerset_lattice(unsigned k) {
    if (k > Lattice::max_powerset_rank) {
        throw Error(Errc::too_large, "powerset rank " + std::to_string(k) + " exceeds " +
                                         std::to_string(Lattice::max_powerset_rank));
    }
    return Lattice::powerset(k);
}

Lattice mn_lattice(std::size_t n) {
    std::vector<CoverPair> covers;
    const auto top = static_cast<Element>(n + 1);
    for (Element a = 1; a <= n; ++a) {
        covers.emplace_back(0, a);
        covers.emplace_back(a, top);
    }
    if (n == 0) covers.emplace_back(0, 1);
    return Lattice::from_covers(n + 2, covers);
}

Lattice chain_lattice(std::size_t n) {
    std::vector<CoverPair> covers;
    for (std::size_t a = 1; a < n; ++a) covers.emplace_back(static_cast<Element>(a - 1), static_cast<Element>(a));
    return Lattice::from_covers(n, covers);
}

Poset Poset::antichain(std::size_t k) { return Poset{k, std::vector<std::uint32_t>(k, 0)}; }

Poset Poset::chain(std::size_t k) {
    Poset p{k, std::vector<std::uint32_t>(k)};
    for (std::size_t i = 0; i < k; ++i) p.below[i] = static_cast<std::uint32_t>((std::uint64_t{1} << i) - 1);
    return p;
}

Poset random_poset(std::size_t k, Rng& rng, double p) {
    if (k > 32) throw Error(Errc::too_large, "posets are limited to 32 points");
    std::bernoulli_distribution edge(p);
    Poset out{k, std::vector<std::uint32_t>(k, 0)};
    for (std::size_t j = 0; j < k; ++j) {
        for (std::size_t i = 0; i < j; ++i) {
            if (edge(rng)) out.below[j] |= out.below[i] | (std::uint32_t{1} << i);
        }
    }
    return out;
}

Lattice downset_lattice(const Poset& poset, std::size_t max_size) {
    std::unordered_map<std::uint32_t, Element> index{{0, 0}};
    std::deque<std::uint32_t> queue{0};
    std::vector<CoverPair> covers;
    while (!queue.empty()) {
        const std::uint32_t set = queue.front();
        queue.pop_front();
        const Element from = index.at(set);
        for (std::size_t x = 0; x < poset.k; ++x) {
            const std::uint32_t bit = std::uint32_t{1} << x;
            if ((set & bit) != 0 || (poset.below[x] & ~set) != 0) continue;
            const std::uint32_t next = set | bit;
            auto [it, fresh] = index.try_emplace(next, static_cast<Element>(index.size()));
            if (fresh) {
                if (index.size() > max_size) {
                    throw Error(Errc::output_too_large, "more than " + std::to_string(max_size) + " down-sets");
                }
                queue.push_back(next);
            }
            covers.emplace_back(from, it->second);
        }
    }
    return Lattice::from_covers(index.size(), covers);
}

Lattice random_distributive(std::size_t k, Rng& rng, const DistributiveOptions& options) {
    if (k > 16) throw Error(Errc::too_large, "random distributive lattices use at most 16 poset points");
    for (unsigned attempt = 0; attempt < std::max(1U, options.attempts); ++attempt) {
        const Poset poset = random_poset(k, rng, options.p);
        try {
            return downset_lattice(poset, options.max_size);
        } catch (const Error& e) {
            if (e.code() != Errc::output_too_large) throw;
        }
    }
    throw Error(Errc::output_too_large, "no poset on " + std::to_string(k) + " points gave at most " +
                                            std::to_string(options.max_size) + " down-sets");
}

Lattice lattice_from_family(unsigned ground, const std::vector<std::uint64_t>& family) {
    if (ground > 64) throw Error(Errc::too_large, "ground sets are limited to 64 points");
    const std::uint64_t full = ground == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << ground) - 1;
    std::vector<std::uint64_t> members{full};
    std::unordered_set<std::uint64_t> seen{full};
    for (std::uint64_t set : family) {
        if ((set & ~full) != 0) throw Error(Errc::index_out_of_range, "family member outside the ground set");
        close_with(members, seen, set);
        if (members.size() > Lattice::max_tabled_size) {
            throw Error(Errc::too_large, "intersection closure exceeds " + std::to_string(Lattice::max_tabled_size));
        }
    }
    std::sort(members.begin(), members.end(), [](std::uint64_t a, std::uint64_t b) {
        const int pa = std::popcount(a);
        const int pb = std::popcount(b);
        return pa != pb ? pa < pb : a < b;
    });
    std::vector<CoverPair> order;
    for (std::size_t i = 0; i < members.size(); ++i) {
        for (std::size_t j = i + 1; j < members.size(); ++j) {
            if ((members[i] & ~members[j]) == 0) order.emplace_back(static_cast<Element>(i), static_cast<Element>(j));
        }
    }
    return Lattice::from_covers(members.size(), order);
}

Lattice random_arbitrary(std::size_t target_n, Rng& rng) {
    if (target_n > 512) throw Error(Errc::too_large, "random arbitrary lattices target at most 512 elements");
    const unsigned ground = std::min(64U, std::max(3U, 2 * static_cast<unsigned>(std::bit_width(target_n)) + 2));
    const std::uint64_t full = ground == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << ground) - 1;
    std::vector<std::uint64_t> members{full};
    std::unordered_set<std::uint64_t> seen{full};
    std::vector<std::uint64_t> family;
    std::uniform_real_distribution<double> density(0.3, 0.8);
    unsigned rejected = 0;
    while (members.size() < target_n && rejected < 64) {
        std::bernoulli_distribution keep(density(rng));
        std::uint64_t set = 0;
        for (unsigned x = 0; x < ground; ++x) {
            if (keep(rng)) set |= std::uint64_t{1} << x;
        }
        const std::size_t growth = closure_growth(seen, members, set);
        if (growth == 0 || members.size() + growth > target_n) {
            ++rejected;
            continue;
        }
        rejected = 0;
        close_with(members, seen, set);
        family.push_back(set);
    }
    return lattice_from_family(ground, family);
}

Partition random_partition(std::size_t n, Rng& rng) {
    if (n > max_partition_size) {
        throw Error(Errc::too_large, "random partitions are limited to " + std::to_string(max_partition_size) +
                                         " elements");
    }
    if (n == 0) return Partition{};
    return n <= exact_partition_limit ? exact_partition(n, rng) : urn_partition(n, rng);
}

Map random_map(const Lattice& lattice, Rng& rng) {
    Map out(lattice.size());
    std::uniform_int_distribution<Element> pick(0, static_cast<Element>(lattice.size() - 1));
    for (auto& x : out) x = pick(rng);
    return out;
}

Lattice generate_lattice(const GenConfig& config) {
    Rng rng(config.seed);
    const std::string& kind = config.kind;
    if (kind == "powerset") return powerset_lattice(static_cast<unsigned>(config.param));
    if (kind == "mn") return mn_lattice(config.param);
    if (kind == "chain") return chain_lattice(config.param);
    if (kind == "dist" || (kind == "random" && config.distributive)) return random_distributive(config.param, rng);
    if (kind == "arb" || kind == "random") return random_arbitrary(config.param, rng);
    throw Error(Errc::parse_error, "unknown lattice kind '" + kind + "'");
}

}  // namespace jmeet
