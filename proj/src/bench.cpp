#include "jmeet/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <sstream>

#include <json.hpp>

#include "jmeet/generators.hpp"
#include "jmeet/knowledge.hpp"

namespace jmeet {

namespace {

using Clock = std::chrono::steady_clock;

template <class F>
std::uint64_t time_nanos(F&& body) {
    const auto start = Clock::now();
    body();
    const auto stop = Clock::now();
    return static_cast<std::uint64_t>(std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count());
}

std::uint64_t splitmix(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

std::uint64_t hash_text(std::string_view text) {
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (unsigned char ch : text) h = (h ^ ch) * 0x100000001B3ULL;
    return h;
}

// Collects the trial rows of one (algorithm, instance) pair and emits the
// summary rows.
class Summary {
public:
    void add(const BenchRecord& r) {
        ++count_;
        sum_joins_ += r.joins;
        sum_meets_ += r.meets;
        sum_nanos_ += r.nanos;
        max_joins_ = std::max(max_joins_, r.joins);
        max_meets_ = std::max(max_meets_, r.meets);
        max_nanos_ = std::max(max_nanos_, r.nanos);
    }

    void emit(const BenchRecord& like, std::vector<BenchRecord>& out, const RecordSink& sink) const {
        if (count_ == 0) return;
        auto mean = [&](std::uint64_t sum) { return (sum + count_ / 2) / count_; };
        BenchRecord m = like;
        m.trial = "mean";
        m.joins = mean(sum_joins_);
        m.meets = mean(sum_meets_);
        m.nanos = mean(sum_nanos_);
        BenchRecord x = like;
        x.trial = "max";
        x.joins = max_joins_;
        x.meets = max_meets_;
        x.nanos = max_nanos_;
        for (auto* r : {&m, &x}) {
            out.push_back(*r);
            if (sink) sink(*r);
        }
    }

private:
    std::uint64_t count_ = 0;
    std::uint64_t sum_joins_ = 0, sum_meets_ = 0, sum_nanos_ = 0;
    std::uint64_t max_joins_ = 0, max_meets_ = 0, max_nanos_ = 0;
};

void push(std::vector<BenchRecord>& out, const RecordSink& sink, BenchRecord r) {
    if (sink) sink(r);
    out.push_back(std::move(r));
}

}  // namespace

std::string to_csv_row(const BenchRecord& r) {
    std::ostringstream line;
    line << r.algorithm << ',' << r.kind << ',' << r.n << ',' << r.trial << ',' << r.joins << ',' << r.meets << ','
         << r.nanos << ',' << r.seed;
    return line.str();
}

std::string format_records(const std::vector<BenchRecord>& records, std::string_view format) {
    if (format == "json") {
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& r : records) {
            rows.push_back({{"algorithm", r.algorithm}, {"kind", r.kind},   {"n", r.n},
                            {"trial", r.trial},         {"joins", r.joins}, {"meets", r.meets},
                            {"nanos", r.nanos},         {"seed", r.seed}});
        }
        return rows.dump(2) + "\n";
    }
    if (format != "csv") throw Error(Errc::parse_error, "unknown output format '" + std::string(format) + "'");
    std::string out(csv_header);
    out += '\n';
    for (const auto& r : records) {
        out += to_csv_row(r);
        out += '\n';
    }
    return out;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t salt) { return splitmix(seed ^ splitmix(salt)); }

std::vector<BenchRecord> run_meet_suite(const MeetSuite& suite, const RecordSink& sink) {
    std::vector<BenchRecord> out;
    if (suite.trials == 0) return out;
    for (const auto& kind : suite.kinds) {
        for (std::size_t size : suite.sizes) {
            const std::uint64_t instance_seed = derive_seed(suite.seed, hash_text(kind) ^ (size * 0x9E37ULL));
            const Lattice lattice = generate_lattice({instance_seed, kind, size, false});

            struct Trial {
                Endo f, g;
                std::uint64_t seed;
            };
            std::vector<Trial> trials;
            for (std::size_t t = 0; t < suite.trials; ++t) {
                const std::uint64_t seed = derive_seed(instance_seed, t);
                Rng rng(seed);
                Endo f = random_endo(lattice, rng);
                Endo g = random_endo(lattice, rng);
                trials.push_back({std::move(f), std::move(g), seed});
            }

            for (Algorithm algorithm : suite.algorithms) {
                if (requires_distributive(algorithm) && !lattice.is_distributive()) continue;
                const std::string name(algorithm_name(algorithm));
                compute_meet(algorithm, lattice, trials[0].f, trials[0].g, suite.limits);  // warm-up
                Summary summary;
                BenchRecord like{name, kind, lattice.size(), "", 0, 0, 0, instance_seed};
                for (std::size_t t = 0; t < trials.size(); ++t) {
                    MeetResult result;
                    const std::uint64_t nanos = time_nanos(
                        [&] { result = compute_meet(algorithm, lattice, trials[t].f, trials[t].g, suite.limits); });
                    BenchRecord r{name,           kind,   lattice.size(), std::to_string(t), result.counters.joins,
                                  result.counters.meets, nanos, trials[t].seed};
                    summary.add(r);
                    push(out, sink, std::move(r));
                }
                summary.emit(like, out, sink);
            }
        }
    }
    return out;
}

DKInstance random_dk_instance(std::size_t n, Rng& rng, bool make_true) {
    DKInstance inst;
    inst.pi = random_partition(n, rng);
    inst.pj = random_partition(n, rng);
    DisjointSet ri = partition_to_ds(inst.pi);
    DisjointSet rj = partition_to_ds(inst.pj);
    DisjointSet q = intersection(ri, rj);
    inst.pm = ds_to_partition(q);
    inst.expected = true;
    if (!make_true && inst.pm.blocks.size() >= 2) {
        auto& blocks = inst.pm.blocks;
        std::uniform_int_distribution<std::size_t> pick(0, blocks.size() - 1);
        const std::size_t a = pick(rng);
        std::size_t b = pick(rng);
        while (b == a) b = pick(rng);
        blocks[a].insert(blocks[a].end(), blocks[b].begin(), blocks[b].end());
        blocks.erase(blocks.begin() + static_cast<std::ptrdiff_t>(b));
        inst.pm = normalized(std::move(inst.pm));
        inst.expected = false;
    }
    return inst;
}

std::vector<BenchRecord> run_dk_suite(const DKSuite& suite, const RecordSink& sink) {
    std::vector<BenchRecord> out;
    if (suite.trials == 0) return out;
    enum class Variant { cached_operator, noncached_operator, relation, disjoint_set };
    constexpr std::pair<Variant, const char*> variants[] = {
        {Variant::cached_operator, "cached_operator"},
        {Variant::noncached_operator, "noncached_operator"},
        {Variant::relation, "relation"},
        {Variant::disjoint_set, "disjoint_set"},
    };
    for (std::size_t n : suite.sizes) {
        const std::uint64_t instance_seed = derive_seed(suite.seed, n);
        std::vector<DKInstance> instances;
        std::vector<std::uint64_t> seeds;
        for (std::size_t t = 0; t < suite.trials; ++t) {
            seeds.push_back(derive_seed(instance_seed, t));
            Rng rng(seeds.back());
            instances.push_back(random_dk_instance(n, rng, t % 2 == 0));
        }
        for (auto [variant, name] : variants) {
            const bool operators = variant == Variant::cached_operator || variant == Variant::noncached_operator;
            if (operators && n > std::min<std::size_t>(suite.operator_cap, 32)) continue;
            if (variant == Variant::relation && n > suite.relation_cap) continue;

            auto measure = [&](const DKInstance& inst) {
                bool answer = false;
                std::uint64_t nanos = 0;
                switch (variant) {
                case Variant::cached_operator: {
                    const auto cap = static_cast<unsigned>(n);
                    const KOpArray ki = build_kop_array(Relation::from_partition(inst.pi), cap);
                    const KOpArray kj = build_kop_array(Relation::from_partition(inst.pj), cap);
                    const KOpArray km = build_kop_array(Relation::from_partition(inst.pm), cap);
                    nanos = time_nanos([&] { answer = decide_dk_operators(ki, kj, km); });
                    break;
                }
                case Variant::noncached_operator: {
                    const auto cap = static_cast<unsigned>(n);
                    const Relation ri = Relation::from_partition(inst.pi);
                    const Relation rj = Relation::from_partition(inst.pj);
                    const Relation rm = Relation::from_partition(inst.pm);
                    nanos = time_nanos([&] {
                        answer = decide_dk_operators(build_kop_array(ri, cap), build_kop_array(rj, cap),
                                                     build_kop_array(rm, cap));
                    });
                    break;
                }
                case Variant::relation: {
                    const Relation ri = Relation::from_partition(inst.pi);
                    const Relation rj = Relation::from_partition(inst.pj);
                    const Relation rm = Relation::from_partition(inst.pm);
                    nanos = time_nanos([&] { answer = decide_dk_relations(ri, rj, rm); });
                    break;
                }
                case Variant::disjoint_set:
                    nanos = time_nanos([&] { answer = decide_dk_partitions(inst.pi, inst.pj, inst.pm); });
                    break;
                }
                if (answer != inst.expected) {
                    throw std::logic_error(std::string(name) + " disagrees with the constructed answer");
                }
                return nanos;
            };

            measure(instances[0]);  // warm-up
            Summary summary;
            for (std::size_t t = 0; t < instances.size(); ++t) {
                BenchRecord r{name, "aumann", n, std::to_string(t), 0, 0, measure(instances[t]), seeds[t]};
                summary.add(r);
                push(out, sink, std::move(r));
            }
            summary.emit(BenchRecord{name, "aumann", n, "", 0, 0, 0, instance_seed}, out, sink);
        }
    }
    return out;
}

double loglog_slope(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.size() < 2) throw Error(Errc::size_mismatch, "slope needs two or more paired points");
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += std::log(x[i]);
        my += std::log(y[i]);
    }
    mx /= static_cast<double>(x.size());
    my /= static_cast<double>(y.size());
    double sxy = 0, sxx = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double dx = std::log(x[i]) - mx;
        sxy += dx * (std::log(y[i]) - my);
        sxx += dx * dx;
    }
    return sxy / sxx;
}

}  // namespace jmeet
