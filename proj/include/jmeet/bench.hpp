#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "jmeet/meet.hpp"
#include "jmeet/partition.hpp"

namespace jmeet {

/// One measurement. `trial` is the trial index, or "mean" / "max" on the
/// summary rows. Everything except `nanos` is a function of the seed.
struct BenchRecord {
    std::string algorithm;
    std::string kind;
    std::size_t n = 0;
    std::string trial;
    std::uint64_t joins = 0;
    std::uint64_t meets = 0;
    std::uint64_t nanos = 0;
    std::uint64_t seed = 0;
};

inline constexpr std::string_view csv_header = "algorithm,kind,n,trial,joins,meets,nanos,seed";

std::string to_csv_row(const BenchRecord& record);
/// `format` is "csv" (header plus one line per record) or "json" (array of objects).
std::string format_records(const std::vector<BenchRecord>& records, std::string_view format);

/// Rows are handed to the sink as soon as they are measured.
using RecordSink = std::function<void(const BenchRecord&)>;

/// Deterministic 64-bit seed for one (suite seed, salt) combination.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t salt);

struct MeetSuite {
    std::vector<std::string> kinds{"powerset"};  // lattice kinds understood by generate_lattice
    std::vector<std::size_t> sizes{4};           // generator parameter per instance
    std::size_t trials = 100;
    std::vector<Algorithm> algorithms{Algorithm::dmeet, Algorithm::dmeet_plus};
    std::uint64_t seed = 0;
    BruteForceLimits limits;
};

/// For every instance and trial, draws two random join-endomorphisms and
/// times each algorithm on them (monotonic clock around the call only). An
/// untimed warm-up call precedes the first trial of each algorithm.
/// Distributive-only algorithms are skipped on other lattices. After the
/// trials of an (algorithm, instance) pair come a "mean" row (mean counters
/// and time) and a "max" row (largest counters and time). No trials, no rows.
std::vector<BenchRecord> run_meet_suite(const MeetSuite& suite, const RecordSink& sink = {});

/// Three partitions of the same states and whether the third is the
/// intersection of the first two.
struct DKInstance {
    Partition pi;
    Partition pj;
    Partition pm;
    bool expected = true;
};

/// P_i, P_j uniform; P_m is their intersection, or with `make_true` unset
/// the intersection with two of its blocks merged (which always yields a
/// wrong answer when the intersection has two blocks; otherwise the
/// instance stays true and `expected` says so).
DKInstance random_dk_instance(std::size_t n, Rng& rng, bool make_true);

struct DKSuite {
    std::vector<std::size_t> sizes{10, 100, 1000};
    std::size_t trials = 10;
    std::uint64_t seed = 0;
    std::size_t operator_cap = 16;   // largest n for the two operator variants
    std::size_t relation_cap = 4096; // largest n for the relation variant
};

/// Variants: cached_operator (arrays prebuilt, only the n probes timed),
/// noncached_operator (array construction timed as well), relation
/// (matrix comparison) and disjoint_set (union-find intersection and
/// canonical comparison). Even trials are true instances, odd trials
/// perturbed ones. Counter columns are zero. Summary rows as in the meet
/// suite.
std::vector<BenchRecord> run_dk_suite(const DKSuite& suite, const RecordSink& sink = {});

/// Least-squares slope of log y against log x.
double loglog_slope(std::span<const double> x, std::span<const double> y);

}  // namespace jmeet
