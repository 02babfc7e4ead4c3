// Command-line front end: generators, meets, benchmarks, distributed
// knowledge checks and partition operations.
//
// Exit status: 0 success (and "true" for dk / partition equal), 1 "false",
// 2 unreadable input or bad arguments, 3 input that parses but fails
// validation, 4 a distributive-only algorithm on another lattice.

#include <charconv>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "jmeet/bench.hpp"
#include "jmeet/generators.hpp"
#include "jmeet/io.hpp"
#include "jmeet/knowledge.hpp"
#include "jmeet/meet.hpp"

namespace {

using namespace jmeet;

constexpr int exit_false = 1;
constexpr int exit_parse = 2;
constexpr int exit_invalid = 3;
constexpr int exit_mismatch = 4;

struct Globals {
    std::uint64_t seed = 0;
    std::string out;
    std::string format = "json";
};

void emit(const Globals& g, const std::string& text) {
    if (g.out.empty() || g.out == "-") {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
    } else {
        write_file(g.out, text.back() == '\n' ? text : text + "\n");
    }
}

// Sizes like "4", "2..10" or "10,100,1000".
std::vector<std::size_t> parse_sizes(const std::string& text) {
    auto number = [&](std::string_view s) {
        std::size_t v = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc{} || ptr != s.data() + s.size()) throw Error(Errc::parse_error, "bad size '" + text + "'");
        return v;
    };
    std::vector<std::size_t> out;
    if (auto dots = text.find(".."); dots != std::string::npos) {
        const std::size_t lo = number(std::string_view(text).substr(0, dots));
        const std::size_t hi = number(std::string_view(text).substr(dots + 2));
        for (std::size_t v = lo; v <= hi; ++v) out.push_back(v);
        return out;
    }
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = std::min(text.find(',', start), text.size());
        out.push_back(number(std::string_view(text).substr(start, comma - start)));
        start = comma + 1;
    }
    return out;
}

void check_map(const Lattice& lattice, const Endo& map, const char* what) {
    if (map.size() != lattice.size()) {
        throw Error(Errc::size_mismatch, std::string(what) + " has " + std::to_string(map.size()) +
                                             " entries for a lattice of " + std::to_string(lattice.size()));
    }
    for (Element v : map.view()) {
        if (v >= lattice.size()) throw Error(Errc::index_out_of_range, std::string(what) + " leaves the lattice");
    }
}

std::string bool_text(bool value) { return value ? "true" : "false"; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Meets of join-endomorphisms, distributed knowledge and partition intersection"};
    app.require_subcommand(1);
    app.fallthrough();

    Globals globals;
    app.add_option("--seed", globals.seed, "Random seed");
    app.add_option("--out", globals.out, "Output file (stdout by default)");
    app.add_option("--format", globals.format, "Output format for records")->check(CLI::IsMember({"json", "csv"}));

    // gen -------------------------------------------------------------------
    auto* gen = app.add_subcommand("gen", "Generate lattices, maps, partitions and relations");
    gen->require_subcommand(1);

    std::string lattice_kind = "powerset";
    std::size_t lattice_param = 4;
    auto* gen_lattice = gen->add_subcommand("lattice", "Generate a lattice");
    gen_lattice->add_option("--kind", lattice_kind, "powerset | mn | chain | dist | arb")
        ->check(CLI::IsMember({"powerset", "mn", "chain", "dist", "arb"}));
    gen_lattice->add_option("--param", lattice_param, "Rank, atom count, chain length, poset points or target size");

    std::string endo_lattice;
    std::optional<std::size_t> endo_density;
    bool endo_arbitrary = false;
    auto* gen_endo = gen->add_subcommand("endo", "Generate a random join-endomorphism of a lattice");
    gen_endo->add_option("--lattice", endo_lattice, "Lattice JSON file")->required();
    gen_endo->add_option("--density", endo_density, "Number of generator maps joined (default |J(L)|)");
    gen_endo->add_flag("--arbitrary", endo_arbitrary, "Uniform self-map instead of a join-endomorphism");

    std::size_t partition_n = 10;
    auto* gen_partition = gen->add_subcommand("partition", "Generate a uniformly random partition");
    gen_partition->add_option("--n", partition_n, "Number of elements")->required();

    std::size_t relation_n = 4;
    double relation_p = 0.5;
    bool relation_equivalence = false;
    auto* gen_relation = gen->add_subcommand("relation", "Generate a random accessibility relation");
    gen_relation->add_option("--n", relation_n, "Number of states")->required();
    gen_relation->add_option("--p", relation_p, "Edge probability");
    gen_relation->add_flag("--equivalence", relation_equivalence, "Equivalence from a random partition");

    std::string kop_relation;
    auto* gen_kop = gen->add_subcommand("kop", "Tabulate the knowledge operator of a relation (binary)");
    gen_kop->add_option("--relation", kop_relation, "Relation JSON file")->required();

    // meet ------------------------------------------------------------------
    std::string meet_lattice, meet_f, meet_g, meet_algorithm = "dmeet+";
    auto* meet = app.add_subcommand("meet", "Meet of two join-endomorphisms");
    meet->add_option("--lattice", meet_lattice, "Lattice JSON file")->required();
    meet->add_option("--f", meet_f, "First map (JSON array)")->required();
    meet->add_option("--g", meet_g, "Second map (JSON array)")->required();
    meet->add_option("--algorithm", meet_algorithm,
                     "dmeet | dmeet+ | gmeet | gmeet* | gmeet_mono | gmeet_mono* | gmeet_mono_lazy | brute");

    // bench -----------------------------------------------------------------
    std::string bench_kinds = "powerset", bench_sizes = "2..10", bench_algorithms = "dmeet,dmeet+";
    std::size_t bench_trials = 100;
    auto* bench = app.add_subcommand("bench", "Meet benchmark campaign");
    bench->add_option("--kinds", bench_kinds, "Comma-separated lattice kinds");
    bench->add_option("--sizes", bench_sizes, "Generator parameters: N, A..B or a comma list");
    bench->add_option("--trials", bench_trials, "Trials per instance");
    bench->add_option("--algorithms", bench_algorithms, "Comma-separated algorithm names");

    // dk --------------------------------------------------------------------
    std::string dk_mode = "partitions", dk_i, dk_j, dk_m, dk_sizes = "10,100,1000";
    std::size_t dk_trials = 10, dk_operator_cap = 16;
    bool dk_bench = false;
    auto* dk = app.add_subcommand("dk", "Decide whether K_m is the distributed knowledge of i and j");
    dk->add_option("--mode", dk_mode, "operators | relations | partitions")
        ->check(CLI::IsMember({"operators", "relations", "partitions"}));
    dk->add_option("--i", dk_i, "Input for agent i");
    dk->add_option("--j", dk_j, "Input for agent j");
    dk->add_option("--m", dk_m, "Input for agent m");
    dk->add_flag("--bench", dk_bench, "Run the four-variant timing campaign instead");
    dk->add_option("--sizes", dk_sizes, "Benchmark state counts");
    dk->add_option("--trials", dk_trials, "Benchmark trials per size");
    dk->add_option("--operator-cap", dk_operator_cap, "Largest n for the operator variants");

    // partition -------------------------------------------------------------
    auto* partition = app.add_subcommand("partition", "Partition intersection and equality");
    partition->require_subcommand(1);
    std::string part_a, part_b, part_c;
    auto* part_intersect = partition->add_subcommand("intersect", "Intersect two partitions");
    part_intersect->add_option("first", part_a, "Partition JSON file")->required();
    part_intersect->add_option("second", part_b, "Partition JSON file")->required();
    part_intersect->add_option("expected", part_c, "Optional partition compared with the intersection");
    auto* part_equal = partition->add_subcommand("equal", "Compare two partitions");
    part_equal->add_option("first", part_a, "Partition JSON file")->required();
    part_equal->add_option("second", part_b, "Partition JSON file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : exit_parse;
    }

    try {
        if (gen_lattice->parsed()) {
            emit(globals, format_lattice(generate_lattice({globals.seed, lattice_kind, lattice_param, false})));
        } else if (gen_endo->parsed()) {
            const Lattice lattice = parse_lattice(read_file(endo_lattice));
            Rng rng(globals.seed);
            Map map = endo_arbitrary ? random_map(lattice, rng)
                                     : random_endo(lattice, rng, endo_density.value_or(lattice.join_irreducibles().size())).map();
            emit(globals, format_endo(map));
        } else if (gen_partition->parsed()) {
            Rng rng(globals.seed);
            emit(globals, format_partition(random_partition(partition_n, rng)));
        } else if (gen_relation->parsed()) {
            Rng rng(globals.seed);
            if (relation_n > 64) throw Error(Errc::too_many_states, "relations are limited to 64 states");
            Relation r(relation_n);
            if (relation_equivalence) {
                r = Relation::from_partition(random_partition(relation_n, rng));
            } else {
                std::bernoulli_distribution edge(relation_p);
                for (std::size_t a = 0; a < relation_n; ++a) {
                    for (std::size_t b = 0; b < relation_n; ++b) r.set(a, b, edge(rng));
                }
            }
            emit(globals, format_relation(r));
        } else if (gen_kop->parsed()) {
            if (globals.out.empty()) throw Error(Errc::parse_error, "gen kop writes a binary file; pass --out");
            save_kop(globals.out, build_kop_array(parse_relation(read_file(kop_relation))));
        } else if (meet->parsed()) {
            const auto algorithm = parse_algorithm(meet_algorithm);
            if (!algorithm) throw Error(Errc::parse_error, "unknown algorithm '" + meet_algorithm + "'");
            const Lattice lattice = parse_lattice(read_file(meet_lattice));
            const Endo f = parse_endo(read_file(meet_f));
            const Endo g = parse_endo(read_file(meet_g));
            check_map(lattice, f, "f");
            check_map(lattice, g, "g");
            if (requires_distributive(*algorithm) && !lattice.is_distributive()) {
                std::cerr << "error: " << meet_algorithm << " requires a distributive lattice\n";
                return exit_mismatch;
            }
            const MeetResult result = compute_meet(*algorithm, lattice, f, g);
            const BenchRecord record{std::string(algorithm_name(*algorithm)),
                                     "file",
                                     lattice.size(),
                                     "0",
                                     result.counters.joins,
                                     result.counters.meets,
                                     0,
                                     globals.seed};
            if (globals.out.empty()) {
                std::cout << format_endo(result.result.view()) << '\n';
                std::cerr << "joins=" << record.joins << " meets=" << record.meets << '\n';
            } else {
                write_file(globals.out, format_endo(result.result.view()) + "\n");
                std::cout << format_records({record}, globals.format);
            }
        } else if (bench->parsed()) {
            MeetSuite suite;
            suite.kinds.clear();
            for (const auto& k : CLI::detail::split(bench_kinds, ',')) suite.kinds.push_back(k);
            suite.sizes = parse_sizes(bench_sizes);
            suite.trials = bench_trials;
            suite.seed = globals.seed;
            suite.algorithms.clear();
            for (const auto& name : CLI::detail::split(bench_algorithms, ',')) {
                const auto a = parse_algorithm(name);
                if (!a) throw Error(Errc::parse_error, "unknown algorithm '" + name + "'");
                suite.algorithms.push_back(*a);
            }
            const std::string format = app.get_option("--format")->count() ? globals.format : "csv";
            emit(globals, format_records(run_meet_suite(suite), format));
        } else if (dk->parsed()) {
            if (dk_bench) {
                DKSuite suite;
                suite.sizes = parse_sizes(dk_sizes);
                suite.trials = dk_trials;
                suite.seed = globals.seed;
                suite.operator_cap = dk_operator_cap;
                const std::string format = app.get_option("--format")->count() ? globals.format : "csv";
                emit(globals, format_records(run_dk_suite(suite), format));
                return 0;
            }
            if (dk_i.empty() || dk_j.empty() || dk_m.empty()) {
                throw Error(Errc::parse_error, "dk needs --i, --j and --m (or --bench)");
            }
            bool answer = false;
            if (dk_mode == "operators") {
                answer = decide_dk_operators(load_kop(dk_i), load_kop(dk_j), load_kop(dk_m));
            } else if (dk_mode == "relations") {
                answer = decide_dk_relations(parse_relation(read_file(dk_i)), parse_relation(read_file(dk_j)),
                                             parse_relation(read_file(dk_m)));
            } else {
                answer = decide_dk_partitions(parse_partition(read_file(dk_i)), parse_partition(read_file(dk_j)),
                                              parse_partition(read_file(dk_m)));
            }
            emit(globals, bool_text(answer));
            return answer ? 0 : exit_false;
        } else if (part_intersect->parsed()) {
            DisjointSet a = partition_to_ds(parse_partition(read_file(part_a)));
            DisjointSet b = partition_to_ds(parse_partition(read_file(part_b)));
            DisjointSet q = intersection(a, b);
            emit(globals, format_partition(ds_to_partition(q)));
            if (!part_c.empty()) {
                DisjointSet c = partition_to_ds(parse_partition(read_file(part_c)));
                const bool same = q.size() == c.size() && equal(q, c);
                std::cout << bool_text(same) << '\n';
                return same ? 0 : exit_false;
            }
        } else if (part_equal->parsed()) {
            DisjointSet a = partition_to_ds(parse_partition(read_file(part_a)));
            DisjointSet b = partition_to_ds(parse_partition(read_file(part_b)));
            const bool same = a.size() == b.size() && equal(a, b);
            emit(globals, bool_text(same));
            return same ? 0 : exit_false;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        if (e.code() == Errc::parse_error) return exit_parse;
        if (e.code() == Errc::not_distributive) return exit_mismatch;
        return exit_invalid;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_invalid;
    }
    return 0;
}
