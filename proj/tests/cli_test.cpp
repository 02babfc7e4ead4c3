#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>
#include <unistd.h>

#include "jmeet/io.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
    int status = -1;
    std::string out;
};

// Runs the CLI with stderr discarded and returns its exit status and stdout.
Run jmeet_cli(const std::string& args) {
    const std::string command = std::string("\"") + JMEET_CLI_PATH + "\" " + args + " 2>/dev/null";
    Run run;
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buffer{};
    std::size_t got = 0;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) run.out.append(buffer.data(), got);
    const int raw = pclose(pipe);
    run.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return run;
}

class Scratch {
public:
    Scratch() : dir_(fs::temp_directory_path() / ("jmeet-cli-" + std::to_string(::getpid()))) {
        fs::create_directories(dir_);
    }
    ~Scratch() { fs::remove_all(dir_); }

    std::string file(const std::string& name, const std::string& contents) const {
        const fs::path p = dir_ / name;
        std::ofstream(p) << contents;
        return p.string();
    }
    std::string path(const std::string& name) const { return (dir_ / name).string(); }

private:
    fs::path dir_;
};

std::string trim(std::string s) {
    while (!s.empty() && (s.back() == '\n' || s.back() == ' ')) s.pop_back();
    return s;
}

}  // namespace

TEST_CASE("gen lattice") {
    const Run p = jmeet_cli("gen lattice --kind powerset --param 3");
    CHECK(p.status == 0);
    CHECK(trim(p.out) == R"({"powerset":3})");

    const Run a = jmeet_cli("--seed 4 gen lattice --kind arb --param 20");
    const Run b = jmeet_cli("--seed 4 gen lattice --kind arb --param 20");
    CHECK(a.status == 0);
    CHECK(a.out == b.out);
    CHECK(jmeet::parse_lattice(a.out).size() <= 20);

    CHECK(jmeet_cli("gen lattice --kind nonsense --param 3").status == 2);
    CHECK(jmeet_cli("gen lattice --kind powerset --param 40").status == 3);
}

TEST_CASE("gen endo, partition and relation") {
    Scratch s;
    const std::string lattice = s.file("m3.json", R"({"mn": 3})");
    const Run e = jmeet_cli("--seed 2 gen endo --lattice " + lattice);
    CHECK(e.status == 0);
    const jmeet::Lattice m3 = jmeet::parse_lattice(R"({"mn": 3})");
    CHECK(jmeet::is_join_endo(m3, jmeet::parse_endo(e.out).view()));

    const Run p = jmeet_cli("--seed 3 gen partition --n 50");
    CHECK(p.status == 0);
    CHECK(jmeet::parse_partition(p.out).n == 50);

    const Run r = jmeet_cli("--seed 3 gen relation --n 6 --equivalence");
    CHECK(r.status == 0);
    CHECK(jmeet::parse_relation(r.out).is_equivalence());
    CHECK(jmeet_cli("gen relation --n 65").status == 3);

    CHECK(jmeet_cli("gen kop --relation " + s.file("r.json", r.out)).status == 2);
    CHECK(jmeet_cli("--out " + s.path("r.kop") + " gen kop --relation " + s.path("r.json")).status == 0);
    CHECK(jmeet::load_kop(s.path("r.kop")).n == 6);
}

TEST_CASE("meet") {
    Scratch s;
    const std::string m2 = s.file("m2.json", R"({"n": 4, "covers": [[0, 1], [0, 2], [1, 3], [2, 3]]})");
    const std::string f = s.file("f.json", "[0, 2, 1, 3]");
    const std::string g = s.file("g.json", "[0, 3, 2, 3]");
    for (const char* algorithm : {"dmeet", "dmeet+", "gmeet", "gmeet*", "gmeet_mono", "brute"}) {
        const Run r = jmeet_cli("meet --lattice " + m2 + " --f " + f + " --g " + g + " --algorithm " + algorithm);
        CAPTURE(algorithm);
        CHECK(r.status == 0);
        CHECK(trim(r.out) == "[0,2,0,2]");
    }

    const Run csv = jmeet_cli("--format csv --out " + s.path("h.json") + " meet --lattice " + m2 + " --f " + f +
                              " --g " + g + " --algorithm dmeet");
    CHECK(csv.status == 0);
    CHECK(csv.out.rfind("algorithm,kind,n,trial,joins,meets,nanos,seed\ndmeet,file,4,", 0) == 0);
    CHECK(trim(jmeet::read_file(s.path("h.json"))) == "[0,2,0,2]");

    const std::string m3 = s.file("m3.json", R"({"mn": 3})");
    const std::string f3 = s.file("f3.json", "[0, 1, 3, 2, 4]");
    const std::string g3 = s.file("g3.json", "[0, 4, 2, 3, 4]");
    CHECK(jmeet_cli("meet --lattice " + m3 + " --f " + f3 + " --g " + g3 + " --algorithm dmeet").status == 4);
    const Run general = jmeet_cli("meet --lattice " + m3 + " --f " + f3 + " --g " + g3 + " --algorithm gmeet");
    CHECK(general.status == 0);
    CHECK(trim(general.out) == "[0,0,0,0,0]");

    // parse errors, shape errors, non-endomorphisms
    CHECK(jmeet_cli("meet --lattice " + m2 + " --f " + f + " --g " + g + " --algorithm fast").status == 2);
    CHECK(jmeet_cli("meet --lattice " + s.file("bad.json", "{") + " --f " + f + " --g " + g).status == 2);
    CHECK(jmeet_cli("meet --lattice " + m2 + " --f " + s.file("short.json", "[0, 1]") + " --g " + g).status == 3);
    CHECK(jmeet_cli("meet --lattice " + m2 + " --f " + s.file("pm.json", "[0, 2, 0, 3]") + " --g " + g).status == 3);
    CHECK(jmeet_cli("meet --lattice " + m2).status == 2);
    CHECK(jmeet_cli("frobnicate").status == 2);
    CHECK(jmeet_cli("--help").status == 0);
}

TEST_CASE("bench") {
    const Run r = jmeet_cli("--seed 1 bench --kinds powerset --sizes 2..4 --trials 2 --algorithms dmeet,dmeet+");
    CHECK(r.status == 0);
    std::istringstream lines(r.out);
    std::string line;
    std::getline(lines, line);
    CHECK(line == "algorithm,kind,n,trial,joins,meets,nanos,seed");
    int rows = 0;
    while (std::getline(lines, line)) ++rows;
    CHECK(rows == 2 * 3 * 4);

    const Run empty = jmeet_cli("bench --kinds powerset --sizes 3 --trials 0 --algorithms dmeet");
    CHECK(empty.out == "algorithm,kind,n,trial,joins,meets,nanos,seed\n");
    const Run json = jmeet_cli("--format json bench --kinds mn --sizes 3 --trials 1 --algorithms gmeet");
    CHECK(json.status == 0);
    CHECK(json.out.front() == '[');
    CHECK(jmeet_cli("bench --sizes 3..x").status == 2);
}

TEST_CASE("dk") {
    Scratch s;
    const std::string pi = s.file("pi.json", "[[0, 1, 2], [3, 4]]");
    const std::string pj = s.file("pj.json", "[[0, 1], [2, 3, 4]]");
    const std::string yes = s.file("yes.json", "[[0, 1], [2], [3, 4]]");
    const std::string no = s.file("no.json", "[[0, 1, 2], [3, 4]]");
    const Run t = jmeet_cli("dk --mode partitions --i " + pi + " --j " + pj + " --m " + yes);
    CHECK(t.status == 0);
    CHECK(trim(t.out) == "true");
    const Run f = jmeet_cli("dk --mode partitions --i " + pi + " --j " + pj + " --m " + no);
    CHECK(f.status == 1);
    CHECK(trim(f.out) == "false");

    const std::string ri = s.file("ri.json", jmeet::format_relation(jmeet::Relation::from_partition(jmeet::parse_partition("[[0, 1, 2], [3, 4]]"))));
    const std::string rj = s.file("rj.json", jmeet::format_relation(jmeet::Relation::from_partition(jmeet::parse_partition("[[0, 1], [2, 3, 4]]"))));
    const std::string rm = s.file("rm.json", jmeet::format_relation(jmeet::Relation::from_partition(jmeet::parse_partition("[[0, 1], [2], [3, 4]]"))));
    CHECK(jmeet_cli("dk --mode relations --i " + ri + " --j " + rj + " --m " + rm).status == 0);
    CHECK(jmeet_cli("dk --mode relations --i " + ri + " --j " + rj + " --m " + ri).status == 1);

    for (const char* name : {"ri", "rj", "rm"}) {
        REQUIRE(jmeet_cli("--out " + s.path(std::string(name) + ".kop") + " gen kop --relation " +
                          s.path(std::string(name) + ".json"))
                    .status == 0);
    }
    CHECK(jmeet_cli("dk --mode operators --i " + s.path("ri.kop") + " --j " + s.path("rj.kop") + " --m " +
                    s.path("rm.kop"))
              .status == 0);
    CHECK(jmeet_cli("dk --mode operators --i " + s.path("ri.kop") + " --j " + s.path("rj.kop") + " --m " +
                    s.path("rj.kop"))
              .status == 1);

    CHECK(jmeet_cli("dk --mode partitions --i " + pi).status == 2);
    CHECK(jmeet_cli("dk --mode partitions --i " + pi + " --j " + s.file("bad.json", "[[0, 0]]") + " --m " + yes)
              .status == 3);

    const Run bench = jmeet_cli("dk --bench --sizes 4,8 --trials 2 --operator-cap 8");
    CHECK(bench.status == 0);
    CHECK(bench.out.find("disjoint_set,aumann,8,max") != std::string::npos);
}

TEST_CASE("partition") {
    Scratch s;
    const std::string a = s.file("a.json", "[[0, 1, 2], [3, 4]]");
    const std::string b = s.file("b.json", "[[0, 1], [2, 3, 4]]");
    const Run r = jmeet_cli("partition intersect " + a + " " + b);
    CHECK(r.status == 0);
    CHECK(trim(r.out) == "[[0,1],[2],[3,4]]");

    const Run yes = jmeet_cli("partition intersect " + a + " " + b + " " + s.file("c.json", "[[1, 0], [2], [4, 3]]"));
    CHECK(yes.status == 0);
    CHECK(trim(yes.out).ends_with("true"));
    CHECK(jmeet_cli("partition intersect " + a + " " + b + " " + a).status == 1);

    CHECK(jmeet_cli("partition equal " + a + " " + s.file("a2.json", "[[4, 3], [2, 0, 1]]")).status == 0);
    CHECK(jmeet_cli("partition equal " + a + " " + b).status == 1);
    CHECK(jmeet_cli("partition equal " + a + " " + s.file("big.json", "[[0], [1], [2], [3], [4], [5]]")).status == 1);
    CHECK(jmeet_cli("partition equal " + a + " " + s.path("missing.json")).status == 2);
}
