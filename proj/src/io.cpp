#include "jmeet/io.hpp"

#include <array>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "jmeet/generators.hpp"

namespace jmeet {

namespace {

using nlohmann::json;

constexpr std::array<char, 8> kop_magic = {'K', 'O', 'P', 'A', 'R', 'R', 'A', 'Y'};

[[noreturn]] void parse_fail(const std::string& what) { throw Error(Errc::parse_error, what); }

json parse_json(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        parse_fail(e.what());
    }
}

std::uint64_t as_index(const json& value, const char* what) {
    if (!value.is_number_unsigned() && !(value.is_number_integer() && value.get<std::int64_t>() >= 0)) {
        parse_fail(std::string(what) + " must be a non-negative integer");
    }
    return value.get<std::uint64_t>();
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> as_pairs(const json& value, const char* what) {
    if (!value.is_array()) parse_fail(std::string(what) + " must be an array of pairs");
    std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
    out.reserve(value.size());
    for (const auto& item : value) {
        if (!item.is_array() || item.size() != 2) parse_fail(std::string(what) + " entries must be pairs");
        out.emplace_back(as_index(item[0], what), as_index(item[1], what));
    }
    return out;
}

}  // namespace

Lattice parse_lattice(std::string_view text) {
    const json doc = parse_json(text);
    if (!doc.is_object()) parse_fail("lattice must be a JSON object");
    if (doc.contains("powerset")) return powerset_lattice(static_cast<unsigned>(as_index(doc["powerset"], "powerset")));
    if (doc.contains("mn")) return mn_lattice(as_index(doc["mn"], "mn"));
    if (!doc.contains("n") || !doc.contains("covers")) parse_fail("lattice needs \"n\" and \"covers\"");
    const std::uint64_t n = as_index(doc["n"], "n");
    if (n > Lattice::max_tabled_size) {
        throw Error(Errc::too_large, std::to_string(n) + " elements exceed the table limit");
    }
    std::vector<CoverPair> covers;
    for (auto [lo, hi] : as_pairs(doc["covers"], "covers")) {
        if (lo >= n || hi >= n) throw Error(Errc::index_out_of_range, "cover endpoint outside 0..n-1");
        covers.emplace_back(static_cast<Element>(lo), static_cast<Element>(hi));
    }
    return Lattice::from_covers(n, covers);
}

std::string format_lattice(const Lattice& lattice) {
    json doc;
    if (lattice.backend() == Lattice::Backend::powerset) {
        doc["powerset"] = lattice.rank();
        return doc.dump();
    }
    json covers = json::array();
    for (Element a = 0; a < lattice.size(); ++a) {
        for (Element b : lattice.lower_covers(a)) covers.push_back({b, a});
    }
    doc["n"] = lattice.size();
    doc["covers"] = std::move(covers);
    return doc.dump();
}

Endo parse_endo(std::string_view text) {
    const json doc = parse_json(text);
    if (!doc.is_array()) parse_fail("endo must be a JSON array");
    Map map;
    map.reserve(doc.size());
    for (const auto& v : doc) {
        const std::uint64_t x = as_index(v, "endo entry");
        if (x > UINT32_MAX) parse_fail("endo entry out of range");
        map.push_back(static_cast<Element>(x));
    }
    return Endo(std::move(map));
}

std::string format_endo(std::span<const Element> map) { return json(std::vector<Element>(map.begin(), map.end())).dump(); }

Relation parse_relation(std::string_view text) {
    const json doc = parse_json(text);
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("edges")) {
        parse_fail("relation needs \"n\" and \"edges\"");
    }
    const std::uint64_t n = as_index(doc["n"], "n");
    if (n > 64) throw Error(Errc::too_many_states, "relations are limited to 64 states");
    Relation out(n);
    for (auto [a, b] : as_pairs(doc["edges"], "edges")) {
        if (a >= n || b >= n) throw Error(Errc::index_out_of_range, "edge endpoint outside 0..n-1");
        out.set(a, b);
    }
    return out;
}

std::string format_relation(const Relation& relation) {
    json edges = json::array();
    for (std::size_t a = 0; a < relation.size(); ++a) {
        for (std::size_t b = 0; b < relation.size(); ++b) {
            if (relation.contains(a, b)) edges.push_back({a, b});
        }
    }
    return json{{"n", relation.size()}, {"edges", std::move(edges)}}.dump();
}

Partition parse_partition(std::string_view text) {
    const json doc = parse_json(text);
    if (!doc.is_array()) parse_fail("partition must be an array of blocks");
    Partition out;
    for (const auto& block : doc) {
        if (!block.is_array()) parse_fail("partition blocks must be arrays");
        auto& b = out.blocks.emplace_back();
        for (const auto& v : block) {
            const std::uint64_t x = as_index(v, "partition element");
            if (x > UINT32_MAX) parse_fail("partition element out of range");
            b.push_back(static_cast<Index>(x));
        }
        out.n += b.size();
    }
    validate_partition(out);
    return out;
}

std::string format_partition(const Partition& partition) { return json(partition.blocks).dump(); }

void write_kop_binary(std::ostream& out, const KOpArray& kop) {
    if (kop.vk.size() != (std::size_t{1} << kop.n)) throw Error(Errc::size_mismatch, "operator array has the wrong length");
    const std::size_t width = (kop.n + 7) / 8;
    out.write(kop_magic.data(), kop_magic.size());
    char header[4];
    for (int i = 0; i < 4; ++i) header[i] = static_cast<char>((kop.n >> (8 * i)) & 0xFF);
    out.write(header, 4);
    std::vector<char> buffer(kop.vk.size() * width);
    for (std::size_t e = 0; e < kop.vk.size(); ++e) {
        for (std::size_t i = 0; i < width; ++i) buffer[e * width + i] = static_cast<char>((kop.vk[e] >> (8 * i)) & 0xFF);
    }
    out.write(buffer.data(), static_cast<std::streamsize>(buffer.size()));
}

KOpArray read_kop_binary(std::istream& in) {
    std::array<char, 8> magic{};
    unsigned char header[4];
    if (!in.read(magic.data(), magic.size()) || magic != kop_magic) parse_fail("missing KOPARRAY header");
    if (!in.read(reinterpret_cast<char*>(header), 4)) parse_fail("truncated operator header");
    const std::uint32_t n = header[0] | (header[1] << 8) | (header[2] << 16) | (std::uint32_t{header[3]} << 24);
    if (n > 32) throw Error(Errc::too_many_states, "operator arrays hold at most 32 states");
    KOpArray out;
    out.n = n;
    out.vk.resize(std::size_t{1} << n);
    const std::size_t width = (n + 7) / 8;
    std::vector<unsigned char> buffer(out.vk.size() * width);
    if (!in.read(reinterpret_cast<char*>(buffer.data()), static_cast<std::streamsize>(buffer.size()))) {
        parse_fail("truncated operator array");
    }
    for (std::size_t e = 0; e < out.vk.size(); ++e) {
        std::uint32_t code = 0;
        for (std::size_t i = 0; i < width; ++i) code |= std::uint32_t{buffer[e * width + i]} << (8 * i);
        if (n < 32 && (code >> n) != 0) parse_fail("operator code names a state outside 0..n-1");
        out.vk[e] = code;
    }
    return out;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) parse_fail("cannot open " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
    std::ofstream out(path, std::ios::binary);
    out << contents;
    if (!out) throw std::runtime_error("cannot write " + path.string());
}

KOpArray load_kop(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) parse_fail("cannot open " + path.string());
    return read_kop_binary(in);
}

void save_kop(const std::filesystem::path& path, const KOpArray& kop) {
    std::ofstream out(path, std::ios::binary);
    write_kop_binary(out, kop);
    if (!out) throw std::runtime_error("cannot write " + path.string());
}

}  // namespace jmeet
