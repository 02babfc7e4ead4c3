#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "jmeet/endo.hpp"
#include "jmeet/knowledge.hpp"
#include "jmeet/lattice.hpp"
#include "jmeet/partition.hpp"

// Text and binary formats. Every reader throws Error{parse_error} on
// malformed input; structural problems found after parsing (a cyclic cover
// list, overlapping blocks) keep their own error codes.
//
//   lattice    {"n": 4, "covers": [[0, 1], [0, 2], [1, 3], [2, 3]]}
//              or the shorthands {"powerset": k} and {"mn": n}
//   endo       [0, 2, 1, 3]         position a holds the image of a
//   relation   {"n": 3, "edges": [[0, 0], [0, 1]]}
//   partition  [[0, 2], [1]]
//   operator   "KOPARRAY", n as 4 little-endian bytes, then 2^n codes of
//              ceil(n / 8) little-endian bytes each

namespace jmeet {

Lattice parse_lattice(std::string_view text);
/// Bitmask powersets are written in shorthand, everything else as covers.
std::string format_lattice(const Lattice& lattice);

Endo parse_endo(std::string_view text);
std::string format_endo(std::span<const Element> map);

Relation parse_relation(std::string_view text);
std::string format_relation(const Relation& relation);

/// The element count is the number of listed indices.
Partition parse_partition(std::string_view text);
std::string format_partition(const Partition& partition);

void write_kop_binary(std::ostream& out, const KOpArray& kop);
KOpArray read_kop_binary(std::istream& in);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

KOpArray load_kop(const std::filesystem::path& path);
void save_kop(const std::filesystem::path& path, const KOpArray& kop);

}  // namespace jmeet
