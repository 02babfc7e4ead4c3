#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace jmeet {

enum class Errc {
    parse_error,
    not_a_lattice,
    not_bounded,
    cycle_detected,
    index_out_of_range,
    not_join_irreducible,
    not_join_endo,
    not_distributive,
    missing_two_covers,
    instance_too_large,
    too_many_states,
    too_large,
    output_too_large,
    size_mismatch,
    not_a_partition,
};

std::string_view to_string(Errc code) noexcept;

/// Single exception type for the library; `code()` tells callers which
/// contract was violated so the CLI can map it onto an exit status.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

}  // namespace jmeet
