#include "jmeet/error.hpp"

namespace jmeet {

std::string_view to_string(Errc code) noexcept {
    switch (code) {
    case Errc::parse_error: return "ParseError";
    case Errc::not_a_lattice: return "NotALattice";
    case Errc::not_bounded: return "NotBounded";
    case Errc::cycle_detected: return "CycleDetected";
    case Errc::index_out_of_range: return "IndexOutOfRange";
    case Errc::not_join_irreducible: return "NotJoinIrreducible";
    case Errc::not_join_endo: return "NotJoinEndomorphism";
    case Errc::not_distributive: return "NotDistributive";
    case Errc::missing_two_covers: return "MissingTwoCovers";
    case Errc::instance_too_large: return "InstanceTooLarge";
    case Errc::too_many_states: return "TooManyStates";
    case Errc::too_large: return "TooLarge";
    case Errc::output_too_large: return "OutputTooLarge";
    case Errc::size_mismatch: return "SizeMismatch";
    case Errc::not_a_partition: return "NotAPartition";
    }
    return "Unknown";
}

}  // namespace jmeet
