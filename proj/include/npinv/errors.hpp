#pragma once

// Error taxonomy shared by the whole library. Domain violations (an operation
// applied outside its mathematical domain) throw domain_error with a code that
// callers and the CLI can map to stable identifiers; malformed input that never
// reaches the mathematical layer throws input_error.

#include <stdexcept>
#include <string>

namespace npinv {

enum class errc {
    empty_point_set,          // convex hull of an empty point set
    not_lattice,              // rational polygon expected to be integral is not
    not_two_dimensional,      // operation needs a two-dimensional polygon
    not_interior_polygon,     // no lattice polygon has this interior hull
    non_primitive_direction,  // direction vector with non-coprime entries
    not_width_direction,      // direction does not achieve the lattice width
    not_tetragonal,           // operation is specific to gonality 4
    too_narrow,               // lattice width below the operation's minimum
    no_second_interior,       // interior hull of the interior hull is empty
    not_well_aligned,         // alignment condition fails for the given direction
    undefined_invariant,      // invariant has no value for this input
    excluded_case,            // input is the documented exceptional shape
    not_coprime,              // parameters required to be coprime are not
    decomposition_failed,     // no lattice decomposition of a point exists
    give_up,                  // rejection sampling exhausted its attempt budget
    bad_argument,             // argument outside the documented range
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::empty_point_set: return "EmptyPointSet";
        case errc::not_lattice: return "NotLattice";
        case errc::not_two_dimensional: return "NotTwoDimensional";
        case errc::not_interior_polygon: return "NotInteriorPolygon";
        case errc::non_primitive_direction: return "NonPrimitiveDirection";
        case errc::not_width_direction: return "NotWidthDirection";
        case errc::not_tetragonal: return "NotTetragonal";
        case errc::too_narrow: return "TooNarrow";
        case errc::no_second_interior: return "NoSecondInterior";
        case errc::not_well_aligned: return "NotWellAligned";
        case errc::undefined_invariant: return "Undefined";
        case errc::excluded_case: return "ExcludedCase";
        case errc::not_coprime: return "NotCoprime";
        case errc::decomposition_failed: return "DecompositionFailed";
        case errc::give_up: return "GiveUp";
        case errc::bad_argument: return "BadArgument";
    }
    return "Unknown";
}

class domain_error : public std::runtime_error {
public:
    domain_error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

class input_error : public std::runtime_error {
public:
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

[[noreturn]] inline void fail(errc code, const std::string& what) {
    throw domain_error(code, what);
}

}  // namespace npinv
