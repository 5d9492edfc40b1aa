#pragma once

#include <stdexcept>
#include <string>

namespace bf {

enum class errc {
    not_multiple_of_four,
    pair_count_wrong,
    surgery_disconnected,
    circle_mismatch,
    invalid_circle,
    degenerate_offsets,
    face_mismatch,
    idempotent_violation,
    chain_mismatch,
    non_idempotent_evaluation,
    not_a_complex,
    not_a_cycle,
    singular_preserving_part,
    not_strictly_lower,
    basepoint_region_touched,
    pattern_invalid,
    bad_input,
};

inline const char* errc_name(errc e)
{
    switch (e) {
    case errc::not_multiple_of_four: return "NotMultipleOfFour";
    case errc::pair_count_wrong: return "PairCountWrong";
    case errc::surgery_disconnected: return "SurgeryDisconnected";
    case errc::circle_mismatch: return "CircleMismatch";
    case errc::invalid_circle: return "InvalidCircle";
    case errc::degenerate_offsets: return "DegenerateOffsets";
    case errc::face_mismatch: return "FaceMismatch";
    case errc::idempotent_violation: return "IdempotentViolation";
    case errc::chain_mismatch: return "ChainMismatch";
    case errc::non_idempotent_evaluation: return "NonIdempotentEvaluation";
    case errc::not_a_complex: return "NotAComplex";
    case errc::not_a_cycle: return "NotACycle";
    case errc::singular_preserving_part: return "SingularPreservingPart";
    case errc::not_strictly_lower: return "NotStrictlyLower";
    case errc::basepoint_region_touched: return "BasepointRegionTouched";
    case errc::pattern_invalid: return "PatternInvalid";
    case errc::bad_input: return "BadInput";
    }
    return "Unknown";
}

struct error : std::runtime_error {
    errc kind;
    error(errc k, const std::string& what)
        : std::runtime_error(std::string(errc_name(k)) + ": " + what), kind(k)
    {
    }
};

[[noreturn]] inline void fail(errc k, const std::string& what) { throw error(k, what); }

} // namespace bf
