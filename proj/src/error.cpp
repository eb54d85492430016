#include "sphvar/error.hpp"

namespace sphvar {

const char* error_code_name(ErrorCode code) {
    switch (code) {
    case ErrorCode::UnsupportedRegime: return "UnsupportedRegime";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::UnsupportedOrder: return "UnsupportedOrder";
    case ErrorCode::OutOfDomain: return "OutOfDomain";
    case ErrorCode::InvalidExponent: return "InvalidExponent";
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::Unresolvable: return "Unresolvable";
    case ErrorCode::NoPrediction: return "NoPrediction";
    case ErrorCode::DegenerateInput: return "DegenerateInput";
    case ErrorCode::RegionViolation: return "RegionViolation";
    case ErrorCode::Io: return "Io";
    }
    return "Unknown";
}

} // namespace sphvar
