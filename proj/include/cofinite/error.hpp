#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cofinite {

enum class Errc {
    EmptyInput,
    DuplicatePoints,
    IdenticalPoints,
    CoincidentLines,
    SideViolation,
    PointNotInRegion,
    ParallelDirections,
    InvalidBoundary,
    NotConvexPosition,
    NotGeneralPosition,
    KTooSmall,
    BoundTooSmall,
    TooManyRegions,
    ParseError,
};

inline std::string_view errc_name(Errc code)
{
    switch (code) {
    case Errc::EmptyInput: return "EmptyInput";
    case Errc::DuplicatePoints: return "DuplicatePoints";
    case Errc::IdenticalPoints: return "IdenticalPoints";
    case Errc::CoincidentLines: return "CoincidentLines";
    case Errc::SideViolation: return "SideViolation";
    case Errc::PointNotInRegion: return "PointNotInRegion";
    case Errc::ParallelDirections: return "ParallelDirections";
    case Errc::InvalidBoundary: return "InvalidBoundary";
    case Errc::NotConvexPosition: return "NotConvexPosition";
    case Errc::NotGeneralPosition: return "NotGeneralPosition";
    case Errc::KTooSmall: return "KTooSmall";
    case Errc::BoundTooSmall: return "BoundTooSmall";
    case Errc::TooManyRegions: return "TooManyRegions";
    case Errc::ParseError: return "ParseError";
    }
    return "Unknown";
}

/// Precondition or input-validation failure. Internal invariant breaks are
/// reported as std::logic_error instead.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code)
    {
    }

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

} // namespace cofinite
