#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tilebalance {

enum class ErrorCode {
    DegenerateLattice,
    UnmatchedEdge,
    LowValence,
    NonSimpleTile,
    AreaMismatch,
    NonConvexTile,
    FlatMarkMismatch,
    DisconnectedContact,
    EulerViolation,
    RegionTooSmall,
    RadiusTooSmall,
    OverlapDetected,
    InscribedRadiusZero,
    NotFound,
    ParseError,
    SchemaError,
    MissingCatalogEntry,
    InvalidArgument,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above.
class TilingError : public std::runtime_error {
public:
    TilingError(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

    [[nodiscard]] ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace tilebalance
