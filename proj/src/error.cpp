#include "tilebalance/error.hpp"

namespace tilebalance {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::DegenerateLattice: return "DegenerateLattice";
        case ErrorCode::UnmatchedEdge: return "UnmatchedEdge";
        case ErrorCode::LowValence: return "LowValence";
        case ErrorCode::NonSimpleTile: return "NonSimpleTile";
        case ErrorCode::AreaMismatch: return "AreaMismatch";
        case ErrorCode::NonConvexTile: return "NonConvexTile";
        case ErrorCode::FlatMarkMismatch: return "FlatMarkMismatch";
        case ErrorCode::DisconnectedContact: return "DisconnectedContact";
        case ErrorCode::EulerViolation: return "EulerViolation";
        case ErrorCode::RegionTooSmall: return "RegionTooSmall";
        case ErrorCode::RadiusTooSmall: return "RadiusTooSmall";
        case ErrorCode::OverlapDetected: return "OverlapDetected";
        case ErrorCode::InscribedRadiusZero: return "InscribedRadiusZero";
        case ErrorCode::NotFound: return "NotFound";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::SchemaError: return "SchemaError";
        case ErrorCode::MissingCatalogEntry: return "MissingCatalogEntry";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

}  // namespace tilebalance
