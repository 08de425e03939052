#include "katal/errors.hpp"

namespace katal {

std::string_view error_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::DuplicateId: return "DuplicateId";
        case ErrorCode::UnknownId: return "UnknownId";
        case ErrorCode::UnknownTemplate: return "UnknownTemplate";
        case ErrorCode::ForbiddenOrigin: return "ForbiddenOrigin";
        case ErrorCode::MalformedExtrinsic: return "MalformedExtrinsic";
        case ErrorCode::WindowExpired: return "WindowExpired";
        case ErrorCode::ReplayDetected: return "ReplayDetected";
        case ErrorCode::BadSignature: return "BadSignature";
        case ErrorCode::DuplicateKey: return "DuplicateKey";
        case ErrorCode::UnknownKey: return "UnknownKey";
        case ErrorCode::Unauthorized: return "Unauthorized";
        case ErrorCode::IdTaken: return "IdTaken";
        case ErrorCode::ReservedNamespace: return "ReservedNamespace";
        case ErrorCode::BadParameters: return "BadParameters";
        case ErrorCode::InsufficientFunds: return "InsufficientFunds";
        case ErrorCode::UnknownValidator: return "UnknownValidator";
        case ErrorCode::DuplicateValidator: return "DuplicateValidator";
        case ErrorCode::NoCandidates: return "NoCandidates";
        case ErrorCode::BadAmount: return "BadAmount";
        case ErrorCode::UnknownDestination: return "UnknownDestination";
        case ErrorCode::FeedClosed: return "FeedClosed";
        case ErrorCode::BadProof: return "BadProof";
        case ErrorCode::StaleTimestamp: return "StaleTimestamp";
        case ErrorCode::EmptyFeed: return "EmptyFeed";
        case ErrorCode::NotTransferable: return "NotTransferable";
        case ErrorCode::InsufficientShares: return "InsufficientShares";
        case ErrorCode::PayerDefault: return "PayerDefault";
        case ErrorCode::UnknownIssuance: return "UnknownIssuance";
        case ErrorCode::BadAttributes: return "BadAttributes";
        case ErrorCode::MissingObservation: return "MissingObservation";
        case ErrorCode::WrongEventForTemplate: return "WrongEventForTemplate";
        case ErrorCode::UnknownSource: return "UnknownSource";
        case ErrorCode::StaleData: return "StaleData";
        case ErrorCode::HeightMismatch: return "HeightMismatch";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::GoldenMismatch: return "GoldenMismatch";
    }
    return "Unknown";
}

}  // namespace katal
