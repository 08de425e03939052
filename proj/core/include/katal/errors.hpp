#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace katal {

enum class ErrorCode {
    // object store
    DuplicateId,
    UnknownId,
    UnknownTemplate,
    ForbiddenOrigin,
    // dock
    MalformedExtrinsic,
    WindowExpired,
    ReplayDetected,
    BadSignature,
    // registries
    DuplicateKey,
    UnknownKey,
    Unauthorized,
    // instantiation
    IdTaken,
    ReservedNamespace,
    BadParameters,
    // consensus
    InsufficientFunds,
    UnknownValidator,
    DuplicateValidator,
    NoCandidates,
    // tokens
    BadAmount,
    UnknownDestination,
    // oracle
    FeedClosed,
    BadProof,
    StaleTimestamp,
    EmptyFeed,
    // contract ownership & cash flows
    NotTransferable,
    InsufficientShares,
    PayerDefault,
    UnknownIssuance,
    // actus
    BadAttributes,
    MissingObservation,
    WrongEventForTemplate,
    UnknownSource,
    StaleData,
    // harness
    HeightMismatch,
    ParseError,
    GoldenMismatch,
};

std::string_view error_name(ErrorCode code);

// Thrown by any handler; unwinds the whole extrinsic cascade, which the
// runtime then rolls back.
class KatalError : public std::runtime_error {
public:
    KatalError(ErrorCode code, const std::string& detail)
        : std::runtime_error(std::string(error_name(code)) + ": " + detail), code_(code) {}
    explicit KatalError(ErrorCode code) : KatalError(code, "") {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

}  // namespace katal
