#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pfactor {

/// Stable error codes. The CLI prints `code_name()` so scripts can match on it.
enum class ErrorCode {
  InvalidOrder,
  InvalidArgument,
  VertexOutOfRange,
  SelfLoop,
  DuplicateEdge,
  ParseError,
  ByteOutOfRange,
  TruncatedPayload,
  NonzeroPadding,
  TrailingBytes,
  TooLarge,
  NotConnected,
  NoConvergence,
  NegativeRadicand,
  NotEquitable,
  NoRealRootInBracket,
  NotSubgraph,
  TooLargeForExhaustive,
  TooLargeForExact,
  InvalidParams,
  ParityViolation,
  DeltaDivisibleBy3,
  OrderTooSmall,
  InvalidSubcaseParams,
};

constexpr std::string_view code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidOrder: return "InvalidOrder";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ByteOutOfRange: return "ByteOutOfRange";
    case ErrorCode::TruncatedPayload: return "TruncatedPayload";
    case ErrorCode::NonzeroPadding: return "NonzeroPadding";
    case ErrorCode::TrailingBytes: return "TrailingBytes";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::NotConnected: return "NotConnected";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::NegativeRadicand: return "NegativeRadicand";
    case ErrorCode::NotEquitable: return "NotEquitable";
    case ErrorCode::NoRealRootInBracket: return "NoRealRootInBracket";
    case ErrorCode::NotSubgraph: return "NotSubgraph";
    case ErrorCode::TooLargeForExhaustive: return "TooLargeForExhaustive";
    case ErrorCode::TooLargeForExact: return "TooLargeForExact";
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::ParityViolation: return "ParityViolation";
    case ErrorCode::DeltaDivisibleBy3: return "DeltaDivisibleBy3";
    case ErrorCode::OrderTooSmall: return "OrderTooSmall";
    case ErrorCode::InvalidSubcaseParams: return "InvalidSubcaseParams";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(code_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

namespace detail {
[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }
}  // namespace detail

}  // namespace pfactor
