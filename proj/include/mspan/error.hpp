// Copyright (c) mspan contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mspan {

enum class ErrorCode {
    NonpositiveC2,
    Disconnected,
    SelfLoop,
    ParallelEdge,
    BadVertexId,
    InvalidInstance,
    InfeasibleSpanner,
    BudgetExceeded,
    LengthMismatch,
    TooLarge,
    NTooSmall,
    NonintegralF2,
    MalformedCnf,
    UnsatisfyingAssignment,
    NotUnweighted,
    ParseError,
    Overflow,
};

// Stable upper-case identifier, e.g. "BUDGET_EXCEEDED".
std::string_view error_name(ErrorCode code);

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_name(code)) + ": " + message), code_(code) {}

    [[nodiscard]] ErrorCode code() const { return code_; }

  private:
    ErrorCode code_;
};

} // namespace mspan
