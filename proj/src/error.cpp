// Copyright (c) mspan contributors.
// SPDX-License-Identifier: Apache-2.0
#include "mspan/error.hpp"

namespace mspan {

std::string_view error_name(ErrorCode code) {
    switch (code) {
    case ErrorCode::NonpositiveC2: return "NONPOSITIVE_C2";
    case ErrorCode::Disconnected: return "DISCONNECTED";
    case ErrorCode::SelfLoop: return "SELF_LOOP";
    case ErrorCode::ParallelEdge: return "PARALLEL_EDGE";
    case ErrorCode::BadVertexId: return "BAD_VERTEX_ID";
    case ErrorCode::InvalidInstance: return "INVALID_INSTANCE";
    case ErrorCode::InfeasibleSpanner: return "INFEASIBLE_SPANNER";
    case ErrorCode::BudgetExceeded: return "BUDGET_EXCEEDED";
    case ErrorCode::LengthMismatch: return "LENGTH_MISMATCH";
    case ErrorCode::TooLarge: return "TOO_LARGE";
    case ErrorCode::NTooSmall: return "N_TOO_SMALL";
    case ErrorCode::NonintegralF2: return "NONINTEGRAL_F2";
    case ErrorCode::MalformedCnf: return "MALFORMED_CNF";
    case ErrorCode::UnsatisfyingAssignment: return "UNSATISFYING_ASSIGNMENT";
    case ErrorCode::NotUnweighted: return "NOT_UNWEIGHTED";
    case ErrorCode::ParseError: return "PARSE_ERROR";
    case ErrorCode::Overflow: return "OVERFLOW";
    }
    return "UNKNOWN";
}

} // namespace mspan
