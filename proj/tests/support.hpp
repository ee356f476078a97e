// Copyright (c) mspan contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <doctest.h>

#include <ostream>
#include <vector>

#include "mspan/objectives.hpp"

namespace mspan {

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }
inline std::ostream& operator<<(std::ostream& os, const ValueVector& y) { return os << y.str(); }
inline std::ostream& operator<<(std::ostream& os, const std::vector<ValueVector>& ys) {
    os << '{';
    for (std::size_t i = 0; i < ys.size(); ++i) {
        os << (i ? ", " : "") << ys[i];
    }
    return os << '}';
}

} // namespace mspan

// Asserts that stmt throws mspan::Error with the given code.
#define CHECK_ERROR_CODE(stmt, expected)                                                                               \
    do {                                                                                                               \
        bool caught_ = false;                                                                                          \
        try {                                                                                                          \
            (void)(stmt);                                                                                              \
        } catch (const mspan::Error& e_) {                                                                             \
            caught_ = true;                                                                                            \
            CHECK(e_.code() == (expected));                                                                            \
        }                                                                                                              \
        CHECK_MESSAGE(caught_, "expected mspan::Error from " #stmt);                                                   \
    } while (false)
