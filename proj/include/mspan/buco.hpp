// Copyright (c) mspan contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

// Biobjective unconstrained combinatorial optimization: pick x in {0,1}^n
// minimizing (-c1.x, c2.x). Two independent exact solvers are provided so
// each can serve as the other's oracle.

#include <cstdint>
#include <vector>

#include "mspan/pareto.hpp"

namespace mspan {

inline constexpr int kBucoBruteMaxItems = 24;
inline constexpr std::int64_t kBucoDpMaxWeight = 1'000'000;

class BucoInstance {
  public:
    // Throws Error(InvalidInstance) on unequal lengths or non-positive entries.
    BucoInstance(std::vector<std::int64_t> c1, std::vector<std::int64_t> c2);

    [[nodiscard]] int size() const { return static_cast<int>(c1_.size()); }
    [[nodiscard]] const std::vector<std::int64_t>& c1() const { return c1_; }
    [[nodiscard]] const std::vector<std::int64_t>& c2() const { return c2_; }

  private:
    std::vector<std::int64_t> c1_;
    std::vector<std::int64_t> c2_;
};

using BitVector = std::vector<bool>;

// (-sum c1_i x_i, sum c2_i x_i). Throws Error(LengthMismatch).
ValueVector buco_value(const BucoInstance& inst, const BitVector& x);

// Enumerates all 2^n solutions. Throws Error(TooLarge) for n > 24.
ParetoFront buco_brute(const BucoInstance& inst);

// Dynamic program over reachable c2 sums. Throws Error(TooLarge) when
// sum c2 > 10^6.
ParetoFront buco_dp(const BucoInstance& inst);

} // namespace mspan
