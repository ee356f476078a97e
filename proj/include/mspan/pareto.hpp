// Copyright (c) mspan contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

// Exact non-dominated set of a spanner instance by subset enumeration.
//
// Edges with c1 <= 0 are always kept: adding an edge never raises the
// stretch, and such an edge does not raise the cost either, so every
// non-dominated point has a representative containing all of them. Only the
// remaining "free" edges are enumerated, 2^free subsets in ascending mask
// order.

#include <cstdint>
#include <span>
#include <vector>

#include "mspan/objectives.hpp"

namespace mspan {

inline constexpr int kDefaultBudget = 26;
inline constexpr int kMaxBudget = 62;

struct SolveOptions {
    int budget = kDefaultBudget; // max number of free edges
    int jobs = 0;                // 0 = hardware concurrency
};

// Points sorted by ascending f1 (hence strictly descending f2). When
// witnesses is non-empty it holds one spanner per point, same order.
struct ParetoFront {
    std::vector<ValueVector> points;
    std::vector<EdgeSet> witnesses;

    [[nodiscard]] std::size_t size() const { return points.size(); }
    [[nodiscard]] bool contains(const ValueVector& y) const;
};

ParetoFront nondominated_filter(std::span<const ValueVector> points);

// Throws Error(InvalidInstance) or Error(BudgetExceeded).
ParetoFront enumerate_front(const WeightedGraph& g, const SolveOptions& options = {});

int free_edge_count(const WeightedGraph& g);

} // namespace mspan
