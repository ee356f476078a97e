// Copyright (c) mspan contributors.
// SPDX-License-Identifier: Apache-2.0
#include "mspan/pareto.hpp"

#include <algorithm>
#include <map>

#include "enumeration.hpp"

namespace mspan {

bool ParetoFront::contains(const ValueVector& y) const {
    return std::find(points.begin(), points.end(), y) != points.end();
}

ParetoFront nondominated_filter(std::span<const ValueVector> points) {
    std::vector<ValueVector> sorted(points.begin(), points.end());
    std::sort(sorted.begin(), sorted.end(), lex_less);
    ParetoFront out;
    for (const ValueVector& y : sorted) {
        // Sorted by (f1, f2): y survives iff its f2 beats every kept point.
        if (out.points.empty() || y.f2 < out.points.back().f2) {
            out.points.push_back(y);
        }
    }
    return out;
}

int free_edge_count(const WeightedGraph& g) {
    return static_cast<int>(std::count_if(g.edges().begin(), g.edges().end(), [](const Edge& e) { return e.c1 > 0; }));
}

namespace {

struct Best {
    Rational f2;
    std::uint64_t mask;
};

// Per cost value, the least stretch and the smallest mask achieving it.
using CostTable = std::map<std::int64_t, Best>;

void offer(CostTable& table, std::int64_t f1, const Rational& f2, std::uint64_t mask) {
    auto [it, inserted] = table.try_emplace(f1, Best{f2, mask});
    if (inserted) {
        return;
    }
    Best& b = it->second;
    if (f2 < b.f2 || (f2 == b.f2 && mask < b.mask)) {
        b = Best{f2, mask};
    }
}

} // namespace

ParetoFront enumerate_front(const WeightedGraph& g, const SolveOptions& options) {
    const detail::FreeEdgeSpace space(g, options);
    auto tables = detail::scan_partitioned<CostTable>(
        space, options.jobs,
        [](CostTable& t, std::uint64_t mask, const ValueVector& y) { offer(t, y.f1, y.f2, mask); });

    CostTable merged;
    for (const CostTable& t : tables) {
        for (const auto& [f1, b] : t) {
            offer(merged, f1, b.f2, b.mask);
        }
    }

    ParetoFront out;
    for (const auto& [f1, b] : merged) {
        if (out.points.empty() || b.f2 < out.points.back().f2) {
            out.points.push_back(ValueVector{f1, b.f2});
            out.witnesses.push_back(space.materialize(b.mask));
        }
    }
    return out;
}

} // namespace mspan
