// Copyright (c) mspan contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

// Executable checks of the structural claims behind the three hardness
// constructions. Each returns a report; a failed check carries a concrete
// counterexample (a point or a spanner) instead of throwing.

#include <optional>
#include <string>

#include "mspan/io.hpp"

namespace mspan {

struct Report {
    std::string claim;
    bool pass = true;
    io::Json details = io::Json::object();
    std::optional<io::Json> counterexample;

    // Records a named sub-check; the first failing one supplies the
    // counterexample.
    void check(const std::string& name, bool ok, io::Json witness = nullptr);
};

io::Json to_json(const Report& r);

// The family of intractable instances: every one of the 2^n spanners that
// keeps all zero-cost edges and drops {s,t} is in the exact front with its
// closed-form value and its s-t distance ratio, so the front has at least
// 2^n points. Details also record whether the front is exactly those points
// plus (2^(n+1), 2) and (2^(n+2) - 2, 1), which holds for the directed
// family only.
Report verify_intractable(int n, bool directed, const SolveOptions& options = {});

// Filtering the exact front of the reduced instance recovers the BUCO front;
// the S_x value formulas hold for all 2^n solutions; at most n+1 front
// points contain {s,t}; degree bound 3 (undirected) or 4 (directed).
Report verify_buco_reduction(const BucoInstance& inst, bool directed, const SolveOptions& options = {});

// Cai construction with a satisfying assignment: structure counts, witness
// and full-graph values, stretch 2 after any single-edge removal, the
// weighted-sum separation at (2, 15n+9m), and the forced-edge gadget.
// Throws Error(UnsatisfyingAssignment).
Report verify_cai(const CnfFormula& cnf, const std::vector<bool>& assignment);

// Unit-weight instances have at most |E| non-dominated points. Throws
// Error(NotUnweighted).
Report verify_unweighted_bound(const WeightedGraph& g, const SolveOptions& options = {});

struct ForcedGadgetSummary {
    int min_two_spanner_size = 0;
    bool every_minimum_contains_forced = false;
    int cheapest_without_forced = 0;
};

// Brute force over all 2^5 subsets of the standalone gadget.
ForcedGadgetSummary forced_gadget_bruteforce();

} // namespace mspan
