// Copyright (c) mspan contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

// Shared driver for the subset enumerations behind enumerate_front and
// weighted_sum_min. The mask range is cut into contiguous chunks, one per
// worker; each worker folds its spanners into a private accumulator and the
// caller merges the accumulators afterwards.

#include <algorithm>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

#include "mspan/pareto.hpp"

namespace mspan::detail {

class FreeEdgeSpace {
  public:
    FreeEdgeSpace(const WeightedGraph& g, const SolveOptions& options) : g_(&g) {
        require_valid(g);
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            (g.edge(e).c1 > 0 ? free_ : forced_).push_back(e);
        }
        const int budget = std::clamp(options.budget, 0, kMaxBudget);
        if (static_cast<int>(free_.size()) > budget) {
            throw Error(ErrorCode::BudgetExceeded, std::to_string(free_.size()) + " free edges exceed the budget of " +
                                                       std::to_string(budget));
        }
        for (const EdgeId e : forced_) {
            forced_cost_ += g.edge(e).c1;
        }
    }

    [[nodiscard]] std::uint64_t subset_count() const { return std::uint64_t{1} << free_.size(); }

    [[nodiscard]] EdgeSet materialize(std::uint64_t mask) const {
        EdgeSet s(static_cast<std::size_t>(g_->edge_count()));
        for (const EdgeId e : forced_) {
            s.insert(e);
        }
        for (std::size_t i = 0; i < free_.size(); ++i) {
            if ((mask >> i) & 1U) {
                s.insert(free_[i]);
            }
        }
        return s;
    }

    // Calls visit(mask, value) for every spanner with mask in [lo, hi).
    template <class Visit>
    void scan(std::uint64_t lo, std::uint64_t hi, Visit&& visit) const {
        StretchEvaluator evaluator(*g_);
        std::vector<char> active(static_cast<std::size_t>(g_->edge_count()), 0);
        for (const EdgeId e : forced_) {
            active[static_cast<std::size_t>(e)] = 1;
        }
        for (std::uint64_t mask = lo; mask < hi; ++mask) {
            std::int64_t cost = forced_cost_;
            for (std::size_t i = 0; i < free_.size(); ++i) {
                const bool on = (mask >> i) & 1U;
                active[static_cast<std::size_t>(free_[i])] = static_cast<char>(on);
                if (on) {
                    cost += g_->edge(free_[i]).c1;
                }
            }
            Rational stretch;
            if (evaluator.evaluate(active, &stretch)) {
                visit(mask, ValueVector{cost, stretch});
            }
        }
    }

  private:
    const WeightedGraph* g_;
    std::vector<EdgeId> forced_;
    std::vector<EdgeId> free_;
    std::int64_t forced_cost_ = 0;
};

inline int resolve_jobs(int jobs) {
    if (jobs > 0) {
        return jobs;
    }
    return std::max(1U, std::thread::hardware_concurrency());
}

// Runs make_accumulator() per worker, scans a chunk into it with fold, and
// returns the per-worker accumulators in chunk order.
template <class Acc, class Fold>
std::vector<Acc> scan_partitioned(const FreeEdgeSpace& space, int jobs, Fold fold) {
    const std::uint64_t total = space.subset_count();
    std::uint64_t workers = static_cast<std::uint64_t>(resolve_jobs(jobs));
    if (total < 1024) {
        workers = 1;
    }
    workers = std::min(workers, total);
    std::vector<Acc> accs(static_cast<std::size_t>(workers));
    std::vector<std::exception_ptr> failures(static_cast<std::size_t>(workers));
    auto run = [&](std::size_t w) {
        const auto wide = static_cast<unsigned __int128>(total);
        const auto lo = static_cast<std::uint64_t>(wide * w / workers);
        const auto hi = static_cast<std::uint64_t>(wide * (w + 1) / workers);
        try {
            space.scan(lo, hi, [&](std::uint64_t mask, const ValueVector& y) { fold(accs[w], mask, y); });
        } catch (...) {
            failures[w] = std::current_exception();
        }
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::jthread> threads;
        threads.reserve(static_cast<std::size_t>(workers));
        for (std::size_t w = 0; w < workers; ++w) {
            threads.emplace_back(run, w);
        }
    }
    for (const auto& f : failures) {
        if (f) {
            std::rethrow_exception(f);
        }
    }
    return accs;
}

} // namespace mspan::detail
