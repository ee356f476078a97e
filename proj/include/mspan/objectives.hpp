// Copyright (c) mspan contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

// Spanner feasibility, the cost/stretch objective pair and dominance.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "mspan/graph.hpp"
#include "mspan/rational.hpp"

namespace mspan {

struct ValueVector {
    std::int64_t f1 = 0;
    Rational f2;

    friend bool operator==(const ValueVector&, const ValueVector&) = default;
    [[nodiscard]] std::string str() const { return "(" + std::to_string(f1) + ", " + f2.str() + ")"; }
};

// Lexicographic (f1, f2); used for sorting only, not dominance.
inline bool lex_less(const ValueVector& a, const ValueVector& b) {
    return a.f1 != b.f1 ? a.f1 < b.f1 : a.f2 < b.f2;
}

// a dominates b: a != b and a <= b componentwise.
inline bool dominates(const ValueVector& a, const ValueVector& b) {
    return a != b && a.f1 <= b.f1 && a.f2 <= b.f2;
}

enum class EvalMode {
    EdgeRestricted, // max over the endpoint pairs of E (arcs of A when directed)
    AllPairs,       // max over all pairs (directed: pairs reachable in E)
};

// Undirected: (V, S) connected. Directed: S preserves every reachable pair of E.
bool is_spanner(const WeightedGraph& g, const EdgeSet& s);

// Throws Error(InfeasibleSpanner) when s is not a spanner of g.
ValueVector eval(const WeightedGraph& g, const EdgeSet& s, EvalMode mode = EvalMode::EdgeRestricted);

// Edge-restricted stretch evaluation tuned for enumerating many subsets of
// one graph. Holds scratch buffers, so use one instance per thread.
class StretchEvaluator {
  public:
    // g must be valid and must outlive the evaluator.
    explicit StretchEvaluator(const WeightedGraph& g);

    // active[e] != 0 marks edge e as part of the subset. Returns false when
    // the subset is not a spanner; otherwise stores the stretch in *out.
    bool evaluate(std::span<const char> active, Rational* out);

    [[nodiscard]] Length full_distance(EdgeId e) const { return full_dist_[static_cast<std::size_t>(e)]; }

  private:
    struct Target {
        VertexId vertex;
        EdgeId edge;
        Length full;
    };
    struct SourceGroup {
        VertexId source;
        std::vector<Target> targets;
    };

    bool connected(std::span<const char> active);

    const WeightedGraph* g_;
    std::vector<Length> full_dist_;
    std::vector<char> tight_;
    std::vector<SourceGroup> groups_;
    std::vector<Length> dist_;
    std::vector<int> parent_;
    std::vector<std::pair<Length, VertexId>> heap_;
};

} // namespace mspan
