// Copyright (c) mspan contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

// Slow reference implementations for tests. They share only value types
// with the library: distances come from Floyd-Warshall, feasibility from a
// transitive closure, fronts from all 2^|E| subsets with a quadratic
// dominance filter.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <random>
#include <set>
#include <vector>

#include "mspan/graph.hpp"
#include "mspan/objectives.hpp"

namespace oracle {

using mspan::Edge;
using mspan::Rational;
using mspan::ValueVector;
using mspan::WeightedGraph;

constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;

using Matrix = std::vector<std::vector<std::int64_t>>;

inline Matrix floyd_warshall(const WeightedGraph& g, std::uint64_t mask) {
    const auto n = static_cast<std::size_t>(g.vertex_count());
    Matrix d(n, std::vector<std::int64_t>(n, kInf));
    for (std::size_t v = 0; v < n; ++v) {
        d[v][v] = 0;
    }
    for (int e = 0; e < g.edge_count(); ++e) {
        if (!((mask >> e) & 1U)) {
            continue;
        }
        const Edge& ed = g.edges()[static_cast<std::size_t>(e)];
        const auto u = static_cast<std::size_t>(ed.u);
        const auto v = static_cast<std::size_t>(ed.v);
        d[u][v] = std::min(d[u][v], ed.c2);
        if (!g.directed()) {
            d[v][u] = std::min(d[v][u], ed.c2);
        }
    }
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (d[i][k] < kInf && d[k][j] < kInf) {
                    d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
                }
            }
        }
    }
    return d;
}

inline std::uint64_t full_mask(const WeightedGraph& g) {
    return g.edge_count() >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g.edge_count()) - 1;
}

inline mspan::EdgeSet to_edge_set(const WeightedGraph& g, std::uint64_t mask) {
    mspan::EdgeSet s(static_cast<std::size_t>(g.edge_count()));
    for (int e = 0; e < g.edge_count(); ++e) {
        if ((mask >> e) & 1U) {
            s.insert(e);
        }
    }
    return s;
}

// Undirected: every pair connected. Directed: the closure of S equals the
// closure of E.
inline bool feasible(const WeightedGraph& g, std::uint64_t mask) {
    const Matrix ds = floyd_warshall(g, mask);
    const Matrix de = floyd_warshall(g, full_mask(g));
    for (std::size_t i = 0; i < ds.size(); ++i) {
        for (std::size_t j = 0; j < ds.size(); ++j) {
            if ((ds[i][j] < kInf) != (de[i][j] < kInf)) {
                return false;
            }
        }
    }
    return true;
}

// All-pairs stretch over every pair reachable in E; 1 on an empty pair set.
inline ValueVector evaluate(const WeightedGraph& g, std::uint64_t mask) {
    const Matrix ds = floyd_warshall(g, mask);
    const Matrix de = floyd_warshall(g, full_mask(g));
    std::int64_t f1 = 0;
    for (int e = 0; e < g.edge_count(); ++e) {
        if ((mask >> e) & 1U) {
            f1 += g.edges()[static_cast<std::size_t>(e)].c1;
        }
    }
    Rational f2(1);
    for (std::size_t i = 0; i < ds.size(); ++i) {
        for (std::size_t j = 0; j < ds.size(); ++j) {
            if (i != j && de[i][j] < kInf) {
                f2 = std::max(f2, Rational(ds[i][j], de[i][j]));
            }
        }
    }
    return {f1, f2};
}

inline std::vector<ValueVector> naive_filter(const std::vector<ValueVector>& pts) {
    std::vector<ValueVector> out;
    for (const auto& p : pts) {
        const bool beaten = std::any_of(pts.begin(), pts.end(), [&](const ValueVector& q) {
            return q != p && q.f1 <= p.f1 && q.f2 <= p.f2;
        });
        if (!beaten && std::find(out.begin(), out.end(), p) == out.end()) {
            out.push_back(p);
        }
    }
    std::sort(out.begin(), out.end(), mspan::lex_less);
    return out;
}

// No pruning: every subset of E.
inline std::vector<ValueVector> unpruned_front(const WeightedGraph& g) {
    std::vector<ValueVector> pts;
    for (std::uint64_t mask = 0; mask <= full_mask(g); ++mask) {
        if (feasible(g, mask)) {
            pts.push_back(evaluate(g, mask));
        }
    }
    return naive_filter(pts);
}

// Sorted front; an inner point is extreme iff it lies strictly below every
// chord joining a point on its left with a point on its right.
inline std::vector<ValueVector> extreme_points(std::vector<ValueVector> front) {
    std::sort(front.begin(), front.end(), mspan::lex_less);
    std::vector<ValueVector> out;
    for (std::size_t i = 0; i < front.size(); ++i) {
        bool extreme = true;
        for (std::size_t a = 0; a < i && extreme; ++a) {
            for (std::size_t b = i + 1; b < front.size() && extreme; ++b) {
                // chord height at front[i].f1, compared exactly
                const Rational t(front[i].f1 - front[a].f1, front[b].f1 - front[a].f1);
                const Rational chord = front[a].f2 + t * (front[b].f2 - front[a].f2);
                if (!(front[i].f2 < chord)) {
                    extreme = false;
                }
            }
        }
        if (extreme) {
            out.push_back(front[i]);
        }
    }
    return out;
}

inline std::vector<ValueVector> buco_front(const std::vector<std::int64_t>& c1, const std::vector<std::int64_t>& c2) {
    std::vector<ValueVector> pts;
    const std::size_t n = c1.size();
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
        std::int64_t a = 0;
        std::int64_t b = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if ((x >> i) & 1U) {
                a -= c1[i];
                b += c2[i];
            }
        }
        pts.push_back({a, Rational(b)});
    }
    return naive_filter(pts);
}

struct RandomGraphSpec {
    int max_vertices = 6;
    int max_extra_edges = 4;
    int max_edges = 64;
    std::int64_t min_c1 = 1;
    std::int64_t max_c1 = 5;
    std::int64_t max_c2 = 5;
    bool directed = false;
    bool unweighted = false;
};

// Random spanning tree (random orientation when directed) plus extra
// non-parallel edges, so the result always validates.
inline WeightedGraph random_graph(std::mt19937_64& rng, const RandomGraphSpec& spec) {
    auto pick = [&](std::int64_t lo, std::int64_t hi) { return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng); };
    const int n = static_cast<int>(pick(2, spec.max_vertices));
    std::vector<Edge> edges;
    std::set<std::pair<int, int>> used;
    auto add = [&](int u, int v) {
        const std::pair<int, int> key = spec.directed ? std::make_pair(u, v) : std::make_pair(std::min(u, v), std::max(u, v));
        if (u == v || static_cast<int>(edges.size()) >= spec.max_edges || !used.insert(key).second) {
            return;
        }
        if (spec.unweighted) {
            edges.push_back({u, v, 1, 1});
        } else {
            edges.push_back({u, v, pick(spec.min_c1, spec.max_c1), pick(1, spec.max_c2)});
        }
    };
    for (int v = 1; v < n; ++v) {
        const int u = static_cast<int>(pick(0, v - 1));
        if (spec.directed && pick(0, 1) == 1) {
            add(v, u);
        } else {
            add(u, v);
        }
    }
    const auto extra = pick(0, spec.max_extra_edges);
    for (std::int64_t k = 0; k < extra; ++k) {
        add(static_cast<int>(pick(0, n - 1)), static_cast<int>(pick(0, n - 1)));
    }
    std::shuffle(edges.begin(), edges.end(), rng);
    return WeightedGraph(spec.directed, n, std::move(edges));
}

} // namespace oracle
