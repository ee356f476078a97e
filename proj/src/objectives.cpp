// Copyright (c) mspan contributors.
// SPDX-License-Identifier: Apache-2.0
#include "mspan/objectives.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace mspan {

bool is_spanner(const WeightedGraph& g, const EdgeSet& s) {
    if (!g.directed()) {
        return weakly_connected(g, s);
    }
    return reachable_pairs(g, s) == reachable_pairs(g, g.all_edges());
}

namespace {

// Running maximum of ratios num/den, compared exactly.
struct MaxRatio {
    Length num = 1;
    Length den = 1;
    void offer(Length n, Length d) {
        if (static_cast<__int128>(n) * den > static_cast<__int128>(num) * d) {
            num = n;
            den = d;
        }
    }
    [[nodiscard]] Rational value() const { return Rational(num, den); }
};

} // namespace

ValueVector eval(const WeightedGraph& g, const EdgeSet& s, EvalMode mode) {
    if (!is_spanner(g, s)) {
        throw Error(ErrorCode::InfeasibleSpanner, "edge subset is not a spanner of the instance");
    }
    ValueVector out;
    for (const EdgeId e : s.ids()) {
        out.f1 += g.edge(e).c1;
    }

    const EdgeSet all = g.all_edges();
    MaxRatio best;
    if (mode == EvalMode::EdgeRestricted) {
        std::map<VertexId, std::pair<DistanceMap, DistanceMap>> cache;
        for (const Edge& e : g.edges()) {
            auto it = cache.find(e.u);
            if (it == cache.end()) {
                it = cache.emplace(e.u, std::pair{shortest_distances(g, s, e.u), shortest_distances(g, all, e.u)}).first;
            }
            best.offer(it->second.first[e.v], it->second.second[e.v]);
        }
    } else {
        for (VertexId u = 0; u < g.vertex_count(); ++u) {
            const DistanceMap in_s = shortest_distances(g, s, u);
            const DistanceMap in_e = shortest_distances(g, all, u);
            for (VertexId v = 0; v < g.vertex_count(); ++v) {
                if (v == u || !in_e.reachable(v)) {
                    continue;
                }
                best.offer(in_s[v], in_e[v]);
            }
        }
    }
    out.f2 = best.value();
    return out;
}

StretchEvaluator::StretchEvaluator(const WeightedGraph& g)
    : g_(&g), full_dist_(static_cast<std::size_t>(g.edge_count())), tight_(static_cast<std::size_t>(g.edge_count())),
      dist_(static_cast<std::size_t>(g.vertex_count())), parent_(static_cast<std::size_t>(g.vertex_count())) {
    const EdgeSet all = g.all_edges();
    std::map<VertexId, std::size_t> group_of;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const Edge& edge = g.edge(e);
        auto it = group_of.find(edge.u);
        if (it == group_of.end()) {
            it = group_of.emplace(edge.u, groups_.size()).first;
            groups_.push_back({edge.u, {}});
        }
        const DistanceMap d = shortest_distances(g, all, edge.u);
        full_dist_[static_cast<std::size_t>(e)] = d[edge.v];
        tight_[static_cast<std::size_t>(e)] = d[edge.v] == edge.c2;
        groups_[it->second].targets.push_back({edge.v, e, d[edge.v]});
    }
}

bool StretchEvaluator::connected(std::span<const char> active) {
    std::iota(parent_.begin(), parent_.end(), 0);
    auto find = [&](int x) {
        while (parent_[static_cast<std::size_t>(x)] != x) {
            auto& p = parent_[static_cast<std::size_t>(x)];
            p = parent_[static_cast<std::size_t>(p)];
            x = p;
        }
        return x;
    };
    int components = g_->vertex_count();
    for (EdgeId e = 0; e < g_->edge_count(); ++e) {
        if (!active[static_cast<std::size_t>(e)]) {
            continue;
        }
        const int a = find(g_->edge(e).u);
        const int b = find(g_->edge(e).v);
        if (a != b) {
            parent_[static_cast<std::size_t>(a)] = b;
            --components;
        }
    }
    return components == 1;
}

bool StretchEvaluator::evaluate(std::span<const char> active, Rational* out) {
    if (!g_->directed() && !connected(active)) {
        return false;
    }
    MaxRatio best;
    const auto cmp = std::greater<>{};
    for (const SourceGroup& group : groups_) {
        int pending = 0;
        for (const Target& t : group.targets) {
            if (!(active[static_cast<std::size_t>(t.edge)] && tight_[static_cast<std::size_t>(t.edge)])) {
                ++pending;
            }
        }
        if (pending == 0) {
            continue;
        }
        std::fill(dist_.begin(), dist_.end(), kUnreachable);
        dist_[static_cast<std::size_t>(group.source)] = 0;
        heap_.assign(1, {0, group.source});
        // Plain Dijkstra; groups are small so running to exhaustion is cheap.
        while (!heap_.empty()) {
            std::pop_heap(heap_.begin(), heap_.end(), cmp);
            const auto [d, u] = heap_.back();
            heap_.pop_back();
            if (d != dist_[static_cast<std::size_t>(u)]) {
                continue;
            }
            for (const Arc& a : g_->out_arcs(u)) {
                if (!active[static_cast<std::size_t>(a.edge)]) {
                    continue;
                }
                const Length nd = d + a.length;
                if (nd < dist_[static_cast<std::size_t>(a.to)]) {
                    dist_[static_cast<std::size_t>(a.to)] = nd;
                    heap_.emplace_back(nd, a.to);
                    std::push_heap(heap_.begin(), heap_.end(), cmp);
                }
            }
        }
        for (const Target& t : group.targets) {
            const Length d = dist_[static_cast<std::size_t>(t.vertex)];
            if (d == kUnreachable) {
                return false;
            }
            best.offer(d, t.full);
        }
    }
    *out = best.value();
    return true;
}

} // namespace mspan
