// Copyright (c) mspan contributors.
// SPDX-License-Identifier: Apache-2.0
#include "mspan/graph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <set>

namespace mspan {

EdgeSet EdgeSet::from_ids(std::size_t edge_count, std::span<const EdgeId> ids) {
    EdgeSet s(edge_count);
    for (const EdgeId e : ids) {
        if (e < 0 || static_cast<std::size_t>(e) >= edge_count) {
            throw Error(ErrorCode::InvalidInstance, "edge id " + std::to_string(e) + " out of range");
        }
        s.insert(e);
    }
    return s;
}

std::size_t EdgeSet::count() const { return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), true)); }

std::vector<EdgeId> EdgeSet::ids() const {
    std::vector<EdgeId> out;
    for (std::size_t i = 0; i < bits_.size(); ++i) {
        if (bits_[i]) {
            out.push_back(static_cast<EdgeId>(i));
        }
    }
    return out;
}

bool EdgeSet::is_subset_of(const EdgeSet& other) const {
    for (std::size_t i = 0; i < bits_.size(); ++i) {
        if (bits_[i] && !other.bits_[i]) {
            return false;
        }
    }
    return true;
}

WeightedGraph::WeightedGraph(bool directed, int vertex_count, std::vector<Edge> edges)
    : directed_(directed), vertex_count_(vertex_count), edges_(std::move(edges)),
      out_(static_cast<std::size_t>(std::max(vertex_count, 0))) {
    auto in_range = [&](VertexId v) { return v >= 0 && v < vertex_count_; };
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        const Edge& e = edges_[i];
        if (!in_range(e.u) || !in_range(e.v)) {
            continue;
        }
        const auto id = static_cast<EdgeId>(i);
        out_[static_cast<std::size_t>(e.u)].push_back({e.v, id, e.c2});
        if (!directed_) {
            out_[static_cast<std::size_t>(e.v)].push_back({e.u, id, e.c2});
        }
    }
}

int WeightedGraph::degree(VertexId v) const {
    int d = 0;
    for (const Edge& e : edges_) {
        d += (e.u == v) + (e.v == v);
    }
    return d;
}

int WeightedGraph::max_degree() const {
    std::vector<int> deg(static_cast<std::size_t>(vertex_count_), 0);
    for (const Edge& e : edges_) {
        ++deg[static_cast<std::size_t>(e.u)];
        ++deg[static_cast<std::size_t>(e.v)];
    }
    return deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
}

bool WeightedGraph::unweighted() const {
    return std::all_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.c1 == 1 && e.c2 == 1; });
}

namespace {

struct DisjointSets {
    std::vector<int> parent;
    explicit DisjointSets(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) {
            return false;
        }
        parent[static_cast<std::size_t>(a)] = b;
        return true;
    }
};

} // namespace

bool weakly_connected(const WeightedGraph& g, const EdgeSet& edge_subset) {
    if (g.vertex_count() <= 0) {
        return false;
    }
    DisjointSets ds(g.vertex_count());
    int components = g.vertex_count();
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (edge_subset.contains(e) && ds.unite(g.edge(e).u, g.edge(e).v)) {
            --components;
        }
    }
    return components == 1;
}

std::vector<Violation> validate_instance(const WeightedGraph& g) {
    std::vector<Violation> out;
    if (g.vertex_count() < 1) {
        out.push_back({ErrorCode::BadVertexId, "vertex_count must be at least 1"});
        return out;
    }
    std::set<std::pair<VertexId, VertexId>> seen;
    EdgeSet usable(static_cast<std::size_t>(g.edge_count()), true);
    for (EdgeId i = 0; i < g.edge_count(); ++i) {
        const Edge& e = g.edge(i);
        const std::string where = "edge " + std::to_string(i);
        if (e.u < 0 || e.u >= g.vertex_count() || e.v < 0 || e.v >= g.vertex_count()) {
            out.push_back({ErrorCode::BadVertexId, where + " has an endpoint outside [0, vertex_count)"});
            usable.erase(i);
            continue;
        }
        if (e.c2 <= 0) {
            out.push_back({ErrorCode::NonpositiveC2, where + " has c2 = " + std::to_string(e.c2)});
        }
        if (e.u == e.v) {
            out.push_back({ErrorCode::SelfLoop, where + " is a self-loop"});
            continue;
        }
        auto key = g.directed() ? std::pair{e.u, e.v} : std::pair{std::min(e.u, e.v), std::max(e.u, e.v)};
        if (!seen.insert(key).second) {
            out.push_back({ErrorCode::ParallelEdge, where + " duplicates an earlier edge"});
        }
    }
    if (!weakly_connected(g, usable)) {
        out.push_back({ErrorCode::Disconnected, g.directed() ? "graph is not weakly connected" : "graph is not connected"});
    }
    return out;
}

void require_valid(const WeightedGraph& g) {
    const auto violations = validate_instance(g);
    if (violations.empty()) {
        return;
    }
    std::string msg;
    for (const auto& v : violations) {
        if (!msg.empty()) {
            msg += "; ";
        }
        msg += std::string(error_name(v.code)) + " (" + v.message + ")";
    }
    throw Error(ErrorCode::InvalidInstance, msg);
}

DistanceMap shortest_distances(const WeightedGraph& g, const EdgeSet& edge_subset, VertexId source) {
    DistanceMap result{source, std::vector<Length>(static_cast<std::size_t>(g.vertex_count()), kUnreachable)};
    using Item = std::pair<Length, VertexId>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    result.dist[static_cast<std::size_t>(source)] = 0;
    heap.emplace(0, source);
    while (!heap.empty()) {
        const auto [d, u] = heap.top();
        heap.pop();
        if (d != result.dist[static_cast<std::size_t>(u)]) {
            continue;
        }
        for (const Arc& a : g.out_arcs(u)) {
            if (!edge_subset.contains(a.edge)) {
                continue;
            }
            const Length nd = d + a.length;
            auto& slot = result.dist[static_cast<std::size_t>(a.to)];
            if (nd < slot) {
                slot = nd;
                heap.emplace(nd, a.to);
            }
        }
    }
    return result;
}

std::vector<std::pair<VertexId, VertexId>> reachable_pairs(const WeightedGraph& g, const EdgeSet& edge_subset) {
    std::vector<std::pair<VertexId, VertexId>> out;
    std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()));
    std::vector<VertexId> stack;
    for (VertexId s = 0; s < g.vertex_count(); ++s) {
        std::fill(seen.begin(), seen.end(), 0);
        seen[static_cast<std::size_t>(s)] = 1;
        stack.assign(1, s);
        while (!stack.empty()) {
            const VertexId u = stack.back();
            stack.pop_back();
            for (const Arc& a : g.out_arcs(u)) {
                if (edge_subset.contains(a.edge) && !seen[static_cast<std::size_t>(a.to)]) {
                    seen[static_cast<std::size_t>(a.to)] = 1;
                    stack.push_back(a.to);
                }
            }
        }
        for (VertexId t = 0; t < g.vertex_count(); ++t) {
            if (t != s && seen[static_cast<std::size_t>(t)]) {
                out.emplace_back(s, t);
            }
        }
    }
    return out;
}

} // namespace mspan
