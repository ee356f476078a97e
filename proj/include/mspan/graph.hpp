// Copyright (c) mspan contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

// Weighted (di)graphs with a cost weight c1 and a positive length weight c2
// per edge. Edge ids are list indices and never change after construction.

#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mspan/error.hpp"

namespace mspan {

using VertexId = int;
using EdgeId = int;
using Length = std::int64_t;

inline constexpr Length kUnreachable = std::numeric_limits<Length>::max();

struct Edge {
    VertexId u = 0;
    VertexId v = 0;
    std::int64_t c1 = 0;
    std::int64_t c2 = 1;

    friend bool operator==(const Edge&, const Edge&) = default;
};

// A subset of the edge ids of one graph.
class EdgeSet {
  public:
    EdgeSet() = default;
    explicit EdgeSet(std::size_t edge_count, bool all = false) : bits_(edge_count, all) {}

    static EdgeSet from_ids(std::size_t edge_count, std::span<const EdgeId> ids);

    [[nodiscard]] std::size_t universe() const { return bits_.size(); }
    [[nodiscard]] bool contains(EdgeId e) const { return bits_[static_cast<std::size_t>(e)]; }
    void insert(EdgeId e) { bits_[static_cast<std::size_t>(e)] = true; }
    void erase(EdgeId e) { bits_[static_cast<std::size_t>(e)] = false; }
    [[nodiscard]] std::size_t count() const;
    [[nodiscard]] std::vector<EdgeId> ids() const;
    [[nodiscard]] bool is_subset_of(const EdgeSet& other) const;

    friend bool operator==(const EdgeSet&, const EdgeSet&) = default;

  private:
    std::vector<bool> bits_;
};

struct Arc {
    VertexId to;
    EdgeId edge;
    Length length;
};

class WeightedGraph {
  public:
    WeightedGraph() = default;
    // Stores the data as given; call validate_instance before solving.
    WeightedGraph(bool directed, int vertex_count, std::vector<Edge> edges);

    [[nodiscard]] bool directed() const { return directed_; }
    [[nodiscard]] int vertex_count() const { return vertex_count_; }
    [[nodiscard]] int edge_count() const { return static_cast<int>(edges_.size()); }
    [[nodiscard]] const std::vector<Edge>& edges() const { return edges_; }
    [[nodiscard]] const Edge& edge(EdgeId e) const { return edges_[static_cast<std::size_t>(e)]; }
    [[nodiscard]] EdgeSet all_edges() const { return EdgeSet(edges_.size(), true); }

    // Outgoing arcs (both directions for undirected graphs). Edges with
    // out-of-range endpoints are left out of the adjacency.
    [[nodiscard]] const std::vector<Arc>& out_arcs(VertexId v) const { return out_[static_cast<std::size_t>(v)]; }

    // Undirected degree, or in-degree plus out-degree for directed graphs.
    [[nodiscard]] int degree(VertexId v) const;
    [[nodiscard]] int max_degree() const;
    [[nodiscard]] bool unweighted() const;

  private:
    bool directed_ = false;
    int vertex_count_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Arc>> out_;
};

struct Violation {
    ErrorCode code;
    std::string message;
};

// Empty result means the instance is valid.
std::vector<Violation> validate_instance(const WeightedGraph& g);

// Throws Error(InvalidInstance) listing every violation.
void require_valid(const WeightedGraph& g);

struct DistanceMap {
    VertexId source = 0;
    std::vector<Length> dist;

    [[nodiscard]] bool reachable(VertexId v) const { return dist[static_cast<std::size_t>(v)] != kUnreachable; }
    [[nodiscard]] Length operator[](VertexId v) const { return dist[static_cast<std::size_t>(v)]; }
};

// c2-shortest distances from source inside the subgraph (V, edge_subset).
DistanceMap shortest_distances(const WeightedGraph& g, const EdgeSet& edge_subset, VertexId source);

// All ordered pairs (u, v), u != v, with a u-v path in (V, edge_subset),
// sorted lexicographically.
std::vector<std::pair<VertexId, VertexId>> reachable_pairs(const WeightedGraph& g, const EdgeSet& edge_subset);

// True iff (V, edge_subset) is connected when orientation is ignored.
bool weakly_connected(const WeightedGraph& g, const EdgeSet& edge_subset);

} // namespace mspan
