// Copyright (c) mspan contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

// Constructors for the three hardness families and their companions.
//
// Chain layout (intractable family and BUCO reduction): item i owns
// vertices v_i = 3i, v'_i = 3i+1, w_i = 3i+2. Edges are emitted per item as
// {v_i,w_i}, {v_i,v'_i}, {v'_i,w_i}, [back arc (v'_i,v_i), directed BUCO
// only], then the chain edge {w_i,v_{i+1}}; the edge {s,t} = {v_0,w_{n-1}}
// comes last. Directed variants orient every edge from s towards t.
//
// Cai layout: vertex 0 is z; variable i owns x_i = 1+4i, xbar_i = 2+4i,
// y_i = 3+4i, y'_i = 4+4i; clause j is vertex 1+4n+j; interior vertices of
// forcing paths follow in creation order. Per variable: the four edges from
// z, then the five forced edges {x,xbar}, {x,y}, {x,y'}, {xbar,y}, {xbar,y'}
// each followed by its forcing paths. Per clause: {z,c_j}, then one forced
// edge from c_j to each literal vertex in clause order.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mspan/buco.hpp"
#include "mspan/graph.hpp"

namespace mspan {

class GraphBuilder {
  public:
    VertexId add_vertex() { return vertex_count_++; }
    EdgeId add_edge(VertexId u, VertexId v, std::int64_t c1, std::int64_t c2);
    [[nodiscard]] int vertex_count() const { return vertex_count_; }
    [[nodiscard]] int edge_count() const { return static_cast<int>(edges_.size()); }
    [[nodiscard]] WeightedGraph build(bool directed) const { return WeightedGraph(directed, vertex_count_, edges_); }

  private:
    int vertex_count_ = 0;
    std::vector<Edge> edges_;
};

// An edge {u,v} with two forcing 2-paths u-p-v. paths[k] = {u-p_k, p_k-v}.
struct ForcedEdge {
    EdgeId forced;
    std::array<std::array<EdgeId, 2>, 2> paths;
};

// Adds {u,v}, two fresh vertices p1, p2 and the edges u-p1, p1-v, u-p2,
// p2-v, all with weight (1,1).
ForcedEdge force_edge(GraphBuilder& builder, VertexId u, VertexId v);

// ---- intractable family ----------------------------------------------------

struct ChainItemEdges {
    EdgeId direct;   // {v_i, w_i}
    EdgeId to_mid;   // {v_i, v'_i}
    EdgeId from_mid; // {v'_i, w_i}
    std::optional<EdgeId> back_arc;
};

struct IntractableMetadata {
    int n = 0;
    VertexId s = 0;
    VertexId t = 0;
    std::vector<ChainItemEdges> items;
    std::vector<EdgeId> chain_edges;
    EdgeId st_edge = 0;
};

// Throws Error(NTooSmall) for n < 2 and Error(TooLarge) for n > 40.
WeightedGraph gen_intractable(int n, bool directed);
IntractableMetadata intractable_metadata(int n);

// ---- BUCO reduction --------------------------------------------------------

struct BucoReductionMetadata {
    std::int64_t c1_total = 0; // sum of the BUCO c1 entries
    std::int64_t m = 0;        // c1_total + 1, the cost of {s,t}
    int n = 0;
    bool directed = false;
    int edge_count = 0;
    std::vector<ChainItemEdges> items;
    std::vector<EdgeId> chain_edges;
    EdgeId st_edge = 0;
};

struct BucoReduction {
    WeightedGraph graph;
    BucoReductionMetadata meta;
};

// Throws Error(NTooSmall) for a single-item instance, where {s,t} would
// duplicate {v_1,w_1}.
BucoReduction gen_from_buco(const BucoInstance& inst, bool directed);

// The spanner S_x of a BUCO solution. Throws Error(LengthMismatch).
EdgeSet spanner_from_buco_solution(const BucoReductionMetadata& meta, const BitVector& x);

// Maps the exact front of a reduced instance back to the BUCO front.
// Throws Error(NonintegralF2) when a retained point has fractional stretch.
ParetoFront filter_buco_front(const ParetoFront& msp_front, const BucoReductionMetadata& meta);

// ---- Cai construction ------------------------------------------------------

// Literal +k / -k is variable k (1-based) / its negation.
struct CnfFormula {
    int num_vars = 0;
    std::vector<std::array<int, 3>> clauses;
};

// Throws Error(MalformedCnf).
void validate_cnf(const CnfFormula& cnf);

// DIMACS text with clauses of exactly three distinct literals. Throws
// Error(MalformedCnf).
CnfFormula parse_dimacs(const std::string& text);

// assignment[k-1] is the value of variable k.
bool satisfies(const CnfFormula& cnf, const std::vector<bool>& assignment);

struct CaiMetadata {
    int n = 0;
    int m = 0;
    std::int64_t k = 0; // 16n + 9m
    VertexId z = 0;
    std::vector<EdgeId> forced_edges;
    std::vector<ForcedEdge> gadgets;
    std::vector<std::pair<EdgeId, EdgeId>> literal_edges; // ({z,x_i}, {z,xbar_i})
    std::vector<std::pair<EdgeId, EdgeId>> y_edges;       // ({z,y_i}, {z,y'_i})
    std::vector<EdgeId> clause_edges;                     // {z,c_j}
    CnfFormula cnf;
};

struct CaiReduction {
    WeightedGraph graph;
    CaiMetadata meta;
};

CaiReduction gen_cai(const CnfFormula& cnf);

// Every forced edge, the first edge of each forcing path, and the literal
// edge of the true literal of every variable. Throws
// Error(UnsatisfyingAssignment) or Error(LengthMismatch).
EdgeSet witness_spanner(const WeightedGraph& g, const CaiMetadata& meta, const std::vector<bool>& assignment);

} // namespace mspan
