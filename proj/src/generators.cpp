// Copyright (c) mspan contributors.
// SPDX-License-Identifier: Apache-2.0
#include "mspan/generators.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>
#include <sstream>

namespace mspan {

EdgeId GraphBuilder::add_edge(VertexId u, VertexId v, std::int64_t c1, std::int64_t c2) {
    edges_.push_back(Edge{u, v, c1, c2});
    return static_cast<EdgeId>(edges_.size() - 1);
}

ForcedEdge force_edge(GraphBuilder& builder, VertexId u, VertexId v) {
    if (u == v) {
        throw std::invalid_argument("cannot force a self-loop");
    }
    ForcedEdge out{};
    out.forced = builder.add_edge(u, v, 1, 1);
    for (auto& path : out.paths) {
        const VertexId p = builder.add_vertex();
        path[0] = builder.add_edge(u, p, 1, 1);
        path[1] = builder.add_edge(p, v, 1, 1);
    }
    return out;
}

namespace {

struct ChainWeights {
    Edge direct;
    Edge to_mid;
    Edge from_mid;
};

struct ChainLayout {
    GraphBuilder builder;
    std::vector<ChainItemEdges> items;
    std::vector<EdgeId> chain_edges;
    EdgeId st_edge = 0;
};

// weights[i] supplies c1/c2 per item edge; endpoints are filled in here.
ChainLayout build_chain(const std::vector<ChainWeights>& weights, std::int64_t st_c1, bool back_arcs) {
    ChainLayout out;
    const int n = static_cast<int>(weights.size());
    for (int i = 0; i < 3 * n; ++i) {
        out.builder.add_vertex();
    }
    auto v = [](int i) { return 3 * i; };
    auto mid = [](int i) { return 3 * i + 1; };
    auto w = [](int i) { return 3 * i + 2; };
    for (int i = 0; i < n; ++i) {
        const ChainWeights& cw = weights[static_cast<std::size_t>(i)];
        ChainItemEdges item{};
        item.direct = out.builder.add_edge(v(i), w(i), cw.direct.c1, cw.direct.c2);
        item.to_mid = out.builder.add_edge(v(i), mid(i), cw.to_mid.c1, cw.to_mid.c2);
        item.from_mid = out.builder.add_edge(mid(i), w(i), cw.from_mid.c1, cw.from_mid.c2);
        if (back_arcs) {
            item.back_arc = out.builder.add_edge(mid(i), v(i), 0, 1);
        }
        out.items.push_back(item);
        if (i + 1 < n) {
            out.chain_edges.push_back(out.builder.add_edge(w(i), v(i + 1), 0, 1));
        }
    }
    out.st_edge = out.builder.add_edge(v(0), w(n - 1), st_c1, 1);
    return out;
}

constexpr int kMaxIntractableN = 40;

} // namespace

WeightedGraph gen_intractable(int n, bool directed) {
    if (n < 2) {
        throw Error(ErrorCode::NTooSmall, "the intractable family needs n >= 2");
    }
    if (n > kMaxIntractableN) {
        throw Error(ErrorCode::TooLarge, "n = " + std::to_string(n) + " overflows the 2^(n+1) weights");
    }
    std::vector<ChainWeights> weights;
    for (int i = 1; i <= n; ++i) {
        const std::int64_t p = std::int64_t{1} << i;
        weights.push_back({{0, 0, p, p}, {0, 0, 0, p}, {0, 0, 0, p}});
    }
    return build_chain(weights, std::int64_t{1} << (n + 1), false).builder.build(directed);
}

IntractableMetadata intractable_metadata(int n) {
    if (n < 2) {
        throw Error(ErrorCode::NTooSmall, "the intractable family needs n >= 2");
    }
    const ChainLayout layout = build_chain(std::vector<ChainWeights>(static_cast<std::size_t>(n)), 1, false);
    return {n, 0, 3 * n - 1, layout.items, layout.chain_edges, layout.st_edge};
}

BucoReduction gen_from_buco(const BucoInstance& inst, bool directed) {
    const int n = inst.size();
    if (n < 2) {
        throw Error(ErrorCode::NTooSmall, "the reduction needs at least two items; with one item {s,t} duplicates {v_1,w_1}");
    }
    std::vector<ChainWeights> weights;
    std::int64_t total = 0;
    for (int i = 0; i < n; ++i) {
        const std::int64_t a = inst.c1()[static_cast<std::size_t>(i)];
        const std::int64_t b = inst.c2()[static_cast<std::size_t>(i)];
        total += a;
        weights.push_back({{0, 0, 0, b + 2}, {0, 0, 0, 1}, {0, 0, a, 1}});
    }
    ChainLayout layout = build_chain(weights, total + 1, directed);
    BucoReductionMetadata meta;
    meta.c1_total = total;
    meta.m = total + 1;
    meta.n = n;
    meta.directed = directed;
    meta.edge_count = layout.builder.edge_count();
    meta.items = layout.items;
    meta.chain_edges = layout.chain_edges;
    meta.st_edge = layout.st_edge;
    return {layout.builder.build(directed), std::move(meta)};
}

EdgeSet spanner_from_buco_solution(const BucoReductionMetadata& meta, const BitVector& x) {
    if (x.size() != static_cast<std::size_t>(meta.n)) {
        throw Error(ErrorCode::LengthMismatch,
                    "solution has " + std::to_string(x.size()) + " bits, reduction has " + std::to_string(meta.n));
    }
    EdgeSet s(static_cast<std::size_t>(meta.edge_count));
    for (std::size_t i = 0; i < meta.items.size(); ++i) {
        const ChainItemEdges& item = meta.items[i];
        s.insert(item.direct);
        s.insert(item.to_mid);
        if (item.back_arc) {
            s.insert(*item.back_arc);
        }
        if (!x[i]) {
            s.insert(item.from_mid);
        }
    }
    for (const EdgeId e : meta.chain_edges) {
        s.insert(e);
    }
    return s;
}

ParetoFront filter_buco_front(const ParetoFront& msp_front, const BucoReductionMetadata& meta) {
    const std::int64_t shift = 3 * static_cast<std::int64_t>(meta.n) - 1;
    std::vector<ValueVector> kept;
    for (const ValueVector& y : msp_front.points) {
        if (y.f1 >= meta.m) {
            continue;
        }
        if (!y.f2.is_integer()) {
            throw Error(ErrorCode::NonintegralF2, "retained point " + y.str() + " has fractional stretch");
        }
        kept.push_back(ValueVector{y.f1 - meta.c1_total, y.f2 - Rational(shift)});
    }
    return nondominated_filter(kept);
}

// ---- Cai -------------------------------------------------------------------

void validate_cnf(const CnfFormula& cnf) {
    if (cnf.num_vars < 1) {
        throw Error(ErrorCode::MalformedCnf, "formula needs at least one variable");
    }
    if (cnf.clauses.empty()) {
        throw Error(ErrorCode::MalformedCnf, "formula needs at least one clause");
    }
    for (std::size_t j = 0; j < cnf.clauses.size(); ++j) {
        const auto& c = cnf.clauses[j];
        for (const int lit : c) {
            if (lit == 0 || std::abs(lit) > cnf.num_vars) {
                throw Error(ErrorCode::MalformedCnf, "clause " + std::to_string(j + 1) + " has literal " +
                                                         std::to_string(lit) + " outside [1, n]");
            }
        }
        if (c[0] == c[1] || c[0] == c[2] || c[1] == c[2]) {
            throw Error(ErrorCode::MalformedCnf, "clause " + std::to_string(j + 1) + " repeats a literal");
        }
    }
}

CnfFormula parse_dimacs(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    CnfFormula cnf;
    long declared_clauses = -1;
    std::vector<int> pending;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first) || first[0] == 'c' || first[0] == '%') {
            continue;
        }
        if (first == "p") {
            std::string fmt;
            if (declared_clauses >= 0 || !(ls >> fmt >> cnf.num_vars >> declared_clauses) || fmt != "cnf") {
                throw Error(ErrorCode::MalformedCnf, "bad problem line: " + line);
            }
            continue;
        }
        if (declared_clauses < 0) {
            throw Error(ErrorCode::MalformedCnf, "clause before the problem line");
        }
        std::istringstream tokens(line);
        std::string tok;
        while (tokens >> tok) {
            char* end = nullptr;
            const long lit = std::strtol(tok.c_str(), &end, 10);
            if (*end != '\0') {
                throw Error(ErrorCode::MalformedCnf, "bad literal '" + tok + "'");
            }
            if (lit != 0) {
                pending.push_back(static_cast<int>(lit));
                continue;
            }
            if (pending.size() != 3) {
                throw Error(ErrorCode::MalformedCnf, "clause " + std::to_string(cnf.clauses.size() + 1) + " has " +
                                                         std::to_string(pending.size()) + " literals, expected 3");
            }
            cnf.clauses.push_back({pending[0], pending[1], pending[2]});
            pending.clear();
        }
    }
    if (declared_clauses < 0) {
        throw Error(ErrorCode::MalformedCnf, "missing problem line");
    }
    if (!pending.empty()) {
        throw Error(ErrorCode::MalformedCnf, "unterminated clause at end of input");
    }
    if (static_cast<long>(cnf.clauses.size()) != declared_clauses) {
        throw Error(ErrorCode::MalformedCnf, "problem line declares " + std::to_string(declared_clauses) +
                                                 " clauses, found " + std::to_string(cnf.clauses.size()));
    }
    validate_cnf(cnf);
    return cnf;
}

bool satisfies(const CnfFormula& cnf, const std::vector<bool>& assignment) {
    if (assignment.size() != static_cast<std::size_t>(cnf.num_vars)) {
        return false;
    }
    return std::all_of(cnf.clauses.begin(), cnf.clauses.end(), [&](const std::array<int, 3>& c) {
        return std::any_of(c.begin(), c.end(), [&](int lit) {
            const bool value = assignment[static_cast<std::size_t>(std::abs(lit) - 1)];
            return lit > 0 ? value : !value;
        });
    });
}

CaiReduction gen_cai(const CnfFormula& cnf) {
    validate_cnf(cnf);
    const int n = cnf.num_vars;
    const int m = static_cast<int>(cnf.clauses.size());
    GraphBuilder b;
    CaiMetadata meta;
    meta.n = n;
    meta.m = m;
    meta.k = 16 * static_cast<std::int64_t>(n) + 9 * static_cast<std::int64_t>(m);
    meta.cnf = cnf;
    meta.z = b.add_vertex();
    for (int i = 0; i < 4 * n + m; ++i) {
        b.add_vertex();
    }
    auto x = [](int i) { return 1 + 4 * i; };
    auto xbar = [](int i) { return 2 + 4 * i; };
    auto y = [](int i) { return 3 + 4 * i; };
    auto yp = [](int i) { return 4 + 4 * i; };
    auto clause_vertex = [n](int j) { return 1 + 4 * n + j; };
    auto literal_vertex = [&](int lit) { return lit > 0 ? x(lit - 1) : xbar(-lit - 1); };
    auto force = [&](VertexId u, VertexId v) {
        const ForcedEdge f = force_edge(b, u, v);
        meta.forced_edges.push_back(f.forced);
        meta.gadgets.push_back(f);
    };

    for (int i = 0; i < n; ++i) {
        const EdgeId zx = b.add_edge(meta.z, x(i), 1, 1);
        const EdgeId zxbar = b.add_edge(meta.z, xbar(i), 1, 1);
        const EdgeId zy = b.add_edge(meta.z, y(i), 1, 1);
        const EdgeId zyp = b.add_edge(meta.z, yp(i), 1, 1);
        meta.literal_edges.emplace_back(zx, zxbar);
        meta.y_edges.emplace_back(zy, zyp);
        force(x(i), xbar(i));
        force(x(i), y(i));
        force(x(i), yp(i));
        force(xbar(i), y(i));
        force(xbar(i), yp(i));
    }
    for (int j = 0; j < m; ++j) {
        meta.clause_edges.push_back(b.add_edge(meta.z, clause_vertex(j), 1, 1));
        for (const int lit : cnf.clauses[static_cast<std::size_t>(j)]) {
            force(clause_vertex(j), literal_vertex(lit));
        }
    }
    return {b.build(false), std::move(meta)};
}

EdgeSet witness_spanner(const WeightedGraph& g, const CaiMetadata& meta, const std::vector<bool>& assignment) {
    if (assignment.size() != static_cast<std::size_t>(meta.n)) {
        throw Error(ErrorCode::LengthMismatch, "assignment has " + std::to_string(assignment.size()) +
                                                   " values, formula has " + std::to_string(meta.n) + " variables");
    }
    if (!satisfies(meta.cnf, assignment)) {
        throw Error(ErrorCode::UnsatisfyingAssignment, "assignment leaves a clause unsatisfied");
    }
    EdgeSet s(static_cast<std::size_t>(g.edge_count()));
    for (const ForcedEdge& f : meta.gadgets) {
        s.insert(f.forced);
        s.insert(f.paths[0][0]);
        s.insert(f.paths[1][0]);
    }
    for (int i = 0; i < meta.n; ++i) {
        const auto [zx, zxbar] = meta.literal_edges[static_cast<std::size_t>(i)];
        s.insert(assignment[static_cast<std::size_t>(i)] ? zx : zxbar);
    }
    return s;
}

} // namespace mspan
