// Copyright (c) mspan contributors.
// SPDX-License-Identifier: Apache-2.0
#include "mspan/io.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace mspan::io {

namespace {

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) {
        fail(std::string("missing field '") + key + "'");
    }
    return j.at(key);
}

std::int64_t as_int(const Json& j, const char* what) {
    if (!j.is_number_integer()) {
        fail(std::string(what) + " must be an integer");
    }
    return j.get<std::int64_t>();
}

const Json& as_array(const Json& j, const char* what) {
    if (!j.is_array()) {
        fail(std::string(what) + " must be an array");
    }
    return j;
}

} // namespace

Json to_json(const WeightedGraph& g) {
    Json edges = Json::array();
    for (const Edge& e : g.edges()) {
        edges.push_back(Json{{"u", e.u}, {"v", e.v}, {"c1", e.c1}, {"c2", e.c2}});
    }
    return Json{{"directed", g.directed()}, {"vertices", g.vertex_count()}, {"edges", std::move(edges)}};
}

WeightedGraph graph_from_json(const Json& j) {
    const Json& directed = field(j, "directed");
    if (!directed.is_boolean()) {
        fail("'directed' must be a boolean");
    }
    const auto vertices = as_int(field(j, "vertices"), "'vertices'");
    std::vector<Edge> edges;
    for (const Json& e : as_array(field(j, "edges"), "'edges'")) {
        edges.push_back(Edge{static_cast<VertexId>(as_int(field(e, "u"), "'u'")),
                             static_cast<VertexId>(as_int(field(e, "v"), "'v'")), as_int(field(e, "c1"), "'c1'"),
                             as_int(field(e, "c2"), "'c2'")});
    }
    return WeightedGraph(directed.get<bool>(), static_cast<int>(vertices), std::move(edges));
}

Json to_json(const Rational& r) { return Json::array({r.num(), r.den()}); }

Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) {
        return Rational(j.get<std::int64_t>());
    }
    if (!j.is_array() || j.size() != 2) {
        fail("rational must be [num, den]");
    }
    const auto den = as_int(j[1], "denominator");
    if (den <= 0) {
        fail("rational denominator must be positive");
    }
    return Rational(as_int(j[0], "numerator"), den);
}

Json to_json(const ValueVector& y) { return Json{{"f1", y.f1}, {"f2", to_json(y.f2)}}; }

ValueVector value_from_json(const Json& j) {
    return ValueVector{as_int(field(j, "f1"), "'f1'"), rational_from_json(field(j, "f2"))};
}

Json spanner_to_json(const EdgeSet& s) { return Json{{"edges", s.ids()}}; }

EdgeSet spanner_from_json(const Json& j, int edge_count) {
    std::vector<EdgeId> ids;
    for (const Json& e : as_array(field(j, "edges"), "'edges'")) {
        const auto id = as_int(e, "edge id");
        if (id < 0 || id >= edge_count) {
            fail("edge id " + std::to_string(id) + " out of range");
        }
        ids.push_back(static_cast<EdgeId>(id));
    }
    return EdgeSet::from_ids(static_cast<std::size_t>(edge_count), ids);
}

Json to_json(const ParetoFront& front) {
    Json points = Json::array();
    for (const ValueVector& y : front.points) {
        points.push_back(to_json(y));
    }
    Json out{{"points", std::move(points)}};
    if (!front.witnesses.empty()) {
        Json w = Json::object();
        for (std::size_t i = 0; i < front.witnesses.size(); ++i) {
            w[std::to_string(i)] = spanner_to_json(front.witnesses[i]);
        }
        out["witnesses"] = std::move(w);
    }
    return out;
}

ParetoFront front_from_json(const Json& j, int edge_count) {
    ParetoFront front;
    for (const Json& p : as_array(field(j, "points"), "'points'")) {
        front.points.push_back(value_from_json(p));
    }
    if (edge_count >= 0 && j.contains("witnesses")) {
        for (std::size_t i = 0; i < front.points.size(); ++i) {
            front.witnesses.push_back(spanner_from_json(field(j["witnesses"], std::to_string(i).c_str()), edge_count));
        }
    }
    return front;
}

Json to_json(const Lambda& lam) { return Json::array({to_json(lam.l1()), to_json(lam.l2())}); }

Json to_json(const ExtremeCertificate& cert) {
    return Json{{"point", to_json(cert.point)}, {"lambda", to_json(cert.lambda)}};
}

Json to_json(const std::vector<ExtremeCertificate>& certs) {
    Json out = Json::array();
    for (const auto& c : certs) {
        out.push_back(to_json(c));
    }
    return out;
}

Json to_json(const BucoInstance& inst) { return Json{{"c1", inst.c1()}, {"c2", inst.c2()}}; }

BucoInstance buco_from_json(const Json& j) {
    auto read = [&](const char* key) {
        std::vector<std::int64_t> out;
        for (const Json& v : as_array(field(j, key), key)) {
            out.push_back(as_int(v, key));
        }
        return out;
    };
    return BucoInstance(read("c1"), read("c2"));
}

namespace {

Json item_json(const ChainItemEdges& item) {
    Json j{{"v_w", item.direct}, {"v_vp", item.to_mid}, {"vp_w", item.from_mid}};
    if (item.back_arc) {
        j["vp_v"] = *item.back_arc;
    }
    return j;
}

} // namespace

Json to_json(const BucoReductionMetadata& meta) {
    Json items = Json::array();
    for (const auto& item : meta.items) {
        items.push_back(item_json(item));
    }
    return Json{{"C1", meta.c1_total}, {"M", meta.m},         {"n", meta.n},
                {"directed", meta.directed}, {"gadget_edges", std::move(items)},
                {"chain_edges", meta.chain_edges}, {"st_edge", meta.st_edge}};
}

Json to_json(const CaiMetadata& meta) {
    Json literal = Json::array();
    for (const auto& [pos, neg] : meta.literal_edges) {
        literal.push_back(Json::array({pos, neg}));
    }
    return Json{{"n", meta.n},
                {"m", meta.m},
                {"K", meta.k},
                {"z", meta.z},
                {"forced_edges", meta.forced_edges},
                {"literal_edges", std::move(literal)},
                {"clause_edges", meta.clause_edges}};
}

std::vector<bool> assignment_from_json(const Json& j) {
    std::vector<bool> out;
    for (const Json& v : as_array(field(j, "assignment"), "'assignment'")) {
        if (!v.is_boolean()) {
            fail("assignment entries must be booleans");
        }
        out.push_back(v.get<bool>());
    }
    return out;
}

std::string read_text(const std::string& path) {
    if (path == "-") {
        return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    }
    std::ifstream in(path);
    if (!in) {
        fail("cannot open '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Json read_json(const std::string& path) {
    try {
        return Json::parse(read_text(path));
    } catch (const Json::parse_error& e) {
        fail("'" + path + "' is not valid JSON: " + e.what());
    }
}

void write_json(const Json& j, const std::string& path) {
    const std::string text = j.dump(2) + "\n";
    if (path == "-") {
        std::cout << text << std::flush;
        return;
    }
    std::ofstream out(path);
    if (!out) {
        fail("cannot write '" + path + "'");
    }
    out << text;
}

} // namespace mspan::io
