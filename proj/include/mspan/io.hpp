// Copyright (c) mspan contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

// JSON wire formats. Keys are emitted in a fixed order and rationals are
// always reduced, so equal inputs serialize to identical bytes.

#include <string>
#include <vector>

#include <json.hpp>

#include "mspan/buco.hpp"
#include "mspan/extreme.hpp"
#include "mspan/generators.hpp"

namespace mspan::io {

using Json = nlohmann::ordered_json;

// All parsers throw Error(ParseError) on malformed documents.

Json to_json(const WeightedGraph& g);
WeightedGraph graph_from_json(const Json& j);

Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json to_json(const ValueVector& y);
ValueVector value_from_json(const Json& j);

Json spanner_to_json(const EdgeSet& s);
EdgeSet spanner_from_json(const Json& j, int edge_count);

// Witnesses, when present, are keyed by the point's index in "points".
Json to_json(const ParetoFront& front);
ParetoFront front_from_json(const Json& j, int edge_count = -1);

Json to_json(const Lambda& lam);
Json to_json(const ExtremeCertificate& cert);
Json to_json(const std::vector<ExtremeCertificate>& certs);

Json to_json(const BucoInstance& inst);
BucoInstance buco_from_json(const Json& j);

Json to_json(const BucoReductionMetadata& meta);
Json to_json(const CaiMetadata& meta);

std::vector<bool> assignment_from_json(const Json& j);

// "-" reads stdin.
std::string read_text(const std::string& path);
Json read_json(const std::string& path);

// Pretty-printed with a trailing newline; "-" writes stdout.
void write_json(const Json& j, const std::string& path);

} // namespace mspan::io
