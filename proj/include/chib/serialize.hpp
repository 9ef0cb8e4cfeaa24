#pragma once

#include <json.hpp>

#include "chib/certificates.hpp"
#include "chib/structures.hpp"

// JSON documents for structures and certificates. Every document carries a "kind";
// vertex sets are sorted id lists in the ambient graph's numbering. Readers take the
// ambient order and throw ParseError on malformed documents or out-of-range ids.
namespace chib::ser {

using nlohmann::json;

json set_to_json(const VertexSet& s);
VertexSet set_from_json(const json& j, int n);

json to_json(const Cover& c);
json to_json(const Multicover& mc);
json to_json(const Tick& t);
json to_json(const Impression& imp);
json to_json(const Cable& c);
json to_json(const Coloring& c);
json to_json(const Hole& h);
json to_json(const Verdict& v);

Cover cover_from_json(const json& j, int n);
Multicover multicover_from_json(const json& j, int n);
Tick tick_from_json(const json& j, int n);
Impression impression_from_json(const json& j, int n);
Cable cable_from_json(const json& j, int n);
Coloring coloring_from_json(const json& j, int n);
Hole hole_from_json(const json& j, int n);

// The "kind" field; ParseError when absent.
std::string kind_of(const json& j);
// Parses text, mapping nlohmann errors to ParseError.
json parse_json(const std::string& text);

}  // namespace chib::ser
