#pragma once

// JSON instance and result formats.
//
//   hypergraph  {"k": int, "n": int, "edges": [[int, ...], ...]}
//   family      {"n": int, "members": [<hypergraph>, ...]}
//   partite     <hypergraph with k = 4> plus {"q": int, "p": int}
//
// Readers reject unsorted edges, out-of-order edge lists and duplicates unless
// `normalize` is set. Rationals are "num/den" strings.

#include "rainbow/absorbing.hpp"
#include "rainbow/fractional.hpp"
#include "rainbow/shift.hpp"
#include "rainbow/solvers.hpp"

#include "json.hpp"

#include <istream>
#include <string>

namespace rainbow::io {

using nlohmann::json;

/// Parses a whole stream; malformed JSON becomes InputError.
json read_json(std::istream& in);
json read_json_file(const std::string& path);

json to_json(const Edge& e);
Edge edge_from_json(const json& j, bool normalize = false);

json to_json(const Hypergraph& h);
Hypergraph hypergraph_from_json(const json& j, bool normalize = false);

json to_json(const HypergraphFamily& f);
HypergraphFamily family_from_json(const json& j, bool normalize = false);

json to_json(const PartiteHypergraph& h);
PartiteHypergraph partite_from_json(const json& j, bool normalize = false);

json to_json(const VertexSet& s);
/// Accepts a bare array or {"vertices": [...]}.
VertexSet vertex_set_from_json(const json& j);

json to_json(const Matching& m);
/// Edges in colour order.
json to_json(const RainbowMatching& m);

json to_json(const DegreeSumStats& s);
json to_json(const FractionalMatching& q);
json to_json(const FractionalCover& p);
json to_json(const ShiftTrace& t);
json to_json(const AbsorberGadget& g);

} // namespace rainbow::io
