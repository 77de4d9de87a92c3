#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "rigidlines/elekes_sharir.hpp"
#include "rigidlines/geometry.hpp"
#include "rigidlines/henneberg.hpp"
#include "rigidlines/numeric.hpp"

namespace rigidlines {

using Json = nlohmann::ordered_json;

/// {"lines": [[a,b,c,d], ...]}
Json lines_to_json(std::span<const Line> lines);
LineConfig parse_lines(std::string_view text);

/// {"points": [[x,y], ...]}
Json embedding_to_json(const Embedding& p);
Embedding parse_embedding(std::string_view text);

/// {"p": [[x,y], ...], "p_prime": [[x,y], ...]}
Json pair_to_json(const Embedding& p, const Embedding& p_prime);
std::pair<Embedding, Embedding> parse_pair(std::string_view text);

/// [{"kind":"ext0","u":0,"v":1}, {"kind":"ext1","u":0,"v":1,"w":2}, ...]
Json steps_to_json(std::span<const Move> steps);
std::vector<Move> parse_steps(std::string_view text);

Json report_to_json(const DimensionReport& r);
Json graph_to_json(const Graph& g);

}  // namespace rigidlines
