#ifndef DICHROMA_IO_HPP
#define DICHROMA_IO_HPP

#include <string>

#include "json.hpp"

#include "dichroma/condition.hpp"
#include "dichroma/digraph.hpp"
#include "dichroma/product.hpp"
#include "dichroma/solver.hpp"

namespace dichroma {

using Json = nlohmann::json;

/// Canonical file form: keys sorted, two-space indent, trailing newline.
/// Emitting, re-parsing, and emitting again is byte-identical.
std::string canonical_text(const Json& j);

Json digraph_to_json(const Digraph& d);
Digraph digraph_from_json(const Json& j);

/// Digraph plus the data needed to recover the product structure:
/// the vertex labels (coordinate sequences), the level widths, the depth.
Json truncation_to_json(const Truncation& t);
Truncation truncation_from_json(const Json& j);

Json condition_to_json(const Condition& c);
Condition condition_from_json(const Json& j);

Json coloring_to_json(const Coloring& c);
Coloring coloring_from_json(const Json& j);

Json profile_to_json(const FProfile& p);

Json fbound_report_to_json(const FBoundReport& r, int size_cap);

/// One "u v" line per edge; isolated vertices as single "v" lines (first).
std::string digraph_to_edge_list(const Digraph& d);
Digraph digraph_from_edge_list(const std::string& text);

/// Export only.
std::string digraph_to_dot(const Digraph& d);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace dichroma

#endif
