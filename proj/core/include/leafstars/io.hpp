#pragma once

#include <nlohmann/json.hpp>

#include <string>

#include "leafstars/counting.hpp"
#include "leafstars/tk.hpp"
#include "leafstars/treegen.hpp"

namespace leafstars {

// All counts serialize as decimal strings so arbitrary precision survives
// any JSON parser. Object key order is fixed (ordered_json) so identical
// runs produce byte-identical reports.
using Json = nlohmann::ordered_json;

Json size_counts_json(const SizeCountVector& v);
SizeCountVector size_counts_from_json(const Json& j);

// Star tables carry a per-vertex leaf flag, which needs the graph.
Json star_table_json(const Graph& g, const StarTable& t);
StarTable star_table_from_json(const Json& j);
std::string star_table_csv(const Graph& g, const StarTable& t);

// Sorted by descending count, leaves marked; makes a failing conjecture
// instance visually evident.
std::string star_table_human(const Graph& g, const StarTable& t);

Json verdict_json(const ConjectureVerdict& v);
Json labels_json(const TkLabels& labels);
Json decomposition_json(int k, const Decomposition& d);
Json theorem_report_json(const TheoremReport& rep);

Json search_report_json(const SearchReport& rep);
std::string search_report_csv(const SearchReport& rep);

}  // namespace leafstars
