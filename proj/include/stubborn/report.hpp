#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "stubborn/bounds.hpp"
#include "stubborn/graph.hpp"
#include "stubborn/optimizer.hpp"
#include "stubborn/sim.hpp"

namespace stubborn {

// 12 significant digits, '.' decimal point regardless of locale.
std::string format_number(double v);

std::vector<std::string> labels_of(const Graph& g, const NodeSet& a);

// Comma-separated node labels, surrounding whitespace ignored.
NodeSet parse_label_set(const Graph& g, std::string_view line);

nlohmann::json to_json(const Graph& g, const BoundReport& r);
nlohmann::json to_json(const Graph& g, const OptimizeResult& r);

// "step,error" header followed by one row per step.
void write_trace_csv(std::ostream& out, const ConsensusTrace& tr);

}  // namespace stubborn
