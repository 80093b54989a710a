#include "stubborn/report.hpp"

#include <charconv>

#include "stubborn/errors.hpp"

namespace stubborn {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

nlohmann::json optional_number(const std::optional<double>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

}  // namespace

std::string format_number(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 12);
  if (ec != std::errc{}) return "nan";
  return std::string(buf, ptr);
}

std::vector<std::string> labels_of(const Graph& g, const NodeSet& a) {
  std::vector<std::string> out;
  for (NodeId v : a.members()) out.push_back(g.label(v));
  return out;
}

NodeSet parse_label_set(const Graph& g, std::string_view line) {
  NodeSet out(g.node_count());
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    const auto item = trim(line.substr(start, comma == std::string_view::npos ? line.npos
                                                                             : comma - start));
    if (item.empty()) throw InputError("empty label in set '" + std::string(line) + "'");
    const auto id = g.find_label(item);
    if (!id) throw InputError("unknown label '" + std::string(item) + "'");
    out.insert(*id);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

nlohmann::json to_json(const Graph& g, const BoundReport& r) {
  nlohmann::json d = nlohmann::json::object();
  for (std::size_t k = 0; k < r.d.transient.size(); ++k) {
    d[g.label(r.d.transient[k])] = r.d.d(static_cast<Eigen::Index>(k));
  }
  return {
      {"phi", r.phi},
      {"uncovered", r.uncovered},
      {"sigma_star", r.sigma_star},
      {"d", d},
      {"bounds",
       {{"dominant", optional_number(r.bound_dominant)},
        {"general", optional_number(r.bound_general)},
        {"degree", optional_number(r.bound_degree)}}},
      {"surrogate", optional_number(r.surrogate)},
  };
}

nlohmann::json to_json(const Graph& g, const OptimizeResult& r) {
  nlohmann::json traces = nlohmann::json::array();
  for (const auto& ext : r.trace) {
    nlohmann::json steps = nlohmann::json::array();
    for (std::size_t i = 0; i < ext.added.size(); ++i) {
      steps.push_back({{"added", g.label(ext.added[i])}, {"F", ext.f_after[i]}});
    }
    traces.push_back({{"start", labels_of(g, ext.start)},
                      {"steps", steps},
                      {"set", labels_of(g, ext.set)},
                      {"F", ext.f}});
  }
  return {
      {"offered", labels_of(g, r.offered)},
      {"F_offered", r.f_offered},
      {"rank", r.rank},
      {"greedy", labels_of(g, r.greedy_set)},
      {"F_greedy", r.f_greedy},
      {"f_empty_lower_estimate", optional_number(r.f_empty_lower_estimate)},
      {"rho_offered", optional_number(r.rho_offered)},
      {"rho_greedy", optional_number(r.rho_greedy)},
      {"chi", optional_number(r.chi)},
      {"traces", traces},
  };
}

void write_trace_csv(std::ostream& out, const ConsensusTrace& tr) {
  out << "step,error\n";
  for (std::size_t t = 0; t < tr.errors.size(); ++t) {
    out << t << ',' << format_number(tr.errors[t]) << '\n';
  }
}

}  // namespace stubborn
