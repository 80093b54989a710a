#include "stubborn/graph.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <utility>

#include "stubborn/errors.hpp"

namespace stubborn {

namespace {

void check_universe(const Graph& g, const NodeSet& a) {
  if (a.universe() != g.node_count()) {
    throw InputError("node set universe " + std::to_string(a.universe()) +
                     " does not match graph with " + std::to_string(g.node_count()) +
                     " nodes");
  }
}

bool connected(const std::vector<std::vector<Neighbor>>& adjacency) {
  if (adjacency.empty()) return false;
  std::vector<char> seen(adjacency.size(), 0);
  std::vector<NodeId> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const NodeId v = stack.back();
    stack.pop_back();
    for (const auto& nb : adjacency[v]) {
      if (!seen[nb.id]) {
        seen[nb.id] = 1;
        ++reached;
        stack.push_back(nb.id);
      }
    }
  }
  return reached == adjacency.size();
}

}  // namespace

Graph Graph::from_edges(std::size_t node_count, std::vector<Edge> edges,
                        std::vector<std::string> labels) {
  if (node_count == 0) throw InputError("graph has no nodes");
  if (node_count > kMaxDenseNodes) {
    throw InputError("graph has " + std::to_string(node_count) +
                     " nodes; the dense solver supports at most " +
                     std::to_string(kMaxDenseNodes));
  }
  if (!labels.empty() && labels.size() != node_count) {
    throw InputError("label count does not match node count");
  }

  Graph g;
  g.adjacency_.resize(node_count);
  std::map<std::pair<NodeId, NodeId>, std::size_t> seen;
  for (const Edge& e : edges) {
    if (e.u >= node_count || e.v >= node_count) {
      throw InputError("edge endpoint outside node range");
    }
    if (e.u == e.v) throw InputError("self-loop at node " + std::to_string(e.u));
    if (!(e.weight_uv > 0.0) || !(e.weight_vu > 0.0) || !std::isfinite(e.weight_uv) ||
        !std::isfinite(e.weight_vu)) {
      throw InputError("edge weights must be positive and finite");
    }
    const auto key = std::minmax(e.u, e.v);
    if (!seen.emplace(key, g.edges_.size()).second) {
      throw InputError("duplicate edge " + std::to_string(e.u) + "-" + std::to_string(e.v));
    }
    g.edges_.push_back(e);
    g.adjacency_[e.u].push_back({e.v, e.weight_uv});
    g.adjacency_[e.v].push_back({e.u, e.weight_vu});
  }
  if (!connected(g.adjacency_)) throw InputError("graph is not connected");

  if (labels.empty()) {
    labels.reserve(node_count);
    for (std::size_t i = 0; i < node_count; ++i) labels.push_back(std::to_string(i));
  }
  g.labels_ = std::move(labels);
  for (std::size_t i = 0; i < node_count; ++i) {
    if (!g.label_index_.emplace(g.labels_[i], i).second) {
      throw InputError("duplicate node label '" + g.labels_[i] + "'");
    }
  }
  return g;
}

std::size_t Graph::max_degree() const {
  std::size_t best = 0;
  for (const auto& adj : adjacency_) best = std::max(best, adj.size());
  return best;
}

double Graph::out_weight(NodeId v) const {
  double total = 0.0;
  for (const auto& nb : adjacency_[v]) total += nb.weight;
  return total;
}

bool Graph::adjacent(NodeId u, NodeId v) const {
  const auto& adj = adjacency_[u];
  return std::any_of(adj.begin(), adj.end(), [v](const Neighbor& nb) { return nb.id == v; });
}

bool Graph::has_symmetric_weights() const {
  return std::all_of(edges_.begin(), edges_.end(),
                     [](const Edge& e) { return e.weight_uv == e.weight_vu; });
}

std::optional<NodeId> Graph::find_label(std::string_view label) const {
  const auto it = label_index_.find(std::string(label));
  if (it == label_index_.end()) return std::nullopt;
  return it->second;
}

Graph load_edge_list(std::string_view text) {
  std::vector<std::string> labels;
  std::unordered_map<std::string, NodeId> ids;
  auto intern = [&](const std::string& label) {
    auto [it, inserted] = ids.emplace(label, labels.size());
    if (inserted) labels.push_back(label);
    return it->second;
  };

  std::vector<Edge> edges;
  std::vector<bool> explicit_weight;
  std::vector<bool> reverse_given;
  std::map<std::pair<NodeId, NodeId>, std::size_t> index;

  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::vector<std::string> tok;
    for (std::string t; fields >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    const std::string where = "line " + std::to_string(line_no) + ": ";
    if (tok.size() != 2 && tok.size() != 3) {
      throw InputError(where + "expected 'u v' or 'u v w'");
    }
    if (tok[0] == tok[1]) throw InputError(where + "self-loop at '" + tok[0] + "'");

    double w = 1.0;
    if (tok.size() == 3) {
      const char* first = tok[2].data();
      const char* last = first + tok[2].size();
      auto [ptr, ec] = std::from_chars(first, last, w);
      if (ec != std::errc{} || ptr != last) {
        throw InputError(where + "invalid weight '" + tok[2] + "'");
      }
      if (!(w > 0.0) || !std::isfinite(w)) {
        throw InputError(where + "weight must be positive, got '" + tok[2] + "'");
      }
    }

    const NodeId u = intern(tok[0]);
    const NodeId v = intern(tok[1]);
    const auto key = std::minmax(u, v);
    if (const auto it = index.find(key); it != index.end()) {
      const std::size_t k = it->second;
      const bool reversed = edges[k].u == v;
      if (!reversed || !explicit_weight[k] || tok.size() != 3 || reverse_given[k]) {
        throw InputError(where + "duplicate edge " + tok[0] + " " + tok[1]);
      }
      edges[k].weight_vu = w;
      reverse_given[k] = true;
      continue;
    }
    index.emplace(key, edges.size());
    edges.push_back({u, v, w, w});
    explicit_weight.push_back(tok.size() == 3);
    reverse_given.push_back(false);
  }
  if (labels.empty()) throw InputError("edge list contains no edges");
  const std::size_t n = labels.size();
  return Graph::from_edges(n, std::move(edges), std::move(labels));
}

Graph load_edge_list_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open graph file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_edge_list(buf.str());
}

NodeSet vertex_cover_matching(const Graph& g) {
  NodeSet cover(g.node_count());
  for (const Edge& e : g.edges()) {
    if (!cover.contains(e.u) && !cover.contains(e.v)) {
      cover.insert(e.u);
      cover.insert(e.v);
    }
  }
  return cover;
}

bool is_vertex_cover(const Graph& g, const NodeSet& a) {
  return uncovered_edge_count(g, a) == 0;
}

bool is_one_dominant(const Graph& g, const NodeSet& a) {
  check_universe(g, a);
  if (a.empty()) return false;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (a.contains(v)) continue;
    const auto& adj = g.neighbors(v);
    if (std::none_of(adj.begin(), adj.end(),
                     [&](const Neighbor& nb) { return a.contains(nb.id); })) {
      return false;
    }
  }
  return true;
}

std::vector<NodeSet> complement_components(const Graph& g, const NodeSet& a) {
  check_universe(g, a);
  if (a.is_full()) throw InputError("complement of the full node set is empty");
  const std::size_t n = g.node_count();
  std::vector<char> seen(n, 0);
  std::vector<NodeSet> out;
  for (NodeId start = 0; start < n; ++start) {
    if (a.contains(start) || seen[start]) continue;
    NodeSet comp(n);
    std::vector<NodeId> stack{start};
    seen[start] = 1;
    while (!stack.empty()) {
      const NodeId v = stack.back();
      stack.pop_back();
      comp.insert(v);
      for (const auto& nb : g.neighbors(v)) {
        if (!a.contains(nb.id) && !seen[nb.id]) {
          seen[nb.id] = 1;
          stack.push_back(nb.id);
        }
      }
    }
    out.push_back(std::move(comp));
  }
  return out;
}

std::size_t uncovered_edge_count(const Graph& g, const NodeSet& a) {
  check_universe(g, a);
  return static_cast<std::size_t>(std::count_if(
      g.edges().begin(), g.edges().end(),
      [&](const Edge& e) { return !a.contains(e.u) && !a.contains(e.v); }));
}

std::size_t boundary_edges(const Graph& g, const NodeSet& a) {
  check_universe(g, a);
  return static_cast<std::size_t>(std::count_if(
      g.edges().begin(), g.edges().end(),
      [&](const Edge& e) { return a.contains(e.u) != a.contains(e.v); }));
}

NodeSet boundary_nodes(const Graph& g, const NodeSet& a) {
  check_universe(g, a);
  NodeSet out(g.node_count());
  for (const Edge& e : g.edges()) {
    if (a.contains(e.u) && !a.contains(e.v)) out.insert(e.v);
    if (a.contains(e.v) && !a.contains(e.u)) out.insert(e.u);
  }
  return out;
}

}  // namespace stubborn
