#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "stubborn/node_set.hpp"

namespace stubborn {

// Largest graph the dense pipeline accepts.
inline constexpr std::size_t kMaxDenseNodes = 50'000;

struct Edge {
  NodeId u = 0;
  NodeId v = 0;
  double weight_uv = 1.0;  // weight on the u -> v orientation
  double weight_vu = 1.0;  // weight on the v -> u orientation
};

struct Neighbor {
  NodeId id = 0;
  double weight = 1.0;  // weight on the outgoing orientation
};

// Immutable connected graph without self-loops or parallel edges. Each
// undirected edge carries one weight per orientation; for ordinary weighted
// input the two are equal.
class Graph {
 public:
  // Validates and builds. Labels default to the decimal ids.
  static Graph from_edges(std::size_t node_count, std::vector<Edge> edges,
                          std::vector<std::string> labels = {});

  std::size_t node_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Neighbor>& neighbors(NodeId v) const { return adjacency_[v]; }

  std::size_t degree(NodeId v) const { return adjacency_[v].size(); }
  std::size_t max_degree() const;
  double out_weight(NodeId v) const;
  bool adjacent(NodeId u, NodeId v) const;
  bool has_symmetric_weights() const;

  const std::string& label(NodeId v) const { return labels_[v]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<NodeId> find_label(std::string_view label) const;

 private:
  Graph() = default;

  std::vector<Edge> edges_;
  std::vector<std::vector<Neighbor>> adjacency_;
  std::vector<std::string> labels_;
  std::unordered_map<std::string, NodeId> label_index_;
};

// Parses the line-oriented edge-list format: "u v" or "u v w" per line,
// '#' starts a comment, labels are remapped to dense ids in order of first
// appearance. A reversed line "v u w" after "u v w" supplies the weight of
// the second orientation; it is only accepted when both lines carry explicit
// weights, otherwise it is a duplicate edge.
Graph load_edge_list(std::string_view text);
Graph load_edge_list_file(const std::filesystem::path& path);

// Endpoints of a greedy maximal matching taken in edge order. A vertex
// cover at most twice the size of a minimum one.
NodeSet vertex_cover_matching(const Graph& g);

bool is_vertex_cover(const Graph& g, const NodeSet& a);
bool is_one_dominant(const Graph& g, const NodeSet& a);

// Connected components of the subgraph induced on V \ A, each listed in
// order of its smallest node.
std::vector<NodeSet> complement_components(const Graph& g, const NodeSet& a);

// Edges with both endpoints outside A.
std::size_t uncovered_edge_count(const Graph& g, const NodeSet& a);

// Edges with exactly one endpoint in A.
std::size_t boundary_edges(const Graph& g, const NodeSet& a);

// Nodes outside A with at least one neighbor in A.
NodeSet boundary_nodes(const Graph& g, const NodeSet& a);

}  // namespace stubborn
