#pragma once

// Fixtures and independent oracles shared by the unit and acceptance tests.
// Nothing here calls the LU-based solvers it is used to check.

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "stubborn/graph.hpp"
#include "stubborn/walk.hpp"

namespace stubborn::testing {

inline Graph p3() { return load_edge_list("0 1\n1 2\n"); }
inline Graph p4() { return load_edge_list("0 1\n1 2\n2 3\n"); }
inline Graph c4() { return load_edge_list("0 1\n1 2\n2 3\n3 0\n"); }
inline Graph k3() { return load_edge_list("0 1\n1 2\n2 0\n"); }
// Center 0 with leaves 1..4.
inline Graph star5() { return load_edge_list("0 1\n0 2\n0 3\n0 4\n"); }
// Triangle 1-2-3 with pendant 4 on node 3; labels 1..4 map to ids 0..3.
inline Graph triangle_pendant() { return load_edge_list("1 2\n2 3\n1 3\n3 4\n"); }

struct Named {
  std::string name;
  Graph graph;
};

inline std::vector<Named> canonical_graphs() {
  return {{"P3", p3()},   {"P4", p4()},     {"C4", c4()},
          {"K3", k3()},   {"star5", star5()}, {"triangle_pendant", triangle_pendant()}};
}

// Random spanning tree plus independent extra edges with probability p.
inline Graph random_connected(std::size_t n, double p, std::mt19937_64& rng) {
  std::vector<Edge> edges;
  std::vector<std::vector<bool>> has(n, std::vector<bool>(n, false));
  for (NodeId v = 1; v < n; ++v) {
    std::uniform_int_distribution<NodeId> parent(0, v - 1);
    const NodeId u = parent(rng);
    edges.push_back({u, v, 1.0, 1.0});
    has[u][v] = has[v][u] = true;
  }
  std::bernoulli_distribution extra(p);
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) {
      if (!has[u][v] && extra(rng)) edges.push_back({u, v, 1.0, 1.0});
    }
  }
  return Graph::from_edges(n, std::move(edges));
}

// Same as random_connected with symmetric weights drawn from [0.5, 3).
inline Graph random_weighted(std::size_t n, double p, std::mt19937_64& rng) {
  Graph base = random_connected(n, p, rng);
  std::uniform_real_distribution<double> wdist(0.5, 3.0);
  std::vector<Edge> edges = base.edges();
  for (auto& e : edges) e.weight_uv = e.weight_vu = wdist(rng);
  return Graph::from_edges(n, std::move(edges));
}

inline NodeSet random_subset(std::size_t n, std::size_t k, std::mt19937_64& rng) {
  std::vector<NodeId> ids(n);
  for (std::size_t i = 0; i < n; ++i) ids[i] = i;
  std::shuffle(ids.begin(), ids.end(), rng);
  ids.resize(k);
  return NodeSet(n, ids);
}

// Hitting times by fixed-point iteration h <- 1 + P h (h = 0 on A), stopped
// when the update is below tol. Indexed by node id.
inline std::vector<double> hitting_by_iteration(const WalkMatrix& w, const NodeSet& a,
                                                double tol = 1e-13) {
  const std::size_t n = w.size();
  std::vector<double> h(n, 0.0), next(n, 0.0);
  for (int it = 0; it < 50'000'000; ++it) {
    double change = 0.0;
    for (NodeId i = 0; i < n; ++i) {
      if (a.contains(i)) continue;
      double s = 1.0;
      for (NodeId j = 0; j < n; ++j) s += w(i, j) * h[j];
      next[i] = s;
      change = std::max(change, std::abs(s - h[i]));
    }
    std::swap(h, next);
    if (change < tol) break;
  }
  return h;
}

// Probability of reaching `target` before any other node of A, by iteration.
inline std::vector<double> absorption_by_iteration(const WalkMatrix& w, const NodeSet& a,
                                                   NodeId target, double tol = 1e-14) {
  const std::size_t n = w.size();
  std::vector<double> u(n, 0.0), next(n, 0.0);
  u[target] = next[target] = 1.0;
  for (int it = 0; it < 50'000'000; ++it) {
    double change = 0.0;
    for (NodeId i = 0; i < n; ++i) {
      if (a.contains(i)) continue;
      double s = 0.0;
      for (NodeId j = 0; j < n; ++j) s += w(i, j) * u[j];
      next[i] = s;
      change = std::max(change, std::abs(s - u[i]));
    }
    std::swap(u, next);
    if (change < tol) break;
  }
  return u;
}

struct MonteCarlo {
  double mean = 0.0;
  double stderr_ = 0.0;
};

// Simulated first hitting time of A from `start`.
inline MonteCarlo simulate_hitting(const WalkMatrix& w, const NodeSet& a, NodeId start,
                                   int walks, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const std::size_t n = w.size();
  double sum = 0.0, sum_sq = 0.0;
  for (int k = 0; k < walks; ++k) {
    NodeId x = start;
    long steps = 0;
    while (!a.contains(x)) {
      double r = unit(rng);
      NodeId next = n - 1;
      for (NodeId j = 0; j < n; ++j) {
        r -= w(x, j);
        if (r < 0.0) {
          next = j;
          break;
        }
      }
      x = next;
      ++steps;
    }
    sum += static_cast<double>(steps);
    sum_sq += static_cast<double>(steps) * static_cast<double>(steps);
  }
  const double mean = sum / walks;
  const double var = sum_sq / walks - mean * mean;
  return {mean, std::sqrt(var / walks)};
}

// All subsets of {0..n-1} as bit masks.
inline NodeSet from_mask(std::size_t n, unsigned mask) {
  NodeSet s(n);
  for (NodeId i = 0; i < n; ++i) {
    if (mask & (1u << i)) s.insert(i);
  }
  return s;
}

}  // namespace stubborn::testing
