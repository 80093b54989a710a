#pragma once

#include <Eigen/Dense>
#include <string>
#include <string_view>

#include "stubborn/graph.hpp"

namespace stubborn {

enum class WalkKind { kUniform, kLazy, kWeighted };

std::string_view to_string(WalkKind kind);
WalkKind parse_walk_kind(std::string_view name);

// Dense row-stochastic transition matrix over the nodes of a graph. The
// graph must outlive the walk.
class WalkMatrix {
 public:
  WalkMatrix(const Graph& g, WalkKind kind);

  const Graph& graph() const { return *graph_; }
  WalkKind kind() const { return kind_; }
  const Eigen::MatrixXd& matrix() const { return p_; }
  std::size_t size() const { return static_cast<std::size_t>(p_.rows()); }
  double operator()(NodeId i, NodeId j) const { return p_(i, j); }

  // Whether any state can stay put in one step.
  bool has_self_loops() const;

 private:
  const Graph* graph_;
  WalkKind kind_;
  Eigen::MatrixXd p_;
};

WalkMatrix build_walk(const Graph& g, WalkKind kind);

struct StationaryDist {
  Eigen::VectorXd pi;
};

// Degree formula for the uniform and lazy walks; power iteration on the lazy
// version of the chain otherwise (tolerance 1e-12, at most 10^6 steps).
StationaryDist stationary(const WalkMatrix& w);

// Detailed balance pi(i) P(i,j) = pi(j) P(j,i) within tol.
bool check_reversible(const WalkMatrix& w, const StationaryDist& pi, double tol = 1e-9);

}  // namespace stubborn
