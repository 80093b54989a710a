#include "stubborn/walk.hpp"

#include <cmath>

#include "stubborn/errors.hpp"

namespace stubborn {

std::string_view to_string(WalkKind kind) {
  switch (kind) {
    case WalkKind::kUniform: return "uniform";
    case WalkKind::kLazy: return "lazy";
    case WalkKind::kWeighted: return "weighted";
  }
  return "unknown";
}

WalkKind parse_walk_kind(std::string_view name) {
  if (name == "uniform") return WalkKind::kUniform;
  if (name == "lazy") return WalkKind::kLazy;
  if (name == "weighted") return WalkKind::kWeighted;
  throw InputError("unknown walk kind '" + std::string(name) + "'");
}

WalkMatrix::WalkMatrix(const Graph& g, WalkKind kind)
    : graph_(&g), kind_(kind) {
  const auto n = static_cast<Eigen::Index>(g.node_count());
  p_ = Eigen::MatrixXd::Zero(n, n);
  for (NodeId i = 0; i < g.node_count(); ++i) {
    const auto& adj = g.neighbors(i);
    if (kind == WalkKind::kWeighted) {
      const double total = g.out_weight(i);
      for (const auto& nb : adj) p_(i, nb.id) = nb.weight / total;
    } else {
      const double step = 1.0 / static_cast<double>(adj.size());
      for (const auto& nb : adj) p_(i, nb.id) = step;
    }
  }
  if (kind == WalkKind::kLazy) {
    p_ *= 0.5;
    p_.diagonal().array() += 0.5;
  }
}

bool WalkMatrix::has_self_loops() const {
  return (p_.diagonal().array() != 0.0).any();
}

WalkMatrix build_walk(const Graph& g, WalkKind kind) { return WalkMatrix(g, kind); }

StationaryDist stationary(const WalkMatrix& w) {
  const Graph& g = w.graph();
  const auto n = static_cast<Eigen::Index>(g.node_count());
  StationaryDist out{Eigen::VectorXd(n)};
  if (w.kind() != WalkKind::kWeighted) {
    const double total = 2.0 * static_cast<double>(g.edge_count());
    for (Eigen::Index i = 0; i < n; ++i) {
      out.pi(i) = static_cast<double>(g.degree(static_cast<NodeId>(i))) / total;
    }
    return out;
  }

  // The lazy chain shares the stationary vector and is aperiodic.
  const Eigen::MatrixXd lazy_t =
      0.5 * (Eigen::MatrixXd::Identity(n, n) + w.matrix()).transpose();
  Eigen::VectorXd pi = Eigen::VectorXd::Constant(n, 1.0 / static_cast<double>(n));
  constexpr int kMaxSteps = 1'000'000;
  constexpr double kTol = 1e-12;
  double change = 0.0;
  for (int step = 0; step < kMaxSteps; ++step) {
    Eigen::VectorXd next = lazy_t * pi;
    next /= next.sum();
    change = (next - pi).cwiseAbs().maxCoeff();
    pi = std::move(next);
    if (change < kTol) {
      out.pi = pi;
      return out;
    }
  }
  throw NumericalError("stationary distribution did not converge; last change " +
                       std::to_string(change));
}

bool check_reversible(const WalkMatrix& w, const StationaryDist& pi, double tol) {
  const auto& p = w.matrix();
  const Eigen::Index n = p.rows();
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      if (std::abs(pi.pi(i) * p(i, j) - pi.pi(j) * p(j, i)) > tol) return false;
    }
  }
  return true;
}

}  // namespace stubborn
