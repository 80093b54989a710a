#pragma once

#include <Eigen/Dense>
#include <optional>
#include <vector>

#include "stubborn/graph.hpp"
#include "stubborn/walk.hpp"

namespace stubborn {

// Bottleneck ratio of B: stationary flow out of B over the stationary mass
// of B. For the uniform walk this is |dB| / sum of degrees in B.
double bottleneck_ratio(const WalkMatrix& w, const StationaryDist& pi, const NodeSet& b);

// Landing distribution on B = V \ A of a stationary walk that was in A one
// step earlier. Indexed like `transient`; supported on the nodes of B
// adjacent to A.
struct PsiDistribution {
  std::vector<NodeId> transient;
  Eigen::VectorXd psi;
};

// Requires a reversible chain.
PsiDistribution psi_distribution(const WalkMatrix& w, const StationaryDist& pi,
                                 const NodeSet& a);

// For a reversible chain E_psi[T_A] equals 1 / Phi(V \ A).
struct BasuCheck {
  double lhs = 0.0;  // sum_y psi(y) h(y, A)
  double rhs = 0.0;  // 1 / Phi(V \ A)
};

BasuCheck basu_identity_check(const WalkMatrix& w, const StationaryDist& pi,
                              const NodeSet& a);

// Largest probability, over nodes outside A, of a step that stays outside A.
double sigma_star(const WalkMatrix& w, const NodeSet& a);

// (N - |A|) / (1 - sigma*). A must be one-dominant.
double bound_one_dominant(const WalkMatrix& w, const NodeSet& a);

// (N - |A|) * max degree, valid for the uniform walk and one-dominant A.
double bound_degree(const Graph& g, const NodeSet& a);

// d(i, A) = sum over boundary nodes b of psi(b) * P_b[reach i before A].
struct Accessibility {
  std::vector<NodeId> transient;
  Eigen::VectorXd d;
};

// One absorption solve per node outside A (target A + {i}), run in
// parallel. Nodes forming a singleton component of V \ A get d = psi(i)
// without a solve. Requires a reversible chain.
Accessibility accessibility(const WalkMatrix& w, const StationaryDist& pi, const NodeSet& a);

// N - |A| + (1 / Phi(B)) * #uncovered * sum_i 1 / d(i, A).
// Needs a reversible chain without self-loops: the bound counts uncovered
// edge crossings, and a holding step crosses no edge.
double bound_general(const WalkMatrix& w, const StationaryDist& pi, const NodeSet& a);

// 1 + (sum of degrees outside A / |dA|) * #uncovered. Uniform-walk only.
double surrogate(const Graph& g, const NodeSet& a);

// Level nu* such that a one-dominant A with |A| < cover_size lies in the
// near-optimal class L_{nu*, C}.
double nu_star(const WalkMatrix& w, const NodeSet& a, std::size_t cover_size, double f_max);

struct BoundReport {
  double phi = 0.0;
  std::size_t uncovered = 0;
  double sigma_star = 0.0;
  Accessibility d;
  std::optional<double> bound_dominant;  // present when A is one-dominant
  std::optional<double> bound_general;  // absent for walks with self-loops
  std::optional<double> bound_degree;  // uniform walk and one-dominant A
  std::optional<double> surrogate;     // uniform walk only
};

BoundReport bound_report(const WalkMatrix& w, const NodeSet& a);

}  // namespace stubborn
