#pragma once

#include <Eigen/Dense>
#include <vector>

#include "stubborn/node_set.hpp"
#include "stubborn/walk.hpp"

namespace stubborn {

// Expected first hitting times of a target set A from every node outside it.
struct HittingProfile {
  NodeSet target;
  std::vector<NodeId> transient;  // V \ A in increasing order
  Eigen::VectorXd h;              // h[k] = E_{transient[k]}[T_A]
  double F = 0.0;                 // sum of h

  // Hitting time from v, 0 for v in A.
  double at(NodeId v) const;
};

// Solves (I - Q) h = 1 where Q is P restricted to V \ A. A must be nonempty;
// A = V gives F = 0 with an empty profile.
HittingProfile hitting_times(const WalkMatrix& w, const NodeSet& a);

// Sum of the expected hitting times of A over all starts outside A.
double f_value(const WalkMatrix& w, const NodeSet& a);

// gamma(i, j) = expected visits to j before T_A starting from i, counting
// the visit at time 0, so that gamma * 1 = h.
struct FundamentalMatrix {
  std::vector<NodeId> transient;
  Eigen::MatrixXd gamma;
};

FundamentalMatrix fundamental_matrix(const WalkMatrix& w, const NodeSet& a);

// probs(b, s) = probability that the walk from transient[b] first enters A
// at absorbing[s].
struct AbsorptionMatrix {
  std::vector<NodeId> transient;
  std::vector<NodeId> absorbing;
  Eigen::MatrixXd probs;
};

AbsorptionMatrix absorption_matrix(const WalkMatrix& w, const NodeSet& a);

// Perron eigenvalue of Q and its left eigenvector normalised to sum 1 (the
// quasi-stationary distribution). Found by power iteration on (I + Q) / 2,
// which has the same Perron vector and no competing eigenvalue of equal
// modulus; stops once ||nu Q - lambda nu||_1 < tol.
struct QuasiStationary {
  std::vector<NodeId> transient;
  double lambda = 0.0;
  Eigen::VectorXd nu;
  int iterations = 0;
};

QuasiStationary quasi_stationary(const WalkMatrix& w, const NodeSet& a,
                                 double tol = 1e-13, int max_iterations = 1'000'000);

namespace detail {

std::vector<NodeId> outside(const NodeSet& a);
Eigen::MatrixXd block(const Eigen::MatrixXd& p, const std::vector<NodeId>& rows,
                      const std::vector<NodeId>& cols);
void require_proper_target(const WalkMatrix& w, const NodeSet& a);

}  // namespace detail

}  // namespace stubborn
