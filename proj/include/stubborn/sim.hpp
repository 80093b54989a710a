#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "stubborn/walk.hpp"

namespace stubborn {

// DeGroot averaging with the nodes of A held at a shared value c.
struct ConsensusTrace {
  NodeSet stubborn;
  double stubborn_value = 0.0;
  Eigen::VectorXd x0;
  Eigen::VectorXd x_final;
  std::vector<double> errors;  // errors[t] = max_i |x_t(i) - c|, t = 0..steps
  double empirical_rate = 0.0;
};

// x_{t+1}(i) = sum_j P(i,j) x_t(j) off A, x_{t+1}(i) = x_0(i) on A. All
// entries of x0 on A must be equal. The rate is exp of the least-squares
// slope of log errors over the second half of the run.
ConsensusTrace simulate(const WalkMatrix& w, const NodeSet& a, const Eigen::VectorXd& x0,
                        int steps);

// c on A, uniform [0, 1) elsewhere.
Eigen::VectorXd random_initial_state(const NodeSet& a, double c, std::uint64_t seed);

struct RateRow {
  NodeSet set;
  double f = 0.0;
  double lambda = 0.0;
  double empirical_rate = 0.0;
};

struct RateReport {
  std::vector<RateRow> rows;  // ascending F
  double spearman_f_lambda = 0.0;
};

// Candidates must share one cardinality. Each run uses c = 0 and a seeded
// random start.
RateReport rate_vs_f_report(const WalkMatrix& w, const std::vector<NodeSet>& candidates,
                            int steps, std::uint64_t seed = 1);

}  // namespace stubborn
