#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "stubborn/errors.hpp"
#include "stubborn/node_set.hpp"
#include "stubborn/walk.hpp"

namespace stubborn {

// Calibration of the rank r(A) = (F_max - F(A)) / (F_max - F_min) against a
// reference vertex cover of size C. F_min = F(cover); F_max is the largest
// singleton value.
class RankContext {
 public:
  // Throws InputError if `cover` is not a vertex cover or F_max <= F_min.
  static RankContext build(const WalkMatrix& w, NodeSet cover);

  const NodeSet& cover() const { return cover_; }
  std::size_t cover_size() const { return cover_.size(); }
  double f_min() const { return f_min_; }
  double f_max() const { return f_max_; }
  const std::vector<double>& singleton_f() const { return singleton_f_; }
  // Lowest-id singleton with the smallest F.
  NodeId best_singleton() const;

  double rank(double f) const { return (f_max_ - f) / (f_max_ - f_min_); }

 private:
  NodeSet cover_;
  double f_min_ = 0.0;
  double f_max_ = 0.0;
  std::vector<double> singleton_f_;
};

struct ScoredSet {
  NodeSet set;
  double f = 0.0;
  double rank = 0.0;
};

// Raised when no m-set reaches the requested level. Carries the best level
// that is reachable at that cardinality.
class EmptyStarterClass : public InputError {
 public:
  EmptyStarterClass(double requested, double achievable, std::size_t m);
  double achievable_nu() const { return achievable_; }

 private:
  double achievable_;
};

// All m-sets (m in {1, 2}) with rank >= nu, best first (ascending F, then
// lexicographic), truncated to `cap`.
std::vector<ScoredSet> build_starter_class(const WalkMatrix& w, const RankContext& ctx,
                                           double nu, std::size_t m, std::size_t cap);

struct Extension {
  NodeSet start;
  NodeSet set;
  std::vector<NodeId> added;
  std::vector<double> f_after;  // F after each addition
  double f = 0.0;
};

// Adds, one node at a time, the node minimising F of the enlarged set
// (lowest id on ties) until the set has k nodes.
Extension greedy_extend(const WalkMatrix& w, const NodeSet& start, std::size_t k);

struct OptimizerConfig {
  std::size_t k = 1;
  double nu = 0.5;
  std::size_t m = 1;
  std::size_t starter_cap = 64;
  // F(empty) is estimated from all node pairs; skipped above this size.
  std::size_t f_empty_max_nodes = 200;
};

struct OptimizeResult {
  NodeSet offered;
  double f_offered = 0.0;
  double rank = 0.0;
  NodeSet greedy_set;
  double f_greedy = 0.0;
  std::optional<double> f_empty_lower_estimate;
  std::optional<double> rho_offered;
  std::optional<double> rho_greedy;
  std::optional<double> chi;
  std::vector<ScoredSet> starters;
  std::vector<Extension> trace;  // one per starter, same order
};

// Greedy extension of every starter; the classic greedy prefix of size m is
// always added to the starter class, so f_offered <= f_greedy.
OptimizeResult optimize(const WalkMatrix& w, const RankContext& ctx, const OptimizerConfig& cfg);

struct BruteForceResult {
  NodeSet set;
  double f = 0.0;
};

inline constexpr double kBruteForceLimit = 1e6;

double binomial(std::size_t n, std::size_t k);

// Exact minimiser of F over all k-subsets, lexicographically first among
// ties. Refuses when C(N, k) exceeds kBruteForceLimit.
BruteForceResult brute_force_optimal(const WalkMatrix& w, std::size_t k);

// max over distinct x, y of F({x}) + F({y}) - F({x, y}), clamped below by
// F_max. A lower estimate of the supermodular extension of F to the empty set.
double estimate_f_empty(const WalkMatrix& w, const RankContext& ctx);

// rho(A) = r(A) - r(empty) = (f_empty - F(A)) / (F_max - F_min).
double rho_normalized(const RankContext& ctx, double f_empty, double f);

// chi with rho_offered = (1 + chi) * rho_greedy; absent when rho_greedy = 0.
std::optional<double> improvement_chi(double rho_offered, double rho_greedy);

// Lower bound delta / (1 - delta) on chi, delta = 1 - rho_greedy / eta, given
// some extension S with rho(S) >= eta > rho_greedy.
double chi_lower_bound(double eta, double rho_greedy);

}  // namespace stubborn
