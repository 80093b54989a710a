#include "stubborn/sim.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <random>

#include "stubborn/errors.hpp"
#include "stubborn/hitting.hpp"
#include "stubborn/parallel.hpp"
#include "stubborn/stats.hpp"

namespace stubborn {

namespace {

double fit_rate(const std::vector<double>& errors, double floor) {
  auto fit = [&](std::size_t from) -> std::optional<double> {
    double st = 0, sy = 0, stt = 0, sty = 0, count = 0;
    for (std::size_t t = from; t < errors.size(); ++t) {
      if (!(errors[t] > floor)) continue;
      const double y = std::log(errors[t]);
      const auto x = static_cast<double>(t);
      st += x;
      sy += y;
      stt += x * x;
      sty += x * y;
      count += 1;
    }
    if (count < 2) return std::nullopt;
    const double denom = count * stt - st * st;
    if (denom == 0.0) return std::nullopt;
    return std::exp((count * sty - st * sy) / denom);
  };
  if (auto r = fit(errors.size() / 2)) return *r;
  if (auto r = fit(0)) return *r;
  return 0.0;
}

}  // namespace

ConsensusTrace simulate(const WalkMatrix& w, const NodeSet& a, const Eigen::VectorXd& x0,
                        int steps) {
  if (steps <= 0) throw InputError("steps must be positive");
  if (a.universe() != w.size()) throw InputError("node set universe does not match walk");
  if (a.empty()) throw InputError("stubborn set is empty");
  if (static_cast<std::size_t>(x0.size()) != w.size()) {
    throw InputError("initial state has the wrong length");
  }
  if (!x0.allFinite()) throw InputError("initial state must be finite");
  const auto members = a.members();
  const double c = x0(static_cast<Eigen::Index>(members.front()));
  for (NodeId s : members) {
    if (x0(static_cast<Eigen::Index>(s)) != c) {
      throw InputError("stubborn nodes must share one initial value");
    }
  }

  ConsensusTrace tr{a, c, x0, x0, {}, 0.0};
  tr.errors.reserve(static_cast<std::size_t>(steps) + 1);
  auto error = [&](const Eigen::VectorXd& x) { return (x.array() - c).abs().maxCoeff(); };
  tr.errors.push_back(error(x0));

  Eigen::VectorXd x = x0;
  for (int t = 0; t < steps; ++t) {
    Eigen::VectorXd next = w.matrix() * x;
    for (NodeId s : members) next(static_cast<Eigen::Index>(s)) = x0(static_cast<Eigen::Index>(s));
    x = std::move(next);
    tr.errors.push_back(error(x));
  }
  tr.x_final = x;
  tr.empirical_rate = fit_rate(tr.errors, std::max(1e-290, 1e-13 * std::abs(c)));
  return tr;
}

Eigen::VectorXd random_initial_state(const NodeSet& a, double c, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  Eigen::VectorXd x(static_cast<Eigen::Index>(a.universe()));
  for (NodeId i = 0; i < a.universe(); ++i) {
    x(static_cast<Eigen::Index>(i)) = a.contains(i) ? c : unit(rng);
  }
  return x;
}

RateReport rate_vs_f_report(const WalkMatrix& w, const std::vector<NodeSet>& candidates,
                            int steps, std::uint64_t seed) {
  RateReport rep;
  if (candidates.empty()) return rep;
  const std::size_t size = candidates.front().size();
  for (const auto& c : candidates) {
    if (c.size() != size) throw InputError("candidates must share one cardinality");
  }
  rep.rows.resize(candidates.size());
  parallel_for(candidates.size(), [&](std::size_t i) {
    const NodeSet& a = candidates[i];
    RateRow& row = rep.rows[i];
    row.set = a;
    row.f = f_value(w, a);
    row.lambda = a.is_full() ? 0.0 : quasi_stationary(w, a).lambda;
    row.empirical_rate = simulate(w, a, random_initial_state(a, 0.0, seed), steps).empirical_rate;
  });
  std::stable_sort(rep.rows.begin(), rep.rows.end(), [](const RateRow& x, const RateRow& y) {
    if (x.f != y.f) return x.f < y.f;
    return x.set < y.set;
  });
  std::vector<double> fs, lambdas;
  for (const auto& r : rep.rows) {
    fs.push_back(r.f);
    lambdas.push_back(r.lambda);
  }
  rep.spearman_f_lambda = spearman(fs, lambdas);
  return rep;
}

}  // namespace stubborn
