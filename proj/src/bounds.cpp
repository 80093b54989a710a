#include "stubborn/bounds.hpp"

#include <algorithm>
#include <string>

#include "stubborn/errors.hpp"
#include "stubborn/hitting.hpp"
#include "stubborn/parallel.hpp"

namespace stubborn {

namespace {

void require_reversible(const WalkMatrix& w, const StationaryDist& pi) {
  if (!check_reversible(w, pi)) {
    throw InputError("walk is not reversible; the bottleneck-ratio bounds need detailed balance");
  }
}

// Index of each node within the transient list, or -1 for nodes in A.
std::vector<long> position_map(std::size_t n, const std::vector<NodeId>& transient) {
  std::vector<long> pos(n, -1);
  for (std::size_t k = 0; k < transient.size(); ++k) pos[transient[k]] = static_cast<long>(k);
  return pos;
}

}  // namespace

double bottleneck_ratio(const WalkMatrix& w, const StationaryDist& pi, const NodeSet& b) {
  if (b.universe() != w.size()) throw InputError("node set universe does not match walk");
  if (b.empty() || b.is_full()) throw InputError("bottleneck ratio needs a proper nonempty set");
  const auto& p = w.matrix();
  double flow = 0.0;
  double mass = 0.0;
  for (NodeId x : b.members()) {
    const auto xi = static_cast<Eigen::Index>(x);
    mass += pi.pi(xi);
    for (const auto& nb : w.graph().neighbors(x)) {
      if (!b.contains(nb.id)) flow += pi.pi(xi) * p(xi, static_cast<Eigen::Index>(nb.id));
    }
  }
  return flow / mass;
}

PsiDistribution psi_distribution(const WalkMatrix& w, const StationaryDist& pi,
                                 const NodeSet& a) {
  detail::require_proper_target(w, a);
  require_reversible(w, pi);
  PsiDistribution out{detail::outside(a), {}};
  out.psi = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(out.transient.size()));
  const auto& p = w.matrix();
  for (std::size_t k = 0; k < out.transient.size(); ++k) {
    const NodeId y = out.transient[k];
    double inflow = 0.0;
    for (const auto& nb : w.graph().neighbors(y)) {
      if (a.contains(nb.id)) {
        const auto ai = static_cast<Eigen::Index>(nb.id);
        inflow += pi.pi(ai) * p(ai, static_cast<Eigen::Index>(y));
      }
    }
    out.psi(static_cast<Eigen::Index>(k)) = inflow;
  }
  out.psi /= out.psi.sum();
  return out;
}

BasuCheck basu_identity_check(const WalkMatrix& w, const StationaryDist& pi,
                              const NodeSet& a) {
  const PsiDistribution psi = psi_distribution(w, pi, a);
  const HittingProfile hp = hitting_times(w, a);
  return {psi.psi.dot(hp.h), 1.0 / bottleneck_ratio(w, pi, a.complement())};
}

double sigma_star(const WalkMatrix& w, const NodeSet& a) {
  if (a.universe() != w.size()) throw InputError("node set universe does not match walk");
  if (a.empty()) throw InputError("empty target set");
  const auto& p = w.matrix();
  const std::vector<NodeId> transient = detail::outside(a);
  double best = 0.0;
  for (NodeId j : transient) {
    double stay = 0.0;
    for (NodeId k : transient) {
      stay += p(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(k));
    }
    best = std::max(best, stay);
  }
  return best;
}

double bound_one_dominant(const WalkMatrix& w, const NodeSet& a) {
  if (!is_one_dominant(w.graph(), a)) {
    throw InputError("the dominance bound requires a one-dominant set");
  }
  const double free_nodes = static_cast<double>(a.universe() - a.size());
  return free_nodes / (1.0 - sigma_star(w, a));
}

double bound_degree(const Graph& g, const NodeSet& a) {
  if (!is_one_dominant(g, a)) {
    throw InputError("the degree bound requires a one-dominant set");
  }
  return static_cast<double>(a.universe() - a.size()) * static_cast<double>(g.max_degree());
}

Accessibility accessibility(const WalkMatrix& w, const StationaryDist& pi, const NodeSet& a) {
  const PsiDistribution psi = psi_distribution(w, pi, a);
  const Graph& g = w.graph();
  Accessibility out{psi.transient, Eigen::VectorXd::Zero(psi.psi.size())};
  const auto pos = position_map(g.node_count(), psi.transient);

  parallel_for(psi.transient.size(), [&](std::size_t k) {
    const NodeId i = psi.transient[k];
    const double own = psi.psi(static_cast<Eigen::Index>(k));
    const auto& adj = g.neighbors(i);
    const bool isolated = std::none_of(adj.begin(), adj.end(),
                                       [&](const Neighbor& nb) { return !a.contains(nb.id); });
    if (isolated) {
      out.d(static_cast<Eigen::Index>(k)) = own;
      return;
    }
    const NodeSet target = a.with(i);
    const AbsorptionMatrix abs = absorption_matrix(w, target);
    Eigen::Index col = 0;
    while (abs.absorbing[static_cast<std::size_t>(col)] != i) ++col;
    double total = own;
    for (std::size_t r = 0; r < abs.transient.size(); ++r) {
      const double weight = psi.psi(pos[abs.transient[r]]);
      if (weight > 0.0) total += weight * abs.probs(static_cast<Eigen::Index>(r), col);
    }
    out.d(static_cast<Eigen::Index>(k)) = total;
  });
  return out;
}

namespace {

double general_from_parts(const NodeSet& a, double phi, std::size_t uncovered,
                          const Accessibility& acc) {
  const double free_nodes = static_cast<double>(a.universe() - a.size());
  if (uncovered == 0) return free_nodes;
  return free_nodes + (1.0 / phi) * static_cast<double>(uncovered) * acc.d.cwiseInverse().sum();
}

void require_no_self_loops(const WalkMatrix& w) {
  if (w.has_self_loops()) {
    throw InputError("the uncovered-edge bound does not apply to walks with self-loops (" +
                     std::string(to_string(w.kind())) + ")");
  }
}

}  // namespace

double bound_general(const WalkMatrix& w, const StationaryDist& pi, const NodeSet& a) {
  require_no_self_loops(w);
  const Accessibility acc = accessibility(w, pi, a);
  return general_from_parts(a, bottleneck_ratio(w, pi, a.complement()),
                            uncovered_edge_count(w.graph(), a), acc);
}

double surrogate(const Graph& g, const NodeSet& a) {
  if (a.universe() != g.node_count()) throw InputError("node set universe does not match graph");
  if (a.empty() || a.is_full()) throw InputError("surrogate needs a proper nonempty set");
  double degree_sum = 0.0;
  for (NodeId b : detail::outside(a)) degree_sum += static_cast<double>(g.degree(b));
  const auto cut = static_cast<double>(boundary_edges(g, a));
  return 1.0 + (degree_sum / cut) * static_cast<double>(uncovered_edge_count(g, a));
}

double nu_star(const WalkMatrix& w, const NodeSet& a, std::size_t cover_size, double f_max) {
  if (!is_one_dominant(w.graph(), a)) throw InputError("nu* requires a one-dominant set");
  if (a.size() >= cover_size) throw InputError("nu* requires |A| below the cover size");
  const double sigma = sigma_star(w, a);
  if (sigma >= 1.0) throw InputError("nu* requires sigma* < 1");
  const double n = static_cast<double>(a.universe());
  const double f_min = n - static_cast<double>(cover_size);
  const double dominant = (n - static_cast<double>(a.size())) / (1.0 - sigma);
  return 1.0 - (dominant - f_min) / (f_max - f_min);
}

BoundReport bound_report(const WalkMatrix& w, const NodeSet& a) {
  detail::require_proper_target(w, a);
  const Graph& g = w.graph();
  const StationaryDist pi = stationary(w);
  BoundReport r;
  r.phi = bottleneck_ratio(w, pi, a.complement());
  r.uncovered = uncovered_edge_count(g, a);
  r.sigma_star = sigma_star(w, a);
  r.d = accessibility(w, pi, a);
  if (is_one_dominant(g, a)) {
    r.bound_dominant = bound_one_dominant(w, a);
    if (w.kind() == WalkKind::kUniform) r.bound_degree = bound_degree(g, a);
  }
  if (!w.has_self_loops()) r.bound_general = general_from_parts(a, r.phi, r.uncovered, r.d);
  if (w.kind() == WalkKind::kUniform) r.surrogate = surrogate(g, a);
  return r;
}

}  // namespace stubborn
