#include "stubborn/hitting.hpp"

#include <cmath>
#include <string>

#include "stubborn/errors.hpp"

namespace stubborn {

namespace detail {

std::vector<NodeId> outside(const NodeSet& a) { return a.complement().members(); }

Eigen::MatrixXd block(const Eigen::MatrixXd& p, const std::vector<NodeId>& rows,
                      const std::vector<NodeId>& cols) {
  Eigen::MatrixXd out(rows.size(), cols.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < cols.size(); ++c) {
      out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          p(static_cast<Eigen::Index>(rows[r]), static_cast<Eigen::Index>(cols[c]));
    }
  }
  return out;
}

void require_proper_target(const WalkMatrix& w, const NodeSet& a) {
  if (a.universe() != w.size()) throw InputError("node set universe does not match walk");
  if (a.empty()) throw InputError("empty target set");
  if (a.is_full()) throw InputError("target set covers every node");
}

}  // namespace detail

namespace {

Eigen::PartialPivLU<Eigen::MatrixXd> grounded_lu(const WalkMatrix& w,
                                                 const std::vector<NodeId>& transient) {
  const auto m = static_cast<Eigen::Index>(transient.size());
  Eigen::MatrixXd lap = Eigen::MatrixXd::Identity(m, m) -
                        detail::block(w.matrix(), transient, transient);
  return Eigen::PartialPivLU<Eigen::MatrixXd>(lap);
}

}  // namespace

double HittingProfile::at(NodeId v) const {
  if (target.contains(v)) return 0.0;
  for (std::size_t k = 0; k < transient.size(); ++k) {
    if (transient[k] == v) return h(static_cast<Eigen::Index>(k));
  }
  throw InputError("node " + std::to_string(v) + " outside profile");
}

HittingProfile hitting_times(const WalkMatrix& w, const NodeSet& a) {
  if (a.universe() != w.size()) throw InputError("node set universe does not match walk");
  if (a.empty()) throw InputError("empty target set");
  HittingProfile out{a, detail::outside(a), Eigen::VectorXd(), 0.0};
  if (out.transient.empty()) return out;

  const auto m = static_cast<Eigen::Index>(out.transient.size());
  const Eigen::MatrixXd q = detail::block(w.matrix(), out.transient, out.transient);
  const Eigen::MatrixXd lap = Eigen::MatrixXd::Identity(m, m) - q;
  const Eigen::VectorXd ones = Eigen::VectorXd::Ones(m);
  out.h = Eigen::PartialPivLU<Eigen::MatrixXd>(lap).solve(ones);

  const double residual = (lap * out.h - ones).cwiseAbs().maxCoeff();
  const double scale = std::max(1.0, out.h.cwiseAbs().maxCoeff());
  if (!std::isfinite(residual) || residual > 1e-9 * scale) {
    throw NumericalError("hitting-time solve residual " + std::to_string(residual));
  }
  out.F = out.h.sum();
  return out;
}

double f_value(const WalkMatrix& w, const NodeSet& a) { return hitting_times(w, a).F; }

FundamentalMatrix fundamental_matrix(const WalkMatrix& w, const NodeSet& a) {
  detail::require_proper_target(w, a);
  FundamentalMatrix out{detail::outside(a), {}};
  const auto m = static_cast<Eigen::Index>(out.transient.size());
  out.gamma = grounded_lu(w, out.transient).solve(Eigen::MatrixXd::Identity(m, m));
  if (!out.gamma.allFinite()) throw NumericalError("grounded Laplacian is singular");
  return out;
}

AbsorptionMatrix absorption_matrix(const WalkMatrix& w, const NodeSet& a) {
  detail::require_proper_target(w, a);
  AbsorptionMatrix out{detail::outside(a), a.members(), {}};
  const Eigen::MatrixXd r = detail::block(w.matrix(), out.transient, out.absorbing);
  out.probs = grounded_lu(w, out.transient).solve(r);
  if (!out.probs.allFinite()) throw NumericalError("grounded Laplacian is singular");
  return out;
}

QuasiStationary quasi_stationary(const WalkMatrix& w, const NodeSet& a, double tol,
                                 int max_iterations) {
  detail::require_proper_target(w, a);
  QuasiStationary out;
  out.transient = detail::outside(a);
  const auto m = static_cast<Eigen::Index>(out.transient.size());
  const Eigen::MatrixXd qt = detail::block(w.matrix(), out.transient, out.transient).transpose();

  Eigen::VectorXd nu = Eigen::VectorXd::Constant(m, 1.0 / static_cast<double>(m));
  double residual = 0.0;
  for (int it = 0; it <= max_iterations; ++it) {
    const Eigen::VectorXd nu_q = qt * nu;
    const double lambda = nu_q.sum();
    residual = (nu_q - lambda * nu).cwiseAbs().sum();
    if (residual < tol) {
      out.lambda = lambda;
      out.nu = nu;
      out.iterations = it;
      return out;
    }
    nu = 0.5 * (nu + nu_q);
    nu /= nu.sum();
  }
  throw NumericalError("quasi-stationary iteration did not converge; residual " +
                       std::to_string(residual));
}

}  // namespace stubborn
