#include "scp/eval/sem_fit.hpp"

#include <Eigen/Dense>

#include <cmath>

namespace scp {

namespace {

// log|M| and M^-1 via LDLT; rejects non-positive-definite input.
double log_det_pd(const Eigen::MatrixXd& m, const char* what) {
  Eigen::LLT<Eigen::MatrixXd> llt(m);
  if (llt.info() != Eigen::Success)
    throw NumericalError(std::string(what) +
                         " is not positive definite in SEM fit");
  const Eigen::MatrixXd& L = llt.matrixL();
  double ld = 0.0;
  for (int i = 0; i < m.rows(); ++i) ld += 2.0 * std::log(L(i, i));
  return ld;
}

double ml_discrepancy(const Eigen::MatrixXd& sample,
                      const Eigen::MatrixXd& implied, double log_det_sample) {
  const int d = static_cast<int>(sample.rows());
  const double log_det_implied = log_det_pd(implied, "implied covariance");
  const double trace =
      (implied.ldlt().solve(sample)).trace();
  return log_det_implied + trace - log_det_sample - d;
}

}  // namespace

SemFit fit_sem(const Dataset& data, const CausalGraph& g) {
  const int d = data.d();
  const int n = data.n();
  if (g.dim() != d)
    throw ValidationError("graph dimension does not match dataset");
  if (g.has_directed_cycle())
    throw ValidationError("fit_sem requires a DAG");

  // Centered data; covariance with the ML divisor n so a saturated model
  // reproduces it exactly.
  Eigen::MatrixXd x = data.values;
  for (int j = 0; j < d; ++j) x.col(j).array() -= x.col(j).mean();
  const Eigen::MatrixXd sample = (x.transpose() * x) / n;

  int edge_count = 0;
  Eigen::MatrixXd b = Eigen::MatrixXd::Zero(d, d);
  Eigen::VectorXd psi(d);
  for (int i = 0; i < d; ++i) {
    std::vector<int> parents;
    for (int j = 0; j < d; ++j)
      if (g.adjacency(i, j)) parents.push_back(j);
    edge_count += static_cast<int>(parents.size());

    if (parents.empty()) {
      psi(i) = sample(i, i);
      continue;
    }
    Eigen::MatrixXd xp(n, parents.size());
    for (std::size_t k = 0; k < parents.size(); ++k)
      xp.col(static_cast<int>(k)) = x.col(parents[k]);
    const Eigen::MatrixXd gram = xp.transpose() * xp;
    Eigen::FullPivLU<Eigen::MatrixXd> lu(gram);
    if (!lu.isInvertible())
      throw NumericalError("rank-deficient regression for variable '" +
                           g.names[i] + "' in SEM fit");
    const Eigen::VectorXd beta = lu.solve(xp.transpose() * x.col(i));
    for (std::size_t k = 0; k < parents.size(); ++k)
      b(i, parents[k]) = beta(static_cast<int>(k));
    const Eigen::VectorXd resid = x.col(i) - xp * beta;
    psi(i) = resid.squaredNorm() / n;
  }

  const int free_params = edge_count + d;
  const int moments = d * (d + 1) / 2;
  if (free_params > moments)
    throw ValidationError("model has more free parameters than covariance "
                          "moments");
  if (n <= free_params)
    throw ValidationError("sample size must exceed the free parameter count");

  const Eigen::MatrixXd imb = Eigen::MatrixXd::Identity(d, d) - b;
  const Eigen::MatrixXd imb_inv = imb.inverse();
  const Eigen::MatrixXd implied =
      imb_inv * psi.asDiagonal() * imb_inv.transpose();

  const double log_det_sample = log_det_pd(sample, "sample covariance");

  SemFit fit;
  fit.free_params = free_params;
  fit.df = moments - free_params;
  const double f_ml =
      std::max(ml_discrepancy(sample, implied, log_det_sample), 0.0);
  fit.chi2 = (n - 1) * f_ml;

  // Independence baseline for CFI.
  const Eigen::MatrixXd baseline =
      Eigen::MatrixXd(sample.diagonal().asDiagonal());
  const double chi2_b =
      (n - 1) * std::max(ml_discrepancy(sample, baseline, log_det_sample), 0.0);
  const int df_b = moments - d;

  const double excess_m = std::max(fit.chi2 - fit.df, 0.0);
  const double denom = std::max({chi2_b - df_b, fit.chi2 - fit.df, 0.0});
  fit.cfi = denom > 0.0 ? 1.0 - excess_m / denom : 1.0;
  fit.cfi = std::clamp(fit.cfi, 0.0, 1.0);
  fit.rmsea = fit.df > 0 ? std::sqrt(excess_m / (fit.df * (n - 1))) : 0.0;

  const double trace = implied.ldlt().solve(sample).trace();
  fit.loglik = -0.5 * n *
               (log_det_pd(implied, "implied covariance") + trace +
                d * std::log(2.0 * M_PI));
  fit.bic = -2.0 * fit.loglik + free_params * std::log(static_cast<double>(n));
  return fit;
}

}  // namespace scp
