#include "pielm/weighted_gmm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "pielm/kernels.hpp"

namespace pielm {

namespace {
constexpr double kLogTwoPi = 1.8378770664093454836;

double point_span(const WeightedDataset& data) {
  auto [lo, hi] = std::minmax_element(data.points.begin(), data.points.end());
  return *hi - *lo;
}
}  // namespace

void GmmParams::validate() const {
  const std::size_t k = mixing.size();
  if (k == 0 || means.size() != k || variances.size() != k)
    throw std::invalid_argument("GmmParams: inconsistent component counts");
  double total = 0.0;
  for (double p : mixing) {
    if (p < 0.0) throw std::invalid_argument("GmmParams: negative mixing weight");
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-12)
    throw std::invalid_argument("GmmParams: mixing weights must sum to 1");
  for (double v : variances)
    if (!(v > 0.0))
      throw std::invalid_argument("GmmParams: variances must be positive");
}

double WeightedDataset::total_weight() const {
  double total = 0.0;
  for (double w : weights) total += w;
  return total;
}

void WeightedDataset::validate() const {
  if (points.empty() || points.size() != weights.size())
    throw std::invalid_argument("WeightedDataset: mismatched or empty data");
  for (double w : weights)
    if (!(w >= 0.0))
      throw std::invalid_argument("WeightedDataset: weights must be >= 0");
  if (!(total_weight() > 0.0))
    throw std::invalid_argument("WeightedDataset: total weight must be > 0");
}

Eigen::MatrixXd e_step(const WeightedDataset& data, const GmmParams& params) {
  params.validate();
  Eigen::MatrixXd resp(static_cast<Eigen::Index>(data.points.size()),
                       params.components());
  kernels::responsibilities(data.points, params.mixing, params.means,
                            params.variances, resp);
  return resp;
}

GmmParams m_step(const WeightedDataset& data, const Eigen::MatrixXd& resp,
                 double var_floor) {
  const std::size_t n = data.points.size();
  const int k = static_cast<int>(resp.cols());
  if (resp.rows() != static_cast<Eigen::Index>(n))
    throw std::invalid_argument("m_step: responsibility shape mismatch");

  const double total_weight = data.total_weight();
  GmmParams out;
  out.mixing.resize(static_cast<std::size_t>(k));
  out.means.resize(static_cast<std::size_t>(k));
  out.variances.resize(static_cast<std::size_t>(k));

  bool any_empty = false;
  for (int c = 0; c < k; ++c) {
    double n_k = 0.0;
    double first_moment = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double wq = data.weights[i] * resp(static_cast<Eigen::Index>(i), c);
      n_k += wq;
      first_moment += wq * data.points[i];
    }
    const std::size_t cu = static_cast<std::size_t>(c);
    if (n_k > 0.0) {
      const double mu = first_moment / n_k;
      double second_moment = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        const double d = data.points[i] - mu;
        second_moment +=
            data.weights[i] * resp(static_cast<Eigen::Index>(i), c) * d * d;
      }
      out.means[cu] = mu;
      out.variances[cu] = std::max(second_moment / n_k, var_floor);
      out.mixing[cu] = n_k / total_weight;
    } else {
      // Re-seed a starved component at the dominant point; renormalized below.
      const std::size_t peak = static_cast<std::size_t>(std::distance(
          data.weights.begin(),
          std::max_element(data.weights.begin(), data.weights.end())));
      const double seed_var = point_span(data) / k;
      out.means[cu] = data.points[peak];
      out.variances[cu] = std::max(seed_var * seed_var, var_floor);
      out.mixing[cu] = 1.0 / k;
      any_empty = true;
    }
  }

  if (any_empty) {
    double total = 0.0;
    for (double p : out.mixing) total += p;
    for (double& p : out.mixing) p /= total;
  }
  return out;
}

GmmParams initial_params(const WeightedDataset& data, int k) {
  data.validate();
  if (k < 1) throw std::invalid_argument("initial_params: k must be >= 1");

  const double total_weight = data.total_weight();
  const double seed_var = point_span(data) / k;

  GmmParams params;
  params.mixing.assign(static_cast<std::size_t>(k), 1.0 / k);
  params.variances.assign(
      static_cast<std::size_t>(k),
      std::max(seed_var * seed_var, std::numeric_limits<double>::min()));
  params.means.resize(static_cast<std::size_t>(k));

  // Means at the midpoint quantiles (j + 1/2)/k of the cumulative weight.
  std::size_t idx = 0;
  double cumulative = data.weights[0];
  for (int j = 0; j < k; ++j) {
    const double target = (j + 0.5) / k * total_weight;
    while (cumulative < target && idx + 1 < data.points.size())
      cumulative += data.weights[++idx];
    params.means[static_cast<std::size_t>(j)] = data.points[idx];
  }
  return params;
}

double weighted_log_likelihood(const WeightedDataset& data,
                               const GmmParams& params) {
  const int k = params.components();
  double total = 0.0;
  std::vector<double> log_terms(static_cast<std::size_t>(k));
  for (std::size_t i = 0; i < data.points.size(); ++i) {
    if (data.weights[i] == 0.0) continue;
    double max_term = -std::numeric_limits<double>::infinity();
    for (int c = 0; c < k; ++c) {
      const std::size_t cu = static_cast<std::size_t>(c);
      const double var = params.variances[cu];
      const double d = data.points[i] - params.means[cu];
      const double log_pdf =
          -0.5 * (kLogTwoPi + std::log(var)) - d * d / (2.0 * var);
      log_terms[cu] = params.mixing[cu] > 0.0
                          ? std::log(params.mixing[cu]) + log_pdf
                          : -std::numeric_limits<double>::infinity();
      max_term = std::max(max_term, log_terms[cu]);
    }
    double sum = 0.0;
    for (int c = 0; c < k; ++c)
      sum += std::exp(log_terms[static_cast<std::size_t>(c)] - max_term);
    total += data.weights[i] * (max_term + std::log(sum));
  }
  return total;
}

FitResult fit(const WeightedDataset& data, int k, const FitOptions& opts) {
  data.validate();
  if (k < 1) throw std::invalid_argument("fit: k must be >= 1");
  const auto positive =
      std::count_if(data.weights.begin(), data.weights.end(),
                    [](double w) { return w > 0.0; });
  if (k > positive)
    throw std::invalid_argument(
        "fit: k exceeds the number of points with positive weight");

  const double total_weight = data.total_weight();
  FitResult result;
  result.params = initial_params(data, k);
  result.log_likelihood.push_back(
      weighted_log_likelihood(data, result.params) / total_weight);

  for (int iter = 0; iter < opts.max_iters; ++iter) {
    const Eigen::MatrixXd resp = e_step(data, result.params);
    result.params = m_step(data, resp, opts.var_floor);
    const double ll = weighted_log_likelihood(data, result.params) / total_weight;
    const double improvement = ll - result.log_likelihood.back();
    result.log_likelihood.push_back(ll);
    if (improvement < opts.tol) break;
  }
  return result;
}

std::vector<double> sample(const GmmParams& params, int n, double lo,
                           double hi, std::mt19937_64& rng) {
  if (n < 0) throw std::invalid_argument("sample: n must be >= 0");
  params.validate();

  std::discrete_distribution<int> component(params.mixing.begin(),
                                            params.mixing.end());
  std::normal_distribution<double> standard_normal(0.0, 1.0);
  constexpr int kMaxRetries = 100;

  std::vector<double> draws(static_cast<std::size_t>(n));
  for (double& value : draws) {
    const std::size_t c = static_cast<std::size_t>(component(rng));
    const double sigma = std::sqrt(params.variances[c]);
    double x = params.means[c] + sigma * standard_normal(rng);
    for (int attempt = 0; (x < lo || x > hi) && attempt < kMaxRetries;
         ++attempt)
      x = params.means[c] + sigma * standard_normal(rng);
    value = std::clamp(x, lo, hi);
  }
  return draws;
}

}  // namespace pielm
