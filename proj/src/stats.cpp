#include "snm/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <Eigen/Dense>
#include <Eigen/QR>

#include "snm/errors.hpp"

namespace snm {

double variance_pop(std::span<const double> values) {
  if (values.empty()) {
    throw Error(Error::Kind::EmptyInput, "variance of an empty sample");
  }
  double mean = std::accumulate(values.begin(), values.end(), 0.0) /
                static_cast<double>(values.size());
  double ss = 0.0;
  for (double v : values) ss += (v - mean) * (v - mean);
  return ss / static_cast<double>(values.size());
}

double normal_quantile(double p) {
  if (!(p > 0.0 && p < 1.0)) {
    throw Error(Error::Kind::InvalidArgument,
                "quantile probability must lie in (0, 1)");
  }
  // Acklam's rational approximation, |relative error| < 1.15e-9.
  static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                             -2.759285104469687e+02, 1.383577518672690e+02,
                             -3.066479806614716e+01, 2.506628277459239e+00};
  static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                             -1.556989798598866e+02, 6.680131188771972e+01,
                             -1.328068155288572e+01};
  static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                             -2.400758277161838e+00, -2.549732539343734e+00,
                             4.374664141464968e+00,  2.938163982698783e+00};
  static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                             2.445134137142996e+00, 3.754408661907416e+00};
  const double p_low = 0.02425;
  double q, r;
  if (p < p_low) {
    q = std::sqrt(-2.0 * std::log(p));
    return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
           ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }
  if (p <= 1.0 - p_low) {
    q = p - 0.5;
    r = q * q;
    return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) *
           q /
           (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
  }
  q = std::sqrt(-2.0 * std::log(1.0 - p));
  return -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
         ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
}

RegressionFit ols_fit(const std::vector<std::vector<double>>& regressors,
                      std::span<const double> response) {
  const std::size_t n = response.size();
  const std::size_t p = regressors.size();
  if (n == 0) {
    throw Error(Error::Kind::EmptyInput, "regression on an empty response");
  }
  for (const auto& column : regressors) {
    if (column.size() != n) {
      throw Error(Error::Kind::InvalidArgument,
                  "regressor column length differs from the response");
    }
  }
  if (n <= p) {
    throw Error(Error::Kind::InvalidArgument,
                "need more observations than regressors");
  }

  Eigen::MatrixXd design(n, p + 1);
  Eigen::VectorXd y(n);
  for (std::size_t i = 0; i < n; ++i) {
    design(i, 0) = 1.0;
    for (std::size_t j = 0; j < p; ++j) design(i, j + 1) = regressors[j][i];
    y(i) = response[i];
  }

  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(design);
  if (qr.rank() < static_cast<Eigen::Index>(p + 1)) {
    throw Error(Error::Kind::SingularDesign, "design matrix is rank-deficient");
  }
  Eigen::VectorXd beta = qr.solve(y);

  RegressionFit fit;
  fit.intercept = beta(0);
  fit.coefficients.resize(p);
  for (std::size_t j = 0; j < p; ++j) fit.coefficients[j] = beta(j + 1);
  fit.n_obs = n;
  fit.residual_sum_squares = (y - design * beta).squaredNorm();
  return fit;
}

double ChainModel::coefficient(std::size_t source, std::size_t target) const {
  return fits[target - 1].coefficients[source];
}

ChainModel fit_chain(const std::vector<std::string>& names,
                     const std::vector<std::vector<double>>& columns) {
  if (names.size() != columns.size()) {
    throw Error(Error::Kind::InvalidArgument,
                "chain names and columns differ in count");
  }
  if (names.size() < 2) {
    throw Error(Error::Kind::InvalidArgument,
                "a chain needs at least two variables");
  }
  ChainModel chain;
  chain.names = names;
  for (std::size_t j = 1; j < columns.size(); ++j) {
    std::vector<std::vector<double>> regressors(columns.begin(),
                                                columns.begin() + j);
    try {
      chain.fits.push_back(ols_fit(regressors, columns[j]));
    } catch (const Error& e) {
      if (e.kind() == Error::Kind::SingularDesign) {
        throw Error(Error::Kind::SingularDesign,
                    "stage '" + names[j] + "': " + e.what());
      }
      throw;
    }
  }
  return chain;
}

ChainModel chain_from_fits(std::vector<std::string> names,
                           std::vector<RegressionFit> fits) {
  if (names.size() < 2 || fits.size() + 1 != names.size()) {
    throw Error(Error::Kind::InvalidArgument,
                "chain shape mismatch between names and fits");
  }
  for (std::size_t j = 0; j < fits.size(); ++j) {
    if (fits[j].coefficients.size() != j + 1) {
      throw Error(Error::Kind::InvalidArgument,
                  "fit " + std::to_string(j) + " must have " +
                      std::to_string(j + 1) + " coefficients");
    }
  }
  ChainModel chain;
  chain.names = std::move(names);
  chain.fits = std::move(fits);
  return chain;
}

EffectDecomposition path_effects(const ChainModel& chain,
                                 std::string_view source,
                                 std::string_view target) {
  auto locate = [&](std::string_view name) -> std::size_t {
    auto it = std::find(chain.names.begin(), chain.names.end(), name);
    if (it == chain.names.end()) {
      throw Error(Error::Kind::InvalidPair,
                  "variable '" + std::string(name) + "' not in chain");
    }
    return static_cast<std::size_t>(it - chain.names.begin());
  };
  std::size_t si = locate(source);
  std::size_t ti = locate(target);
  if (si >= ti) {
    throw Error(Error::Kind::InvalidPair,
                "source must precede target in the chain");
  }

  EffectDecomposition effects;
  effects.source = std::string(source);
  effects.target = std::string(target);

  std::size_t m = ti - si - 1;  // candidate intermediates
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    std::vector<std::size_t> stops{si};
    for (std::size_t b = 0; b < m; ++b) {
      if (mask & (std::uint64_t{1} << b)) stops.push_back(si + 1 + b);
    }
    stops.push_back(ti);

    PathTerm term;
    term.product = 1.0;
    for (std::size_t s = 0; s + 1 < stops.size(); ++s) {
      term.product *= chain.coefficient(stops[s], stops[s + 1]);
    }
    for (std::size_t stop : stops) term.variables.push_back(chain.names[stop]);

    if (mask == 0) {
      effects.direct = term.product;
    } else {
      effects.indirect += term.product;
    }
    effects.paths.push_back(std::move(term));
  }
  effects.total = effects.direct + effects.indirect;
  return effects;
}

RunsTestResult runs_test(std::span<const int> labels, double critical_z) {
  if (labels.size() < 2) {
    throw Error(Error::Kind::DegenerateSequence,
                "runs test needs at least two observations");
  }
  int first = labels[0];
  int second = 0;
  bool has_second = false;
  int n1 = 0, n2 = 0;
  for (int label : labels) {
    if (label == first) {
      ++n1;
    } else if (!has_second || label == second) {
      second = label;
      has_second = true;
      ++n2;
    } else {
      throw Error(Error::Kind::InvalidArgument,
                  "runs test expects exactly two categories");
    }
  }
  if (!has_second) {
    throw Error(Error::Kind::DegenerateSequence,
                "runs test needs both categories present");
  }

  int runs = 1;
  for (std::size_t i = 1; i < labels.size(); ++i) {
    if (labels[i] != labels[i - 1]) ++runs;
  }

  double dn1 = n1, dn2 = n2;
  double total = dn1 + dn2;
  double mu = 2.0 * dn1 * dn2 / total + 1.0;
  double var = 2.0 * dn1 * dn2 * (2.0 * dn1 * dn2 - dn1 - dn2) /
               (total * total * (total - 1.0));
  if (var <= 0.0) {
    throw Error(Error::Kind::DegenerateSequence,
                "runs test variance is zero for this category split");
  }
  RunsTestResult result;
  result.n1 = n1;
  result.n2 = n2;
  result.runs = runs;
  result.mu_r = mu;
  result.sigma_r = std::sqrt(var);
  result.z = (static_cast<double>(runs) - mu) / result.sigma_r;
  result.reject = std::abs(result.z) > critical_z;
  return result;
}

std::vector<int> dichotomize_median(std::span<const double> values) {
  if (values.size() < 2) {
    throw Error(Error::Kind::InvalidArgument,
                "median dichotomization needs at least two values");
  }
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  std::size_t n = sorted.size();
  double median = (n % 2 == 1)
                      ? sorted[n / 2]
                      : (sorted[n / 2 - 1] + sorted[n / 2]) / 2.0;
  std::vector<int> labels;
  labels.reserve(n);
  for (double v : values) labels.push_back(v >= median ? 1 : 0);
  return labels;
}

std::string_view to_string(AlphaBand band) {
  switch (band) {
    case AlphaBand::VeryGood:
      return "VERY_GOOD";
    case AlphaBand::Good:
      return "GOOD";
    case AlphaBand::Acceptable:
      return "ACCEPTABLE";
    case AlphaBand::Poor:
      return "POOR";
    case AlphaBand::NotAccepted:
      return "NOT_ACCEPTED";
  }
  return "NOT_ACCEPTED";
}

AlphaBand classify_alpha(double alpha) {
  if (alpha > 0.9) return AlphaBand::VeryGood;
  if (alpha >= 0.7) return AlphaBand::Good;
  if (alpha >= 0.6) return AlphaBand::Acceptable;
  if (alpha >= 0.5) return AlphaBand::Poor;
  return AlphaBand::NotAccepted;
}

AlphaResult cronbach_alpha(
    const std::vector<std::vector<double>>& components) {
  if (components.size() < 2) {
    throw Error(Error::Kind::InvalidArgument,
                "Cronbach's alpha needs at least two components");
  }
  std::size_t length = components.front().size();
  if (length < 2) {
    throw Error(Error::Kind::InvalidArgument,
                "components need at least two observations");
  }
  for (const auto& component : components) {
    if (component.size() != length) {
      throw Error(Error::Kind::InvalidArgument,
                  "components differ in length");
    }
  }

  AlphaResult result;
  result.k = components.size();
  std::vector<double> totals(length, 0.0);
  for (const auto& component : components) {
    result.sum_component_variances += variance_pop(component);
    for (std::size_t i = 0; i < length; ++i) totals[i] += component[i];
  }
  result.total_variance = variance_pop(totals);
  if (result.total_variance == 0.0) {
    throw Error(Error::Kind::DegenerateTotal,
                "total score has zero variance");
  }
  double k = static_cast<double>(result.k);
  result.alpha =
      k / (k - 1.0) *
      (1.0 - result.sum_component_variances / result.total_variance);
  result.band = classify_alpha(result.alpha);
  return result;
}

}  // namespace snm
