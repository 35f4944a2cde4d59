#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace snm {

/// Population variance, divisor n (not n - 1). Throws Error{EmptyInput}.
double variance_pop(std::span<const double> values);

/// Two-sided standard-normal quantile, e.g. normal_quantile(0.975) = 1.95996.
double normal_quantile(double p);

struct RegressionFit {
  double intercept = 0.0;
  std::vector<double> coefficients;  // one per regressor, in column order
  std::size_t n_obs = 0;
  double residual_sum_squares = 0.0;
};

/// Least-squares fit of `response` on `regressors` (columns) plus an
/// intercept. Requires n_obs > #regressors and a full-rank design; a
/// rank-deficient design throws Error{SingularDesign} - there is no
/// pseudo-inverse fallback.
RegressionFit ols_fit(const std::vector<std::vector<double>>& regressors,
                      std::span<const double> response);

/// Chain of nested regressions over named columns x1..xk, y: fit j regresses
/// column j+1 on all earlier columns.
struct ChainModel {
  std::vector<std::string> names;
  std::vector<RegressionFit> fits;  // fits[j] models names[j + 1]

  /// Coefficient of `source` in the fit of `target`; both given as chain
  /// indices with source < target.
  double coefficient(std::size_t source, std::size_t target) const;
};

ChainModel fit_chain(const std::vector<std::string>& names,
                     const std::vector<std::vector<double>>& columns);

/// Builds a ChainModel from externally supplied fits (e.g. published
/// coefficient tables); validates the shape invariants.
ChainModel chain_from_fits(std::vector<std::string> names,
                           std::vector<RegressionFit> fits);

struct PathTerm {
  std::vector<std::string> variables;  // source, intermediates..., target
  double product = 0.0;
};

struct EffectDecomposition {
  std::string source;
  std::string target;
  double direct = 0.0;    // coefficient of source in target's fit
  double indirect = 0.0;  // sum over all multi-step paths of their products
  double total = 0.0;     // direct + indirect
  std::vector<PathTerm> paths;
};

/// Enumerates every directed path from source to target through strictly
/// later chain variables; with m intermediates there are 2^m paths.
/// Throws Error{InvalidPair} for unknown or mis-ordered variables.
EffectDecomposition path_effects(const ChainModel& chain,
                                 std::string_view source,
                                 std::string_view target);

struct RunsTestResult {
  int n1 = 0;  // count of the first-seen category
  int n2 = 0;
  int runs = 0;
  double mu_r = 0.0;
  double sigma_r = 0.0;
  double z = 0.0;
  bool reject = false;  // |z| > critical value
};

/// Wald-Wolfowitz runs test over a two-category label sequence.
///   mu_r    = 2 n1 n2 / (n1 + n2) + 1
///   sigma_r^2 = 2 n1 n2 (2 n1 n2 - n1 - n2) / ((n1 + n2)^2 (n1 + n2 - 1))
/// Throws Error{DegenerateSequence} when only one category is present (or
/// sigma_r would be 0) and Error{InvalidArgument} for more than two.
RunsTestResult runs_test(std::span<const int> labels,
                         double critical_z = 1.96);

/// Labels each value 1 when >= median, else 0, in input order. The median is
/// the middle order statistic (odd n) or the mean of the two middle ones
/// (even n). Requires at least two values.
std::vector<int> dichotomize_median(std::span<const double> values);

enum class AlphaBand { VeryGood, Good, Acceptable, Poor, NotAccepted };

std::string_view to_string(AlphaBand band);

/// Band boundaries resolve to the higher band, except 0.9 which belongs to
/// Good: (0.9, inf) very good, [0.7, 0.9] good, [0.6, 0.7) acceptable,
/// [0.5, 0.6) poor, below not accepted.
AlphaBand classify_alpha(double alpha);

struct AlphaResult {
  std::size_t k = 0;
  double sum_component_variances = 0.0;
  double total_variance = 0.0;
  double alpha = 0.0;
  AlphaBand band = AlphaBand::NotAccepted;
};

/// alpha = (k / (k - 1)) (1 - sum of component variances / variance of the
/// element-wise total), with population variances throughout.
/// Throws Error{DegenerateTotal} when the total variance is 0.
AlphaResult cronbach_alpha(const std::vector<std::vector<double>>& components);

}  // namespace snm
