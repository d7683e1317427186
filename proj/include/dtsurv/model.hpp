#ifndef DTSURV_MODEL_HPP
#define DTSURV_MODEL_HPP

#include <Eigen/Core>
#include <optional>
#include <string>
#include <vector>

namespace dtsurv {

// Probabilities produced by the link inverses are kept this far away from
// 0 and 1 so log terms stay finite at extreme parameter values.
inline constexpr double kProbClamp = 1e-12;

enum class Link { cloglog, logit };

Link link_from_string(const std::string& s);
std::string to_string(Link link);

// Inverse link: finite eta -> probability strictly inside (0,1).
double link_inverse(Link link, double eta);
// Forward link: probability -> linear-predictor scale.
double link_apply(Link link, double p);

// Time-trend basis for one model component. `none` contributes nothing
// (an empty coefficient block), `linear` contributes the single value t,
// `natural_spline` is a cubic spline basis constrained to be linear
// beyond its boundary knots (knots.size()-1 columns, intercept excluded).
struct BasisSpec {
  enum class Kind { none, linear, natural_spline };

  Kind kind = Kind::none;
  std::vector<double> knots;  // natural_spline only; strictly increasing

  int dimension() const;

  static BasisSpec none() { return {}; }
  static BasisSpec linear() { return {Kind::linear, {}}; }
  static BasisSpec natural_spline(std::vector<double> knots);
};

// Basis values at a real-valued point (spline extrapolates linearly).
void basis_values(const BasisSpec& spec, double t, std::vector<double>& out);
std::vector<double> basis_values(const BasisSpec& spec, double t);

// Basis values at a time-grid index; j must lie in {1..grid_max}.
std::vector<double> basis_eval(const BasisSpec& spec, int j, int grid_max);

// Equally spaced quantile knots (boundary knots at the extremes) for a
// spline with the given number of coefficients.
std::vector<double> quantile_knots(std::vector<double> values, int df);

// Covariates for one person-interval: z already on the model scale.
struct CovariateRow {
  std::vector<double> z;
  int j = 1;              // calendar-time index, 1-based
  bool is_entry = false;  // first interval observed for this person
};

// Names the observable columns that enter linear predictors and fixes the
// affine scale applied to age, so data generation and fitting agree.
struct ModelSpec {
  Link outcome_link = Link::cloglog;
  Link aux_link = Link::cloglog;  // initial-status, seroconversion, testing
  int intervals = 20;             // time grid is {1..intervals}

  std::vector<std::string> covariates = {"sex", "age"};
  double age_offset = 13.0;
  double age_scale = 47.0;

  BasisSpec outcome_basis = BasisSpec::linear();
  BasisSpec initial_basis = BasisSpec::linear();
  BasisSpec seroconv_basis = BasisSpec::linear();
  BasisSpec testing_basis = BasisSpec::none();

  int covariate_dim() const { return static_cast<int>(covariates.size()); }
  int parameter_count() const;
  std::vector<std::string> parameter_names() const;

  double scaled_age(double age_years) const {
    return (age_years - age_offset) / age_scale;
  }
  // z vector for one interval, in `covariates` order.
  std::vector<double> make_z(int sex, double age_years) const;

  void validate() const;
};

// One component's coefficients: intercept, covariate block, time block.
struct ParameterBlock {
  double intercept = 0.0;
  std::vector<double> covariate;
  std::vector<double> time;
};

// Full coefficient vector. Flattened layout (fixed contract):
//   [alpha_y, beta, gamma_y.., tau_y.., alpha_s, gamma_s.., tau_s..,
//    alpha_x, gamma_x.., tau_x.., alpha_delta, gamma_delta.., tau_delta..]
struct ParameterVector {
  ParameterBlock outcome;         // alpha_y, gamma_y, tau_y
  double secondary_effect = 0.0;  // beta
  ParameterBlock initial;         // alpha_s, gamma_s, tau_s
  ParameterBlock seroconv;        // alpha_x, gamma_x, tau_x
  ParameterBlock testing;         // alpha_delta, gamma_delta, tau_delta

  Eigen::VectorXd flatten(const ModelSpec& spec) const;
  static ParameterVector unflatten(const ModelSpec& spec, const Eigen::VectorXd& v);
  static ParameterVector zeros(const ModelSpec& spec);
};

// Discrete hazard of the outcome in interval j given current secondary
// status x: C^{-1}(alpha_y + beta*x + gamma_y'z + tau_y'b_y(j)).
double hazard_y(int x, const CovariateRow& row, const ParameterVector& omega,
                const ModelSpec& spec);

// Initial-status probability (entry rows, x_prev must be absent) or
// seroconversion hazard (later rows, x_prev required; absorbing at 1).
double hazard_x(std::optional<int> x_prev, const CovariateRow& row,
                const ParameterVector& omega, const ModelSpec& spec);

// Per-interval probability that a test is taken.
double prob_test(const CovariateRow& row, const ParameterVector& omega,
                 const ModelSpec& spec);

// Bernoulli PMFs built from the hazards above.
double pmf_y(int y, int x, const CovariateRow& row, const ParameterVector& omega,
             const ModelSpec& spec);
double pmf_x(int x, std::optional<int> x_prev, const CovariateRow& row,
             const ParameterVector& omega, const ModelSpec& spec);

}  // namespace dtsurv

#endif
