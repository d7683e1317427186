#include "dtsurv/model.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "dtsurv/errors.hpp"

namespace dtsurv {

Link link_from_string(const std::string& s) {
  if (s == "cloglog") return Link::cloglog;
  if (s == "logit") return Link::logit;
  throw InvalidInputError("unknown link: '" + s + "' (expected cloglog or logit)");
}

std::string to_string(Link link) {
  return link == Link::cloglog ? "cloglog" : "logit";
}

static double clamp_prob(double p) {
  return std::min(1.0 - kProbClamp, std::max(kProbClamp, p));
}

double link_inverse(Link link, double eta) {
  if (!std::isfinite(eta))
    throw InvalidInputError("link_inverse: eta must be finite");
  double p;
  switch (link) {
    case Link::cloglog:
      p = -std::expm1(-std::exp(eta));
      break;
    case Link::logit:
      p = 1.0 / (1.0 + std::exp(-eta));
      break;
    default:
      p = 0.0;
  }
  return clamp_prob(p);
}

double link_apply(Link link, double p) {
  p = clamp_prob(p);
  switch (link) {
    case Link::cloglog:
      return std::log(-std::log1p(-p));
    case Link::logit:
      return std::log(p / (1.0 - p));
  }
  return 0.0;
}

int BasisSpec::dimension() const {
  switch (kind) {
    case Kind::none:
      return 0;
    case Kind::linear:
      return 1;
    case Kind::natural_spline:
      return static_cast<int>(knots.size()) - 1;
  }
  return 0;
}

BasisSpec BasisSpec::natural_spline(std::vector<double> knots) {
  if (knots.size() < 3)
    throw InvalidInputError("natural_spline: need at least 3 knots");
  for (std::size_t i = 1; i < knots.size(); ++i)
    if (!(knots[i] > knots[i - 1]))
      throw InvalidInputError("natural_spline: knots must be strictly increasing");
  BasisSpec spec;
  spec.kind = Kind::natural_spline;
  spec.knots = std::move(knots);
  return spec;
}

namespace {

inline double cube_pos(double v) { return v > 0.0 ? v * v * v : 0.0; }

// Natural cubic spline basis via the truncated-power representation with
// the intercept column dropped: {t, d_1 - d_{K-1}, ..., d_{K-2} - d_{K-1}}
// where d_k(t) = [(t-k_k)_+^3 - (t-k_K)_+^3] / (k_K - k_k).
void natural_spline_values(const std::vector<double>& knots, double t,
                           std::vector<double>& out) {
  const std::size_t K = knots.size();
  const double last = knots[K - 1];
  auto d = [&](std::size_t k) {
    return (cube_pos(t - knots[k]) - cube_pos(t - last)) / (last - knots[k]);
  };
  const double d_last = d(K - 2);
  out.push_back(t);
  for (std::size_t k = 0; k + 2 < K; ++k) out.push_back(d(k) - d_last);
}

}  // namespace

void basis_values(const BasisSpec& spec, double t, std::vector<double>& out) {
  out.clear();
  switch (spec.kind) {
    case BasisSpec::Kind::none:
      break;
    case BasisSpec::Kind::linear:
      out.push_back(t);
      break;
    case BasisSpec::Kind::natural_spline:
      natural_spline_values(spec.knots, t, out);
      break;
  }
}

std::vector<double> basis_values(const BasisSpec& spec, double t) {
  std::vector<double> out;
  basis_values(spec, t, out);
  return out;
}

std::vector<double> basis_eval(const BasisSpec& spec, int j, int grid_max) {
  if (j < 1 || j > grid_max)
    throw InvalidInputError("basis_eval: time index " + std::to_string(j) +
                            " outside grid {1.." + std::to_string(grid_max) + "}");
  return basis_values(spec, static_cast<double>(j));
}

std::vector<double> quantile_knots(std::vector<double> values, int df) {
  if (df < 2) throw InvalidInputError("quantile_knots: df must be >= 2");
  if (values.empty()) throw InvalidInputError("quantile_knots: no values");
  std::sort(values.begin(), values.end());
  const int K = df + 1;
  std::vector<double> knots;
  knots.reserve(K);
  for (int k = 0; k < K; ++k) {
    const double q = static_cast<double>(k) / (K - 1);
    const double pos = q * static_cast<double>(values.size() - 1);
    const std::size_t lo = static_cast<std::size_t>(pos);
    const std::size_t hi = std::min(lo + 1, values.size() - 1);
    knots.push_back(values[lo] + (pos - static_cast<double>(lo)) * (values[hi] - values[lo]));
  }
  for (std::size_t i = 1; i < knots.size(); ++i)
    if (!(knots[i] > knots[i - 1]))
      throw InvalidInputError(
          "quantile_knots: duplicate quantiles; too few distinct values for df");
  return knots;
}

std::vector<double> ModelSpec::make_z(int sex, double age_years) const {
  std::vector<double> z;
  z.reserve(covariates.size());
  for (const auto& name : covariates) {
    if (name == "sex")
      z.push_back(static_cast<double>(sex));
    else if (name == "age")
      z.push_back(scaled_age(age_years));
    else
      throw SpecError("unknown covariate column: '" + name + "'");
  }
  return z;
}

void ModelSpec::validate() const {
  if (intervals < 1) throw SpecError("intervals must be >= 1");
  if (age_scale == 0.0) throw SpecError("age_scale must be nonzero");
  for (const auto& name : covariates)
    if (name != "sex" && name != "age")
      throw SpecError("unknown covariate column: '" + name + "'");
}

int ModelSpec::parameter_count() const {
  const int ncov = covariate_dim();
  return (1 + 1 + ncov + outcome_basis.dimension()) +
         (1 + ncov + initial_basis.dimension()) +
         (1 + ncov + seroconv_basis.dimension()) +
         (1 + ncov + testing_basis.dimension());
}

std::vector<std::string> ModelSpec::parameter_names() const {
  std::vector<std::string> names;
  auto block = [&](const std::string& tag, const BasisSpec& basis, bool with_beta) {
    names.push_back("alpha_" + tag);
    if (with_beta) names.push_back("beta");
    for (const auto& cov : covariates) names.push_back("gamma_" + tag + "_" + cov);
    for (int k = 1; k <= basis.dimension(); ++k)
      names.push_back("tau_" + tag + "_" + std::to_string(k));
  };
  block("y", outcome_basis, true);
  block("s", initial_basis, false);
  block("x", seroconv_basis, false);
  block("delta", testing_basis, false);
  return names;
}

namespace {

void flatten_block(const ParameterBlock& b, const ModelSpec& spec,
                   const BasisSpec& basis, const char* tag, Eigen::VectorXd& out,
                   Eigen::Index& at) {
  if (static_cast<int>(b.covariate.size()) != spec.covariate_dim())
    throw SpecError(std::string("parameter block ") + tag +
                    ": covariate coefficient count != model covariate count");
  if (static_cast<int>(b.time.size()) != basis.dimension())
    throw SpecError(std::string("parameter block ") + tag +
                    ": time coefficient count != basis dimension");
  out[at++] = b.intercept;
  for (double v : b.covariate) out[at++] = v;
  for (double v : b.time) out[at++] = v;
}

void unflatten_block(ParameterBlock& b, const ModelSpec& spec, const BasisSpec& basis,
                     const Eigen::VectorXd& v, Eigen::Index& at) {
  b.intercept = v[at++];
  b.covariate.resize(spec.covariate_dim());
  for (auto& c : b.covariate) c = v[at++];
  b.time.resize(basis.dimension());
  for (auto& t : b.time) t = v[at++];
}

}  // namespace

Eigen::VectorXd ParameterVector::flatten(const ModelSpec& spec) const {
  Eigen::VectorXd out(spec.parameter_count());
  Eigen::Index at = 0;
  if (static_cast<int>(outcome.covariate.size()) != spec.covariate_dim() ||
      static_cast<int>(outcome.time.size()) != spec.outcome_basis.dimension())
    throw SpecError("parameter block y: dimensions disagree with model spec");
  out[at++] = outcome.intercept;
  out[at++] = secondary_effect;
  for (double v : outcome.covariate) out[at++] = v;
  for (double v : outcome.time) out[at++] = v;
  flatten_block(initial, spec, spec.initial_basis, "s", out, at);
  flatten_block(seroconv, spec, spec.seroconv_basis, "x", out, at);
  flatten_block(testing, spec, spec.testing_basis, "delta", out, at);
  return out;
}

ParameterVector ParameterVector::unflatten(const ModelSpec& spec,
                                           const Eigen::VectorXd& v) {
  if (v.size() != spec.parameter_count())
    throw SpecError("unflatten: vector length " + std::to_string(v.size()) +
                    " != model parameter count " +
                    std::to_string(spec.parameter_count()));
  ParameterVector p;
  Eigen::Index at = 0;
  p.outcome.intercept = v[at++];
  p.secondary_effect = v[at++];
  p.outcome.covariate.resize(spec.covariate_dim());
  for (auto& c : p.outcome.covariate) c = v[at++];
  p.outcome.time.resize(spec.outcome_basis.dimension());
  for (auto& t : p.outcome.time) t = v[at++];
  unflatten_block(p.initial, spec, spec.initial_basis, v, at);
  unflatten_block(p.seroconv, spec, spec.seroconv_basis, v, at);
  unflatten_block(p.testing, spec, spec.testing_basis, v, at);
  return p;
}

ParameterVector ParameterVector::zeros(const ModelSpec& spec) {
  return unflatten(spec, Eigen::VectorXd::Zero(spec.parameter_count()));
}

namespace {

double linear_predictor(const ParameterBlock& block, const BasisSpec& basis,
                        const CovariateRow& row, const ModelSpec& spec,
                        const char* tag) {
  if (row.z.size() != block.covariate.size() ||
      static_cast<int>(row.z.size()) != spec.covariate_dim())
    throw SpecError(std::string("component ") + tag +
                    ": covariate dimension mismatch");
  if (row.j < 1 || row.j > spec.intervals)
    throw InvalidInputError("time index " + std::to_string(row.j) +
                            " outside grid {1.." + std::to_string(spec.intervals) + "}");
  double eta = block.intercept;
  eta += std::inner_product(row.z.begin(), row.z.end(), block.covariate.begin(), 0.0);
  if (basis.dimension() > 0) {
    const std::vector<double> b = basis_values(basis, static_cast<double>(row.j));
    eta += std::inner_product(b.begin(), b.end(), block.time.begin(), 0.0);
  }
  return eta;
}

}  // namespace

double hazard_y(int x, const CovariateRow& row, const ParameterVector& omega,
                const ModelSpec& spec) {
  if (x != 0 && x != 1) throw InvalidInputError("hazard_y: x must be 0 or 1");
  const double eta =
      linear_predictor(omega.outcome, spec.outcome_basis, row, spec, "y") +
      omega.secondary_effect * static_cast<double>(x);
  return link_inverse(spec.outcome_link, eta);
}

double hazard_x(std::optional<int> x_prev, const CovariateRow& row,
                const ParameterVector& omega, const ModelSpec& spec) {
  if (row.is_entry) {
    // Status before the first observed interval is undefined; the entry row
    // is governed by the initial-status component alone.
    if (x_prev.has_value())
      throw InvalidInputError("hazard_x: x_prev supplied at an entry row");
    const double eta =
        linear_predictor(omega.initial, spec.initial_basis, row, spec, "s");
    return link_inverse(spec.aux_link, eta);
  }
  if (!x_prev.has_value())
    throw InvalidInputError("hazard_x: x_prev required at a non-entry row");
  if (*x_prev != 0 && *x_prev != 1)
    throw InvalidInputError("hazard_x: x_prev must be 0 or 1");
  if (*x_prev == 1) return 1.0;  // absorbing, exact
  const double eta =
      linear_predictor(omega.seroconv, spec.seroconv_basis, row, spec, "x");
  return link_inverse(spec.aux_link, eta);
}

double prob_test(const CovariateRow& row, const ParameterVector& omega,
                 const ModelSpec& spec) {
  const double eta =
      linear_predictor(omega.testing, spec.testing_basis, row, spec, "delta");
  return link_inverse(spec.aux_link, eta);
}

double pmf_y(int y, int x, const CovariateRow& row, const ParameterVector& omega,
             const ModelSpec& spec) {
  if (y != 0 && y != 1) throw InvalidInputError("pmf_y: y must be 0 or 1");
  const double p = hazard_y(x, row, omega, spec);
  return y == 1 ? p : 1.0 - p;
}

double pmf_x(int x, std::optional<int> x_prev, const CovariateRow& row,
             const ParameterVector& omega, const ModelSpec& spec) {
  if (x != 0 && x != 1) throw InvalidInputError("pmf_x: x must be 0 or 1");
  const double p = hazard_x(x_prev, row, omega, spec);
  return x == 1 ? p : 1.0 - p;
}

}  // namespace dtsurv
