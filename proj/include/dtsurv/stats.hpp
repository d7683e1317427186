#ifndef DTSURV_STATS_HPP
#define DTSURV_STATS_HPP

#include <cstddef>
#include <vector>

namespace dtsurv {

// Quantile of the standard normal distribution (Wichura's AS 241,
// double-precision branch). p must lie in (0,1).
double normal_quantile(double p);

// log(sum_i exp(v_i)) with max shift; -inf for an empty range.
double log_sum_exp(const double* v, std::size_t n);
double log_sum_exp(const std::vector<double>& v);

// Monte Carlo standard error of an estimated proportion.
double proportion_mc_se(double p, int n);

}  // namespace dtsurv

#endif
