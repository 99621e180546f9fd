#pragma once

#include <cstddef>
#include <vector>

namespace cvd::stats {

/// Regularized lower incomplete gamma P(a, x).
double gamma_p(double a, double x);

/// Chi-squared survival function: P(X > x) with k degrees of freedom.
double chi2_sf(double x, int dof);

/// Standard normal CDF.
double normal_cdf(double z);

/// One-sided survival function of Student's t with `dof` degrees of freedom.
double student_t_sf(double t, int dof);

/// Pearson chi-squared statistic for observed counts vs expected counts.
/// Bins with expected < min_expected are pooled into their neighbor.
struct Chi2Result {
    double statistic = 0.0;
    int dof = 0;
    double p_value = 1.0;
};
Chi2Result chi2_gof(const std::vector<double>& observed,
                    const std::vector<double>& expected,
                    double min_expected = 5.0);

/// Least-squares slope of y against x.
double ls_slope(const std::vector<double>& x, const std::vector<double>& y);

/// One-sided paired t-test that mean(a - b) < 0. Returns the p-value;
/// p < alpha supports "a is smaller". Degenerate zero-variance pairs give
/// p = 0 when every difference is <= 0 (with at least one strict) and 1.0
/// when differences are all zero or positive.
double paired_t_less(const std::vector<double>& a, const std::vector<double>& b);

/// Adaptive Simpson quadrature on [a, b].
double integrate(double (*f)(double, const void*), const void* ctx, double a,
                 double b, double tol, int max_depth = 60);

}  // namespace cvd::stats
