#pragma once

#include <vector>

namespace gwcut {

// P(a, x): regularized lower incomplete gamma, series / continued-fraction
// split at x = a + 1.
double regularized_gamma_p(double a, double x);

// 1 - exp(-x^2/2) on the positive axis.
double rayleigh_cdf(double x);
double rayleigh_quantile(double u);

// Chi(2k): density 2^{1-k}/(k-1)! x^{2k-1} exp(-x^2/2); CDF = P(k, x^2/2).
double chi2k_cdf(int k, double x);
double chi2k_pdf(int k, double x);

struct ReferenceLaw {
    enum class Kind { rayleigh, chi2k, exponential };

    Kind kind = Kind::rayleigh;
    int k = 1;          // chi2k only
    double rate = 1.0;  // exponential only

    static ReferenceLaw rayleigh() { return {Kind::rayleigh, 1, 1.0}; }
    static ReferenceLaw chi2k(int k);
    static ReferenceLaw exponential(double rate);

    double cdf(double x) const;
};

// Sup distance between the empirical CDF of the sample and the reference CDF,
// both one-sided gaps evaluated at the sample points.
double ks_statistic(std::vector<double> sample, const ReferenceLaw& law);

}  // namespace gwcut
