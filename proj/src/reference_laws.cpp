#include "gwcut/reference_laws.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gwcut {

namespace {

double gamma_p_series(double a, double x) {
    double ap = a;
    double del = 1.0 / a;
    double sum = del;
    for (int i = 0; i < 1000; ++i) {
        ap += 1.0;
        del *= x / ap;
        sum += del;
        if (std::abs(del) < std::abs(sum) * 1e-16) break;
    }
    return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Lentz continued fraction for Q(a, x)
double gamma_q_cf(double a, double x) {
    const double tiny = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= 1000; ++i) {
        double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < 1e-16) break;
    }
    return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
}

}  // namespace

double regularized_gamma_p(double a, double x) {
    if (!(a > 0.0)) throw std::invalid_argument("regularized_gamma_p: a must be > 0");
    if (x < 0.0) throw std::invalid_argument("regularized_gamma_p: x must be >= 0");
    if (x == 0.0) return 0.0;
    if (x < a + 1.0) return gamma_p_series(a, x);
    return 1.0 - gamma_q_cf(a, x);
}

double rayleigh_cdf(double x) {
    if (x <= 0.0) return 0.0;
    return -std::expm1(-0.5 * x * x);
}

double rayleigh_quantile(double u) {
    if (u < 0.0 || u >= 1.0) throw std::invalid_argument("rayleigh_quantile: u in [0,1)");
    return std::sqrt(-2.0 * std::log1p(-u));
}

double chi2k_cdf(int k, double x) {
    if (k < 1) throw std::invalid_argument("chi2k_cdf: k must be >= 1");
    if (x <= 0.0) return 0.0;
    return regularized_gamma_p(static_cast<double>(k), 0.5 * x * x);
}

double chi2k_pdf(int k, double x) {
    if (k < 1) throw std::invalid_argument("chi2k_pdf: k must be >= 1");
    if (x <= 0.0) return 0.0;
    double log_pdf = (1 - k) * std::log(2.0) - std::lgamma(static_cast<double>(k)) +
                     (2 * k - 1) * std::log(x) - 0.5 * x * x;
    return std::exp(log_pdf);
}

ReferenceLaw ReferenceLaw::chi2k(int k) {
    if (k < 1) throw std::invalid_argument("ReferenceLaw: k must be >= 1");
    return {Kind::chi2k, k, 1.0};
}

ReferenceLaw ReferenceLaw::exponential(double rate) {
    if (!(rate > 0.0)) throw std::invalid_argument("ReferenceLaw: rate must be > 0");
    return {Kind::exponential, 1, rate};
}

double ReferenceLaw::cdf(double x) const {
    switch (kind) {
        case Kind::rayleigh: return rayleigh_cdf(x);
        case Kind::chi2k: return chi2k_cdf(k, x);
        case Kind::exponential: return x <= 0.0 ? 0.0 : -std::expm1(-rate * x);
    }
    return 0.0;
}

double ks_statistic(std::vector<double> sample, const ReferenceLaw& law) {
    if (sample.empty()) throw std::invalid_argument("ks_statistic: empty sample");
    std::sort(sample.begin(), sample.end());
    const double n = static_cast<double>(sample.size());
    double d = 0.0;
    for (std::size_t i = 0; i < sample.size(); ++i) {
        const double f = law.cdf(sample[i]);
        d = std::max(d, (static_cast<double>(i) + 1.0) / n - f);
        d = std::max(d, f - static_cast<double>(i) / n);
    }
    return d;
}

}  // namespace gwcut
