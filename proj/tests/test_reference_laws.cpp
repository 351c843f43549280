#include <cmath>
#include <functional>
#include <stdexcept>

#include "doctest.h"
#include "gwcut/reference_laws.hpp"
#include "gwcut/rng.hpp"

using namespace gwcut;

namespace {

double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double fa,
                        double fb, double fm, double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    if (depth <= 0 || std::abs(left + right - whole) < 15.0 * tol)
        return left + right + (left + right - whole) / 15.0;
    return adaptive_simpson(f, a, m, fa, fm, flm, left, tol / 2.0, depth - 1) +
           adaptive_simpson(f, m, b, fm, fb, frm, right, tol / 2.0, depth - 1);
}

double integrate(const std::function<double(double)>& f, double a, double b, double tol) {
    const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return adaptive_simpson(f, a, b, fa, fb, fm, whole, tol, 40);
}

}  // namespace

TEST_SUITE("reference_laws") {

TEST_CASE("rayleigh cdf basics") {
    CHECK(rayleigh_cdf(0.0) == 0.0);
    CHECK(rayleigh_cdf(-3.0) == 0.0);
    CHECK(rayleigh_cdf(50.0) == doctest::Approx(1.0));
    CHECK(rayleigh_cdf(std::sqrt(2.0 * std::log(2.0))) == doctest::Approx(0.5));  // median
}

TEST_CASE("chi(2k) cdf identities") {
    for (double x = 0.1; x < 6.0; x += 0.37)
        CHECK(chi2k_cdf(1, x) == doctest::Approx(rayleigh_cdf(x)).epsilon(1e-12));
    // k = 2: integrate the density by parts
    for (double x = 0.1; x < 6.0; x += 0.41) {
        const double expect = 1.0 - (1.0 + 0.5 * x * x) * std::exp(-0.5 * x * x);
        CHECK(chi2k_cdf(2, x) == doctest::Approx(expect).epsilon(1e-12));
    }
    CHECK(chi2k_cdf(3, 0.0) == 0.0);
    CHECK(chi2k_cdf(2, 1.0) == doctest::Approx(0.0902040104310499).epsilon(1e-12));
}

TEST_CASE("chi(2k) cdf is monotone into [0,1] and matches quadrature to 1e-10") {
    for (int k = 1; k <= 6; ++k) {
        double prev = 0.0;
        for (double x = 0.25; x <= 10.0; x += 0.25) {
            const double c = chi2k_cdf(k, x);
            CHECK(c >= prev);
            CHECK(c <= 1.0);
            prev = c;
            const double quad =
                integrate([k](double t) { return chi2k_pdf(k, t); }, 0.0, x, 1e-13);
            CHECK(std::abs(c - quad) < 1e-10);
        }
    }
}

TEST_CASE("ks statistic constructions") {
    ReferenceLaw law = ReferenceLaw::rayleigh();

    // constant sample at the median
    std::vector<double> constant(64, std::sqrt(2.0 * std::log(2.0)));
    CHECK(ks_statistic(constant, law) == doctest::Approx(0.5));

    // the law's own quantiles at (i - 1/2)/N
    const int n = 1000;
    std::vector<double> quantiles(n);
    for (int i = 1; i <= n; ++i)
        quantiles[i - 1] = rayleigh_quantile((i - 0.5) / n);
    CHECK(ks_statistic(quantiles, law) == doctest::Approx(1.0 / (2.0 * n)).epsilon(1e-9));

    CHECK_THROWS_AS(ks_statistic({}, law), std::invalid_argument);
}

TEST_CASE("exact inverse-cdf sample: ks small, mean = sqrt(pi/2)") {
    Rng rng = make_rng(31);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    const int n = 100000;
    std::vector<double> sample(n);
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
        sample[i] = rayleigh_quantile(unif(rng));
        sum += sample[i];
    }
    CHECK(ks_statistic(sample, ReferenceLaw::rayleigh()) < 0.01);

    const double mean = sum / n;
    const double sd = std::sqrt(2.0 - M_PI / 2.0);
    CHECK(std::abs(mean - std::sqrt(M_PI / 2.0)) <= 3.0 * sd / std::sqrt(double(n)));
}

TEST_CASE("exponential reference") {
    auto law = ReferenceLaw::exponential(2.0);
    CHECK(law.cdf(0.0) == 0.0);
    CHECK(law.cdf(1.0) == doctest::Approx(1.0 - std::exp(-2.0)));
    CHECK_THROWS_AS(ReferenceLaw::exponential(0.0), std::invalid_argument);
    CHECK_THROWS_AS(ReferenceLaw::chi2k(0), std::invalid_argument);
}

}  // TEST_SUITE
