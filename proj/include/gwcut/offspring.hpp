#pragma once

#include <string>
#include <vector>

#include "gwcut/rational.hpp"
#include "gwcut/rng.hpp"

namespace gwcut {

enum class OffspringKind { poisson1, geometric_half, binary, custom };

/*
 * Critical offspring distribution (mean 1, finite positive variance).
 * Built-ins:
 *   poisson1        nu(j) = e^{-1}/j!          sigma^2 = 1, span 1
 *   geometric_half  nu(j) = 2^{-(j+1)}         sigma^2 = 2, span 1
 *   binary          nu(0) = nu(2) = 1/2        sigma^2 = 1, span 2
 * Custom laws are finite probability tables indexed by child count.
 * The span (gcd of the support) controls which sizes n are reachable:
 * the conditioning on total progeny n requires n-1 to be a multiple of it.
 */
class OffspringLaw {
public:
    static OffspringLaw poisson1();
    static OffspringLaw geometric_half();
    static OffspringLaw binary();
    static OffspringLaw custom(std::vector<double> probabilities);
    static OffspringLaw by_name(const std::string& name);

    OffspringKind kind() const { return kind_; }
    const std::string& name() const { return name_; }
    double mean() const { return mean_; }
    double variance() const { return variance_; }
    double sigma() const { return sigma_; }
    int support_gcd() const { return support_gcd_; }

    int sample(Rng& rng) const;

    // Exact point mass, available for the dyadic built-ins (binary,
    // geometric_half); used by the enumeration machinery.
    bool has_rational_pmf() const;
    Rational pmf_rational(int count) const;

    // True when sequences conditioned on their sum can be drawn directly
    // (multinomial / uniform-composition / fixed-subset shortcuts).
    bool has_exact_conditional() const { return kind_ != OffspringKind::custom; }

    // Custom tables only; empty for the analytic built-ins.
    const std::vector<double>& table() const { return table_; }

private:
    OffspringLaw() = default;

    OffspringKind kind_ = OffspringKind::custom;
    std::string name_;
    std::vector<double> table_;
    double mean_ = 0.0;
    double variance_ = 0.0;
    double sigma_ = 0.0;
    int support_gcd_ = 1;
};

}  // namespace gwcut
