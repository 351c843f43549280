#include "gwcut/offspring.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace gwcut {

namespace {
constexpr double kMomentTol = 1e-12;
}

OffspringLaw OffspringLaw::poisson1() {
    OffspringLaw law;
    law.kind_ = OffspringKind::poisson1;
    law.name_ = "poisson1";
    law.mean_ = 1.0;
    law.variance_ = 1.0;
    law.sigma_ = 1.0;
    law.support_gcd_ = 1;
    return law;
}

OffspringLaw OffspringLaw::geometric_half() {
    OffspringLaw law;
    law.kind_ = OffspringKind::geometric_half;
    law.name_ = "geometric_half";
    law.mean_ = 1.0;
    law.variance_ = 2.0;
    law.sigma_ = std::sqrt(2.0);
    law.support_gcd_ = 1;
    return law;
}

OffspringLaw OffspringLaw::binary() {
    OffspringLaw law;
    law.kind_ = OffspringKind::binary;
    law.name_ = "binary";
    law.mean_ = 1.0;
    law.variance_ = 1.0;
    law.sigma_ = 1.0;
    law.support_gcd_ = 2;
    return law;
}

OffspringLaw OffspringLaw::custom(std::vector<double> probabilities) {
    if (probabilities.empty())
        throw std::invalid_argument("offspring law: empty probability table");

    double sum = 0.0, mean = 0.0, second = 0.0;
    int gcd = 0;
    for (std::size_t j = 0; j < probabilities.size(); ++j) {
        double p = probabilities[j];
        if (!(p >= 0.0) || !std::isfinite(p))
            throw std::invalid_argument("offspring law: negative or non-finite probability");
        if (p > 0.0) gcd = std::gcd(gcd, static_cast<int>(j));
        sum += p;
        mean += p * static_cast<double>(j);
        second += p * static_cast<double>(j) * static_cast<double>(j);
    }
    if (std::abs(sum - 1.0) > kMomentTol)
        throw std::invalid_argument("offspring law: probabilities do not sum to 1");
    if (std::abs(mean - 1.0) > kMomentTol)
        throw std::invalid_argument("offspring law: not critical (mean != 1)");
    double variance = second - mean * mean;
    if (!(variance > 0.0))
        throw std::invalid_argument("offspring law: variance must be positive");
    if (gcd == 0) gcd = 1;

    OffspringLaw law;
    law.kind_ = OffspringKind::custom;
    law.name_ = "custom";
    law.table_ = std::move(probabilities);
    law.mean_ = mean;
    law.variance_ = variance;
    law.sigma_ = std::sqrt(variance);
    law.support_gcd_ = gcd;
    return law;
}

OffspringLaw OffspringLaw::by_name(const std::string& name) {
    if (name == "poisson1") return poisson1();
    if (name == "geometric_half") return geometric_half();
    if (name == "binary") return binary();
    throw std::invalid_argument("unknown offspring law: " + name);
}

int OffspringLaw::sample(Rng& rng) const {
    switch (kind_) {
        case OffspringKind::poisson1: {
            std::poisson_distribution<int> d(1.0);
            return d(rng);
        }
        case OffspringKind::geometric_half: {
            std::geometric_distribution<int> d(0.5);
            return d(rng);
        }
        case OffspringKind::binary:
            return (rng() & 1u) ? 2 : 0;
        case OffspringKind::custom: {
            std::discrete_distribution<int> d(table_.begin(), table_.end());
            return d(rng);
        }
    }
    throw std::logic_error("unreachable");
}

bool OffspringLaw::has_rational_pmf() const {
    return kind_ == OffspringKind::binary || kind_ == OffspringKind::geometric_half;
}

Rational OffspringLaw::pmf_rational(int count) const {
    if (count < 0) return Rational(0);
    switch (kind_) {
        case OffspringKind::binary:
            return (count == 0 || count == 2) ? Rational(1, 2) : Rational(0);
        case OffspringKind::geometric_half:
            if (count > 60) throw std::overflow_error("geometric_half pmf: count too large");
            return Rational(1, 1LL << (count + 1));
        default:
            throw std::invalid_argument("exact pmf available only for binary and geometric_half");
    }
}

}  // namespace gwcut
