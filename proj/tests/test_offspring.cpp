#include <cmath>

#include "doctest.h"
#include "gwcut/offspring.hpp"
#include "gwcut/rng.hpp"

using namespace gwcut;

TEST_SUITE("offspring") {

TEST_CASE("built-in moments and spans") {
    auto p = OffspringLaw::poisson1();
    CHECK(p.mean() == doctest::Approx(1.0));
    CHECK(p.variance() == doctest::Approx(1.0));
    CHECK(p.support_gcd() == 1);

    auto g = OffspringLaw::geometric_half();
    CHECK(g.mean() == doctest::Approx(1.0));
    CHECK(g.variance() == doctest::Approx(2.0));
    CHECK(g.support_gcd() == 1);

    auto b = OffspringLaw::binary();
    CHECK(b.mean() == doctest::Approx(1.0));
    CHECK(b.variance() == doctest::Approx(1.0));
    CHECK(b.support_gcd() == 2);
}

TEST_CASE("custom law validation") {
    // two-point {0, 2} with equal mass is the binary law
    auto law = OffspringLaw::custom({0.5, 0.0, 0.5});
    CHECK(law.mean() == doctest::Approx(1.0));
    CHECK(law.variance() == doctest::Approx(1.0));
    CHECK(law.support_gcd() == 2);

    // three-point law on {0,1,2} with mean 1 passes
    CHECK(OffspringLaw::custom({0.25, 0.5, 0.25}).variance() == doctest::Approx(0.5));

    CHECK_THROWS_AS(OffspringLaw::custom({0.4, 0.0, 0.5}), std::invalid_argument);   // sum != 1
    CHECK_THROWS_AS(OffspringLaw::custom({0.7, 0.0, 0.3, 0.0}), std::invalid_argument);  // mean != 1
    CHECK_THROWS_AS(OffspringLaw::custom({-0.1, 1.1}), std::invalid_argument);
    CHECK_THROWS_AS(OffspringLaw::custom({0.0, 1.0}), std::invalid_argument);  // zero variance
}

TEST_CASE("rational pmf") {
    auto b = OffspringLaw::binary();
    CHECK(b.pmf_rational(0) == Rational(1, 2));
    CHECK(b.pmf_rational(1) == Rational(0));
    CHECK(b.pmf_rational(2) == Rational(1, 2));
    auto g = OffspringLaw::geometric_half();
    CHECK(g.pmf_rational(0) == Rational(1, 2));
    CHECK(g.pmf_rational(3) == Rational(1, 16));
    CHECK_THROWS_AS(OffspringLaw::poisson1().pmf_rational(1), std::invalid_argument);
}

TEST_CASE("sampling is deterministic per seed and matches moments") {
    for (auto name : {"poisson1", "geometric_half", "binary"}) {
        auto law = OffspringLaw::by_name(name);
        Rng a = make_rng(7), b = make_rng(7);
        for (int i = 0; i < 100; ++i) CHECK(law.sample(a) == law.sample(b));

        Rng rng = make_rng(13);
        const int reps = 200000;
        double sum = 0, sq = 0;
        for (int i = 0; i < reps; ++i) {
            int x = law.sample(rng);
            sum += x;
            sq += static_cast<double>(x) * x;
        }
        double mean = sum / reps;
        double var = sq / reps - mean * mean;
        CHECK(std::abs(mean - 1.0) < 3.0 * law.sigma() / std::sqrt(reps));
        CHECK(std::abs(var - law.variance()) < 0.1);
    }
}

TEST_CASE("unknown name rejected") {
    CHECK_THROWS_AS(OffspringLaw::by_name("zeta"), std::invalid_argument);
}

}  // TEST_SUITE
