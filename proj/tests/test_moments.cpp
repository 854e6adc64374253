#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "fatequator/bounds.hpp"
#include "fatequator/moments.hpp"
#include "fatequator/special_functions.hpp"

using namespace fatequator;

TEST_CASE("cos_moment base cases and recurrence invariants") {
    for (int m : {1, 2, 9, 500}) {
        CHECK(cos_moment(m, 0) == 1.0);
        CHECK(cos_moment(m, 1) == doctest::Approx(1.0 / (m + 1)).epsilon(1e-15));
    }
    CHECK(cos_moment(1, 2) == doctest::Approx(0.375).epsilon(1e-15));  // 3/8 on the circle
    for (int m : {1, 3, 20}) {
        double prev = 1.0;
        for (int k = 1; k <= 40; ++k) {
            const double cur = cos_moment(m, k);
            CHECK(cur > 0.0);
            CHECK(cur < prev);
            CHECK(cur / prev == doctest::Approx((2.0 * k - 1.0) / (m + 2.0 * k - 1.0)).epsilon(1e-14));
            prev = cur;
        }
    }
    CHECK_THROWS_AS(cos_moment(0, 1), std::domain_error);
    CHECK_THROWS_AS(cos_moment(1, -1), std::domain_error);
}

TEST_CASE("MomentTable matches cos_moment") {
    const auto table = MomentTable::build(4, 12);
    CHECK(table.values.size() == 13);
    for (int k = 0; k <= 12; ++k)
        CHECK(table.values[static_cast<std::size_t>(k)] == cos_moment(4, k));
}

TEST_CASE("cos_moment agrees with the distance-density quadrature") {
    // the distance to p on S^m has density proportional to sin^{m-1}
    for (int m : {1, 2, 3, 8, 12}) {
        const auto weight = [m](double t) { return std::pow(std::sin(t), static_cast<double>(m - 1)); };
        const double denom = integrate(weight, 0.0, std::numbers::pi).value;
        for (int k : {0, 1, 2, 5, 11}) {
            const auto f = [&](double t) {
                const double c = std::cos(t);
                return std::pow(c * c, static_cast<double>(k)) * weight(t);
            };
            const double ratio = integrate(f, 0.0, std::numbers::pi).value / denom;
            CHECK(cos_moment(m, k) == doctest::Approx(ratio).epsilon(1e-11));
        }
    }
}

TEST_CASE("cos_mgf series behavior") {
    for (int m : {1, 5, 30}) CHECK(cos_mgf(m, 0.0) == 1.0);
    // frozen quadrature value of the circle average of e^{0.5 cos^2}
    CHECK(cos_mgf(1, 0.5) == doctest::Approx(1.3041668207086075).epsilon(1e-12));
    // leading series term
    for (int m : {1, 4, 19}) {
        const double h = 1e-6;
        CHECK(std::fabs((cos_mgf(m, h) - 1.0) / h - 1.0 / (m + 1)) < 1e-5);
    }
    // monotone in t
    for (int m : {1, 6}) {
        double prev = 0.0;
        for (double t : {0.0, 0.3, 0.8, 1.5, 2.5}) {
            const double v = cos_mgf(m, t);
            CHECK(v > prev);
            prev = v;
        }
    }
    CHECK_THROWS_AS(cos_mgf(0, 0.5), std::domain_error);
    CHECK_THROWS_AS(cos_mgf(1, 0.5, 0.0), std::domain_error);
    CHECK_THROWS_AS(cos_mgf(1, 1e7), std::runtime_error);  // term cap exceeded
}

TEST_CASE("cos_mgf matches direct quadrature of the exponential average") {
    for (int m : {1, 2, 3}) {
        const auto weight = [m](double t) { return std::pow(std::sin(t), static_cast<double>(m - 1)); };
        const double denom = integrate(weight, 0.0, std::numbers::pi).value;
        for (double t : {0.25, 1.0, 2.0}) {
            const auto f = [&](double r) {
                const double c = std::cos(r);
                return std::exp(t * c * c) * weight(r);
            };
            const double q = integrate(f, 0.0, std::numbers::pi).value / denom;
            CHECK(std::fabs(cos_mgf(m, t) - q) < 1e-8);
        }
    }
}

TEST_CASE("mgf_bound values and domain") {
    CHECK(mgf_bound(1, 1e-12) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(mgf_bound(1, 0.5) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
    CHECK(mgf_bound(3, 1.0) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
    CHECK_THROWS_AS(mgf_bound(3, 2.0), std::domain_error);  // t = (m+1)/2
    CHECK_THROWS_AS(mgf_bound(3, 0.0), std::domain_error);
}

TEST_CASE("cos_mgf stays below its closed-form majorant") {
    double worst = -1.0;
    for (int m = 1; m <= 10; ++m) {
        for (int i = 1; i <= 20; ++i) {
            const double t = 0.49 * (m + 1) * i / 20.0;
            worst = std::max(worst, cos_mgf(m, t) - mgf_bound(m, t));
        }
    }
    CHECK(worst <= 0.0);
}

TEST_CASE("main2 is the moments chain e^{-t eb^2} * mgf_bound at t = delta (m+1)") {
    for (int m : {1, 7, 23}) {
        for (double e : {0.3, 0.9, 1.4}) {
            for (double d : {0.05, 0.25, 15.0 / 32.0}) {
                const double t = d * (m + 1);
                const double sb = std::sin(e);
                const double chained = 1.0 - std::exp(-t * sb * sb) * mgf_bound(m, t);
                CHECK(std::fabs(main2_bound(m, e, d) - chained) < 1e-12);
            }
        }
    }
}

TEST_CASE("moment_domination_check verdicts") {
    // torus closed form: average of cos^2(alpha)/2 is 1/4 <= M_1(2) = 1/3
    std::vector<MomentEstimate> empirical = {{1.0, 0.0}, {0.25, 0.001}};
    const auto verdicts = moment_domination_check(empirical, 2);
    REQUIRE(verdicts.size() == 2);
    CHECK(verdicts[0].pass);  // k = 0: 1 <= 1
    CHECK(verdicts[0].limit == 1.0);
    CHECK(verdicts[1].pass);
    CHECK(verdicts[1].limit == doctest::Approx(1.0 / 3.0));

    std::vector<MomentEstimate> inflated = {{1.0, 0.0}, {0.5, 0.001}};
    CHECK_FALSE(moment_domination_check(inflated, 2)[1].pass);
    CHECK_THROWS_AS(moment_domination_check(empirical, 0), std::domain_error);
}
