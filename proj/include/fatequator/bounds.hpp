#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "fatequator/sphere_geometry.hpp"

namespace fatequator {

// The bounds below return the raw formula values; several are negative
// (vacuous) in low dimension. Clamping happens only in bound_report.

// 1 - sqrt(pi/8) e^{-eps^2 (n-1)/2}: lower bound for vol(A_eps)/vol(S^n)
// when vol(A) >= vol(S^n)/2.
inline double fattening_bound(int n, double epsilon) {
    if (n < 1) throw std::domain_error("fattening_bound: requires n >= 1");
    if (!(epsilon >= 0.0 && epsilon <= 0.5 * std::numbers::pi))
        throw std::domain_error("fattening_bound: requires epsilon in [0, pi/2]");
    return 1.0 - std::sqrt(std::numbers::pi / 8.0) * std::exp(-0.5 * epsilon * epsilon * (n - 1));
}

// 1 - sqrt(pi/2) e^{-eps^2 (n-1)/2}: lower bound for the strip fraction.
inline double equator_bound(int n, double epsilon) {
    if (n < 1) throw std::domain_error("equator_bound: requires n >= 1");
    if (!(epsilon > 0.0 && epsilon < 0.5 * std::numbers::pi))
        throw std::domain_error("equator_bound: requires epsilon in (0, pi/2)");
    return 1.0 - std::sqrt(0.5 * std::numbers::pi) * std::exp(-0.5 * epsilon * epsilon * (n - 1));
}

// 1 - 4 e^{-delta sin^2(eps) (n+1)}: the Levy-mean strip bound. delta is the
// absolute constant the statement inherits; it is never defaulted here.
inline double mean_concentration_bound(int n, double epsilon, double delta) {
    if (n < 1) throw std::domain_error("mean_concentration_bound: requires n >= 1");
    if (!(epsilon > 0.0 && epsilon < 0.5 * std::numbers::pi))
        throw std::domain_error("mean_concentration_bound: requires epsilon in (0, pi/2)");
    if (!(delta > 0.0)) throw std::domain_error("mean_concentration_bound: requires delta > 0");
    const double s = std::sin(epsilon);
    return 1.0 - 4.0 * std::exp(-delta * s * s * (n + 1));
}

// 1 - 1/((m+1) sin^2 eps): occupancy bound for closed minimal immersions,
// polynomial rate.
inline double main1_bound(int m, double epsilon) {
    if (m < 1) throw std::domain_error("main1_bound: requires m >= 1");
    if (!(epsilon > 0.0 && epsilon < 0.5 * std::numbers::pi))
        throw std::domain_error("main1_bound: requires epsilon in (0, pi/2)");
    const double s = std::sin(epsilon);
    return 1.0 - 1.0 / ((m + 1) * s * s);
}

// 1 - sqrt(1/(1-2 delta)) e^{-delta sin^2(eps) (m+1)}: exponential-rate
// occupancy bound, valid for every delta in [0, 1/2).
inline double main2_bound(int m, double epsilon, double delta) {
    if (m < 1) throw std::domain_error("main2_bound: requires m >= 1");
    if (!(epsilon > 0.0 && epsilon < 0.5 * std::numbers::pi))
        throw std::domain_error("main2_bound: requires epsilon in (0, pi/2)");
    if (!(delta >= 0.0 && delta < 0.5))
        throw std::domain_error("main2_bound: requires delta in [0, 1/2)");
    const double s = std::sin(epsilon);
    return 1.0 - std::sqrt(1.0 / (1.0 - 2.0 * delta)) * std::exp(-delta * s * s * (m + 1));
}

// argmax over delta in [0, 1/2) of main2_bound. The first-order condition
// 1/(1 - 2 delta) = sin^2(eps) (m+1) gives delta = (1 - 1/s)/2 with
// s = sin^2(eps)(m+1), clamped to 0 when s <= 1.
inline double main2_best_delta(int m, double epsilon) {
    if (m < 1) throw std::domain_error("main2_best_delta: requires m >= 1");
    if (!(epsilon > 0.0 && epsilon < 0.5 * std::numbers::pi))
        throw std::domain_error("main2_best_delta: requires epsilon in (0, pi/2)");
    const double sb = std::sin(epsilon);
    const double s = sb * sb * (m + 1);
    return std::max(0.0, 0.5 * (1.0 - 1.0 / s));
}

// 1 - (1-a^2) e^{-eps sqrt(lambda1) ln(1+a)}: spectral fattening bound for a
// domain of volume fraction a; lambda1 is supplied by the caller.
inline double eigenvalue_bound(double epsilon, double lambda1, double a) {
    if (!(epsilon >= 0.0)) throw std::domain_error("eigenvalue_bound: requires epsilon >= 0");
    if (!(lambda1 > 0.0)) throw std::domain_error("eigenvalue_bound: requires lambda1 > 0");
    if (!(a > 0.0 && a <= 1.0)) throw std::domain_error("eigenvalue_bound: requires a in (0, 1]");
    return 1.0 - (1.0 - a * a) * std::exp(-epsilon * std::sqrt(lambda1) * std::log1p(a));
}

// 1 - c1 e^{-c2 eps sqrt(n-1)}: the conditional hypersurface bound with
// caller-supplied constants.
inline double yau_bound(int n, double epsilon, double c1, double c2) {
    if (n < 2) throw std::domain_error("yau_bound: requires n >= 2");
    if (!(epsilon >= 0.0)) throw std::domain_error("yau_bound: requires epsilon >= 0");
    if (!(c1 > 0.0 && c2 > 0.0)) throw std::domain_error("yau_bound: requires c1, c2 > 0");
    return 1.0 - c1 * std::exp(-c2 * epsilon * std::sqrt(static_cast<double>(n - 1)));
}

struct BoundParams {
    double delta;                   // in [0, 1/2); 15/32 matches the Levy-mean constant 4
    std::optional<double> lambda1;  // > 0, enables the eigenvalue row
    std::optional<double> a;        // in (0, 1], enables the eigenvalue row
    std::optional<double> c1;       // > 0, enables the Yau row
    std::optional<double> c2;       // > 0, enables the Yau row

    void validate() const {
        if (!(delta >= 0.0 && delta < 0.5))
            throw std::domain_error("BoundParams: requires delta in [0, 1/2)");
        if (lambda1 && !(*lambda1 > 0.0))
            throw std::domain_error("BoundParams: requires lambda1 > 0");
        if (a && !(*a > 0.0 && *a <= 1.0))
            throw std::domain_error("BoundParams: requires a in (0, 1]");
        if (c1 && !(*c1 > 0.0)) throw std::domain_error("BoundParams: requires c1 > 0");
        if (c2 && !(*c2 > 0.0)) throw std::domain_error("BoundParams: requires c2 > 0");
    }
};

struct BoundRow {
    std::string bound_name;
    double value = 0.0;                 // clamped at 0
    std::optional<double> delta;        // the delta the row was evaluated at
    std::optional<double> exact;        // the exact volume fraction the bound constrains
    std::optional<double> slack;        // exact - value; absent for parametric rows
};

struct BoundReport {
    int dimension = 0;
    double epsilon = 0.0;
    double exact_fraction = 0.0;  // strip_fraction(n, epsilon)
    std::vector<BoundRow> bound_values;
};

// Evaluates the strip fraction and every bound at m = n (the identity
// immersion), clamped at 0. The fattening row constrains the hemisphere
// fattening, so its exact counterpart is cap_fraction(n, pi/2 + eps); the
// eigenvalue and Yau rows are parametric evaluators and carry no slack.
inline BoundReport bound_report(int n, double epsilon, const BoundParams& params) {
    params.validate();
    BoundReport report;
    report.dimension = n;
    report.epsilon = epsilon;
    report.exact_fraction = strip_fraction(n, epsilon);

    const auto clamped = [](double v) { return std::max(0.0, v); };
    const auto strip_row = [&](std::string name, double raw, std::optional<double> delta) {
        const double v = clamped(raw);
        report.bound_values.push_back(
            {std::move(name), v, delta, report.exact_fraction, report.exact_fraction - v});
    };

    {
        const double cap_exact = cap_fraction(n, 0.5 * std::numbers::pi + epsilon);
        const double v = clamped(fattening_bound(n, epsilon));
        report.bound_values.push_back({"fattening", v, std::nullopt, cap_exact, cap_exact - v});
    }
    strip_row("equator", equator_bound(n, epsilon), std::nullopt);
    if (params.delta > 0.0)
        strip_row("mean_concentration", mean_concentration_bound(n, epsilon, params.delta),
                  params.delta);
    strip_row("main1", main1_bound(n, epsilon), std::nullopt);
    strip_row("main2", main2_bound(n, epsilon, params.delta), params.delta);
    {
        const double best = main2_best_delta(n, epsilon);
        strip_row("main2_best", main2_bound(n, epsilon, best), best);
    }
    if (params.lambda1 && params.a) {
        const double v = clamped(eigenvalue_bound(epsilon, *params.lambda1, *params.a));
        report.bound_values.push_back({"eigenvalue", v, std::nullopt, std::nullopt, std::nullopt});
    }
    if (params.c1 && params.c2 && n >= 2) {
        const double v = clamped(yau_bound(n, epsilon, *params.c1, *params.c2));
        report.bound_values.push_back({"yau", v, std::nullopt, std::nullopt, std::nullopt});
    }
    return report;
}

}  // namespace fatequator
