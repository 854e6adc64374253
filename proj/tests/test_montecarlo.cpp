#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "fatequator/montecarlo.hpp"

using namespace fatequator;

namespace {
constexpr std::uint64_t kN = 20000;
const double kTorusEps = std::asin(1.0 / (2.0 * std::sqrt(2.0)));
}  // namespace

TEST_CASE("occupancy estimates carry consistent binomial errors") {
    const CliffordTorus torus({1, 1});
    const auto p = SpherePoint::axis(3, 0);
    const auto est = estimate_strip_occupancy(torus, p, 0.5, kN, SeedStream{1, 0});
    CHECK(est.sample_count == kN);
    CHECK(est.fraction >= 0.0);
    CHECK(est.fraction <= 1.0);
    CHECK(est.std_err ==
          doctest::Approx(std::sqrt(est.fraction * (1.0 - est.fraction) / kN)).epsilon(1e-12));

    // max |cos r_p| on this torus is 1/sqrt(2) < sin(1.0): the strip absorbs
    // everything and the stderr floor 1/(2N) kicks in
    const auto sure = estimate_strip_occupancy(torus, p, 1.0, kN, SeedStream{1, 1});
    CHECK(sure.fraction == 1.0);
    CHECK(sure.std_err == 0.5 / kN);
}

TEST_CASE("strip occupancy agrees with the closed forms") {
    const CliffordTorus torus({1, 1});
    const auto p = SpherePoint::axis(3, 0);
    const auto est = estimate_strip_occupancy(torus, p, kTorusEps, 100000, SeedStream{2, 0});
    CHECK(std::fabs(est.fraction - 1.0 / 3.0) <= 4.0 * est.std_err);
    CHECK(*exact_strip_occupancy(torus, p, kTorusEps) == doctest::Approx(1.0 / 3.0).epsilon(1e-12));

    const GreatSubsphere sub(3, 9);
    for (double e : {0.4, 0.9}) {
        const auto in_span =
            estimate_strip_occupancy(sub, SpherePoint::axis(9, 2), e, kN, SeedStream{2, 7});
        CHECK(std::fabs(in_span.fraction - strip_fraction(3, e)) <= 4.0 * in_span.std_err);
    }

    // ambient p off the span: law scales by the projection norm rho
    auto gen = SeedStream{2, 9}.generator();
    std::vector<double> pv(10);
    sample_unit_sphere_into(gen, pv);
    const SpherePoint p_ambient(pv);
    for (double e : {0.3, 0.8}) {
        const auto est_a = estimate_strip_occupancy(sub, p_ambient, e, 100000, SeedStream{2, 11});
        const double closed = *exact_strip_occupancy(sub, p_ambient, e);
        CHECK(std::fabs(est_a.fraction - closed) <= 4.0 * std::max(est_a.std_err, 0.5 / 100000.0));
    }
}

TEST_CASE("estimates are bit-identical across worker counts") {
    const CliffordTorus torus({2, 1});
    const auto p = SpherePoint::axis(4, 0);
    const auto w1 = estimate_strip_occupancy(torus, p, 0.6, 100000, SeedStream{3, 0}, 1);
    const auto w4 = estimate_strip_occupancy(torus, p, 0.6, 100000, SeedStream{3, 0}, 4);
    const auto w8 = estimate_strip_occupancy(torus, p, 0.6, 100000, SeedStream{3, 0}, 8);
    CHECK(w1.fraction == w4.fraction);
    CHECK(w1.fraction == w8.fraction);
    CHECK(w1.std_err == w8.std_err);

    const auto m1 = estimate_moments(torus, p, 6, 50000, SeedStream{3, 1}, 1);
    const auto m8 = estimate_moments(torus, p, 6, 50000, SeedStream{3, 1}, 8);
    for (std::size_t k = 0; k < m1.size(); ++k) {
        CHECK(m1[k].estimate == m8[k].estimate);
        CHECK(m1[k].std_err == m8[k].std_err);
    }
}

TEST_CASE("submersion occupancy realizes the fiber-bundle equality") {
    const auto p = SpherePoint::axis(4, 3);
    OccupancyEstimate first;
    for (double delta : {0.1, 1.0, 10.0}) {
        const ProductSubmersion sub(4, delta);
        const auto est = estimate_submersion_occupancy(sub, p, 0.7, kN, SeedStream{4, 0});
        CHECK(std::fabs(est.fraction - strip_fraction(4, 0.7)) <= 4.0 * est.std_err);
        if (delta == 0.1)
            first = est;
        else
            CHECK(est.fraction == first.fraction);  // the fiber scale never enters the draw
    }
    const ProductSubmersion s2(2, 1.0);
    const auto archimedes = estimate_submersion_occupancy(s2, SpherePoint::axis(2, 0),
                                                          std::numbers::pi / 6.0, kN, SeedStream{4, 1});
    CHECK(std::fabs(archimedes.fraction - 0.5) <= 4.0 * archimedes.std_err);
    CHECK_THROWS_AS(
        estimate_submersion_occupancy(s2, SpherePoint::axis(3, 0), 0.5, kN, SeedStream{}),
        std::invalid_argument);
}

TEST_CASE("two-piece classification") {
    const GreatSubsphere sub(3, 9);
    const auto orthogonal = two_piece_classify(sub, SpherePoint::axis(9, 9), kN, 1e-9, SeedStream{5, 0});
    CHECK(orthogonal.verdict == TwoPiece::ContainedInEquator);
    CHECK(orthogonal.within_tol == kN);

    const auto in_span = two_piece_classify(sub, SpherePoint::axis(9, 1), 256, 1e-9, SeedStream{5, 1});
    CHECK(in_span.verdict == TwoPiece::Crosses);
    CHECK(in_span.above + in_span.below + in_span.within_tol == 256);

    const CliffordTorus torus({1, 1});
    const auto crossing = two_piece_classify(torus, SpherePoint::axis(3, 0), kN, 1e-9, SeedStream{5, 2});
    CHECK(crossing.verdict == TwoPiece::Crosses);

    // one sample can only ever give one-sided evidence
    const auto single = two_piece_classify(torus, SpherePoint::axis(3, 0), 1, 1e-9, SeedStream{5, 3});
    CHECK(single.verdict == TwoPiece::Indeterminate);
    CHECK_THROWS_AS(two_piece_classify(torus, SpherePoint::axis(3, 0), kN, 0.0, SeedStream{}),
                    std::domain_error);
}

TEST_CASE("empirical moments feed the domination check") {
    const GreatSubsphere sub(3, 9);
    const auto p = SpherePoint::axis(9, 0);
    const auto moments = estimate_moments(sub, p, 8, 50000, SeedStream{6, 0});
    REQUIRE(moments.size() == 9);
    CHECK(moments[0].estimate == 1.0);
    CHECK(moments[0].std_err == 0.0);
    CHECK(std::fabs(moments[1].estimate - 0.25) <= 4.0 * moments[1].std_err);
    for (const auto& v : moment_domination_check(moments, 3)) CHECK(v.pass);

    const CliffordTorus torus({1, 1});
    const auto tm = estimate_moments(torus, SpherePoint::axis(3, 0), 4, 50000, SeedStream{6, 1});
    CHECK(std::fabs(tm[1].estimate - 0.25) <= 4.0 * tm[1].std_err);
    for (const auto& v : moment_domination_check(tm, 2)) CHECK(v.pass);
}

TEST_CASE("extrinsic concentration report flags nothing on real instances") {
    const CliffordTorus torus({1, 1});
    const double deltas[] = {0.0, 0.2, 0.4};
    const auto report = extrinsic_concentration_report(torus, SpherePoint::axis(3, 0),
                                                       std::numbers::pi / 3.0, kN, SeedStream{7, 0},
                                                       deltas);
    CHECK(report.intrinsic_dim == 2);
    CHECK_FALSE(report.any_violation);
    REQUIRE(report.rows.size() == 5);  // main1, three grid deltas, best delta
    CHECK(report.rows[0].bound_name == "main1");
    CHECK(report.rows[0].bound_clamped ==
          doctest::Approx(main1_bound(2, std::numbers::pi / 3.0)).epsilon(1e-15));
    CHECK(report.rows[1].bound_clamped == 0.0);  // delta = 0 row is vacuous
    // occupancy at eps = pi/3 is identically 1: sqrt(2) sin(eps) > 1
    CHECK(report.occupancy.fraction == 1.0);
}

TEST_CASE("estimator argument validation") {
    const CliffordTorus torus({1, 1});
    CHECK_THROWS_AS(estimate_strip_occupancy(torus, SpherePoint::axis(4, 0), 0.5, 10, SeedStream{}),
                    std::invalid_argument);
    CHECK_THROWS_AS(estimate_strip_occupancy(torus, SpherePoint::axis(3, 0), 0.0, 10, SeedStream{}),
                    std::domain_error);
    CHECK_THROWS_AS(estimate_strip_occupancy(torus, SpherePoint::axis(3, 0), 0.5, 0, SeedStream{}),
                    std::invalid_argument);
    CHECK_THROWS_AS(estimate_moments(torus, SpherePoint::axis(3, 0), 0, 10, SeedStream{}),
                    std::domain_error);
}
