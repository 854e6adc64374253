// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails. Monte Carlo criteria run on fixed seeds, so every run of
// this binary is bit-reproducible.

#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <string>
#include <vector>

#include "fatequator/fatequator.hpp"

using namespace fatequator;

namespace {

constexpr double kPi = std::numbers::pi;
int failures = 0;

class Timer {
public:
    Timer() : start_(std::chrono::steady_clock::now()) {}
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

void report(int index, const char* title, bool pass, const std::string& detail) {
    std::printf("[%s] %02d %s (%s)\n", pass ? "PASS" : "FAIL", index, title, detail.c_str());
    if (!pass) ++failures;
}

std::string fmt(const char* format, ...) {
    va_list args;
    va_start(args, format);
    char buf[256];
    std::vsnprintf(buf, sizeof buf, format, args);
    va_end(args);
    return buf;
}

SpherePoint random_point(int n, SplitMix64& gen) {
    std::vector<double> v(static_cast<std::size_t>(n) + 1);
    sample_unit_sphere_into(gen, v);
    return SpherePoint(std::move(v));
}

// 1. strip_fraction vs the adaptive-quadrature ratio on n in 1..100,
//    eps in {0.1, ..., 1.5}; under 5 s.
void criterion_1() {
    Timer timer;
    double worst = 0.0;
    for (int n = 1; n <= 100; ++n) {
        const auto f = [n](double t) { return std::pow(std::sin(t), static_cast<double>(n - 1)); };
        const double denom = integrate(f, 0.0, kPi).value;
        for (int i = 1; i <= 15; ++i) {
            const double e = 0.1 * i;
            const double num = integrate(f, 0.5 * kPi - e, 0.5 * kPi + e).value;
            worst = std::max(worst, std::fabs(strip_fraction(n, e) - num / denom));
        }
    }
    const double elapsed = timer.seconds();
    report(1, "exact-geometry quadrature oracle", worst <= 1e-9 && elapsed < 5.0,
           fmt("max |strip - quadrature| = %.3g (tol 1e-9), %.2f s (limit 5 s)", worst, elapsed));
}

// 2. Archimedes closed forms.
void criterion_2() {
    const double e2 = std::fabs(strip_fraction(2, kPi / 6.0) - 0.5);
    const double e1 = std::fabs(strip_fraction(1, kPi / 4.0) - 0.5);
    report(2, "Archimedes strip fractions", e2 <= 1e-12 && e1 <= 1e-12,
           fmt("|strip(2,pi/6)-1/2| = %.3g, |strip(1,pi/4)-1/2| = %.3g (tol 1e-12)", e2, e1));
}

// 3. Theorem B dominance: strip >= max(0, 1 - sqrt(pi/2) e^{-eps^2(n-1)/2}).
void criterion_3() {
    long violations = 0;
    double min_slack = 1.0;
    for (int n = 1; n <= 100; ++n) {
        for (int i = 1; i <= 15; ++i) {
            const double e = 0.1 * i;
            const double slack = strip_fraction(n, e) - std::max(0.0, equator_bound(n, e));
            min_slack = std::min(min_slack, slack);
            if (slack < 0.0) ++violations;
        }
    }
    report(3, "equatorial bound dominance", violations == 0,
           fmt("%ld violations on 1500 grid points, min slack %.3g", violations, min_slack));
}

// 4. Fat-equator limit at eps = 0.3: strictly increasing, crosses 0.99 at
//    the pinned N* = 74 <= 110, bracketed by the quadrature oracle.
void criterion_4() {
    constexpr int kGoldenNStar = 74;
    bool increasing = true;
    int n_star = -1;
    double prev = 0.0;
    for (int n = 1; n <= 300; ++n) {
        const double v = strip_fraction(n, 0.3);
        if (v <= prev) increasing = false;
        if (n_star < 0 && v > 0.99) n_star = n;
        prev = v;
    }
    const auto f = [](double t) {
        return std::pow(std::sin(t), static_cast<double>(kGoldenNStar - 1));
    };
    const auto g = [](double t) {
        return std::pow(std::sin(t), static_cast<double>(kGoldenNStar - 2));
    };
    const double at_star =
        integrate(f, 0.5 * kPi - 0.3, 0.5 * kPi + 0.3).value / integrate(f, 0.0, kPi).value;
    const double before_star =
        integrate(g, 0.5 * kPi - 0.3, 0.5 * kPi + 0.3).value / integrate(g, 0.0, kPi).value;
    const bool oracle_agrees = at_star > 0.99 && before_star <= 0.99;
    report(4, "fat-equator threshold N*",
           increasing && n_star == kGoldenNStar && n_star <= 110 && oracle_agrees,
           fmt("monotone=%d, N* = %d (golden %d, limit 110), oracle brackets %.6f | %.6f",
               increasing, n_star, kGoldenNStar, before_star, at_star));
}

// 5. Moment recurrence vs quadrature for m <= 50, k <= 20; M_1 exactness.
void criterion_5() {
    double worst = 0.0;
    for (int m = 1; m <= 50; ++m) {
        const auto weight = [m](double t) {
            return std::pow(std::sin(t), static_cast<double>(m - 1));
        };
        const double denom = integrate(weight, 0.0, kPi).value;
        for (int k = 0; k <= 20; ++k) {
            const auto f = [&](double t) {
                const double c = std::cos(t);
                return std::pow(c * c, static_cast<double>(k)) * weight(t);
            };
            const double ratio = integrate(f, 0.0, kPi).value / denom;
            worst = std::max(worst, std::fabs(cos_moment(m, k) - ratio));
        }
    }
    double worst_m1 = 0.0;
    for (int m = 1; m <= 50; ++m)
        worst_m1 = std::max(worst_m1, std::fabs(cos_moment(m, 1) - 1.0 / (m + 1)));
    report(5, "moment recurrence vs quadrature", worst <= 1e-10 && worst_m1 <= 1e-14,
           fmt("max recurrence err %.3g (tol 1e-10), max M_1 err %.3g (tol 1e-14)", worst,
               worst_m1));
}

// 6. MGF closed-form majorant on the 20-point t-grid per m in 1..30.
void criterion_6() {
    long violations = 0;
    double worst = -1.0;
    for (int m = 1; m <= 30; ++m) {
        for (int i = 1; i <= 20; ++i) {
            const double t = 0.49 * (m + 1) * i / 20.0;
            const double gap = cos_mgf(m, t) - mgf_bound(m, t);
            worst = std::max(worst, gap);
            if (gap > 0.0) ++violations;
        }
    }
    report(6, "MGF bound", violations == 0,
           fmt("%ld violations on 600 grid points, max F - bound = %.3g", violations, worst));
}

// 7. delta_0 = 15/32 calibration: the prefactor sqrt(1/(1-15/16)) is 4.
void criterion_7() {
    double worst = 0.0;
    for (int m = 1; m <= 100; ++m) {
        for (int i = 1; i <= 15; ++i) {
            const double e = 0.1 * i;
            const double sb = std::sin(e);
            const double direct = 1.0 - 4.0 * std::exp(-(15.0 / 32.0) * sb * sb * (m + 1));
            worst = std::max(worst, std::fabs(main2_bound(m, e, 15.0 / 32.0) - direct));
        }
    }
    report(7, "delta_0 = 15/32 calibration", worst <= 1e-12,
           fmt("max |main2(15/32) - (1 - 4 e^...)| = %.3g (tol 1e-12)", worst));
}

// 8. Clifford-torus extrinsic concentration at N = 1e6 over 20 (p, eps).
void criterion_8() {
    Timer timer;
    const CliffordTorus torus({1, 1});
    constexpr std::uint64_t kN = 1000000;
    auto gen = SeedStream{42, 9000}.generator();
    double worst_closed = -1.0, worst_bound = -1.0;
    for (int trial = 0; trial < 20; ++trial) {
        const bool axis_case = trial < 4;
        const SpherePoint p = axis_case ? SpherePoint::axis(3, trial) : random_point(3, gen);
        const double e = 0.15 + 1.35 * gen.next_double();
        const auto est = estimate_strip_occupancy(torus, p, e, kN,
                                                  SeedStream{42, 9100 + static_cast<unsigned>(trial)});
        const double allowance = 4.0 * std::max(est.std_err, 0.5 / kN);
        if (axis_case) {
            const double closed = *exact_strip_occupancy(torus, p, e);
            worst_closed = std::max(worst_closed, std::fabs(est.fraction - closed) - allowance);
        }
        const double m1 = std::max(0.0, main1_bound(2, e));
        const double m2 = std::max(0.0, main2_bound(2, e, main2_best_delta(2, e)));
        worst_bound =
            std::max(worst_bound, std::max(m1, m2) - (est.fraction + 4.0 * est.std_err));
    }
    const double elapsed = timer.seconds();
    report(8, "Clifford-torus extrinsic concentration",
           worst_closed <= 0.0 && worst_bound <= 0.0 && elapsed < 20.0,
           fmt("closed-form gap %.3g, bound gap %.3g (both <= 0), %.2f s (limit 20 s)",
               worst_closed, worst_bound, elapsed));
}

// 9. Great-subsphere reduction: S^3 in S^9 with p in the span.
void criterion_9() {
    const GreatSubsphere sub(3, 9);
    auto gen = SeedStream{42, 9200}.generator();
    std::vector<double> coeffs(4);
    fill_gaussian(gen, coeffs);
    const auto p = sub.span_point(coeffs);
    double worst = -1.0;
    std::uint64_t index = 0;
    for (double e : {0.3, 0.6, 0.9}) {
        const auto est =
            estimate_strip_occupancy(sub, p, e, 100000, SeedStream{42, 9210 + index++});
        worst =
            std::max(worst, std::fabs(est.fraction - strip_fraction(3, e)) - 4.0 * est.std_err);
    }
    report(9, "great-subsphere intrinsic reduction", worst <= 0.0,
           fmt("max |estimate - strip(3,eps)| - 4se = %.3g (<= 0)", worst));
}

// 10. Submersion equality for S^4 x S^1(delta), bit-identical across delta.
void criterion_10() {
    const auto p = SpherePoint::axis(4, 2);
    double worst = -1.0;
    bool identical = true;
    std::uint64_t index = 0;
    for (double e : {0.4, 0.8}) {
        const SeedStream stream{42, 9300 + index++};
        bool have_first = false;
        double first_fraction = 0.0;
        for (double delta : {0.1, 1.0, 10.0}) {
            const ProductSubmersion sub(4, delta);
            const auto est = estimate_submersion_occupancy(sub, p, e, 100000, stream);
            worst = std::max(worst,
                             std::fabs(est.fraction - strip_fraction(4, e)) - 4.0 * est.std_err);
            if (!have_first) {
                first_fraction = est.fraction;
                have_first = true;
            } else if (est.fraction != first_fraction) {
                identical = false;
            }
        }
    }
    report(10, "submersion fiber-bundle equality", worst <= 0.0 && identical,
           fmt("max |estimate - strip(4,eps)| - 4se = %.3g (<= 0), delta-invariant=%d", worst,
               identical));
}

// 11. Two-piece verdicts: torus always Crosses, orthogonal-p subsphere
//     ContainedInEquator.
void criterion_11() {
    const CliffordTorus torus({1, 1});
    auto gen = SeedStream{42, 9400}.generator();
    long crosses = 0;
    for (unsigned trial = 0; trial < 100; ++trial) {
        const auto p = random_point(3, gen);
        const auto verdict = two_piece_classify(torus, p, 10000, 1e-9, SeedStream{42, 9410 + trial});
        if (verdict.verdict == TwoPiece::Crosses) ++crosses;
    }
    const GreatSubsphere sub(3, 9);
    const auto contained =
        two_piece_classify(sub, SpherePoint::axis(9, 9), 10000, 1e-9, SeedStream{42, 9520});
    report(11, "two-piece dichotomy",
           crosses == 100 && contained.verdict == TwoPiece::ContainedInEquator,
           fmt("torus Crosses %ld/100, orthogonal subsphere verdict=%s", crosses,
               to_string(contained.verdict)));
}

// 12. cos(dist) Lipschitz-1 pairs and the zero spherical mean.
void criterion_12() {
    auto gen = SeedStream{42, 9600}.generator();
    const auto p = random_point(10, gen);
    const auto pts = sample_sphere(10, 200000, SeedStream{42, 9601});
    double worst_pair = -1.0;
    for (std::size_t i = 0; i + 1 < pts.size(); i += 2) {
        const double gap = std::fabs(inner(p, pts[i]) - inner(p, pts[i + 1]));
        worst_pair = std::max(worst_pair, gap - extrinsic_distance(pts[i], pts[i + 1]));
    }
    bool means_ok = true;
    std::string detail;
    std::uint64_t index = 0;
    for (int n : {2, 10, 50}) {
        auto pg = SeedStream{42, 9610 + index}.generator();
        const auto pn = random_point(n, pg);
        const auto est = estimate_cos_mean(n, pn, 1000000, SeedStream{42, 9620 + index++});
        const double limit = 4.0 * std::sqrt(1.0 / (n + 1)) / 1000.0;
        if (std::fabs(est.estimate) > limit) means_ok = false;
        detail += fmt("n=%d |mean|=%.2e<=%.2e ", n, std::fabs(est.estimate), limit);
    }
    report(12, "Lipschitz and zero-mean properties", worst_pair <= 1e-12 && means_ok,
           fmt("max pair excess %.3g (tol 1e-12); %s", worst_pair, detail.c_str()));
}

// 13. cmd_verify full: byte-identical CSV artifacts per seed and worker
//     count; one full pass under 2 minutes.
void criterion_13() {
    namespace fs = std::filesystem;
    Timer timer;
    const auto run1 = verify::run({verify::Level::full, 42, 1, ""});
    const double one_run_seconds = timer.seconds();
    const auto run2 = verify::run({verify::Level::full, 42, 1, ""});
    const auto run8 = verify::run({verify::Level::full, 42, 8, ""});

    const auto dir = fs::temp_directory_path() / "fatequator_acceptance";
    fs::create_directories(dir);
    const auto path1 = dir / "verify_full_a.csv";
    const auto path2 = dir / "verify_full_b.csv";
    std::ofstream(path1, std::ios::binary) << run1.csv;
    std::ofstream(path2, std::ios::binary) << run2.csv;
    std::ifstream in1(path1, std::ios::binary), in2(path2, std::ios::binary);
    const std::string bytes1((std::istreambuf_iterator<char>(in1)),
                             std::istreambuf_iterator<char>());
    const std::string bytes2((std::istreambuf_iterator<char>(in2)),
                             std::istreambuf_iterator<char>());

    const bool identical_runs = bytes1 == bytes2 && !bytes1.empty();
    const bool identical_workers = run1.csv == run8.csv;
    report(13, "full verification reproducibility",
           run1.all_pass && identical_runs && identical_workers && one_run_seconds < 120.0,
           fmt("all checks pass=%d, artifacts identical=%d, 1w vs 8w identical=%d, %.1f s "
               "(limit 120 s)",
               run1.all_pass, identical_runs, identical_workers, one_run_seconds));
}

}  // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    criterion_11();
    criterion_12();
    criterion_13();
    if (failures == 0)
        std::printf("acceptance: all 13 criteria passed\n");
    else
        std::printf("acceptance: %d criteria FAILED\n", failures);
    return failures == 0 ? 0 : 1;
}
