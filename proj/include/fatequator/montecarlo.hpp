#pragma once

#include <atomic>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "fatequator/bounds.hpp"
#include "fatequator/manifolds.hpp"
#include "fatequator/moments.hpp"
#include "fatequator/rng.hpp"
#include "fatequator/sphere_geometry.hpp"

namespace fatequator {

inline unsigned resolve_workers(unsigned workers) {
    if (workers != 0) return workers;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

inline constexpr std::uint64_t kSampleBlock = 16384;

// Runs fn(block_index, count) once per fixed-size block of the sample range,
// on up to `workers` threads. Sub-streams are keyed by block index and
// per-block results are folded in index order by the caller, so every result
// is bit-identical for any worker count.
template <class Fn>
void run_sample_blocks(std::uint64_t n_samples, unsigned workers, Fn&& fn) {
    const std::uint64_t n_blocks = (n_samples + kSampleBlock - 1) / kSampleBlock;
    const auto block_count = [&](std::uint64_t b) {
        const std::uint64_t first = b * kSampleBlock;
        return std::min(kSampleBlock, n_samples - first);
    };
    const unsigned use =
        static_cast<unsigned>(std::min<std::uint64_t>(resolve_workers(workers), n_blocks));
    if (use <= 1) {
        for (std::uint64_t b = 0; b < n_blocks; ++b) fn(b, block_count(b));
        return;
    }
    std::atomic<std::uint64_t> next{0};
    const auto worker = [&] {
        for (;;) {
            const std::uint64_t b = next.fetch_add(1, std::memory_order_relaxed);
            if (b >= n_blocks) return;
            fn(b, block_count(b));
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(use - 1);
    for (unsigned i = 0; i + 1 < use; ++i) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
}

// Plug-in binomial standard error with a 1/(2N) floor at the degenerate
// extremes.
inline double binomial_std_err(double fraction, std::uint64_t n) {
    if (fraction <= 0.0 || fraction >= 1.0) return 0.5 / static_cast<double>(n);
    return std::sqrt(fraction * (1.0 - fraction) / static_cast<double>(n));
}

struct OccupancyEstimate {
    double fraction = 0.0;
    double std_err = 0.0;
    std::uint64_t sample_count = 0;
    SeedStream seed;
};

enum class TwoPiece { ContainedInEquator, Crosses, Indeterminate };

inline const char* to_string(TwoPiece v) {
    switch (v) {
        case TwoPiece::ContainedInEquator: return "ContainedInEquator";
        case TwoPiece::Crosses: return "Crosses";
        default: return "Indeterminate";
    }
}

struct TwoPieceVerdict {
    TwoPiece verdict = TwoPiece::Indeterminate;
    std::uint64_t above = 0;       // samples with cos r_p > tol
    std::uint64_t below = 0;       // samples with cos r_p < -tol
    std::uint64_t within_tol = 0;  // the rest; the three counts sum to N
};

namespace detail {

template <class Instance>
void check_estimator_args(const Instance& instance, const SpherePoint& p, std::uint64_t n) {
    if (p.ambient_dimension() != instance.ambient_dim())
        throw std::invalid_argument("estimator: ambient dimension mismatch");
    if (n == 0) throw std::invalid_argument("estimator: requires N >= 1");
}

}  // namespace detail

// Fraction of N induced-volume samples of the instance lying in the strip
// Omega(p, eps), i.e. with |<p, x(q)>| < sin(eps). The comparison is the
// exact strict inequality; the boundary has measure zero under every
// implemented sampling law.
template <class Instance>
OccupancyEstimate estimate_strip_occupancy(const Instance& instance, const SpherePoint& p,
                                           double epsilon, std::uint64_t n_samples,
                                           SeedStream stream, unsigned workers = 0) {
    detail::check_estimator_args(instance, p, n_samples);
    if (!(epsilon > 0.0 && epsilon < 0.5 * std::numbers::pi))
        throw std::domain_error("estimate_strip_occupancy: requires epsilon in (0, pi/2)");
    const double eps_bar = std::sin(epsilon);
    const std::uint64_t n_blocks = (n_samples + kSampleBlock - 1) / kSampleBlock;
    std::vector<std::uint64_t> hits(n_blocks, 0);
    run_sample_blocks(n_samples, workers, [&](std::uint64_t b, std::uint64_t count) {
        auto gen = stream.child(b).generator();
        std::vector<double> buf(static_cast<std::size_t>(instance.ambient_dim()) + 1);
        std::vector<double> scratch(instance.scratch_size());
        std::uint64_t h = 0;
        for (std::uint64_t i = 0; i < count; ++i) {
            instance.sample_into(gen, buf, scratch);
            if (std::fabs(dot(p.span(), buf)) < eps_bar) ++h;
        }
        hits[b] = h;
    });
    std::uint64_t total = 0;
    for (std::uint64_t h : hits) total += h;
    OccupancyEstimate est;
    est.fraction = static_cast<double>(total) / static_cast<double>(n_samples);
    est.std_err = binomial_std_err(est.fraction, n_samples);
    est.sample_count = n_samples;
    est.seed = stream;
    return est;
}

// Fraction of total-space samples of S^n x S^1(delta) whose base point lies
// in Omega(p, eps); the fiber coordinate is drawn and discarded, realizing
// r_p = d_p o pi.
inline OccupancyEstimate estimate_submersion_occupancy(const ProductSubmersion& sub,
                                                       const SpherePoint& p, double epsilon,
                                                       std::uint64_t n_samples, SeedStream stream,
                                                       unsigned workers = 0) {
    if (p.ambient_dimension() != sub.base_dim)
        throw std::invalid_argument("estimate_submersion_occupancy: base dimension mismatch");
    if (n_samples == 0) throw std::invalid_argument("estimator: requires N >= 1");
    if (!(epsilon > 0.0 && epsilon < 0.5 * std::numbers::pi))
        throw std::domain_error("estimate_submersion_occupancy: requires epsilon in (0, pi/2)");
    const double eps_bar = std::sin(epsilon);
    const std::uint64_t n_blocks = (n_samples + kSampleBlock - 1) / kSampleBlock;
    std::vector<std::uint64_t> hits(n_blocks, 0);
    run_sample_blocks(n_samples, workers, [&](std::uint64_t b, std::uint64_t count) {
        auto gen = stream.child(b).generator();
        std::vector<double> buf(static_cast<std::size_t>(sub.base_dim) + 1);
        std::uint64_t h = 0;
        for (std::uint64_t i = 0; i < count; ++i) {
            sample_unit_sphere_into(gen, buf);
            gen.next_double();  // fiber angle, ignored by the projection
            if (std::fabs(dot(p.span(), buf)) < eps_bar) ++h;
        }
        hits[b] = h;
    });
    std::uint64_t total = 0;
    for (std::uint64_t h : hits) total += h;
    OccupancyEstimate est;
    est.fraction = static_cast<double>(total) / static_cast<double>(n_samples);
    est.std_err = binomial_std_err(est.fraction, n_samples);
    est.sample_count = n_samples;
    est.seed = stream;
    return est;
}

// Position of the sampled instance relative to the equator E(p).
// Indeterminate (one-sided evidence only) is a first-class outcome: finite
// sampling can refute one-sidedness but never certify containment.
template <class Instance>
TwoPieceVerdict two_piece_classify(const Instance& instance, const SpherePoint& p,
                                   std::uint64_t n_samples, double tol, SeedStream stream,
                                   unsigned workers = 0) {
    detail::check_estimator_args(instance, p, n_samples);
    if (!(tol > 0.0)) throw std::domain_error("two_piece_classify: requires tol > 0");
    const std::uint64_t n_blocks = (n_samples + kSampleBlock - 1) / kSampleBlock;
    struct Counts {
        std::uint64_t above = 0, below = 0, within = 0;
    };
    std::vector<Counts> counts(n_blocks);
    run_sample_blocks(n_samples, workers, [&](std::uint64_t b, std::uint64_t count) {
        auto gen = stream.child(b).generator();
        std::vector<double> buf(static_cast<std::size_t>(instance.ambient_dim()) + 1);
        std::vector<double> scratch(instance.scratch_size());
        Counts c;
        for (std::uint64_t i = 0; i < count; ++i) {
            instance.sample_into(gen, buf, scratch);
            const double d = dot(p.span(), buf);
            if (d > tol)
                ++c.above;
            else if (d < -tol)
                ++c.below;
            else
                ++c.within;
        }
        counts[b] = c;
    });
    TwoPieceVerdict verdict;
    for (const auto& c : counts) {
        verdict.above += c.above;
        verdict.below += c.below;
        verdict.within_tol += c.within;
    }
    if (verdict.above == 0 && verdict.below == 0)
        verdict.verdict = TwoPiece::ContainedInEquator;
    else if (verdict.above > 0 && verdict.below > 0)
        verdict.verdict = TwoPiece::Crosses;
    else
        verdict.verdict = TwoPiece::Indeterminate;
    return verdict;
}

// Empirical averages of cos^{2k}(r_p) for k = 0..K with per-k standard
// errors. Per-block double sums are folded in block order, so the result is
// independent of the worker count.
template <class Instance>
std::vector<MomentEstimate> estimate_moments(const Instance& instance, const SpherePoint& p,
                                             int k_max, std::uint64_t n_samples, SeedStream stream,
                                             unsigned workers = 0) {
    detail::check_estimator_args(instance, p, n_samples);
    if (k_max < 1) throw std::domain_error("estimate_moments: requires K >= 1");
    const std::size_t n_k = static_cast<std::size_t>(k_max) + 1;
    const std::uint64_t n_blocks = (n_samples + kSampleBlock - 1) / kSampleBlock;
    std::vector<std::vector<double>> block_sum(n_blocks), block_sumsq(n_blocks);
    run_sample_blocks(n_samples, workers, [&](std::uint64_t b, std::uint64_t count) {
        auto gen = stream.child(b).generator();
        std::vector<double> buf(static_cast<std::size_t>(instance.ambient_dim()) + 1);
        std::vector<double> scratch(instance.scratch_size());
        std::vector<double> sum(n_k, 0.0), sumsq(n_k, 0.0);
        for (std::uint64_t i = 0; i < count; ++i) {
            instance.sample_into(gen, buf, scratch);
            const double c = dot(p.span(), buf);
            const double c2 = c * c;
            double y = 1.0;
            sum[0] += 1.0;
            sumsq[0] += 1.0;
            for (std::size_t k = 1; k < n_k; ++k) {
                y *= c2;
                sum[k] += y;
                sumsq[k] += y * y;
            }
        }
        block_sum[b] = std::move(sum);
        block_sumsq[b] = std::move(sumsq);
    });
    std::vector<double> sum(n_k, 0.0), sumsq(n_k, 0.0);
    for (std::uint64_t b = 0; b < n_blocks; ++b) {
        for (std::size_t k = 0; k < n_k; ++k) {
            sum[k] += block_sum[b][k];
            sumsq[k] += block_sumsq[b][k];
        }
    }
    std::vector<MomentEstimate> moments(n_k);
    const double inv_n = 1.0 / static_cast<double>(n_samples);
    for (std::size_t k = 0; k < n_k; ++k) {
        const double mean = sum[k] * inv_n;
        const double var = std::max(0.0, sumsq[k] * inv_n - mean * mean);
        moments[k] = {mean, std::sqrt(var * inv_n)};
    }
    return moments;
}

// Empirical mean of cos(r_p) = <p, q> over uniform samples of S^n, with its
// standard error. The exact mean is zero.
inline MomentEstimate estimate_cos_mean(int n, const SpherePoint& p, std::uint64_t n_samples,
                                        SeedStream stream, unsigned workers = 0) {
    if (p.ambient_dimension() != n)
        throw std::invalid_argument("estimate_cos_mean: ambient dimension mismatch");
    if (n_samples == 0) throw std::invalid_argument("estimator: requires N >= 1");
    const std::uint64_t n_blocks = (n_samples + kSampleBlock - 1) / kSampleBlock;
    std::vector<double> block_sum(n_blocks, 0.0), block_sumsq(n_blocks, 0.0);
    run_sample_blocks(n_samples, workers, [&](std::uint64_t b, std::uint64_t count) {
        auto gen = stream.child(b).generator();
        std::vector<double> buf(static_cast<std::size_t>(n) + 1);
        double s = 0.0, sq = 0.0;
        for (std::uint64_t i = 0; i < count; ++i) {
            sample_unit_sphere_into(gen, buf);
            const double c = dot(p.span(), buf);
            s += c;
            sq += c * c;
        }
        block_sum[b] = s;
        block_sumsq[b] = sq;
    });
    double s = 0.0, sq = 0.0;
    for (std::uint64_t b = 0; b < n_blocks; ++b) {
        s += block_sum[b];
        sq += block_sumsq[b];
    }
    const double inv_n = 1.0 / static_cast<double>(n_samples);
    const double mean = s * inv_n;
    const double var = std::max(0.0, sq * inv_n - mean * mean);
    return {mean, std::sqrt(var * inv_n)};
}

// Closed-form strip occupancy for special (instance, p) pairs, used as the
// exact column next to Monte Carlo estimates.

// Any p: the law of <p, x(q)> on a great subsphere is rho * (first
// coordinate of S^m) where rho is the norm of p's projection onto the span.
inline std::optional<double> exact_strip_occupancy(const GreatSubsphere& instance,
                                                   const SpherePoint& p, double epsilon) {
    const double eps_bar = std::sin(epsilon);
    double rho_sq = 0.0;
    for (int i = 0; i <= instance.intrinsic_dim(); ++i) {
        const double c = dot(p.span(), instance.frame_row(i));
        rho_sq += c * c;
    }
    const double rho = std::sqrt(rho_sq);
    if (eps_bar >= rho) return 1.0;
    return strip_fraction(instance.intrinsic_dim(), std::asin(eps_bar / rho));
}

// Axis-supported p only: if p lives in the coordinate block of factor i,
// <p, x(q)> = r_i * (one coordinate of a uniform S^{m_i} point).
inline std::optional<double> exact_strip_occupancy(const CliffordTorus& instance,
                                                   const SpherePoint& p, double epsilon) {
    const double eps_bar = std::sin(epsilon);
    std::size_t offset = 0;
    for (const auto& f : instance.factors()) {
        const std::size_t len = static_cast<std::size_t>(f.dim) + 1;
        double in_block = 0.0, out_block = 0.0;
        for (std::size_t j = 0; j < p.coordinates().size(); ++j) {
            const double c = p.coordinates()[j];
            if (j >= offset && j < offset + len)
                in_block += c * c;
            else
                out_block += c * c;
        }
        if (out_block < 1e-28) {
            // p is supported in this factor block; rotate it to an axis.
            if (eps_bar >= f.radius) return 1.0;
            return strip_fraction(f.dim, std::asin(eps_bar / f.radius));
        }
        offset += len;
    }
    return std::nullopt;
}

inline std::optional<double> exact_strip_occupancy(const UniformSphere& instance,
                                                   const SpherePoint&, double epsilon) {
    return strip_fraction(instance.intrinsic_dim(), epsilon);
}

struct ConcentrationRow {
    std::string bound_name;
    std::optional<double> delta;
    double bound_clamped = 0.0;
    bool violated = false;  // estimate + 4 std_err < bound (a bug, not luck)
};

struct ConcentrationReport {
    int intrinsic_dim = 0;
    double epsilon = 0.0;
    OccupancyEstimate occupancy;
    std::vector<ConcentrationRow> rows;
    bool any_violation = false;
};

// Bundles the occupancy estimate with main1 and main2 (over the delta grid
// plus the best delta); a violated row means a theorem failed beyond the
// 4-sigma allowance, i.e. an implementation bug.
template <class Instance>
ConcentrationReport extrinsic_concentration_report(const Instance& instance, const SpherePoint& p,
                                                   double epsilon, std::uint64_t n_samples,
                                                   SeedStream stream,
                                                   std::span<const double> delta_grid,
                                                   unsigned workers = 0) {
    ConcentrationReport report;
    report.intrinsic_dim = instance.intrinsic_dim();
    report.epsilon = epsilon;
    report.occupancy = estimate_strip_occupancy(instance, p, epsilon, n_samples, stream, workers);
    const double allowance = report.occupancy.fraction + 4.0 * report.occupancy.std_err;
    const auto add = [&](std::string name, double raw, std::optional<double> delta) {
        ConcentrationRow row;
        row.bound_name = std::move(name);
        row.delta = delta;
        row.bound_clamped = std::max(0.0, raw);
        row.violated = allowance < row.bound_clamped;
        report.any_violation = report.any_violation || row.violated;
        report.rows.push_back(std::move(row));
    };
    const int m = instance.intrinsic_dim();
    add("main1", main1_bound(m, epsilon), std::nullopt);
    for (double d : delta_grid) add("main2", main2_bound(m, epsilon, d), d);
    const double best = main2_best_delta(m, epsilon);
    add("main2_best", main2_bound(m, epsilon, best), best);
    return report;
}

}  // namespace fatequator
