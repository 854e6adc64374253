#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "fatequator/rng.hpp"
#include "fatequator/sphere_geometry.hpp"

namespace fatequator {

// Uniform point on the unit sphere spanned by out: normalized standard
// Gaussian vector. Consumption per call is fixed by out.size().
inline void sample_unit_sphere_into(SplitMix64& gen, std::span<double> out) {
    fill_gaussian(gen, out);
    double sq = 0.0;
    for (double c : out) sq += c * c;
    const double inv = 1.0 / std::sqrt(sq);
    for (double& c : out) c *= inv;
}

// S^n itself, exposed with the same sampling interface as the minimal
// instances; doubles as the identity immersion.
class UniformSphere {
public:
    explicit UniformSphere(int n) : n_(n) {
        if (n < 1) throw std::invalid_argument("UniformSphere: requires n >= 1");
    }
    int intrinsic_dim() const { return n_; }
    int ambient_dim() const { return n_; }
    std::size_t scratch_size() const { return 0; }
    void sample_into(SplitMix64& gen, std::span<double> out, std::span<double>) const {
        sample_unit_sphere_into(gen, out);
    }

private:
    int n_;
};

// Totally geodesic S^m inside S^n, stored as an orthonormal frame of m+1
// ambient vectors. Sampling draws a uniform point of S^m and pushes it
// through the frame.
class GreatSubsphere {
public:
    // Frame = the first m+1 coordinate axes.
    GreatSubsphere(int intrinsic_dim, int ambient_dim) : m_(intrinsic_dim), n_(ambient_dim) {
        check_dims();
        frame_.assign(static_cast<std::size_t>(m_ + 1) * (n_ + 1), 0.0);
        for (int i = 0; i <= m_; ++i) frame_[row(i) + static_cast<std::size_t>(i)] = 1.0;
    }

    GreatSubsphere(int intrinsic_dim, int ambient_dim, const std::vector<std::vector<double>>& frame)
        : m_(intrinsic_dim), n_(ambient_dim) {
        check_dims();
        if (frame.size() != static_cast<std::size_t>(m_) + 1)
            throw std::invalid_argument("GreatSubsphere: frame must have m+1 vectors");
        frame_.reserve(static_cast<std::size_t>(m_ + 1) * (n_ + 1));
        for (const auto& v : frame) {
            if (v.size() != static_cast<std::size_t>(n_) + 1)
                throw std::invalid_argument("GreatSubsphere: frame vectors must have n+1 entries");
            frame_.insert(frame_.end(), v.begin(), v.end());
        }
        for (int i = 0; i <= m_; ++i) {
            for (int j = i; j <= m_; ++j) {
                const double d = dot(frame_row(i), frame_row(j));
                const double want = (i == j) ? 1.0 : 0.0;
                if (std::fabs(d - want) > 1e-10)
                    throw std::invalid_argument("GreatSubsphere: frame is not orthonormal");
            }
        }
    }

    int intrinsic_dim() const { return m_; }
    int ambient_dim() const { return n_; }
    std::span<const double> frame_row(int i) const {
        return {frame_.data() + row(i), static_cast<std::size_t>(n_) + 1};
    }

    std::size_t scratch_size() const { return static_cast<std::size_t>(m_) + 1; }

    void sample_into(SplitMix64& gen, std::span<double> out, std::span<double> scratch) const {
        sample_unit_sphere_into(gen, scratch);
        for (int j = 0; j <= n_; ++j) out[static_cast<std::size_t>(j)] = 0.0;
        for (int i = 0; i <= m_; ++i) {
            const double c = scratch[static_cast<std::size_t>(i)];
            const auto r = frame_row(i);
            for (int j = 0; j <= n_; ++j) out[static_cast<std::size_t>(j)] += c * r[j];
        }
    }

    // Unit combination of the frame rows; a point of the subsphere's span.
    SpherePoint span_point(std::span<const double> coefficients) const {
        if (coefficients.size() != static_cast<std::size_t>(m_) + 1)
            throw std::invalid_argument("GreatSubsphere: need m+1 coefficients");
        std::vector<double> v(static_cast<std::size_t>(n_) + 1, 0.0);
        for (int i = 0; i <= m_; ++i) {
            const auto r = frame_row(i);
            for (int j = 0; j <= n_; ++j) v[static_cast<std::size_t>(j)] += coefficients[i] * r[j];
        }
        return SpherePoint::normalized(std::move(v));
    }

private:
    void check_dims() const {
        if (m_ < 1) throw std::invalid_argument("GreatSubsphere: requires m >= 1");
        if (n_ < m_) throw std::invalid_argument("GreatSubsphere: requires n >= m");
    }
    std::size_t row(int i) const { return static_cast<std::size_t>(i) * (n_ + 1); }

    int m_, n_;
    std::vector<double> frame_;  // (m+1) x (n+1), row-major
};

// Product of round factor spheres S^{m_1}(r_1) x ... x S^{m_k}(r_k) inside
// S^n, n = sum(m_i + 1) - 1. The induced metric is the product of the round
// factor metrics, so independent uniform factor samples scaled by r_i give
// exactly the normalized induced volume.
class CliffordTorus {
public:
    struct Factor {
        int dim = 0;
        double radius = 0.0;
    };

    // Radii derived from the minimality condition r_i = sqrt(m_i / m).
    explicit CliffordTorus(const std::vector<int>& factor_dims) {
        if (factor_dims.empty()) throw std::invalid_argument("CliffordTorus: needs >= 1 factor");
        int m = 0;
        for (int d : factor_dims) {
            if (d < 1) throw std::invalid_argument("CliffordTorus: factor dims must be >= 1");
            m += d;
        }
        factors_.reserve(factor_dims.size());
        for (int d : factor_dims) factors_.push_back({d, std::sqrt(static_cast<double>(d) / m)});
        finish();
    }

    // Unchecked radii; exists to build failing minimality-certificate cases.
    static CliffordTorus with_radii(std::vector<Factor> factors) {
        if (factors.empty()) throw std::invalid_argument("CliffordTorus: needs >= 1 factor");
        for (const auto& f : factors) {
            if (f.dim < 1) throw std::invalid_argument("CliffordTorus: factor dims must be >= 1");
            if (!(f.radius > 0.0)) throw std::invalid_argument("CliffordTorus: radii must be > 0");
        }
        CliffordTorus t;
        t.factors_ = std::move(factors);
        t.finish();
        return t;
    }

    int intrinsic_dim() const { return m_; }
    int ambient_dim() const { return n_; }
    const std::vector<Factor>& factors() const { return factors_; }

    std::size_t scratch_size() const { return 0; }

    void sample_into(SplitMix64& gen, std::span<double> out, std::span<double>) const {
        std::size_t offset = 0;
        for (const auto& f : factors_) {
            const std::size_t len = static_cast<std::size_t>(f.dim) + 1;
            auto block = out.subspan(offset, len);
            sample_unit_sphere_into(gen, block);
            for (double& c : block) c *= f.radius;
            offset += len;
        }
    }

private:
    CliffordTorus() = default;
    void finish() {
        m_ = 0;
        n_ = -1;
        for (const auto& f : factors_) {
            m_ += f.dim;
            n_ += f.dim + 1;
        }
    }

    std::vector<Factor> factors_;
    int m_ = 0, n_ = 0;
};

struct MinimalityCertificate {
    bool pass = false;
    std::vector<double> residuals;  // |m_i / r_i^2 - m| per factor
};

// Takahashi's condition on a product of round spheres: the coordinate
// functions of factor i satisfy Delta x = -(m_i / r_i^2) x, so the torus is
// minimal exactly when m_i / r_i^2 = m for every factor.
inline MinimalityCertificate minimality_certificate(const CliffordTorus& torus,
                                                    double tol = 1e-9) {
    MinimalityCertificate cert;
    cert.pass = true;
    const double m = torus.intrinsic_dim();
    for (const auto& f : torus.factors()) {
        const double residual = std::fabs(f.dim / (f.radius * f.radius) - m);
        cert.residuals.push_back(residual);
        if (!(residual < tol)) cert.pass = false;
    }
    return cert;
}

// S^n x S^1(delta) with the projection onto the first factor; the fibers
// are totally geodesic circles, so the submersion is minimal for every
// delta.
struct ProductSubmersion {
    int base_dim = 0;
    double fiber_scale = 0.0;

    ProductSubmersion(int n, double delta) : base_dim(n), fiber_scale(delta) {
        if (n < 1) throw std::invalid_argument("ProductSubmersion: requires n >= 1");
        if (!(delta > 0.0)) throw std::invalid_argument("ProductSubmersion: requires delta > 0");
    }
};

struct TotalSpaceSample {
    SpherePoint base;
    double fiber_angle = 0.0;  // in [0, 2 pi)
};

inline std::vector<SpherePoint> sample_sphere(int n, std::uint64_t count, SeedStream stream) {
    if (n < 1) throw std::domain_error("sample_sphere: requires n >= 1");
    auto gen = stream.generator();
    std::vector<SpherePoint> points;
    points.reserve(count);
    std::vector<double> buf(static_cast<std::size_t>(n) + 1);
    for (std::uint64_t i = 0; i < count; ++i) {
        sample_unit_sphere_into(gen, buf);
        points.push_back(SpherePoint(buf));
    }
    return points;
}

// Samples distributed by the instance's normalized induced volume, as
// ambient coordinates.
template <class Instance>
std::vector<SpherePoint> sample_minimal_instance(const Instance& instance, std::uint64_t count,
                                                 SeedStream stream) {
    auto gen = stream.generator();
    std::vector<SpherePoint> points;
    points.reserve(count);
    std::vector<double> buf(static_cast<std::size_t>(instance.ambient_dim()) + 1);
    std::vector<double> scratch(instance.scratch_size());
    for (std::uint64_t i = 0; i < count; ++i) {
        instance.sample_into(gen, buf, scratch);
        points.push_back(SpherePoint(buf));
    }
    return points;
}

// Normalized product volume of S^n x S^1(delta): base uniform on S^n, fiber
// angle uniform and independent. The fiber scale multiplies total volume
// only, never the normalized law, so delta does not enter the draw.
inline std::vector<TotalSpaceSample> sample_submersion_total_space(const ProductSubmersion& sub,
                                                                   std::uint64_t count,
                                                                   SeedStream stream) {
    auto gen = stream.generator();
    std::vector<TotalSpaceSample> samples;
    samples.reserve(count);
    std::vector<double> buf(static_cast<std::size_t>(sub.base_dim) + 1);
    for (std::uint64_t i = 0; i < count; ++i) {
        sample_unit_sphere_into(gen, buf);
        const double angle = 2.0 * std::numbers::pi * gen.next_double();
        samples.push_back({SpherePoint(buf), angle});
    }
    return samples;
}

}  // namespace fatequator
