#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "fatequator/special_functions.hpp"

namespace fatequator {

inline constexpr double kUnitNormTolerance = 1e-12;

// A point of S^n(1) as ambient coordinates in R^{n+1}, unit norm enforced.
class SpherePoint {
public:
    explicit SpherePoint(std::vector<double> coordinates) : coords_(std::move(coordinates)) {
        if (coords_.size() < 2) throw std::invalid_argument("SpherePoint: requires n >= 1");
        double sq = 0.0;
        for (double c : coords_) sq += c * c;
        if (std::fabs(std::sqrt(sq) - 1.0) > kUnitNormTolerance)
            throw std::invalid_argument("SpherePoint: coordinates must have unit norm");
    }

    static SpherePoint normalized(std::vector<double> v) {
        double sq = 0.0;
        for (double c : v) sq += c * c;
        const double norm = std::sqrt(sq);
        if (!(norm > 0.0)) throw std::invalid_argument("SpherePoint: cannot normalize zero vector");
        for (double& c : v) c /= norm;
        return SpherePoint(std::move(v));
    }

    // k-th coordinate axis of S^n, k in [0, n].
    static SpherePoint axis(int n, int k) {
        if (n < 1 || k < 0 || k > n) throw std::invalid_argument("SpherePoint::axis: bad index");
        std::vector<double> v(static_cast<std::size_t>(n) + 1, 0.0);
        v[static_cast<std::size_t>(k)] = 1.0;
        return SpherePoint(std::move(v));
    }

    int ambient_dimension() const { return static_cast<int>(coords_.size()) - 1; }
    const std::vector<double>& coordinates() const { return coords_; }
    double operator[](std::size_t i) const { return coords_[i]; }
    std::span<const double> span() const { return coords_; }

private:
    std::vector<double> coords_;
};

inline double dot(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline double inner(const SpherePoint& p, const SpherePoint& q) {
    if (p.ambient_dimension() != q.ambient_dimension())
        throw std::invalid_argument("inner: ambient dimension mismatch");
    return dot(p.span(), q.span());
}

// Intrinsic distance arccos<p,q>; the inner product is clamped to [-1, 1]
// so antipodal round-off cannot leave the arccos domain.
inline double extrinsic_distance(const SpherePoint& p, const SpherePoint& q) {
    const double c = std::clamp(inner(p, q), -1.0, 1.0);
    return std::acos(c);
}

// vol(S^n(1)) = 2 pi^{(n+1)/2} / Gamma((n+1)/2), assembled in log space.
inline double sphere_surface_volume(int n) {
    if (n < 1) throw std::domain_error("sphere_surface_volume: requires n >= 1");
    const double half = 0.5 * (n + 1);
    return std::exp(std::numbers::ln2 + half * std::log(std::numbers::pi) - log_gamma(half));
}

// vol(B_r)/vol(S^n): (1/2) I_{sin^2 r}(n/2, 1/2) on [0, pi/2], reflected
// through the hemisphere for r beyond pi/2.
inline double cap_fraction(int n, double r) {
    if (n < 1) throw std::domain_error("cap_fraction: requires n >= 1");
    if (!(r >= 0.0 && r <= std::numbers::pi))
        throw std::domain_error("cap_fraction: requires r in [0, pi]");
    if (r == 0.0) return 0.0;
    if (r > 0.5 * std::numbers::pi) {
        const double s = std::sin(std::numbers::pi - r);
        return 1.0 - 0.5 * reg_inc_beta(s * s, 0.5 * n, 0.5);
    }
    const double s = std::sin(r);
    return 0.5 * reg_inc_beta(s * s, 0.5 * n, 0.5);
}

// vol(Omega(p, eps))/vol(S^n(1)) = I_{sin^2 eps}(1/2, n/2). Independent of
// the strip's center by rotational symmetry, so p is not a parameter; eps
// stays in the open interval (0, pi/2) the theorems use.
inline double strip_fraction(int n, double epsilon) {
    if (n < 1) throw std::domain_error("strip_fraction: requires n >= 1");
    if (!(epsilon > 0.0 && epsilon < 0.5 * std::numbers::pi))
        throw std::domain_error("strip_fraction: requires epsilon in (0, pi/2)");
    const double s = std::sin(epsilon);
    return reg_inc_beta(s * s, 0.5, 0.5 * n);
}

// Omega(p, eps): the points with |cos dist(p, .)| < sin(eps).
struct EquatorStrip {
    SpherePoint center;
    double epsilon;
    double eps_bar;  // sin(epsilon)

    EquatorStrip(SpherePoint p, double eps)
        : center(std::move(p)), epsilon(eps), eps_bar(std::sin(eps)) {
        if (!(eps > 0.0 && eps < 0.5 * std::numbers::pi))
            throw std::invalid_argument("EquatorStrip: requires epsilon in (0, pi/2)");
    }

    bool contains(const SpherePoint& q) const { return std::fabs(inner(center, q)) < eps_bar; }

    double fraction() const { return strip_fraction(center.ambient_dimension(), epsilon); }
};

}  // namespace fatequator
