#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace fatequator {

// Normalized even cosine moment M_k(m): the average of cos^{2k} of the
// distance to a fixed point over S^m(1). Built multiplicatively from
// M_0 = 1 and M_{k+1} = (2k+1)/(m+2k+1) M_k; no factorial ratios, so no
// overflow or cancellation at any (m, k).
inline double cos_moment(int m, int k) {
    if (m < 1) throw std::domain_error("cos_moment: requires m >= 1");
    if (k < 0) throw std::domain_error("cos_moment: requires k >= 0");
    double value = 1.0;
    for (int j = 0; j < k; ++j) value *= (2.0 * j + 1.0) / (m + 2.0 * j + 1.0);
    return value;
}

struct MomentTable {
    int m = 0;
    std::vector<double> values;  // M_0 .. M_K

    static MomentTable build(int m, int k_max) {
        if (m < 1) throw std::domain_error("MomentTable: requires m >= 1");
        if (k_max < 0) throw std::domain_error("MomentTable: requires k_max >= 0");
        MomentTable table;
        table.m = m;
        table.values.reserve(static_cast<std::size_t>(k_max) + 1);
        double v = 1.0;
        table.values.push_back(v);
        for (int k = 0; k < k_max; ++k) {
            v *= (2.0 * k + 1.0) / (m + 2.0 * k + 1.0);
            table.values.push_back(v);
        }
        return table;
    }
};

// F(t) = sum_k t^k M_k(m) / k!, the average of e^{t cos^2} over S^m. The
// series is truncated once the next term drops below tol times the partial
// sum, keeping the accuracy relative across magnitudes of F.
inline double cos_mgf(int m, double t, double tol = 1e-12, int max_terms = 10000) {
    if (m < 1) throw std::domain_error("cos_mgf: requires m >= 1");
    if (!(tol > 0.0)) throw std::domain_error("cos_mgf: requires tol > 0");
    double sum = 1.0;
    double term = 1.0;  // t^k M_k / k!
    for (int k = 0; k < max_terms; ++k) {
        term *= t * (2.0 * k + 1.0) / ((k + 1.0) * (m + 2.0 * k + 1.0));
        if (std::fabs(term) < tol * std::fabs(sum)) return sum + term;
        sum += term;
    }
    throw std::runtime_error("cos_mgf: series did not converge within the term cap");
}

// Closed-form majorant sqrt((m+1)/(m+1-2t)) of F(t), valid for
// 0 < t < (m+1)/2.
inline double mgf_bound(int m, double t) {
    if (m < 1) throw std::domain_error("mgf_bound: requires m >= 1");
    if (!(t > 0.0 && t < 0.5 * (m + 1)))
        throw std::domain_error("mgf_bound: requires t in (0, (m+1)/2)");
    return std::sqrt((m + 1.0) / (m + 1.0 - 2.0 * t));
}

struct MomentEstimate {
    double estimate = 0.0;
    double std_err = 0.0;
};

struct MomentVerdict {
    int k = 0;
    double estimate = 0.0;
    double std_err = 0.0;
    double limit = 0.0;  // M_k(m)
    bool pass = false;   // estimate <= limit + 4 std_err
};

// Checks the empirical moments of a minimal instance of intrinsic dimension
// m against the sphere moments M_k(m) that dominate them.
inline std::vector<MomentVerdict> moment_domination_check(
    std::span<const MomentEstimate> empirical_moments, int m) {
    if (m < 1) throw std::domain_error("moment_domination_check: requires m >= 1");
    std::vector<MomentVerdict> verdicts;
    verdicts.reserve(empirical_moments.size());
    for (std::size_t k = 0; k < empirical_moments.size(); ++k) {
        MomentVerdict v;
        v.k = static_cast<int>(k);
        v.estimate = empirical_moments[k].estimate;
        v.std_err = empirical_moments[k].std_err;
        v.limit = cos_moment(m, v.k);
        v.pass = v.estimate <= v.limit + 4.0 * v.std_err;
        verdicts.push_back(v);
    }
    return verdicts;
}

}  // namespace fatequator
