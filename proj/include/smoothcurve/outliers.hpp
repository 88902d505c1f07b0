#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "smoothcurve/error.hpp"
#include "smoothcurve/loess.hpp"
#include "smoothcurve/series.hpp"

namespace smoothcurve {

struct OutlierReport {
    std::vector<std::size_t> indices;  ///< strictly increasing
    std::vector<double> residuals;     ///< y - trend - median residual, at each flagged index
    double threshold = 0.0;            ///< k * robust scale, ordinate units
};

/// Normal-consistent median absolute deviation.
inline constexpr double kMadConsistency = 1.4826;

/// Flags samples whose residual from a robust loess trend deviates from the
/// median residual by more than k robust standard deviations.
inline OutlierReport detect_outliers(const Series& s, const LoessSpec& reference, double k = 3.0)
{
    if (s.size() < 10) {
        throw Error(ErrorCode::SeriesTooShort, "outlier detection needs at least 10 samples");
    }
    if (!(k > 0.0)) {
        throw Error(ErrorCode::InvalidArgument, "threshold multiplier must be positive");
    }
    if (reference.robust_iters < 1) {
        throw Error(ErrorCode::InvalidSpec, "reference trend must be robust (robust_iters >= 1)");
    }
    const auto trend = loess_smooth(s, reference);
    const std::size_t n = s.size();
    std::vector<double> e(n);
    double y_max = 0.0;
    for (double y : s.ys()) y_max = std::max(y_max, std::abs(y));
    for (std::size_t i = 0; i < n; ++i) {
        e[i] = s.y(i) - trend.y(i);
        // rounding noise of an exact fit is not a deviation
        if (std::abs(e[i]) <= 1e-10 * y_max) e[i] = 0.0;
    }

    const double centre = detail::median(e);
    std::vector<double> spread(n);
    for (std::size_t i = 0; i < n; ++i) spread[i] = std::abs(e[i] - centre);
    const double scale = kMadConsistency * detail::median(spread);

    OutlierReport report;
    report.threshold = k * scale;
    for (std::size_t i = 0; i < n; ++i) {
        const bool flagged = scale > 0.0 ? spread[i] > report.threshold : e[i] != centre;
        if (flagged) {
            report.indices.push_back(i);
            report.residuals.push_back(e[i] - centre);
        }
    }
    return report;
}

inline Series remove_outliers(const Series& s, const OutlierReport& report)
{
    if (report.indices.empty()) return s;
    std::vector<double> xs;
    std::vector<double> ys;
    std::size_t next = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (next < report.indices.size() && report.indices[next] == i) {
            ++next;
            continue;
        }
        xs.push_back(s.x(i));
        ys.push_back(s.y(i));
    }
    if (next != report.indices.size()) {
        throw Error(ErrorCode::InvalidArgument, "report indices are not increasing or exceed the series length");
    }
    if (xs.empty()) {
        throw Error(ErrorCode::WouldEmpty, "every sample is flagged");
    }
    return Series(std::move(xs), std::move(ys));
}

}  // namespace smoothcurve
