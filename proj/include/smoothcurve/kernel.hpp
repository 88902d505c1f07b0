#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include "smoothcurve/error.hpp"
#include "smoothcurve/series.hpp"

namespace smoothcurve {

enum class KernelKind { Gaussian, Epanechnikov, MinimumVariance };

struct Kernel {
    KernelKind kind = KernelKind::Gaussian;

    /// Infinite for Gaussian, 1 for the compact kernels.
    double support() const noexcept
    {
        return kind == KernelKind::Gaussian ? std::numeric_limits<double>::infinity() : 1.0;
    }
};

class Bandwidth {
public:
    explicit Bandwidth(double b) : b_(b)
    {
        if (!(b > 0.0) || !std::isfinite(b)) {
            throw Error(ErrorCode::InvalidArgument, "bandwidth must be positive and finite");
        }
    }
    double value() const noexcept { return b_; }

private:
    double b_;
};

inline double kernel_weight(Kernel k, double t) noexcept
{
    const double t2 = t * t;
    switch (k.kind) {
    case KernelKind::Gaussian:
        return std::exp(-0.5 * t2) / std::sqrt(2.0 * std::numbers::pi);
    case KernelKind::Epanechnikov:
        return t2 < 1.0 ? 0.75 * (1.0 - t2) : 0.0;
    case KernelKind::MinimumVariance:
        // goes negative for t^2 > 0.6
        return t2 < 1.0 ? 0.375 * (3.0 - 5.0 * t2) : 0.0;
    }
    return 0.0;
}

/// Nadaraya-Watson locally weighted average with K_b(u) = K(u / b).
inline Series nadaraya_watson(const Series& s, Kernel k, Bandwidth b, std::span<const double> eval_points)
{
    const auto xs = s.xs();
    const auto ys = s.ys();
    const bool compact = k.kind != KernelKind::Gaussian;
    std::vector<double> out(eval_points.size());
    for (std::size_t j = 0; j < eval_points.size(); ++j) {
        const double x0 = eval_points[j];
        if (!std::isfinite(x0)) {
            throw Error(ErrorCode::NonFinite, "evaluation point " + std::to_string(j) + " is not finite");
        }
        std::size_t lo = 0;
        std::size_t hi = xs.size();
        if (compact) {
            lo = static_cast<std::size_t>(std::upper_bound(xs.begin(), xs.end(), x0 - b.value()) - xs.begin());
            hi = static_cast<std::size_t>(std::lower_bound(xs.begin(), xs.end(), x0 + b.value()) - xs.begin());
        }
        double num = 0.0;
        double den = 0.0;
        double num_abs = 0.0;
        bool any = false;
        for (std::size_t i = lo; i < hi; ++i) {
            const double w = kernel_weight(k, (x0 - xs[i]) / b.value());
            num += w * ys[i];
            den += w;
            num_abs += std::abs(w * ys[i]);
            any = any || w != 0.0;
        }
        if (!any) {
            throw Error(ErrorCode::EmptyWindow, "kernel weights vanish at x = " + std::to_string(x0));
        }
        if (den == 0.0 || std::abs(den) < 1e-12 * num_abs) {
            throw Error(ErrorCode::NearSingularWeight,
                        "kernel weights nearly cancel at x = " + std::to_string(x0));
        }
        out[j] = num / den;
    }
    return Series(std::vector<double>(eval_points.begin(), eval_points.end()), std::move(out));
}

}  // namespace smoothcurve
