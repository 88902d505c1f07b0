#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "smoothcurve/error.hpp"
#include "smoothcurve/linreg.hpp"
#include "smoothcurve/series.hpp"

namespace smoothcurve {

/// Local regression settings. Degree 1 is the classic lowess local line,
/// degree 2 the local quadratic of loess.
struct LoessSpec {
    double span = 0.3;            ///< fraction of the samples in every local fit, (0, 1]
    std::size_t degree = 1;       ///< 1 or 2
    std::size_t robust_iters = 0; ///< bisquare reweighting passes, at most 10
    double delta = 0.0;           ///< fit only at abscissas more than delta apart and interpolate between

    void validate() const
    {
        if (!(span > 0.0 && span <= 1.0)) {
            throw Error(ErrorCode::InvalidSpec, "span must lie in (0, 1], got " + std::to_string(span));
        }
        if (degree < 1 || degree > 2) {
            throw Error(ErrorCode::InvalidSpec, "degree must be 1 or 2");
        }
        if (robust_iters > 10) {
            throw Error(ErrorCode::InvalidSpec, "at most 10 robustness iterations");
        }
        if (!(delta >= 0.0) || !std::isfinite(delta)) {
            throw Error(ErrorCode::InvalidSpec, "delta must be finite and non-negative");
        }
    }

    /// Number of samples in each local neighbourhood for a series of length n.
    std::size_t neighbourhood(std::size_t n) const
    {
        const auto q = static_cast<std::size_t>(std::ceil(span * static_cast<double>(n) - 1e-9));
        return std::max(degree + 1, q);
    }
};

namespace detail {

inline double tricube(double u) noexcept
{
    if (!(u < 1.0)) return 0.0;
    const double v = 1.0 - u * u * u;
    return v * v * v;
}

inline double bisquare(double u) noexcept
{
    if (!(std::abs(u) < 1.0)) return 0.0;
    const double v = 1.0 - u * u;
    return v * v;
}

inline double median(std::vector<double> v)
{
    const std::size_t n = v.size();
    const auto mid = v.begin() + static_cast<std::ptrdiff_t>(n / 2);
    std::nth_element(v.begin(), mid, v.end());
    const double upper = *mid;
    if (n % 2 == 1) return upper;
    return 0.5 * (upper + *std::max_element(v.begin(), mid));
}

/// Indices at which the local regression is actually computed. Always
/// includes the first and last sample; with delta > 0 consecutive anchors
/// are more than delta apart.
inline std::vector<std::size_t> loess_anchors(std::span<const double> xs, double delta)
{
    std::vector<std::size_t> anchors{0};
    const std::size_t n = xs.size();
    std::size_t last = 0;
    while (last + 1 < n) {
        std::size_t next = last + 1;
        if (delta > 0.0) {
            next = static_cast<std::size_t>(
                std::upper_bound(xs.begin() + static_cast<std::ptrdiff_t>(last), xs.end(), xs[last] + delta) -
                xs.begin());
            next = std::min(next, n - 1);
        }
        anchors.push_back(next);
        last = next;
    }
    return anchors;
}

class LocalFitter {
public:
    LocalFitter(const Series& s, std::size_t q, std::size_t degree)
        : xs_(s.xs()), ys_(s.ys()), q_(q), degree_(degree), dx_(q), w_(q)
    {
    }

    /// Fitted value at sample i. Calls must come in increasing i after reset().
    double fit(std::size_t i, std::span<const double> robustness)
    {
        const std::size_t n = xs_.size();
        const double x0 = xs_[i];
        // slide the q-point block right while its far right neighbour is strictly closer
        while (lo_ + q_ < n && xs_[lo_ + q_] - x0 < x0 - xs_[lo_]) ++lo_;
        const double d_max = std::max(x0 - xs_[lo_], xs_[lo_ + q_ - 1] - x0);

        std::size_t active = 0;
        for (std::size_t j = 0; j < q_; ++j) {
            const std::size_t k = lo_ + j;
            dx_[j] = xs_[k] - x0;
            double w = d_max > 0.0 ? tricube(std::abs(dx_[j]) / d_max) : 1.0;
            if (!robustness.empty()) w *= robustness[k];
            w_[j] = w;
            if (w > 0.0) ++active;
        }
        if (active == 0) {
            throw Error(ErrorCode::AllWeightsZero,
                        "every sample in the neighbourhood of x = " + std::to_string(x0) + " has zero weight");
        }
        const std::size_t degree = std::min(degree_, active - 1);
        const auto fit = wls_polyfit(dx_, ys_.subspan(lo_, q_), w_, degree);
        return fit.beta[0];
    }

    void reset() noexcept { lo_ = 0; }

private:
    std::span<const double> xs_;
    std::span<const double> ys_;
    std::size_t q_;
    std::size_t degree_;
    std::size_t lo_ = 0;
    std::vector<double> dx_;
    std::vector<double> w_;
};

}  // namespace detail

/// Locally weighted regression evaluated at every sample of s.
///
/// Each fitted value comes from a weighted polynomial fit (tricube distance
/// weights, abscissas centred on the target) over the q = ceil(span * n)
/// nearest samples. Robust passes multiply those weights by bisquare factors
/// of the previous residuals scaled by six median absolute residuals.
inline Series loess_smooth(const Series& s, const LoessSpec& spec)
{
    spec.validate();
    const std::size_t n = s.size();
    const std::size_t q = spec.neighbourhood(n);
    if (q > n) {
        throw Error(ErrorCode::SpanTooSmall, "local fit needs " + std::to_string(q) + " samples, series has " +
                                                 std::to_string(n));
    }
    const auto xs = s.xs();
    const auto ys = s.ys();
    const auto anchors = detail::loess_anchors(xs, spec.delta);

    double mean_abs_y = 0.0;
    for (double y : ys) mean_abs_y += std::abs(y);
    mean_abs_y /= static_cast<double>(n);

    detail::LocalFitter fitter(s, q, spec.degree);
    std::vector<double> fitted(n);
    std::vector<double> robustness;

    for (std::size_t pass = 0; pass <= spec.robust_iters; ++pass) {
        fitter.reset();
        std::size_t prev = 0;
        for (std::size_t a = 0; a < anchors.size(); ++a) {
            const std::size_t i = anchors[a];
            fitted[i] = fitter.fit(i, robustness);
            if (a > 0) {
                for (std::size_t k = prev + 1; k < i; ++k) {
                    const double t = (xs[k] - xs[prev]) / (xs[i] - xs[prev]);
                    fitted[k] = fitted[prev] + t * (fitted[i] - fitted[prev]);
                }
            }
            prev = i;
        }
        if (pass == spec.robust_iters) break;

        std::vector<double> abs_residuals(n);
        for (std::size_t i = 0; i < n; ++i) abs_residuals[i] = std::abs(ys[i] - fitted[i]);
        const double m = detail::median(abs_residuals);
        // residuals at rounding level: the fit is already exact
        if (m <= 1e-10 * mean_abs_y) break;
        robustness.resize(n);
        for (std::size_t i = 0; i < n; ++i) robustness[i] = detail::bisquare((ys[i] - fitted[i]) / (6.0 * m));
    }
    return s.with_ys(std::move(fitted));
}

/// loess_smooth over the first `head` samples only.
inline Series loess_smooth_windowed(const Series& s, const LoessSpec& spec, std::size_t head)
{
    if (head < 1 || head > s.size()) {
        throw Error(ErrorCode::InvalidArgument, "head must be in [1, " + std::to_string(s.size()) + "]");
    }
    if (head == s.size()) return loess_smooth(s, spec);
    const auto xs = s.xs().first(head);
    const auto ys = s.ys().first(head);
    return loess_smooth(Series({xs.begin(), xs.end()}, {ys.begin(), ys.end()}), spec);
}

}  // namespace smoothcurve
