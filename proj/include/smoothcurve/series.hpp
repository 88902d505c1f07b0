#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "smoothcurve/error.hpp"

namespace smoothcurve {

/// Ordered (x, y) samples with strictly increasing, finite abscissas.
/// Immutable once constructed; every smoother consumes and produces these.
class Series {
public:
    Series(std::vector<double> xs, std::vector<double> ys) : xs_(std::move(xs)), ys_(std::move(ys))
    {
        if (xs_.size() != ys_.size()) {
            throw Error(ErrorCode::LengthMismatch, "xs has " + std::to_string(xs_.size()) +
                                                       " values, ys has " + std::to_string(ys_.size()));
        }
        if (xs_.empty()) {
            throw Error(ErrorCode::EmptyInput, "series needs at least one sample");
        }
        for (std::size_t i = 0; i < xs_.size(); ++i) {
            if (!std::isfinite(xs_[i]) || !std::isfinite(ys_[i])) {
                throw Error(ErrorCode::NonFinite, "non-finite value at index " + std::to_string(i));
            }
            if (i > 0 && !(xs_[i] > xs_[i - 1])) {
                throw Error(ErrorCode::NotIncreasing, "abscissa not strictly increasing at index " + std::to_string(i));
            }
        }
    }

    std::span<const double> xs() const& noexcept { return xs_; }
    std::span<const double> ys() const& noexcept { return ys_; }
    // a span into a temporary would dangle
    std::span<const double> xs() const&& = delete;
    std::span<const double> ys() const&& = delete;
    std::size_t size() const noexcept { return xs_.size(); }

    double x(std::size_t i) const { return xs_[i]; }
    double y(std::size_t i) const { return ys_[i]; }

    double x_min() const noexcept { return xs_.front(); }
    double x_max() const noexcept { return xs_.back(); }
    double x_range() const noexcept { return xs_.back() - xs_.front(); }

    /// Same abscissas, new ordinates.
    Series with_ys(std::vector<double> ys) const { return Series(xs_, std::move(ys)); }

    friend bool operator==(const Series&, const Series&) = default;

private:
    std::vector<double> xs_;
    std::vector<double> ys_;
};

enum class TiePolicy { MeanCollapse };

/// Builds a Series from raw columns: drops pairs with a non-finite member,
/// sorts by x and collapses duplicate abscissas to the mean of their ys.
inline Series from_columns(std::span<const double> xs, std::span<const double> ys,
                           TiePolicy tie_policy = TiePolicy::MeanCollapse)
{
    (void)tie_policy;
    if (xs.size() != ys.size()) {
        throw Error(ErrorCode::LengthMismatch,
                    "xs has " + std::to_string(xs.size()) + " values, ys has " + std::to_string(ys.size()));
    }
    std::vector<std::pair<double, double>> pairs;
    pairs.reserve(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (std::isfinite(xs[i]) && std::isfinite(ys[i])) {
            pairs.emplace_back(xs[i], ys[i]);
        }
    }
    if (pairs.empty()) {
        throw Error(ErrorCode::EmptyInput, "no finite (x, y) pairs");
    }
    std::stable_sort(pairs.begin(), pairs.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });

    std::vector<double> out_x;
    std::vector<double> out_y;
    out_x.reserve(pairs.size());
    out_y.reserve(pairs.size());
    for (std::size_t i = 0; i < pairs.size();) {
        std::size_t j = i;
        double sum = 0.0;
        while (j < pairs.size() && pairs[j].first == pairs[i].first) {
            sum += pairs[j].second;
            ++j;
        }
        out_x.push_back(pairs[i].first);
        out_y.push_back(j - i == 1 ? pairs[i].second : sum / static_cast<double>(j - i));
        i = j;
    }
    return Series(std::move(out_x), std::move(out_y));
}

enum class Axis { X, Y, Both };

/// Removes every sample whose value on the selected axis is <= 0.
inline Series drop_nonpositive(const Series& s, Axis axis)
{
    std::vector<double> xs;
    std::vector<double> ys;
    for (std::size_t i = 0; i < s.size(); ++i) {
        const bool x_ok = s.x(i) > 0.0;
        const bool y_ok = s.y(i) > 0.0;
        const bool keep = axis == Axis::X ? x_ok : axis == Axis::Y ? y_ok : (x_ok && y_ok);
        if (keep) {
            xs.push_back(s.x(i));
            ys.push_back(s.y(i));
        }
    }
    if (xs.empty()) {
        throw Error(ErrorCode::EmptyResult, "every sample is non-positive on the selected axis");
    }
    return Series(std::move(xs), std::move(ys));
}

/// Linear interpolation of s at x, clamped to the end values outside the data.
inline double interpolate_linear(const Series& s, double x)
{
    const auto xs = s.xs();
    if (x <= xs.front()) return s.y(0);
    if (x >= xs.back()) return s.y(s.size() - 1);
    const auto hi = static_cast<std::size_t>(std::upper_bound(xs.begin(), xs.end(), x) - xs.begin());
    const std::size_t lo = hi - 1;
    const double t = (x - xs[lo]) / (xs[hi] - xs[lo]);
    return s.y(lo) + t * (s.y(hi) - s.y(lo));
}

/// m equally spaced abscissas on [min x, max x] with linearly interpolated ys.
inline Series resample_uniform(const Series& s, std::size_t m)
{
    if (m < 2 || s.size() < 2) {
        throw Error(ErrorCode::TooFewPoints, "resampling needs m >= 2 and at least 2 samples");
    }
    const double x0 = s.x_min();
    const double x1 = s.x_max();
    const double step = (x1 - x0) / static_cast<double>(m - 1);
    std::vector<double> xs(m);
    std::vector<double> ys(m);
    std::size_t seg = 0;
    for (std::size_t j = 0; j < m; ++j) {
        const double x = j + 1 == m ? x1 : x0 + static_cast<double>(j) * step;
        while (seg + 2 < s.size() && s.x(seg + 1) < x) {
            ++seg;
        }
        xs[j] = x;
        if (j == 0) {
            ys[j] = s.y(0);
        } else if (j + 1 == m) {
            ys[j] = s.y(s.size() - 1);
        } else {
            const double t = (x - s.x(seg)) / (s.x(seg + 1) - s.x(seg));
            ys[j] = s.y(seg) + t * (s.y(seg + 1) - s.y(seg));
        }
    }
    return Series(std::move(xs), std::move(ys));
}

inline double mean_spacing(const Series& s)
{
    return s.size() < 2 ? 0.0 : s.x_range() / static_cast<double>(s.size() - 1);
}

/// True when every step is within rel_tol of the mean step.
inline bool is_uniform(const Series& s, double rel_tol = 0.01)
{
    if (s.size() < 2) return true;
    const double h = mean_spacing(s);
    for (std::size_t i = 1; i < s.size(); ++i) {
        if (std::abs((s.x(i) - s.x(i - 1)) - h) > rel_tol * h) return false;
    }
    return true;
}

// --- binning and local averaging ---

enum class BinMode { EqualWidth, EqualCount };

struct BinStrategy {
    BinMode mode = BinMode::EqualWidth;
    std::size_t k = 1;
};

/// Index of the bin each sample falls into. Bins may be empty for EqualWidth.
inline std::vector<std::size_t> bin_membership(const Series& s, const BinStrategy& strategy)
{
    if (strategy.k < 1) {
        throw Error(ErrorCode::InvalidArgument, "bin count must be at least 1");
    }
    if (strategy.k > s.size()) {
        throw Error(ErrorCode::TooManyBins, std::to_string(strategy.k) + " bins requested for " +
                                                std::to_string(s.size()) + " samples");
    }
    const std::size_t n = s.size();
    const std::size_t k = strategy.k;
    std::vector<std::size_t> bin(n, 0);
    if (strategy.mode == BinMode::EqualWidth) {
        const double width = s.x_range() / static_cast<double>(k);
        for (std::size_t i = 0; i < n && width > 0.0; ++i) {
            const auto b = static_cast<std::size_t>(std::floor((s.x(i) - s.x_min()) / width));
            bin[i] = std::min(b, k - 1);
        }
    } else {
        // first n % k bins take one extra sample
        const std::size_t base = n / k;
        const std::size_t extra = n % k;
        std::size_t i = 0;
        for (std::size_t b = 0; b < k; ++b) {
            const std::size_t count = base + (b < extra ? 1 : 0);
            for (std::size_t c = 0; c < count; ++c) bin[i++] = b;
        }
    }
    return bin;
}

/// One point per nonempty bin at (mean x, mean y) of its members.
inline Series bin_average(const Series& s, const BinStrategy& strategy)
{
    const auto bin = bin_membership(s, strategy);
    std::vector<double> sx(strategy.k, 0.0);
    std::vector<double> sy(strategy.k, 0.0);
    std::vector<std::size_t> count(strategy.k, 0);
    for (std::size_t i = 0; i < s.size(); ++i) {
        sx[bin[i]] += s.x(i);
        sy[bin[i]] += s.y(i);
        ++count[bin[i]];
    }
    std::vector<double> xs;
    std::vector<double> ys;
    for (std::size_t b = 0; b < strategy.k; ++b) {
        if (count[b] == 0) continue;
        xs.push_back(sx[b] / static_cast<double>(count[b]));
        ys.push_back(sy[b] / static_cast<double>(count[b]));
    }
    return Series(std::move(xs), std::move(ys));
}

struct FixedWidth {
    double width;
};

struct NearestNeighbors {
    std::size_t m;
};

using AveragingWindow = std::variant<FixedWidth, NearestNeighbors>;

/// Indices [first, last) of the m samples nearest to x0, ties toward smaller x.
inline std::pair<std::size_t, std::size_t> nearest_block(std::span<const double> xs, double x0, std::size_t m)
{
    const std::size_t n = xs.size();
    auto right = static_cast<std::size_t>(std::lower_bound(xs.begin(), xs.end(), x0) - xs.begin());
    std::size_t left = right;
    while (right - left < m) {
        if (left == 0) {
            ++right;
        } else if (right == n) {
            --left;
        } else if (x0 - xs[left - 1] <= xs[right] - x0) {
            --left;
        } else {
            ++right;
        }
    }
    return {left, right};
}

/// Moving-window mean evaluated at each focal point.
inline Series local_average(const Series& s, const AveragingWindow& window, std::span<const double> eval_points)
{
    if (eval_points.empty()) {
        throw Error(ErrorCode::InvalidArgument, "no evaluation points");
    }
    const auto xs = s.xs();
    std::vector<double> out(eval_points.size());
    if (const auto* fw = std::get_if<FixedWidth>(&window)) {
        if (!(fw->width > 0.0)) {
            throw Error(ErrorCode::InvalidArgument, "window width must be positive");
        }
        for (std::size_t j = 0; j < eval_points.size(); ++j) {
            const double x0 = eval_points[j];
            const auto lo = std::lower_bound(xs.begin(), xs.end(), x0 - fw->width / 2) - xs.begin();
            const auto hi = std::upper_bound(xs.begin(), xs.end(), x0 + fw->width / 2) - xs.begin();
            if (hi <= lo) {
                throw Error(ErrorCode::EmptyWindow, "no samples within the window at x = " + std::to_string(x0));
            }
            double sum = 0.0;
            for (auto i = lo; i < hi; ++i) sum += s.y(static_cast<std::size_t>(i));
            out[j] = sum / static_cast<double>(hi - lo);
        }
    } else {
        const std::size_t m = std::get<NearestNeighbors>(window).m;
        if (m < 1 || m > s.size()) {
            throw Error(ErrorCode::InvalidArgument, "neighbor count must be in [1, n]");
        }
        for (std::size_t j = 0; j < eval_points.size(); ++j) {
            const auto [lo, hi] = nearest_block(xs, eval_points[j], m);
            double sum = 0.0;
            for (auto i = lo; i < hi; ++i) sum += s.y(i);
            out[j] = sum / static_cast<double>(m);
        }
    }
    return Series(std::vector<double>(eval_points.begin(), eval_points.end()), std::move(out));
}

}  // namespace smoothcurve
