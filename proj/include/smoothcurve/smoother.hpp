#pragma once

#include <cstddef>
#include <sstream>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

#include "smoothcurve/kernel.hpp"
#include "smoothcurve/loess.hpp"
#include "smoothcurve/savgol.hpp"
#include "smoothcurve/series.hpp"
#include "smoothcurve/splines.hpp"

namespace smoothcurve {

struct NoSmoothing {};

struct KernelSmoother {
    Kernel kernel;
    double bandwidth = 1.0;
};

struct LocalAverageSmoother {
    AveragingWindow window = NearestNeighbors{5};
};

/// Each sample takes the mean of its bin.
struct BinSmoother {
    BinStrategy strategy;
};

/// Penalized cubic spline; p = 0 interpolates.
struct SplineSmoother {
    double p = 0.0;
};

struct BSplineSmoother {
    std::size_t interior_knots = 8;
};

struct NaturalSplineSmoother {};
struct PchipSmoother {};

/// One smoothing method plus its parameters.
using SmootherSpec = std::variant<NoSmoothing, LoessSpec, SavGolSpec, KernelSmoother, LocalAverageSmoother, BinSmoother,
                                  SplineSmoother, BSplineSmoother, NaturalSplineSmoother, PchipSmoother>;

/// Smoothed ordinates at the abscissas of s.
inline Series apply_smoother(const Series& s, const SmootherSpec& spec)
{
    return std::visit(
        [&](const auto& m) -> Series {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, NoSmoothing>) {
                return s;
            } else if constexpr (std::is_same_v<T, LoessSpec>) {
                return loess_smooth(s, m);
            } else if constexpr (std::is_same_v<T, SavGolSpec>) {
                SavGolSpec smoothing = m;
                smoothing.deriv_order = 0;
                return savgol_apply(s, smoothing);
            } else if constexpr (std::is_same_v<T, KernelSmoother>) {
                return nadaraya_watson(s, m.kernel, Bandwidth(m.bandwidth), s.xs());
            } else if constexpr (std::is_same_v<T, LocalAverageSmoother>) {
                return local_average(s, m.window, s.xs());
            } else if constexpr (std::is_same_v<T, BinSmoother>) {
                const auto bins = bin_average(s, m.strategy);
                const auto membership = bin_membership(s, m.strategy);
                // bin_average drops empty bins; map bin ids onto its rows
                std::vector<std::size_t> row(m.strategy.k, 0);
                std::vector<bool> used(m.strategy.k, false);
                for (auto b : membership) used[b] = true;
                for (std::size_t b = 0, r = 0; b < m.strategy.k; ++b) {
                    if (used[b]) row[b] = r++;
                }
                std::vector<double> ys(s.size());
                for (std::size_t i = 0; i < s.size(); ++i) ys[i] = bins.y(row[membership[i]]);
                return s.with_ys(std::move(ys));
            } else if constexpr (std::is_same_v<T, SplineSmoother>) {
                return s.with_ys(eval(smoothing_spline(s, m.p), s.xs()));
            } else if constexpr (std::is_same_v<T, BSplineSmoother>) {
                return s.with_ys(eval(bspline_fit(s, m.interior_knots), s.xs()));
            } else if constexpr (std::is_same_v<T, NaturalSplineSmoother>) {
                return s.with_ys(eval(natural_cubic(s), s.xs()));
            } else {
                return s.with_ys(eval(pchip(s), s.xs()));
            }
        },
        spec);
}

/// Short key=value rendering for provenance headers.
inline std::string describe(const SmootherSpec& spec)
{
    std::ostringstream out;
    out.precision(17);
    std::visit(
        [&](const auto& m) {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, NoSmoothing>) {
                out << "method=none";
            } else if constexpr (std::is_same_v<T, LoessSpec>) {
                out << "method=loess span=" << m.span << " degree=" << m.degree << " robust_iters=" << m.robust_iters
                    << " delta=" << m.delta;
            } else if constexpr (std::is_same_v<T, SavGolSpec>) {
                out << "method=savgol window=" << m.window << " degree=" << m.degree;
            } else if constexpr (std::is_same_v<T, KernelSmoother>) {
                const char* names[] = {"gaussian", "epanechnikov", "minimum-variance"};
                out << "method=kernel kernel=" << names[static_cast<int>(m.kernel.kind)] << " bandwidth=" << m.bandwidth;
            } else if constexpr (std::is_same_v<T, LocalAverageSmoother>) {
                if (const auto* fw = std::get_if<FixedWidth>(&m.window)) {
                    out << "method=local-average width=" << fw->width;
                } else {
                    out << "method=local-average neighbors=" << std::get<NearestNeighbors>(m.window).m;
                }
            } else if constexpr (std::is_same_v<T, BinSmoother>) {
                out << "method=bin mode=" << (m.strategy.mode == BinMode::EqualWidth ? "equal-width" : "equal-count")
                    << " bins=" << m.strategy.k;
            } else if constexpr (std::is_same_v<T, SplineSmoother>) {
                out << "method=smoothing-spline p=" << m.p;
            } else if constexpr (std::is_same_v<T, BSplineSmoother>) {
                out << "method=bspline knots=" << m.interior_knots;
            } else if constexpr (std::is_same_v<T, NaturalSplineSmoother>) {
                out << "method=natural-spline";
            } else {
                out << "method=pchip";
            }
        },
        spec);
    return out.str();
}

}  // namespace smoothcurve
