#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "smoothcurve/error.hpp"
#include "smoothcurve/linreg.hpp"
#include "smoothcurve/series.hpp"

namespace smoothcurve {

/// Savitzky-Golay filter: symmetric frame of `window` samples, local
/// polynomial of `degree`, returning the deriv_order-th derivative.
struct SavGolSpec {
    std::size_t window = 99;
    std::size_t degree = 3;
    std::size_t deriv_order = 0;

    std::size_t half() const noexcept { return window / 2; }

    void validate() const
    {
        if (window < 3 || window % 2 == 0) {
            throw Error(ErrorCode::InvalidSpec, "window must be odd and at least 3, got " + std::to_string(window));
        }
        if (degree > window - 1) {
            throw Error(ErrorCode::InvalidSpec, "degree " + std::to_string(degree) + " exceeds window - 1");
        }
        if (deriv_order > degree) {
            throw Error(ErrorCode::InvalidSpec, "derivative order exceeds polynomial degree");
        }
    }
};

/// Convolution weights c_{-h..h}: sum_j c_j y_{i+j} is the requested
/// derivative, in index units, of the least-squares polynomial fitted to the
/// frame and evaluated at its centre.
inline std::vector<double> savgol_coefficients(const SavGolSpec& spec)
{
    spec.validate();
    const std::size_t w = spec.window;
    const auto h = static_cast<double>(spec.half());
    const std::size_t p = spec.degree + 1;

    Matrix design(w, p);
    for (std::size_t j = 0; j < w; ++j) {
        const double t = static_cast<double>(j) - h;
        double power = 1.0;
        for (std::size_t k = 0; k < p; ++k) {
            design(j, k) = power;
            power *= t;
        }
    }
    const LeastSquares solver(std::move(design));

    double factorial = 1.0;
    for (std::size_t k = 2; k <= spec.deriv_order; ++k) factorial *= static_cast<double>(k);

    // column j of the pseudoinverse is the fit to the unit impulse at j
    std::vector<double> coeffs(w);
    std::vector<double> impulse(w, 0.0);
    for (std::size_t j = 0; j < w; ++j) {
        impulse[j] = 1.0;
        coeffs[j] = factorial * solver.solve(impulse)[spec.deriv_order];
        impulse[j] = 0.0;
    }
    return coeffs;
}

/// Filters a uniformly spaced series. The first and last half-window samples
/// are evaluated from one polynomial fitted to the terminal frame, so output
/// length equals input length. Derivatives are returned in ordinate units per
/// abscissa unit^deriv_order.
inline Series savgol_apply(const Series& s, const SavGolSpec& spec)
{
    spec.validate();
    const std::size_t n = s.size();
    if (n < spec.window) {
        throw Error(ErrorCode::SeriesTooShort,
                    std::to_string(n) + " samples is fewer than the window of " + std::to_string(spec.window));
    }
    if (!is_uniform(s, 0.01)) {
        throw Error(ErrorCode::NonUniformSpacing,
                    "abscissa steps vary by more than 1% of the mean step; resample with resample_uniform first");
    }
    const std::size_t half = spec.half();
    const std::size_t w = spec.window;
    const double scale = std::pow(mean_spacing(s), -static_cast<double>(spec.deriv_order));
    const auto coeffs = savgol_coefficients(spec);
    const auto xs = s.xs();
    const auto ys = s.ys();

    std::vector<double> out(n);
    for (std::size_t i = half; i + half < n; ++i) {
        double sum = 0.0;
        for (std::size_t j = 0; j < w; ++j) sum += coeffs[j] * ys[i - half + j];
        out[i] = sum * scale;
    }

    const auto edge = [&](std::size_t first, std::size_t from, std::size_t to) {
        const double centre = xs[first + half];
        std::vector<double> local(w);
        for (std::size_t j = 0; j < w; ++j) local[j] = xs[first + j] - centre;
        const auto fit = polyfit(local, ys.subspan(first, w), spec.degree);
        for (std::size_t i = from; i < to; ++i) out[i] = fit.derivative(xs[i] - centre, spec.deriv_order);
    };
    edge(0, 0, half);
    edge(n - w, n - half, n);
    return s.with_ys(std::move(out));
}

}  // namespace smoothcurve
