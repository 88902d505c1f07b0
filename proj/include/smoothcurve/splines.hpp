#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "smoothcurve/error.hpp"
#include "smoothcurve/linreg.hpp"
#include "smoothcurve/series.hpp"

namespace smoothcurve {

enum class Extrapolation {
    Polynomial,  ///< continue the boundary piece
    Linear,      ///< tangent line at the boundary knot (natural splines)
};

/// Piecewise cubic. Row i holds (a, b, c, d) of
/// a + b u + c u^2 + d u^3 with u = x - knots[i], valid on [knots[i], knots[i+1]].
struct PiecewisePoly {
    std::vector<double> knots;
    std::vector<std::array<double, 4>> coeffs;
    Extrapolation extrapolation = Extrapolation::Polynomial;

    static constexpr int degree = 3;

    std::size_t pieces() const noexcept { return coeffs.size(); }

    /// Index of the piece containing x; the last interval is right-closed.
    std::size_t locate(double x) const
    {
        const auto it = std::upper_bound(knots.begin(), knots.end(), x);
        const auto i = static_cast<std::size_t>(std::max<std::ptrdiff_t>(it - knots.begin() - 1, 0));
        return std::min(i, coeffs.size() - 1);
    }
};

namespace detail {

inline double piece_value(const std::array<double, 4>& c, double u, int deriv)
{
    switch (deriv) {
    case 0: return c[0] + u * (c[1] + u * (c[2] + u * c[3]));
    case 1: return c[1] + u * (2.0 * c[2] + u * 3.0 * c[3]);
    case 2: return 2.0 * c[2] + 6.0 * c[3] * u;
    case 3: return 6.0 * c[3];
    default: return 0.0;
    }
}

inline void require_points(const Series& s, std::size_t min_points)
{
    if (s.size() < min_points) {
        throw Error(ErrorCode::TooFewPoints, "needs at least " + std::to_string(min_points) + " points, got " +
                                                 std::to_string(s.size()));
    }
}

/// Cubic through (xs, ys) with second derivatives m at the knots.
inline PiecewisePoly from_second_derivatives(std::span<const double> xs, std::span<const double> ys,
                                             std::span<const double> m)
{
    PiecewisePoly pp;
    pp.knots.assign(xs.begin(), xs.end());
    pp.coeffs.resize(xs.size() - 1);
    for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
        const double h = xs[i + 1] - xs[i];
        const double secant = (ys[i + 1] - ys[i]) / h;
        pp.coeffs[i] = {ys[i], secant - h * (2.0 * m[i] + m[i + 1]) / 6.0, m[i] / 2.0, (m[i + 1] - m[i]) / (6.0 * h)};
    }
    return pp;
}

/// Cubic Hermite pieces from node values and slopes.
inline PiecewisePoly from_slopes(std::span<const double> xs, std::span<const double> ys,
                                 std::span<const double> slopes)
{
    PiecewisePoly pp;
    pp.knots.assign(xs.begin(), xs.end());
    pp.coeffs.resize(xs.size() - 1);
    for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
        const double h = xs[i + 1] - xs[i];
        const double secant = (ys[i + 1] - ys[i]) / h;
        const double c = (3.0 * secant - 2.0 * slopes[i] - slopes[i + 1]) / h;
        const double d = (slopes[i] + slopes[i + 1] - 2.0 * secant) / (h * h);
        pp.coeffs[i] = {ys[i], slopes[i], c, d};
    }
    return pp;
}

/// Thomas algorithm; diagonally dominant systems only.
inline std::vector<double> solve_tridiagonal(std::vector<double> lower, std::vector<double> diag,
                                             std::vector<double> upper, std::vector<double> rhs)
{
    const std::size_t n = diag.size();
    for (std::size_t i = 1; i < n; ++i) {
        const double f = lower[i] / diag[i - 1];
        diag[i] -= f * upper[i - 1];
        rhs[i] -= f * rhs[i - 1];
    }
    std::vector<double> x(n);
    x[n - 1] = rhs[n - 1] / diag[n - 1];
    for (std::size_t i = n - 1; i-- > 0;) x[i] = (rhs[i] - upper[i] * x[i + 1]) / diag[i];
    return x;
}

/// Solves a symmetric positive definite system with bandwidth 2 given its
/// three nonzero diagonals (d0 main, d1 first, d2 second) by LDL^T.
inline std::vector<double> solve_pentadiagonal_spd(std::vector<double> d0, std::vector<double> d1,
                                                   std::vector<double> d2, std::vector<double> rhs)
{
    const std::size_t n = d0.size();
    // L has unit diagonal with sub-diagonals l1, l2; D = d
    std::vector<double> d(n), l1(n, 0.0), l2(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        double di = d0[i];
        if (i >= 1) di -= l1[i - 1] * l1[i - 1] * d[i - 1];
        if (i >= 2) di -= l2[i - 2] * l2[i - 2] * d[i - 2];
        d[i] = di;
        if (i + 1 < n) {
            double v = d1[i];
            if (i >= 1) v -= l2[i - 1] * l1[i - 1] * d[i - 1];
            l1[i] = v / di;
        }
        if (i + 2 < n) l2[i] = d2[i] / di;
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (i >= 1) rhs[i] -= l1[i - 1] * rhs[i - 1];
        if (i >= 2) rhs[i] -= l2[i - 2] * rhs[i - 2];
    }
    for (std::size_t i = 0; i < n; ++i) rhs[i] /= d[i];
    for (std::size_t i = n; i-- > 0;) {
        if (i + 1 < n) rhs[i] -= l1[i] * rhs[i + 1];
        if (i + 2 < n) rhs[i] -= l2[i] * rhs[i + 2];
    }
    return rhs;
}

inline double sign(double v) noexcept { return v > 0.0 ? 1.0 : (v < 0.0 ? -1.0 : 0.0); }

}  // namespace detail

/// Value (deriv 0) or derivative (1, 2) of pp at x. Natural splines continue
/// as straight lines outside the knot range; others extend their end pieces.
inline double eval(const PiecewisePoly& pp, double x, int deriv = 0)
{
    if (pp.extrapolation == Extrapolation::Linear && (x < pp.knots.front() || x > pp.knots.back())) {
        const bool left = x < pp.knots.front();
        const std::size_t i = left ? 0 : pp.pieces() - 1;
        const double u = left ? 0.0 : pp.knots.back() - pp.knots[i];
        const double edge = left ? pp.knots.front() : pp.knots.back();
        const double value = detail::piece_value(pp.coeffs[i], u, 0);
        const double slope = detail::piece_value(pp.coeffs[i], u, 1);
        if (deriv == 0) return value + slope * (x - edge);
        return deriv == 1 ? slope : 0.0;
    }
    const std::size_t i = pp.locate(x);
    return detail::piece_value(pp.coeffs[i], x - pp.knots[i], deriv);
}

inline std::vector<double> eval(const PiecewisePoly& pp, std::span<const double> xs, int deriv = 0)
{
    std::vector<double> out(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) out[i] = eval(pp, xs[i], deriv);
    return out;
}

/// Interpolating cubic with zero curvature at both ends.
inline PiecewisePoly natural_cubic(const Series& s)
{
    detail::require_points(s, 2);
    const std::size_t n = s.size();
    const auto xs = s.xs();
    const auto ys = s.ys();
    std::vector<double> m(n, 0.0);
    if (n > 2) {
        const std::size_t k = n - 2;
        std::vector<double> lower(k), diag(k), upper(k), rhs(k);
        for (std::size_t j = 0; j < k; ++j) {
            const std::size_t i = j + 1;
            const double h0 = xs[i] - xs[i - 1];
            const double h1 = xs[i + 1] - xs[i];
            lower[j] = h0;
            diag[j] = 2.0 * (h0 + h1);
            upper[j] = h1;
            rhs[j] = 6.0 * ((ys[i + 1] - ys[i]) / h1 - (ys[i] - ys[i - 1]) / h0);
        }
        const auto interior = detail::solve_tridiagonal(lower, diag, upper, rhs);
        std::copy(interior.begin(), interior.end(), m.begin() + 1);
    }
    auto pp = detail::from_second_derivatives(xs, ys, m);
    pp.extrapolation = Extrapolation::Linear;
    return pp;
}

/// Interpolating cubic with prescribed end slopes d0 at x_0 and dn at x_n.
inline PiecewisePoly clamped_cubic(const Series& s, double d0, double dn)
{
    detail::require_points(s, 2);
    if (!std::isfinite(d0) || !std::isfinite(dn)) {
        throw Error(ErrorCode::NonFinite, "end slopes must be finite");
    }
    const std::size_t n = s.size();
    const auto xs = s.xs();
    const auto ys = s.ys();
    std::vector<double> lower(n, 0.0), diag(n), upper(n, 0.0), rhs(n);
    const double h_first = xs[1] - xs[0];
    const double h_last = xs[n - 1] - xs[n - 2];
    diag[0] = 2.0 * h_first;
    upper[0] = h_first;
    rhs[0] = 6.0 * ((ys[1] - ys[0]) / h_first - d0);
    for (std::size_t i = 1; i + 1 < n; ++i) {
        const double h0 = xs[i] - xs[i - 1];
        const double h1 = xs[i + 1] - xs[i];
        lower[i] = h0;
        diag[i] = 2.0 * (h0 + h1);
        upper[i] = h1;
        rhs[i] = 6.0 * ((ys[i + 1] - ys[i]) / h1 - (ys[i] - ys[i - 1]) / h0);
    }
    lower[n - 1] = h_last;
    diag[n - 1] = 2.0 * h_last;
    rhs[n - 1] = 6.0 * (dn - (ys[n - 1] - ys[n - 2]) / h_last);
    const auto m = detail::solve_tridiagonal(lower, diag, upper, rhs);
    return detail::from_second_derivatives(xs, ys, m);
}

/// Node slopes of the shape-preserving Hermite interpolant (Fritsch-Carlson).
inline std::vector<double> pchip_slopes(std::span<const double> xs, std::span<const double> ys)
{
    const std::size_t n = xs.size();
    std::vector<double> h(n - 1), delta(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        h[i] = xs[i + 1] - xs[i];
        delta[i] = (ys[i + 1] - ys[i]) / h[i];
    }
    std::vector<double> slope(n, 0.0);
    if (n == 2) {
        slope[0] = slope[1] = delta[0];
        return slope;
    }
    for (std::size_t k = 1; k + 1 < n; ++k) {
        const double a = delta[k - 1];
        const double b = delta[k];
        if (a == 0.0 || b == 0.0 || detail::sign(a) != detail::sign(b)) continue;
        const double w1 = 2.0 * h[k] + h[k - 1];
        const double w2 = h[k] + 2.0 * h[k - 1];
        slope[k] = (w1 + w2) / (w1 / a + w2 / b);
    }
    // one-sided three-point estimate, clipped so the end piece stays monotone
    const auto end_slope = [](double h0, double h1, double d0, double d1) {
        double d = ((2.0 * h0 + h1) * d0 - h0 * d1) / (h0 + h1);
        if (detail::sign(d) != detail::sign(d0)) {
            d = 0.0;
        } else if (detail::sign(d0) != detail::sign(d1) && std::abs(d) > 3.0 * std::abs(d0)) {
            d = 3.0 * d0;
        }
        return d;
    };
    slope[0] = end_slope(h[0], h[1], delta[0], delta[1]);
    slope[n - 1] = end_slope(h[n - 2], h[n - 3], delta[n - 2], delta[n - 3]);
    return slope;
}

/// Piecewise cubic Hermite interpolant that preserves monotonicity.
inline PiecewisePoly pchip(const Series& s)
{
    detail::require_points(s, 2);
    const auto slopes = pchip_slopes(s.xs(), s.ys());
    return detail::from_slopes(s.xs(), s.ys(), slopes);
}

/// Cubic smoothing spline minimizing sum (f(x_i) - y_i)^2 + p * integral f''^2.
///
/// p = 0 gives the natural interpolant, p -> infinity the least-squares line.
/// Uses the Reinsch banded formulation: with Q the n x (n-2) second-divided-
/// difference matrix and R the tridiagonal Gram matrix of the hat functions,
/// (R + p Q^T Q) gamma = Q^T y, fitted values g = y - p Q gamma, and gamma
/// are the interior second derivatives.
inline PiecewisePoly smoothing_spline(const Series& s, double p)
{
    detail::require_points(s, 3);
    if (!(p >= 0.0) || !std::isfinite(p)) {
        throw Error(ErrorCode::InvalidArgument, "smoothing parameter must be finite and non-negative");
    }
    const std::size_t n = s.size();
    const std::size_t k = n - 2;
    const auto xs = s.xs();
    const auto ys = s.ys();
    std::vector<double> h(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) h[i] = xs[i + 1] - xs[i];

    // column j of Q (interior knot j + 1) has entries at rows j, j+1, j+2
    std::vector<double> q0(k), q1(k), q2(k);
    for (std::size_t j = 0; j < k; ++j) {
        q0[j] = 1.0 / h[j];
        q1[j] = -1.0 / h[j] - 1.0 / h[j + 1];
        q2[j] = 1.0 / h[j + 1];
    }
    std::vector<double> d0(k), d1(k, 0.0), d2(k, 0.0), rhs(k);
    for (std::size_t j = 0; j < k; ++j) {
        d0[j] = (h[j] + h[j + 1]) / 3.0 + p * (q0[j] * q0[j] + q1[j] * q1[j] + q2[j] * q2[j]);
        if (j + 1 < k) d1[j] = h[j + 1] / 6.0 + p * (q1[j] * q0[j + 1] + q2[j] * q1[j + 1]);
        if (j + 2 < k) d2[j] = p * q2[j] * q0[j + 2];
        rhs[j] = q0[j] * ys[j] + q1[j] * ys[j + 1] + q2[j] * ys[j + 2];
    }
    const auto gamma = detail::solve_pentadiagonal_spd(d0, d1, d2, rhs);

    std::vector<double> g(ys.begin(), ys.end());
    for (std::size_t j = 0; j < k; ++j) {
        g[j] -= p * q0[j] * gamma[j];
        g[j + 1] -= p * q1[j] * gamma[j];
        g[j + 2] -= p * q2[j] * gamma[j];
    }
    std::vector<double> m(n, 0.0);
    std::copy(gamma.begin(), gamma.end(), m.begin() + 1);
    auto pp = detail::from_second_derivatives(xs, g, m);
    pp.extrapolation = Extrapolation::Linear;
    return pp;
}

/// All B-spline basis functions of `degree` over `knots` at x (Cox-de Boor).
/// Returns knots.size() - degree - 1 values. x equal to the last knot belongs
/// to the last nonempty span.
inline std::vector<double> bspline_basis(std::span<const double> knots, std::size_t degree, double x)
{
    const std::size_t m = knots.size();
    if (m < degree + 2) {
        throw Error(ErrorCode::InvalidKnots, "need at least degree + 2 knots");
    }
    for (std::size_t i = 1; i < m; ++i) {
        if (!(knots[i] >= knots[i - 1])) {
            throw Error(ErrorCode::InvalidKnots, "knots must be non-decreasing");
        }
    }
    if (!(knots[m - 1] > knots[0])) {
        throw Error(ErrorCode::InvalidKnots, "knot vector has zero length");
    }
    const std::size_t count = m - degree - 1;
    std::vector<double> n0(m - 1, 0.0);
    std::size_t last_span = m - 2;
    while (knots[last_span + 1] == knots[last_span]) --last_span;
    for (std::size_t i = 0; i + 1 < m; ++i) {
        if (knots[i] <= x && x < knots[i + 1]) n0[i] = 1.0;
    }
    if (x == knots[last_span + 1]) n0[last_span] = 1.0;

    std::vector<double> cur = std::move(n0);
    for (std::size_t d = 1; d <= degree; ++d) {
        std::vector<double> next(m - 1 - d, 0.0);
        for (std::size_t i = 0; i + d + 1 < m; ++i) {
            double v = 0.0;
            const double left_den = knots[i + d] - knots[i];
            const double right_den = knots[i + d + 1] - knots[i + 1];
            if (left_den > 0.0) v += (x - knots[i]) / left_den * cur[i];
            if (right_den > 0.0) v += (knots[i + d + 1] - x) / right_den * cur[i + 1];
            next[i] = v;
        }
        cur = std::move(next);
    }
    cur.resize(count);
    return cur;
}

/// Clamped cubic knot vector with `interior` knots at equally spaced
/// quantiles of the abscissas.
inline std::vector<double> quantile_knots(const Series& s, std::size_t interior)
{
    const auto xs = s.xs();
    std::vector<double> knots(4, s.x_min());
    for (std::size_t j = 1; j <= interior; ++j) {
        const double pos = static_cast<double>(j) / static_cast<double>(interior + 1) *
                           static_cast<double>(xs.size() - 1);
        const auto lo = static_cast<std::size_t>(std::floor(pos));
        const std::size_t hi = std::min(lo + 1, xs.size() - 1);
        const double q = xs[lo] + (pos - static_cast<double>(lo)) * (xs[hi] - xs[lo]);
        if (q > knots.back() && q < s.x_max()) knots.push_back(q);
    }
    knots.insert(knots.end(), 4, s.x_max());
    return knots;
}

/// Least-squares cubic B-spline with quantile-placed interior knots,
/// returned in piecewise form.
inline PiecewisePoly bspline_fit(const Series& s, std::size_t interior_knots)
{
    const auto knots = quantile_knots(s, interior_knots);
    const std::size_t basis_count = knots.size() - 4;
    detail::require_points(s, basis_count);
    Matrix design(s.size(), basis_count);
    for (std::size_t i = 0; i < s.size(); ++i) {
        const auto b = bspline_basis(knots, 3, s.x(i));
        for (std::size_t j = 0; j < basis_count; ++j) design(i, j) = b[j];
    }
    const LeastSquares solver(std::move(design));
    const auto coef = solver.solve(s.ys());

    const auto value = [&](double x) {
        const auto b = bspline_basis(knots, 3, x);
        double v = 0.0;
        for (std::size_t j = 0; j < basis_count; ++j) v += coef[j] * b[j];
        return v;
    };

    // each span is a single cubic: recover its local power form from 4 samples
    PiecewisePoly pp;
    for (std::size_t i = 3; i + 4 < knots.size(); ++i) {
        if (knots[i + 1] > knots[i]) pp.knots.push_back(knots[i]);
    }
    pp.knots.push_back(s.x_max());
    for (std::size_t i = 0; i + 1 < pp.knots.size(); ++i) {
        const double a = pp.knots[i];
        const double h = pp.knots[i + 1] - a;
        std::vector<double> u(4), v(4);
        for (std::size_t k = 0; k < 4; ++k) {
            u[k] = h * static_cast<double>(k) / 3.0;
            v[k] = value(a + u[k]);
        }
        const auto fit = polyfit(u, v, 3);
        pp.coeffs.push_back({fit.beta[0], fit.beta[1], fit.beta[2], fit.beta[3]});
    }
    return pp;
}

}  // namespace smoothcurve
