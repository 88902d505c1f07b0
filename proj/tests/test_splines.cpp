#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <vector>

#include "oracles.hpp"
#include "smoothcurve/loess.hpp"
#include "smoothcurve/splines.hpp"

using namespace smoothcurve;

namespace {

Series random_series(std::mt19937_64& rng, std::size_t n)
{
    std::uniform_real_distribution<double> step(0.05, 1.0), u(-3.0, 3.0);
    std::vector<double> xs(n), ys(n);
    double x = u(rng);
    for (std::size_t i = 0; i < n; ++i) {
        x += step(rng);
        xs[i] = x;
        ys[i] = u(rng);
    }
    return Series(xs, ys);
}

double max_abs(std::span<const double> v)
{
    double m = 0.0;
    for (double y : v) m = std::max(m, std::abs(y));
    return m;
}

double rss(const PiecewisePoly& pp, const Series& s)
{
    double sum = 0.0;
    for (std::size_t i = 0; i < s.size(); ++i) sum += std::pow(eval(pp, s.x(i)) - s.y(i), 2);
    return sum;
}

double total_variation(std::span<const double> v)
{
    double tv = 0.0;
    for (std::size_t i = 1; i < v.size(); ++i) tv += std::abs(v[i] - v[i - 1]);
    return tv;
}

// one-sided limits at each interior knot: the left piece at its right end
// against the right piece at its origin, plus probes 1e-6 of an interval away
void expect_continuous(const PiecewisePoly& pp, int max_deriv)
{
    for (std::size_t k = 1; k + 1 < pp.knots.size(); ++k) {
        const double hl = pp.knots[k] - pp.knots[k - 1];
        const double hr = pp.knots[k + 1] - pp.knots[k];
        for (int d = 0; d <= max_deriv; ++d) {
            const double left = detail::piece_value(pp.coeffs[k - 1], hl, d);
            const double right = detail::piece_value(pp.coeffs[k], 0.0, d);
            const double scale = std::max({1.0, std::abs(left), std::abs(right)});
            EXPECT_LT(std::abs(left - right), 1e-8 * scale) << "knot " << k << " deriv " << d;
        }
        const double probe_l = eval(pp, pp.knots[k] - 1e-6 * hl);
        const double probe_r = eval(pp, pp.knots[k] + 1e-6 * hr);
        const double slope = std::abs(eval(pp, pp.knots[k], 1));
        EXPECT_LT(std::abs(probe_r - probe_l), 1e-6 * (hl + hr) * (slope + 1.0) + 1e-12);
    }
}

}  // namespace

TEST(NaturalCubic, TwoPointsIsChord)
{
    const auto pp = natural_cubic(Series({0, 1}, {0, 1}));
    ASSERT_EQ(pp.coeffs.size(), 1u);
    EXPECT_NEAR(pp.coeffs[0][0], 0.0, 1e-15);
    EXPECT_NEAR(pp.coeffs[0][1], 1.0, 1e-15);
    EXPECT_NEAR(pp.coeffs[0][2], 0.0, 1e-15);
    EXPECT_NEAR(pp.coeffs[0][3], 0.0, 1e-15);
}

TEST(NaturalCubic, LinearDataHasNoCurvature)
{
    std::mt19937_64 rng(51);
    auto s = random_series(rng, 30);
    std::vector<double> ys(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) ys[i] = 2.0 - 0.5 * s.x(i);
    const auto pp = natural_cubic(s.with_ys(ys));
    for (const auto& c : pp.coeffs) {
        EXPECT_NEAR(c[2], 0.0, 1e-10);
        EXPECT_NEAR(c[3], 0.0, 1e-10);
    }
}

TEST(NaturalCubic, HandSolvedThreePoints)
{
    const auto pp = natural_cubic(Series({0, 1, 2}, {0, 1, 0}));
    EXPECT_NEAR(eval(pp, 1.0, 2), -3.0, 1e-14);
    EXPECT_NEAR(eval(pp, 0.5), 1.5 * 0.5 - 0.5 * 0.125, 1e-14);
    EXPECT_NEAR(eval(pp, 0.5), 0.6875, 1e-14);
    EXPECT_NEAR(eval(pp, 1.5), 0.6875, 1e-14);
}

TEST(NaturalCubic, LinearExtrapolation)
{
    const auto pp = natural_cubic(Series({0, 1, 2}, {0, 1, 0}));
    // slope at 0 is 1.5, at 2 is -1.5
    EXPECT_NEAR(eval(pp, -1.0), -1.5, 1e-14);
    EXPECT_NEAR(eval(pp, 3.0), -1.5, 1e-14);
    EXPECT_EQ(eval(pp, -1.0, 2), 0.0);
    EXPECT_NEAR(eval(pp, 0.0, 2), 0.0, 1e-9);
    EXPECT_NEAR(eval(pp, 2.0, 2), 0.0, 1e-9);
}

TEST(ClampedCubic, Chord)
{
    const auto pp = clamped_cubic(Series({0, 1}, {0, 1}), 1.0, 1.0);
    for (double x : {0.0, 0.3, 0.9, 1.0}) EXPECT_NEAR(eval(pp, x), x, 1e-14);
}

TEST(ClampedCubic, ReproducesQuadratic)
{
    const auto pp = clamped_cubic(Series({0, 1, 2}, {0, 1, 4}), 0.0, 4.0);
    for (double x : oracle::linspace(0, 2, 41)) EXPECT_NEAR(eval(pp, x), x * x, 1e-13);
}

TEST(ClampedCubic, HandSolvedZeroSlopes)
{
    // unknown second derivatives M0, M1, M2 with h = 1:
    //   2 M0 + M1 = 6 (1 - 0), M0 + 4 M1 + M2 = 6 (-1 - 1), M1 + 2 M2 = 6 (0 - (-1))
    // gives M0 = M2 = 6, M1 = -6
    const auto pp = clamped_cubic(Series({0, 1, 2}, {0, 1, 0}), 0.0, 0.0);
    const auto cubic0 = [](double x) { return 6.0 * (1 - x) * (1 - x) * (1 - x) / 6.0 - 6.0 * x * x * x / 6.0 + (0.0 - 1.0) * (1 - x) + (1.0 + 1.0) * x; };
    EXPECT_NEAR(eval(pp, 0.5), cubic0(0.5), 1e-14);
    EXPECT_NEAR(eval(pp, 0.5), 0.5, 1e-14);
    EXPECT_NEAR(eval(pp, 1.5), 0.5, 1e-14);
    EXPECT_NEAR(eval(pp, 0.0, 1), 0.0, 1e-14);
    EXPECT_NEAR(eval(pp, 2.0, 1), 0.0, 1e-14);
}

TEST(Interpolants, InterpolateAndStayContinuous)
{
    std::mt19937_64 rng(52);
    for (int trial = 0; trial < 25; ++trial) {
        const auto s = random_series(rng, 5 + trial);
        const double scale = max_abs(s.ys());
        const auto nat = natural_cubic(s);
        const auto clamp = clamped_cubic(s, 0.3, -1.2);
        const auto mono = pchip(s);
        for (std::size_t i = 0; i < s.size(); ++i) {
            EXPECT_LE(std::abs(eval(nat, s.x(i)) - s.y(i)), 1e-9 * scale);
            EXPECT_LE(std::abs(eval(clamp, s.x(i)) - s.y(i)), 1e-9 * scale);
            EXPECT_LE(std::abs(eval(mono, s.x(i)) - s.y(i)), 1e-9 * scale);
        }
        expect_continuous(nat, 2);
        expect_continuous(clamp, 2);
        expect_continuous(mono, 1);
        EXPECT_NEAR(eval(clamp, s.x(0), 1), 0.3, 1e-9);
        EXPECT_NEAR(eval(clamp, s.x(s.size() - 1), 1), -1.2, 1e-9);
    }
}

TEST(Interpolants, TooFewPoints)
{
    const Series one({0}, {1});
    for (auto f : {+[](const Series& s) { natural_cubic(s); }, +[](const Series& s) { pchip(s); },
                   +[](const Series& s) { clamped_cubic(s, 0, 0); }, +[](const Series& s) { smoothing_spline(s, 1.0); }}) {
        try {
            f(one);
            FAIL();
        } catch (const Error& e) {
            EXPECT_EQ(e.code(), ErrorCode::TooFewPoints);
        }
    }
    EXPECT_THROW(smoothing_spline(Series({0, 1}, {0, 1}), 1.0), Error);
}

TEST(Pchip, MonotoneDataGivesMonotoneCurve)
{
    std::mt19937_64 rng(53);
    std::uniform_real_distribution<double> step(0.01, 2.0), rise(0.0, 3.0);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<double> xs(25), ys(25);
        double x = 0.0, y = 0.0;
        for (std::size_t i = 0; i < 25; ++i) {
            x += step(rng);
            y += (i % 4 == 0) ? 0.0 : rise(rng);
            xs[i] = x;
            ys[i] = y;
        }
        const auto pp = pchip(Series(xs, ys));
        const auto grid = oracle::linspace(xs.front(), xs.back(), 1000);
        const auto v = eval(pp, grid);
        for (std::size_t i = 1; i < v.size(); ++i) EXPECT_GE(v[i], v[i - 1] - 1e-12 * std::abs(v[i]));
    }
}

TEST(Pchip, LineIsExact)
{
    const Series s({0, 0.5, 2, 3}, {1, 2, 5, 7});
    const auto pp = pchip(s);
    for (double x : oracle::linspace(0, 3, 31)) EXPECT_NEAR(eval(pp, x), 1 + 2 * x, 1e-13);
}

TEST(Pchip, LocalMaximumHasFlatSlope)
{
    const auto pp = pchip(Series({0, 1, 2}, {0, 1, 0}));
    EXPECT_EQ(pp.coeffs[1][1], 0.0);
    EXPECT_EQ(eval(pp, 1.0, 1), 0.0);
}

TEST(Pchip, NodeSlopesMatchIndependentRule)
{
    std::mt19937_64 rng(54);
    for (int trial = 0; trial < 20; ++trial) {
        const auto s = random_series(rng, 12);
        const auto pp = pchip(s);
        for (std::size_t k = 1; k + 1 < s.size(); ++k) {
            const double expected = oracle::pchip_interior_slope(s.xs(), s.ys(), k);
            EXPECT_NEAR(eval(pp, s.x(k), 1), expected, 1e-10 * std::max(1.0, std::abs(expected)));
        }
    }
}

TEST(Pchip, EndSlopeClipping)
{
    // three-point estimate (2*1+1)*1 - 1*(-5) / 2 = 4 > 3 * 1 with sign change: clipped to 3
    const auto slopes = pchip_slopes(std::vector<double>{0, 1, 2}, std::vector<double>{0, 1, -4});
    EXPECT_DOUBLE_EQ(slopes[0], 3.0);
    // estimate opposite in sign to the first secant: zero
    const auto flat = pchip_slopes(std::vector<double>{0, 1, 2}, std::vector<double>{0, 0.1, 5});
    EXPECT_EQ(flat[0], 0.0);
}

TEST(SmoothingSpline, ZeroPenaltyInterpolates)
{
    std::mt19937_64 rng(55);
    const auto s = random_series(rng, 40);
    const auto sm = smoothing_spline(s, 0.0);
    const auto nat = natural_cubic(s);
    for (std::size_t i = 0; i < s.size(); ++i) EXPECT_NEAR(eval(sm, s.x(i)), s.y(i), 1e-8);
    for (double x : oracle::linspace(s.x(0), s.x(s.size() - 1), 500)) EXPECT_NEAR(eval(sm, x), eval(nat, x), 1e-8);
}

TEST(SmoothingSpline, HugePenaltyGivesLeastSquaresLine)
{
    const auto xs = oracle::linspace(0, 4, 200);
    std::vector<double> ys(200);
    for (std::size_t i = 0; i < 200; ++i) ys[i] = 3.0 + 0.5 * xs[i] + std::sin(3 * xs[i]);
    const Series s(xs, oracle::noisy(ys, 0.2, 56));
    const double p = 1e12 * 200 * std::pow(4.0, 3);
    const auto sm = smoothing_spline(s, p);
    const auto line = polyfit(s.xs(), s.ys(), 1);
    for (double x : xs) EXPECT_LE(std::abs(eval(sm, x) - line(x)), 1e-4 * std::abs(line(x)));
}

TEST(SmoothingSpline, LineUnchangedForAnyPenalty)
{
    const auto xs = oracle::linspace(-1, 1, 50);
    std::vector<double> ys(50);
    for (std::size_t i = 0; i < 50; ++i) ys[i] = 4.0 * xs[i] - 1.0;
    for (double p : {0.0, 1e-3, 1.0, 1e4, 1e9}) {
        const auto sm = smoothing_spline(Series(xs, ys), p);
        for (std::size_t i = 0; i < 50; ++i) EXPECT_NEAR(eval(sm, xs[i]), ys[i], 1e-9);
    }
}

TEST(SmoothingSpline, ResidualSumGrowsWithPenalty)
{
    const auto xs = oracle::linspace(0, 10, 300);
    std::vector<double> ys(300);
    for (std::size_t i = 0; i < 300; ++i) ys[i] = std::cos(xs[i]);
    const Series s(xs, oracle::noisy(ys, 0.3, 57));
    const double big = 1e12 * 300 * 1000.0;
    double prev = -1.0;
    for (double p : {0.0, 1e-4, 1e-2, 1.0, 1e3, 1e6, big}) {
        const double r = rss(smoothing_spline(s, p), s);
        EXPECT_GE(r, prev - 1e-9 * std::max(1.0, prev)) << "p = " << p;
        prev = r;
    }
}

TEST(BSplineBasis, DegreeZeroIndicator)
{
    const std::vector<double> knots{0, 1, 2};
    EXPECT_EQ(bspline_basis(knots, 0, 0.5), (std::vector<double>{1, 0}));
    EXPECT_EQ(bspline_basis(knots, 0, 2.0), (std::vector<double>{0, 1}));
}

TEST(BSplineBasis, QuadraticMatchesRecursiveOracle)
{
    const std::vector<double> knots{0, 0, 0, 1, 2, 2, 2};
    for (double x : {0.0, 0.25, 0.5, 1.0, 1.3, 1.99}) {
        const auto b = bspline_basis(knots, 2, x);
        ASSERT_EQ(b.size(), 4u);
        for (int i = 0; i < 4; ++i) EXPECT_NEAR(b[i], oracle::cox_de_boor(knots, i, 2, x), 1e-15) << x;
    }
    const auto half = bspline_basis(knots, 2, 0.5);
    EXPECT_NEAR(half[0], 0.25, 1e-15);
    EXPECT_NEAR(half[1], 0.625, 1e-15);
    EXPECT_NEAR(half[2], 0.125, 1e-15);
    EXPECT_NEAR(half[3], 0.0, 1e-15);
}

TEST(BSplineBasis, PartitionOfUnity)
{
    std::mt19937_64 rng(58);
    std::vector<double> knots{0, 0, 0, 0};
    std::uniform_real_distribution<double> step(0.1, 1.0);
    double t = 0.0;
    for (int i = 0; i < 9; ++i) knots.push_back(t += step(rng));
    const double end = t + step(rng);
    knots.insert(knots.end(), 4, end);
    std::uniform_real_distribution<double> u(0.0, end);
    for (int i = 0; i < 1000; ++i) {
        const auto b = bspline_basis(knots, 3, u(rng));
        double sum = 0.0;
        for (double v : b) {
            EXPECT_GE(v, -1e-15);
            sum += v;
        }
        EXPECT_NEAR(sum, 1.0, 1e-12);
    }
}

TEST(BSplineBasis, InvalidKnots)
{
    for (const std::vector<double>& knots : {std::vector<double>{0, 1}, std::vector<double>{0, 2, 1, 3},
                                             std::vector<double>{1, 1, 1, 1}}) {
        try {
            bspline_basis(knots, 1, 0.5);
            FAIL();
        } catch (const Error& e) {
            EXPECT_EQ(e.code(), ErrorCode::InvalidKnots);
        }
    }
}

TEST(BSplineFit, ReproducesCubicAndIsC2)
{
    const auto xs = oracle::linspace(0, 3, 120);
    std::vector<double> ys(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) ys[i] = 1 - xs[i] + 0.5 * xs[i] * xs[i] * xs[i];
    const auto pp = bspline_fit(Series(xs, ys), 6);
    EXPECT_EQ(pp.coeffs.size() + 1, pp.knots.size());
    for (std::size_t i = 0; i < xs.size(); ++i) EXPECT_NEAR(eval(pp, xs[i]), ys[i], 1e-9);
    expect_continuous(pp, 2);
}

TEST(Splines, InterpolantChasesNoise)
{
    const auto xs = oracle::linspace(0, 10, 10000);
    std::vector<double> clean(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) clean[i] = std::tanh(xs[i] - 3.0);
    const Series s(xs, oracle::noisy(clean, 0.05, 59));
    const auto nat = eval(natural_cubic(s), s.xs());
    const auto smooth = loess_smooth(s, {0.1, 1, 0, 0.0});
    EXPECT_GE(total_variation(nat), 10.0 * total_variation(smooth.ys()));
}
