#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <vector>

#include "oracles.hpp"
#include "smoothcurve/savgol.hpp"

using namespace smoothcurve;

namespace {

double cubic(double x) { return 0.5 - 1.25 * x + 0.3 * x * x + 0.04 * x * x * x; }

}  // namespace

TEST(SavGolSpec, Validation)
{
    EXPECT_THROW((SavGolSpec{4, 2, 0}.validate()), Error);
    EXPECT_THROW((SavGolSpec{1, 0, 0}.validate()), Error);
    EXPECT_THROW((SavGolSpec{5, 5, 0}.validate()), Error);
    EXPECT_THROW((SavGolSpec{5, 2, 3}.validate()), Error);
    EXPECT_NO_THROW((SavGolSpec{5, 4, 4}.validate()));
    try {
        savgol_coefficients({6, 2, 0});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::InvalidSpec);
    }
}

TEST(SavGolCoefficients, ClassicalFivePointQuadratic)
{
    const auto c = savgol_coefficients({5, 2, 0});
    const auto exact = oracle::savgol_exact(2, 2, 0);
    const double table[] = {-3.0 / 35, 12.0 / 35, 17.0 / 35, 12.0 / 35, -3.0 / 35};
    ASSERT_EQ(c.size(), 5u);
    for (std::size_t j = 0; j < 5; ++j) {
        EXPECT_NEAR(c[j], table[j], 1e-12);
        EXPECT_NEAR(c[j], exact[j].value(), 1e-12);
    }
    EXPECT_TRUE(exact[0] == oracle::Fraction(-3, 35));
    EXPECT_TRUE(exact[2] == oracle::Fraction(17, 35));
}

TEST(SavGolCoefficients, ThreePointCases)
{
    const auto mean = savgol_coefficients({3, 1, 0});
    for (double c : mean) EXPECT_NEAR(c, 1.0 / 3.0, 1e-15);
    const auto diff = savgol_coefficients({3, 1, 1});
    EXPECT_NEAR(diff[0], -0.5, 1e-15);
    EXPECT_NEAR(diff[1], 0.0, 1e-15);
    EXPECT_NEAR(diff[2], 0.5, 1e-15);
}

TEST(SavGolCoefficients, MatchExactRationalSolve)
{
    for (int half : {2, 3, 5, 7})
        for (int degree = 0; degree <= std::min(2 * half, 4); ++degree)
            for (int d = 0; d <= degree; ++d) {
                const auto c = savgol_coefficients(
                    {static_cast<std::size_t>(2 * half + 1), static_cast<std::size_t>(degree), static_cast<std::size_t>(d)});
                const auto exact = oracle::savgol_exact(half, degree, d);
                for (std::size_t j = 0; j < c.size(); ++j) {
                    EXPECT_NEAR(c[j], exact[j].value(), 1e-11) << half << ' ' << degree << ' ' << d;
                }
            }
}

TEST(SavGolCoefficients, SymmetryAndMoments)
{
    for (std::size_t w : {5u, 11u, 25u, 99u})
        for (std::size_t m = 1; m <= 4; ++m)
            for (std::size_t d = 0; d <= std::min<std::size_t>(m, 2); ++d) {
                const auto c = savgol_coefficients({w, m, d});
                const std::size_t h = w / 2;
                for (std::size_t j = 0; j < h; ++j) {
                    const double mirror = c[w - 1 - j];
                    if (d % 2 == 0) EXPECT_NEAR(c[j], mirror, 1e-12);
                    else EXPECT_NEAR(c[j], -mirror, 1e-12);
                }
                double s0 = 0.0, s1 = 0.0;
                for (std::size_t j = 0; j < w; ++j) {
                    s0 += c[j];
                    s1 += (static_cast<double>(j) - static_cast<double>(h)) * c[j];
                }
                if (d == 0) EXPECT_NEAR(s0, 1.0, 1e-12);
                if (d == 1) {
                    EXPECT_NEAR(s0, 0.0, 1e-12);
                    EXPECT_NEAR(s1, 1.0, 1e-12);
                }
            }
}

TEST(SavGolApply, CubicReproducedEverywhere)
{
    const auto xs = oracle::linspace(-5.0, 5.0, 10000);
    std::vector<double> ys(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) ys[i] = cubic(xs[i]);
    const auto out = savgol_apply(Series(xs, ys), {99, 3, 0});
    for (std::size_t i = 0; i < xs.size(); ++i) {
        EXPECT_LE(std::abs(out.y(i) - ys[i]), 1e-9 * std::max(1.0, std::abs(ys[i]))) << i;
    }
}

TEST(SavGolApply, DerivativeOfSquare)
{
    std::vector<double> xs(60), ys(60);
    for (std::size_t i = 0; i < 60; ++i) xs[i] = 0.1 * static_cast<double>(i), ys[i] = xs[i] * xs[i];
    const auto out = savgol_apply(Series(xs, ys), {5, 2, 1});
    for (std::size_t i = 0; i < 60; ++i) EXPECT_NEAR(out.y(i), 2.0 * xs[i], 1e-9);
    const auto second = savgol_apply(Series(xs, ys), {7, 3, 2});
    for (std::size_t i = 0; i < 60; ++i) EXPECT_NEAR(second.y(i), 2.0, 1e-8);
}

TEST(SavGolApply, CubicDerivativeIncludingEdges)
{
    const auto xs = oracle::linspace(0.0, 4.0, 400);
    std::vector<double> ys(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) ys[i] = cubic(xs[i]);
    const auto out = savgol_apply(Series(xs, ys), {31, 3, 1});
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double x = xs[i];
        EXPECT_NEAR(out.y(i), -1.25 + 0.6 * x + 0.12 * x * x, 1e-8);
    }
}

TEST(SavGolApply, NoisySine)
{
    const auto xs = oracle::linspace(0.0, 4.0 * 3.141592653589793, 10000);
    std::vector<double> clean(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) clean[i] = std::sin(xs[i]);
    const double sigma = 0.1;
    const auto out = savgol_apply(Series(xs, oracle::noisy(clean, sigma, 41)), {99, 3, 0});
    EXPECT_LT(oracle::rmse(out.ys(), clean), 0.35 * sigma);
}

TEST(SavGolApply, Linearity)
{
    const auto xs = oracle::linspace(0, 1, 300);
    const auto a = oracle::noisy(std::vector<double>(300, 0.0), 1.0, 42);
    const auto b = oracle::noisy(std::vector<double>(300, 0.0), 1.0, 43);
    std::vector<double> mix(300);
    for (std::size_t i = 0; i < 300; ++i) mix[i] = 2.5 * a[i] - 0.5 * b[i];
    for (const SavGolSpec spec : {SavGolSpec{21, 3, 0}, SavGolSpec{21, 4, 1}}) {
        const auto fa = savgol_apply(Series(xs, a), spec);
        const auto fb = savgol_apply(Series(xs, b), spec);
        const auto fm = savgol_apply(Series(xs, mix), spec);
        double scale = 1.0;
        for (double y : fm.ys()) scale = std::max(scale, std::abs(y));
        for (std::size_t i = 0; i < 300; ++i) EXPECT_NEAR(fm.y(i), 2.5 * fa.y(i) - 0.5 * fb.y(i), 1e-12 * scale);
    }
}

TEST(SavGolApply, Errors)
{
    try {
        savgol_apply(Series({0, 1, 2}, {0, 1, 2}), {5, 2, 0});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::SeriesTooShort);
    }
    try {
        savgol_apply(Series({0, 1, 2, 3.5, 4, 5}, {0, 1, 2, 3, 4, 5}), {5, 2, 0});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NonUniformSpacing);
        EXPECT_NE(std::string(e.what()).find("resample_uniform"), std::string::npos);
    }
}

TEST(SavGolApply, ToleratesSmallJitter)
{
    std::vector<double> xs(50), ys(50);
    for (std::size_t i = 0; i < 50; ++i) xs[i] = static_cast<double>(i) + (i % 2 ? 0.004 : -0.004), ys[i] = 1.0;
    const auto out = savgol_apply(Series(xs, ys), {5, 2, 0});
    for (double y : out.ys()) EXPECT_NEAR(y, 1.0, 1e-12);
}
