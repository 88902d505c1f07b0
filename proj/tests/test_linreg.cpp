#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <vector>

#include "oracles.hpp"
#include "smoothcurve/linreg.hpp"

using namespace smoothcurve;

namespace {

void expect_rel(double actual, double expected, double tol)
{
    EXPECT_LE(std::abs(actual - expected), tol * std::max(1.0, std::abs(expected))) << actual << " vs " << expected;
}

}  // namespace

TEST(WlsPolyfit, ExactLine)
{
    const std::vector<double> xs{0, 1, 2}, ys{1, 3, 5};
    const auto fit = polyfit(xs, ys, 1);
    ASSERT_EQ(fit.beta.size(), 2u);
    EXPECT_NEAR(fit.beta[0], 1.0, 1e-14);
    EXPECT_NEAR(fit.beta[1], 2.0, 1e-14);
    EXPECT_NEAR(fit.sigma2_hat, 0.0, 1e-28);
}

TEST(WlsPolyfit, ConstantReproduction)
{
    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> u(0.1, 1.0);
    for (std::size_t d = 0; d <= 4; ++d) {
        std::vector<double> xs(12), ys(12, -3.25), w(12);
        for (std::size_t i = 0; i < 12; ++i) xs[i] = static_cast<double>(i) * 0.3 - 1.0, w[i] = u(rng);
        const auto fit = wls_polyfit(xs, ys, w, d);
        EXPECT_NEAR(fit.beta[0], -3.25, 1e-12);
        for (std::size_t k = 1; k <= d; ++k) EXPECT_NEAR(fit.beta[k], 0.0, 1e-11);
    }
}

TEST(WlsPolyfit, NormalEquationsHandCase)
{
    const std::vector<double> xs{0, 1, 2, 3}, ys{0, 0, 1, 1};
    const std::vector<double> w(4, 1.0);
    const auto oracle_beta = oracle::normal_equations_fit(xs, ys, w, 1);
    EXPECT_NEAR(oracle_beta[0], -0.1, 1e-15);
    EXPECT_NEAR(oracle_beta[1], 0.4, 1e-15);
    const auto fit = polyfit(xs, ys, 1);
    EXPECT_NEAR(fit.beta[0], -0.1, 1e-14);
    EXPECT_NEAR(fit.beta[1], 0.4, 1e-14);
    // residuals 0.1, -0.3, 0.3, -0.1 -> 0.2 / 2
    EXPECT_NEAR(fit.sigma2_hat, 0.1, 1e-14);
}

TEST(WlsPolyfit, PolynomialReproductionAnyWeights)
{
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-2.0, 2.0), w(0.05, 1.0);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t d = static_cast<std::size_t>(trial % 5);
        std::vector<double> coef(d + 1);
        for (double& c : coef) c = u(rng);
        const std::size_t n = d + 1 + static_cast<std::size_t>(trial % 7);
        std::vector<double> xs(n), ys(n), ws(n);
        for (std::size_t i = 0; i < n; ++i) {
            xs[i] = -1.0 + 2.0 * static_cast<double>(i) / static_cast<double>(std::max<std::size_t>(n - 1, 1)) + 0.01 * u(rng);
            double y = 0.0;
            for (std::size_t k = coef.size(); k-- > 0;) y = y * xs[i] + coef[k];
            ys[i] = y;
            ws[i] = w(rng);
        }
        const auto fit = wls_polyfit(xs, ys, ws, d);
        for (std::size_t k = 0; k <= d; ++k) expect_rel(fit.beta[k], coef[k], 1e-9);
    }
}

TEST(WlsPolyfit, MatchesBruteForceNormalEquations)
{
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> u(-1.0, 1.0), w(1e-3, 1.0);
    std::uniform_int_distribution<std::size_t> deg(0, 4);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t d = deg(rng);
        std::uniform_int_distribution<std::size_t> len(d + 2, 30);
        const std::size_t n = len(rng);
        std::vector<double> xs(n), ys(n), ws(n);
        for (std::size_t i = 0; i < n; ++i) xs[i] = u(rng), ys[i] = u(rng), ws[i] = w(rng);
        const auto fit = wls_polyfit(xs, ys, ws, d);
        const auto expected = oracle::normal_equations_fit(xs, ys, ws, static_cast<int>(d));
        double scale = 0.0;
        for (double b : expected) scale = std::max(scale, std::abs(b));
        for (std::size_t k = 0; k <= d; ++k) {
            EXPECT_LE(std::abs(fit.beta[k] - expected[k]), 1e-8 * std::max(scale, 1.0)) << "trial " << trial;
        }
    }
}

TEST(WlsPolyfit, ScalingCovariance)
{
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<double> xs(20), ys(20), scaled(20), w(20, 1.0);
    for (std::size_t i = 0; i < 20; ++i) xs[i] = static_cast<double>(i) / 19.0, ys[i] = u(rng);
    const double c = -7.5;
    for (std::size_t i = 0; i < 20; ++i) scaled[i] = c * ys[i];
    const auto a = wls_polyfit(xs, ys, w, 2);
    const auto b = wls_polyfit(xs, scaled, w, 2);
    for (std::size_t k = 0; k < 3; ++k) expect_rel(b.beta[k], c * a.beta[k], 1e-12);
    expect_rel(b.sigma2_hat, c * c * a.sigma2_hat, 1e-12);
}

TEST(WlsPolyfit, CovarianceSymmetricNonNegativeDiagonal)
{
    const auto xs = oracle::linspace(0, 1, 30);
    const auto ys = oracle::noisy(std::vector<double>(30, 1.0), 0.1, 6);
    const auto fit = polyfit(xs, ys, 3);
    for (std::size_t i = 0; i < fit.p; ++i) {
        EXPECT_GE(fit.covariance(i, i), 0.0);
        for (std::size_t j = 0; j < fit.p; ++j) EXPECT_NEAR(fit.covariance(i, j), fit.covariance(j, i), 1e-12);
    }
    // line: var(intercept) = sigma^2 sum x^2 / (n Sxx)
    const auto line = polyfit(xs, ys, 1);
    double sx = 0.0, sxx = 0.0;
    for (double x : xs) sx += x, sxx += x * x;
    const double n = 30.0, centred = sxx - sx * sx / n;
    expect_rel(line.covariance(1, 1), line.sigma2_hat / centred, 1e-10);
    expect_rel(line.covariance(0, 0), line.sigma2_hat * sxx / (n * centred), 1e-10);
}

TEST(WlsPolyfit, ZeroWeightsAreIgnored)
{
    const std::vector<double> xs{0, 1, 2, 3}, ys{1, 2, 3, 100}, w{1, 1, 1, 0};
    const auto fit = wls_polyfit(xs, ys, w, 1);
    EXPECT_NEAR(fit.beta[0], 1.0, 1e-13);
    EXPECT_NEAR(fit.beta[1], 1.0, 1e-13);
}

TEST(WlsPolyfit, Errors)
{
    const std::vector<double> xs{0, 1, 2}, ys{0, 1, 2};
    try {
        polyfit(xs, ys, 3);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::InsufficientData);
    }
    const std::vector<double> same{1, 1, 1};
    try {
        polyfit(same, ys, 1);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::RankDeficient);
    }
}

TEST(ResidualVariance, Cases)
{
    EXPECT_EQ(residual_variance(std::vector<double>{0, 0, 0}, 1), 0.0);
    EXPECT_EQ(residual_variance(std::vector<double>{1, -1, 1, -1}, 2), 2.0);
    try {
        residual_variance(std::vector<double>{1}, 1);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::DegreesOfFreedomExhausted);
    }
}

TEST(PolyFit, DerivativeOfCubic)
{
    PolyFit f;
    f.beta = {1, -2, 3, 0.5};
    f.p = 4;
    const double x = 1.7;
    EXPECT_NEAR(f(x), 1 - 2 * x + 3 * x * x + 0.5 * x * x * x, 1e-13);
    EXPECT_NEAR(f.derivative(x, 1), -2 + 6 * x + 1.5 * x * x, 1e-13);
    EXPECT_NEAR(f.derivative(x, 2), 6 + 3 * x, 1e-13);
    EXPECT_NEAR(f.derivative(x, 3), 3.0, 1e-13);
    EXPECT_EQ(f.derivative(x, 4), 0.0);
}
