#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "smoothcurve/error.hpp"

namespace smoothcurve {

/// Column-major dense matrix, just enough for small least-squares problems.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    double& operator()(std::size_t r, std::size_t c) { return data_[c * rows_ + r]; }
    double operator()(std::size_t r, std::size_t c) const { return data_[c * rows_ + r]; }

    std::span<double> col(std::size_t c) { return {data_.data() + c * rows_, rows_}; }
    std::span<const double> col(std::size_t c) const { return {data_.data() + c * rows_, rows_}; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

/// Householder QR of a tall matrix after scaling every column to unit norm.
/// Solves min ||A b - y|| without forming the normal equations.
class LeastSquares {
public:
    static constexpr double kMinRcond = 1e-12;

    explicit LeastSquares(Matrix a) : qr_(std::move(a))
    {
        const std::size_t m = qr_.rows();
        const std::size_t p = qr_.cols();
        if (m < p) {
            throw Error(ErrorCode::InsufficientData,
                        std::to_string(m) + " equations for " + std::to_string(p) + " unknowns");
        }
        scale_.assign(p, 0.0);
        for (std::size_t j = 0; j < p; ++j) {
            double norm = 0.0;
            for (double v : qr_.col(j)) norm += v * v;
            norm = std::sqrt(norm);
            if (!(norm > 0.0)) {
                throw Error(ErrorCode::RankDeficient, "design column " + std::to_string(j) + " is zero");
            }
            for (double& v : qr_.col(j)) v /= norm;
            scale_[j] = norm;
        }

        beta_.assign(p, 0.0);
        for (std::size_t k = 0; k < p; ++k) {
            double norm = 0.0;
            for (std::size_t i = k; i < m; ++i) norm += qr_(i, k) * qr_(i, k);
            norm = std::sqrt(norm);
            const double alpha = qr_(k, k) > 0.0 ? -norm : norm;
            // v = x - alpha e1 stored in place below the diagonal, R(k,k) = alpha
            const double v0 = qr_(k, k) - alpha;
            const double vnorm2 = norm * norm - qr_(k, k) * qr_(k, k) + v0 * v0;
            qr_(k, k) = v0;
            beta_[k] = vnorm2 > 0.0 ? 2.0 / vnorm2 : 0.0;
            for (std::size_t j = k + 1; j < p; ++j) {
                double dot = 0.0;
                for (std::size_t i = k; i < m; ++i) dot += qr_(i, k) * qr_(i, j);
                dot *= beta_[k];
                for (std::size_t i = k; i < m; ++i) qr_(i, j) -= dot * qr_(i, k);
            }
            diag_.push_back(alpha);
        }
        rinv_ = upper_inverse();
        rcond_ = estimate_rcond();
        if (!(rcond_ >= kMinRcond)) {
            throw Error(ErrorCode::RankDeficient,
                        "reciprocal condition estimate " + std::to_string(rcond_) + " below 1e-12");
        }
    }

    std::size_t rows() const noexcept { return qr_.rows(); }
    std::size_t cols() const noexcept { return qr_.cols(); }

    /// 1-norm reciprocal condition number of the column-scaled design.
    double rcond() const noexcept { return rcond_; }

    std::vector<double> solve(std::span<const double> y) const
    {
        const std::size_t m = qr_.rows();
        const std::size_t p = qr_.cols();
        if (y.size() != m) {
            throw Error(ErrorCode::LengthMismatch, "right-hand side length does not match design rows");
        }
        std::vector<double> work(y.begin(), y.end());
        for (std::size_t k = 0; k < p; ++k) {
            double dot = 0.0;
            for (std::size_t i = k; i < m; ++i) dot += qr_(i, k) * work[i];
            dot *= beta_[k];
            for (std::size_t i = k; i < m; ++i) work[i] -= dot * qr_(i, k);
        }
        std::vector<double> b(p, 0.0);
        for (std::size_t r = 0; r < p; ++r) {
            double sum = 0.0;
            for (std::size_t c = r; c < p; ++c) sum += rinv_[r * p + c] * work[c];
            b[r] = sum / scale_[r];
        }
        return b;
    }

    /// (A^T A)^{-1} in the original (unscaled) coordinates, row-major p x p.
    std::vector<double> inverse_gram() const
    {
        const std::size_t p = qr_.cols();
        std::vector<double> g(p * p, 0.0);
        for (std::size_t i = 0; i < p; ++i) {
            for (std::size_t j = i; j < p; ++j) {
                double sum = 0.0;
                for (std::size_t k = j; k < p; ++k) sum += rinv_[i * p + k] * rinv_[j * p + k];
                g[i * p + j] = g[j * p + i] = sum / (scale_[i] * scale_[j]);
            }
        }
        return g;
    }

private:
    double r(std::size_t i, std::size_t j) const { return i == j ? diag_[i] : qr_(i, j); }

    std::vector<double> upper_inverse() const
    {
        const std::size_t p = qr_.cols();
        std::vector<double> inv(p * p, 0.0);
        for (std::size_t j = p; j-- > 0;) {
            if (diag_[j] == 0.0) {
                throw Error(ErrorCode::RankDeficient, "zero pivot in column " + std::to_string(j));
            }
            inv[j * p + j] = 1.0 / diag_[j];
            for (std::size_t i = j; i-- > 0;) {
                double sum = 0.0;
                for (std::size_t k = i + 1; k <= j; ++k) sum += r(i, k) * inv[k * p + j];
                inv[i * p + j] = -sum / diag_[i];
            }
        }
        return inv;
    }

    double estimate_rcond() const
    {
        const std::size_t p = qr_.cols();
        double norm_r = 0.0;
        double norm_inv = 0.0;
        for (std::size_t j = 0; j < p; ++j) {
            double cr = 0.0;
            double ci = 0.0;
            for (std::size_t i = 0; i <= j; ++i) {
                cr += std::abs(r(i, j));
                ci += std::abs(rinv_[i * p + j]);
            }
            norm_r = std::max(norm_r, cr);
            norm_inv = std::max(norm_inv, ci);
        }
        return 1.0 / (norm_r * norm_inv);
    }

    Matrix qr_;
    std::vector<double> scale_;
    std::vector<double> beta_;
    std::vector<double> diag_;
    std::vector<double> rinv_;
    double rcond_ = 0.0;
};

/// Weighted polynomial fit. beta is in ascending power order.
struct PolyFit {
    std::vector<double> beta;
    std::size_t p = 0;
    double sigma2_hat = 0.0;
    std::vector<double> cov;  // row-major p x p

    double operator()(double x) const
    {
        double v = 0.0;
        for (std::size_t k = beta.size(); k-- > 0;) v = v * x + beta[k];
        return v;
    }

    /// d-th derivative of the fitted polynomial at x.
    double derivative(double x, std::size_t d) const
    {
        double v = 0.0;
        for (std::size_t k = beta.size(); k-- > d;) {
            double falling = 1.0;
            for (std::size_t j = 0; j < d; ++j) falling *= static_cast<double>(k - j);
            v = v * x + falling * beta[k];
        }
        return v;
    }

    double covariance(std::size_t i, std::size_t j) const { return cov[i * p + j]; }
};

/// sigma'^2 = sum(e^2) / (n - p).
inline double residual_variance(std::span<const double> residuals, std::size_t p)
{
    const std::size_t n = residuals.size();
    if (n <= p) {
        throw Error(ErrorCode::DegreesOfFreedomExhausted,
                    std::to_string(n) + " residuals leave no degrees of freedom for " + std::to_string(p) +
                        " parameters");
    }
    double sum = 0.0;
    for (double e : residuals) sum += e * e;
    return sum / static_cast<double>(n - p);
}

/// Minimizes sum w_i (y_i - f(x_i)^T beta)^2 with f(x) = (1, x, ..., x^degree).
/// Samples with zero weight take no part in the fit or the variance estimate.
/// With exactly degree + 1 active samples the fit interpolates and the
/// variance and covariance are reported as zero.
inline PolyFit wls_polyfit(std::span<const double> xs, std::span<const double> ys, std::span<const double> weights,
                           std::size_t degree)
{
    if (xs.size() != ys.size() || xs.size() != weights.size()) {
        throw Error(ErrorCode::LengthMismatch, "xs, ys and weights must have equal length");
    }
    const std::size_t p = degree + 1;
    std::size_t active = 0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        if (!std::isfinite(weights[i]) || weights[i] < 0.0) {
            throw Error(ErrorCode::InvalidArgument, "weight " + std::to_string(i) + " is negative or non-finite");
        }
        if (weights[i] > 0.0) ++active;
    }
    if (active < p) {
        throw Error(ErrorCode::InsufficientData, std::to_string(active) + " positively weighted samples for degree " +
                                                     std::to_string(degree));
    }

    Matrix design(active, p);
    std::vector<double> rhs(active);
    std::vector<std::size_t> index(active);
    for (std::size_t i = 0, row = 0; i < xs.size(); ++i) {
        if (!(weights[i] > 0.0)) continue;
        const double sw = std::sqrt(weights[i]);
        double power = sw;
        for (std::size_t k = 0; k < p; ++k) {
            design(row, k) = power;
            power *= xs[i];
        }
        rhs[row] = sw * ys[i];
        index[row] = i;
        ++row;
    }

    const LeastSquares solver(std::move(design));
    PolyFit fit;
    fit.beta = solver.solve(rhs);
    fit.p = p;

    if (active > p) {
        std::vector<double> scaled_residuals(active);
        for (std::size_t row = 0; row < active; ++row) {
            const std::size_t i = index[row];
            scaled_residuals[row] = std::sqrt(weights[i]) * (ys[i] - fit(xs[i]));
        }
        fit.sigma2_hat = residual_variance(scaled_residuals, p);
    }
    fit.cov = solver.inverse_gram();
    for (double& c : fit.cov) c *= fit.sigma2_hat;
    return fit;
}

/// Unit-weight convenience overload.
inline PolyFit polyfit(std::span<const double> xs, std::span<const double> ys, std::size_t degree)
{
    const std::vector<double> ones(xs.size(), 1.0);
    return wls_polyfit(xs, ys, ones, degree);
}

}  // namespace smoothcurve
