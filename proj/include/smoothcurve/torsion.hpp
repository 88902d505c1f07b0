#pragma once

#include <cmath>
#include <cstddef>
#include <numbers>
#include <optional>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "smoothcurve/error.hpp"
#include "smoothcurve/savgol.hpp"
#include "smoothcurve/series.hpp"
#include "smoothcurve/smoother.hpp"
#include "smoothcurve/splines.hpp"

namespace smoothcurve {

/// Gauge section of a solid cylindrical torsion specimen, SI units.
/// `radius` is the outer radius (half the diameter).
class SpecimenGeometry {
public:
    SpecimenGeometry(double radius_m, double length_m) : radius_(radius_m), length_(length_m)
    {
        if (!(radius_m > 0.0) || !(length_m > 0.0) || !std::isfinite(radius_m) || !std::isfinite(length_m)) {
            throw Error(ErrorCode::InvalidArgument, "gauge radius and length must be positive and finite");
        }
    }

    double radius() const noexcept { return radius_; }
    double length() const noexcept { return length_; }

private:
    double radius_;
    double length_;
};

/// Machine record: twist in radians on x, torque in N m on y.
struct TorqueTwist {
    Series series;
    std::optional<double> twist_rate;  ///< rad/s
};

enum class StressMethod { FieldsBackofen, Hill };

struct StressStrain {
    Series series;  ///< shear strain on x, shear stress in Pa on y
    StressMethod method = StressMethod::FieldsBackofen;
    std::optional<double> strain_rate;  ///< 1/s
    std::vector<double> twist;          ///< rad, one per output point
    std::vector<double> torque;         ///< smoothed N m, one per output point
};

/// Surface shear strain gamma = r theta / L.
inline double shear_strain(double theta, const SpecimenGeometry& geom) noexcept
{
    return geom.radius() * theta / geom.length();
}

inline double shear_strain_rate(double theta_dot, const SpecimenGeometry& geom) noexcept
{
    return geom.radius() * theta_dot / geom.length();
}

/// tau = (3 M + theta dM/dtheta) / (2 pi r^3)
inline double stress_fields_backofen(double torque, double theta, double dtorque_dtheta,
                                     const SpecimenGeometry& geom) noexcept
{
    const double r = geom.radius();
    return (3.0 * torque + theta * dtorque_dtheta) / (2.0 * std::numbers::pi * r * r * r);
}

/// tau = (4 M + theta^2 d(M/theta)/dtheta) / (2 pi r^3)
inline double stress_hill(double torque, double theta, double dquotient_dtheta, const SpecimenGeometry& geom)
{
    if (theta == 0.0) {
        throw Error(ErrorCode::ZeroTwist, "M/theta is undefined at zero twist");
    }
    const double r = geom.radius();
    return (4.0 * torque + theta * theta * dquotient_dtheta) / (2.0 * std::numbers::pi * r * r * r);
}

/// Torque carried by a solid bar twisted by theta when the material follows
/// tau(gamma): M = 2 pi (L / theta)^3 * integral_0^{r theta / L} tau(g) g^2 dg.
/// Only used to manufacture reference data.
template <class StressFn>
double torque_from_stress_profile(StressFn&& tau, double theta, const SpecimenGeometry& geom)
{
    if (!(theta > 0.0)) {
        throw Error(ErrorCode::ZeroTwist, "forward torque needs positive twist");
    }
    const double gamma_a = shear_strain(theta, geom);
    const auto integrand = [&](double g) { return tau(g) * g * g; };
    const double integral =
        boost::math::quadrature::gauss_kronrod<double, 15>::integrate(integrand, 0.0, gamma_a, 15, 1e-8);
    const double scale = geom.length() / theta;
    return 2.0 * std::numbers::pi * scale * scale * scale * integral;
}

/// Derivative from a smoothing spline with parameter p.
struct SplineDerivative {
    double p = 0.0;
};

using DerivativeSpec = std::variant<SavGolSpec, SplineDerivative>;

struct ReductionConfig {
    SmootherSpec smoother = SavGolSpec{99, 3, 0};
    DerivativeSpec derivative = SavGolSpec{99, 3, 1};
    StressMethod method = StressMethod::FieldsBackofen;
    std::size_t resample = 2000;  ///< points on the uniform twist grid, >= 16
};

namespace detail {

inline Series first_derivative(const Series& s, const DerivativeSpec& spec)
{
    if (const auto* sg = std::get_if<SavGolSpec>(&spec)) {
        SavGolSpec d = *sg;
        d.deriv_order = 1;
        return savgol_apply(s, d);
    }
    const auto pp = smoothing_spline(s, std::get<SplineDerivative>(spec).p);
    return s.with_ys(eval(pp, s.xs(), 1));
}

template <class F>
auto stage(const char* name, F&& f)
{
    try {
        return f();
    } catch (const Error& e) {
        throw e.in_stage(std::string("reduce/") + name);
    }
}

}  // namespace detail

/// Torque-twist record to shear stress-strain curve.
///
/// Drops non-positive torque, resamples to a uniform twist grid, smooths the
/// torque, differentiates (dM/dtheta, or d(M/theta)/dtheta for Hill) and maps
/// every grid point through the selected stress formula. The Hill path also
/// drops zero twist since M/theta is undefined there.
inline StressStrain reduce(const TorqueTwist& tt, const SpecimenGeometry& geom, const ReductionConfig& cfg)
{
    if (cfg.resample < 16) {
        throw Error(ErrorCode::InvalidSpec, "resample count must be at least 16");
    }
    const Series cleaned = detail::stage("clean", [&] {
        return drop_nonpositive(tt.series, cfg.method == StressMethod::Hill ? Axis::Both : Axis::Y);
    });
    const Series grid = detail::stage("resample", [&] { return resample_uniform(cleaned, cfg.resample); });
    const Series torque = detail::stage("smooth", [&] { return apply_smoother(grid, cfg.smoother); });
    const auto theta = torque.xs();

    std::vector<double> tau(torque.size());
    if (cfg.method == StressMethod::FieldsBackofen) {
        const Series slope = detail::stage("differentiate", [&] { return detail::first_derivative(torque, cfg.derivative); });
        for (std::size_t i = 0; i < tau.size(); ++i) {
            tau[i] = stress_fields_backofen(torque.y(i), theta[i], slope.y(i), geom);
        }
    } else {
        const Series slope = detail::stage("differentiate", [&] {
            std::vector<double> quotient(torque.size());
            for (std::size_t i = 0; i < quotient.size(); ++i) quotient[i] = torque.y(i) / theta[i];
            return detail::first_derivative(torque.with_ys(std::move(quotient)), cfg.derivative);
        });
        detail::stage("stress", [&] {
            for (std::size_t i = 0; i < tau.size(); ++i) tau[i] = stress_hill(torque.y(i), theta[i], slope.y(i), geom);
            return 0;
        });
    }

    std::vector<double> gamma(theta.size());
    for (std::size_t i = 0; i < gamma.size(); ++i) gamma[i] = shear_strain(theta[i], geom);

    StressStrain out{detail::stage("strain", [&] { return Series(std::move(gamma), std::move(tau)); }), cfg.method,
                     std::nullopt, std::vector<double>(theta.begin(), theta.end()),
                     std::vector<double>(torque.ys().begin(), torque.ys().end())};
    if (tt.twist_rate) out.strain_rate = shear_strain_rate(*tt.twist_rate, geom);
    return out;
}

}  // namespace smoothcurve
