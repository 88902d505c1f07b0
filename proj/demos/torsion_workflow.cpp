// Library walk-through: manufacture a noisy torque-twist record, compare a
// few smoothers on it and reduce it to a shear stress-strain curve.

#include <cmath>
#include <cstdio>
#include <random>
#include <vector>

#include "smoothcurve/smoothcurve.hpp"

using namespace smoothcurve;

int main()
{
    const SpecimenGeometry geom(0.005, 0.025);  // 10 mm diameter, 25 mm gauge
    const auto tau = [](double g) { return 400e6 * (1.0 - std::exp(-g / 0.1)) - 100e6 * g; };

    const std::size_t n = 20000;
    const double theta_max = 1.5 * geom.length() / geom.radius();
    std::mt19937_64 rng(7);
    std::normal_distribution<double> noise(0.0, 0.01);
    std::vector<double> theta(n), torque(n);
    for (std::size_t i = 0; i < n; ++i) {
        theta[i] = theta_max * static_cast<double>(i + 1) / static_cast<double>(n);
        torque[i] = torque_from_stress_profile(tau, theta[i], geom) * (1.0 + noise(rng));
    }
    const Series record = from_columns(theta, torque);

    const Series lowess = loess_smooth(record, LoessSpec{0.1, 1, 0, 0.0});
    const Series sg = savgol_apply(record, SavGolSpec{99, 3, 0});
    std::printf("torque at mid-record: raw %.3f  lowess %.3f  savgol %.3f N m\n", record.y(n / 2), lowess.y(n / 2),
                sg.y(n / 2));

    ReductionConfig cfg;
    cfg.smoother = LoessSpec{0.05, 2, 0, 0.0};
    cfg.resample = n;
    const StressStrain fb = reduce({record, std::nullopt}, geom, cfg);
    cfg.method = StressMethod::Hill;
    const StressStrain hill = reduce({record, std::nullopt}, geom, cfg);

    std::printf("%10s %14s %14s %14s\n", "gamma", "tau (FB) MPa", "tau (Hill) MPa", "exact MPa");
    for (std::size_t i = n / 10; i < n; i += n / 10) {
        const double g = fb.series.x(i);
        std::printf("%10.4f %14.2f %14.2f %14.2f\n", g, fb.series.y(i) / 1e6, hill.series.y(i) / 1e6, tau(g) / 1e6);
    }
    return 0;
}
