#pragma once

#include <cmath>
#include <cstddef>
#include <fstream>
#include <functional>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "smoothcurve/io/csv.hpp"
#include "smoothcurve/io/svg.hpp"
#include "smoothcurve/outliers.hpp"
#include "smoothcurve/smoother.hpp"
#include "smoothcurve/torsion.hpp"

namespace smoothcurve::cli {

inline constexpr const char* kVersion = "0.1.0";

enum ExitCode : int {
    kOk = 0,
    kParseFailure = 2,
    kComputationFailure = 3,
    kUsageFailure = 4,
};

/// Bad flag value discovered after CLI11 parsing.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

inline std::string join(const std::vector<std::string>& args)
{
    std::string out;
    for (const auto& a : args) {
        if (!out.empty()) out += ' ';
        out += a;
    }
    return out;
}

inline std::string num(double v) { return io::format_double(v); }

struct ColumnOptions {
    std::string x_col = "0";
    std::string y_col = "1";
    std::string x_unit = "none";
    std::string y_unit = "none";
};

inline void add_column_options(CLI::App* cmd, ColumnOptions& o, bool twist_required)
{
    cmd->add_option("--x-col", o.x_col, "abscissa column: 0-based index or header name")->capture_default_str();
    cmd->add_option("--y-col", o.y_col, "ordinate column: 0-based index or header name")->capture_default_str();
    if (twist_required) {
        cmd->add_option("--twist-unit", o.x_unit, "unit of the twist column")
            ->required()
            ->check(CLI::IsMember({"rad", "deg"}));
        o.y_unit = "nm";
        cmd->add_option("--torque-unit", o.y_unit, "unit of the torque column")
            ->check(CLI::IsMember({"nm", "nmm"}))
            ->capture_default_str();
    } else {
        cmd->add_option("--x-unit", o.x_unit, "abscissa unit (deg is converted to rad)")
            ->check(CLI::IsMember({"rad", "deg", "s", "none"}))
            ->capture_default_str();
        cmd->add_option("--y-unit", o.y_unit, "ordinate unit (nmm is converted to N m)")
            ->check(CLI::IsMember({"nm", "nmm", "pa", "none"}))
            ->capture_default_str();
    }
}

/// Reads the selected columns, converts units to SI and builds a Series.
inline Series load_series(const std::string& path, const ColumnOptions& o)
{
    const auto table = io::read_csv_file(path);
    const std::size_t xc = io::resolve_column(table, o.x_col);
    const std::size_t yc = io::resolve_column(table, o.y_col);
    if (xc == yc) {
        throw UsageError("x and y columns must differ");
    }
    if (table.rows() == 0) {
        throw io::ParseError(0, "'" + path + "' has no data rows");
    }
    std::vector<double> xs = table.columns[xc];
    std::vector<double> ys = table.columns[yc];
    if (o.x_unit == "deg") {
        for (double& x : xs) x *= std::numbers::pi / 180.0;
    }
    if (o.y_unit == "nmm") {
        for (double& y : ys) y *= 1e-3;
    }
    return from_columns(xs, ys);
}

struct SmootherOptions {
    std::string method;
    double span = 0.1;
    std::size_t degree = 0;
    bool robust = false;
    std::size_t robust_iters = 3;
    double delta = 0.0;
    std::size_t window = 99;
    std::string kernel = "gaussian";
    double bandwidth = 0.0;
    std::size_t neighbors = 0;
    double width = 0.0;
    std::size_t bins = 0;
    std::string bin_mode = "equal-width";
    double p = 0.0;
    std::size_t knots = 8;

    CLI::Option* degree_opt = nullptr;
    CLI::Option* iters_opt = nullptr;
    CLI::Option* delta_opt = nullptr;
    CLI::Option* width_opt = nullptr;
};

inline void add_smoother_options(CLI::App* cmd, SmootherOptions& o, const std::string& method_flag,
                                 const std::string& default_method)
{
    o.method = default_method;
    cmd->add_option(method_flag, o.method, "smoothing method")
        ->check(CLI::IsMember({"none", "loess", "lowess", "savgol", "kernel", "local-average", "bin",
                               "smoothing-spline", "bspline", "natural-spline", "pchip"}))
        ->capture_default_str();
    cmd->add_option("--span", o.span, "loess/lowess: fraction of samples per local fit")->capture_default_str();
    o.degree_opt = cmd->add_option("--degree", o.degree,
                                   "polynomial degree (savgol default 3; loess 2, lowess 1)");
    cmd->add_flag("--robust", o.robust, "loess/lowess: bisquare robustness passes (3 unless --robust-iters)");
    o.iters_opt = cmd->add_option("--robust-iters", o.robust_iters, "loess/lowess: number of robustness passes");
    o.delta_opt = cmd->add_option("--delta", o.delta,
                                  "loess/lowess: interpolation distance (default 1% of the x range above 50000 points)");
    cmd->add_option("--window", o.window, "savgol: frame width (odd)")->capture_default_str();
    cmd->add_option("--kernel", o.kernel, "kernel: weight function")
        ->check(CLI::IsMember({"gaussian", "epanechnikov", "minimum-variance"}))
        ->capture_default_str();
    cmd->add_option("--bandwidth", o.bandwidth, "kernel: bandwidth in x units (default 2% of the x range)");
    cmd->add_option("--neighbors", o.neighbors, "local-average: nearest-neighbour count");
    o.width_opt = cmd->add_option("--width", o.width, "local-average: fixed window width in x units");
    cmd->add_option("--bins", o.bins, "bin: number of bins (default n/100)");
    cmd->add_option("--bin-mode", o.bin_mode, "bin: partition rule")
        ->check(CLI::IsMember({"equal-width", "equal-count"}))
        ->capture_default_str();
    cmd->add_option("--p", o.p,
                    "smoothing-spline: penalty weight; 0 interpolates, larger values approach a straight line")
        ->capture_default_str();
    cmd->add_option("--knots", o.knots, "bspline: interior knots at quantiles of x")->capture_default_str();
}

inline SmootherSpec build_smoother(const SmootherOptions& o, const Series& s)
{
    const std::string& m = o.method;
    if (m == "none") return NoSmoothing{};
    if (m == "loess" || m == "lowess") {
        LoessSpec spec;
        spec.span = o.span;
        spec.degree = o.degree_opt && o.degree_opt->count() ? o.degree : (m == "loess" ? 2 : 1);
        spec.robust_iters = (o.iters_opt && o.iters_opt->count()) ? o.robust_iters : (o.robust ? 3 : 0);
        if (o.delta_opt && o.delta_opt->count()) {
            spec.delta = o.delta;
        } else if (s.size() > 50000) {
            spec.delta = 0.01 * s.x_range();
        }
        return spec;
    }
    if (m == "savgol") {
        return SavGolSpec{o.window, o.degree_opt && o.degree_opt->count() ? o.degree : 3, 0};
    }
    if (m == "kernel") {
        KernelSmoother k;
        k.kernel.kind = o.kernel == "epanechnikov"       ? KernelKind::Epanechnikov
                        : o.kernel == "minimum-variance" ? KernelKind::MinimumVariance
                                                         : KernelKind::Gaussian;
        k.bandwidth = o.bandwidth > 0.0 ? o.bandwidth : 0.02 * s.x_range();
        return k;
    }
    if (m == "local-average") {
        LocalAverageSmoother la;
        if (o.width_opt && o.width_opt->count()) {
            la.window = FixedWidth{o.width};
        } else {
            la.window = NearestNeighbors{o.neighbors > 0 ? o.neighbors : std::max<std::size_t>(1, s.size() / 50)};
        }
        return la;
    }
    if (m == "bin") {
        const BinMode mode = o.bin_mode == "equal-count" ? BinMode::EqualCount : BinMode::EqualWidth;
        return BinSmoother{{mode, o.bins > 0 ? o.bins : std::max<std::size_t>(1, s.size() / 100)}};
    }
    if (m == "smoothing-spline") return SplineSmoother{o.p};
    if (m == "bspline") return BSplineSmoother{o.knots};
    if (m == "natural-spline") return NaturalSplineSmoother{};
    return PchipSmoother{};
}

inline void write_file(const std::string& path, const std::function<void(std::ostream&)>& body)
{
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        throw UsageError("cannot write '" + path + "'");
    }
    body(f);
}

inline std::vector<std::string> provenance(const std::vector<std::string>& args, const std::string& config)
{
    return {std::string("smoothcurve ") + kVersion, "command: " + join(args), "config: " + config};
}

// ---------------------------------------------------------------- smooth

struct SmoothArgs {
    std::string input;
    std::string output;
    std::string plot;
    ColumnOptions columns;
    SmootherOptions smoother;
};

inline void run_smooth(const SmoothArgs& a, const std::vector<std::string>& args)
{
    const Series s = load_series(a.input, a.columns);
    const SmootherSpec spec = build_smoother(a.smoother, s);
    const Series smoothed = apply_smoother(s, spec);

    const std::vector<double> xs(s.xs().begin(), s.xs().end());
    const std::vector<double> raw(s.ys().begin(), s.ys().end());
    const std::vector<double> fit(smoothed.ys().begin(), smoothed.ys().end());
    write_file(a.output, [&](std::ostream& f) {
        io::write_csv(f, provenance(args, describe(spec)), {"x", "y_raw", "y_smooth"}, {xs, raw, fit});
    });
    if (!a.plot.empty()) {
        write_file(a.plot, [&](std::ostream& f) {
            io::write_svg(f,
                          {{xs, raw, "#9bb0d6", 1.0, 0.6, "raw"}, {xs, fit, "#10204a", 2.0, 1.0, describe(spec)}},
                          {"smoothed series", "x", "y"});
        });
    }
}

// ---------------------------------------------------------------- reduce

struct ReduceArgs {
    std::string input;
    std::string output;
    std::string plot;
    ColumnOptions columns;
    SmootherOptions smoother;
    double radius_mm = 0.0;
    double length_mm = 0.0;
    std::string method = "fields-backofen";
    std::string derivative = "savgol";
    std::size_t deriv_window = 99;
    std::size_t deriv_degree = 3;
    double deriv_p = 0.0;
    std::size_t resample = 0;
    double twist_rate = 0.0;
    CLI::Option* twist_rate_opt = nullptr;
};

inline void run_reduce(const ReduceArgs& a, const std::vector<std::string>& args)
{
    const SpecimenGeometry geom(a.radius_mm * 1e-3, a.length_mm * 1e-3);
    const Series s = load_series(a.input, a.columns);

    ReductionConfig cfg;
    cfg.smoother = build_smoother(a.smoother, s);
    cfg.method = a.method == "hill" ? StressMethod::Hill : StressMethod::FieldsBackofen;
    if (a.derivative == "spline") {
        cfg.derivative = SplineDerivative{a.deriv_p};
    } else {
        cfg.derivative = SavGolSpec{a.deriv_window, a.deriv_degree, 1};
    }
    cfg.resample = a.resample > 0 ? a.resample : std::max<std::size_t>(16, s.size());

    TorqueTwist tt{s, std::nullopt};
    if (a.twist_rate_opt && a.twist_rate_opt->count()) tt.twist_rate = a.twist_rate;
    const StressStrain result = reduce(tt, geom, cfg);

    std::ostringstream config;
    config << "method=" << a.method << " radius_m=" << num(geom.radius()) << " length_m=" << num(geom.length())
           << " resample=" << cfg.resample << " smoother=[" << describe(cfg.smoother) << "] derivative=[";
    if (a.derivative == "spline") {
        config << "smoothing-spline p=" << num(a.deriv_p) << "]";
    } else {
        config << "savgol window=" << a.deriv_window << " degree=" << a.deriv_degree << "]";
    }
    auto comments = provenance(args, config.str());
    if (result.strain_rate) comments.push_back("strain_rate_per_s: " + num(*result.strain_rate));

    const std::vector<double> gamma(result.series.xs().begin(), result.series.xs().end());
    const std::vector<double> tau(result.series.ys().begin(), result.series.ys().end());
    write_file(a.output, [&](std::ostream& f) {
        io::write_csv(f, comments, {"theta_rad", "torque_nm", "gamma", "tau_pa"},
                      {result.twist, result.torque, gamma, tau});
    });
    if (!a.plot.empty()) {
        write_file(a.plot, [&](std::ostream& f) {
            io::write_svg(f, {{gamma, tau, "#10204a", 2.0, 1.0, a.method}},
                          {"shear stress vs shear strain", "shear strain", "shear stress [Pa]"});
        });
    }
}

// ---------------------------------------------------------------- outliers

struct OutlierArgs {
    std::string input;
    std::string output;
    ColumnOptions columns;
    double k = 3.0;
    bool remove = false;
    double span = 0.1;
    std::size_t degree = 2;
    std::size_t robust_iters = 3;
};

inline void run_outliers(const OutlierArgs& a, const std::vector<std::string>& args)
{
    const Series s = load_series(a.input, a.columns);
    LoessSpec reference{a.span, a.degree, a.robust_iters, s.size() > 50000 ? 0.01 * s.x_range() : 0.0};
    const auto report = detect_outliers(s, reference, a.k);

    std::ostringstream config;
    config << "k=" << num(a.k) << " threshold=" << num(report.threshold) << " flagged=" << report.indices.size()
           << " reference=[" << describe(reference) << "]";
    const auto comments = provenance(args, config.str());

    if (a.remove) {
        const Series cleaned = remove_outliers(s, report);
        write_file(a.output, [&](std::ostream& f) {
            io::write_csv(f, comments, {"x", "y"},
                          {{cleaned.xs().begin(), cleaned.xs().end()}, {cleaned.ys().begin(), cleaned.ys().end()}});
        });
        return;
    }
    std::vector<double> index, xs, ys;
    for (auto i : report.indices) {
        index.push_back(static_cast<double>(i));
        xs.push_back(s.x(i));
        ys.push_back(s.y(i));
    }
    write_file(a.output, [&](std::ostream& f) {
        io::write_csv(f, comments, {"index", "x", "y", "residual"}, {index, xs, ys, report.residuals});
    });
}

// ---------------------------------------------------------------- synth

struct SynthArgs {
    std::string output;
    std::string profile = "voce";
    double sigma = 0.0;
    bool relative = false;
    std::size_t n = 10000;
    std::uint64_t seed = 1;
    double rate = 1.0;
    double radius_mm = 5.0;
    double length_mm = 25.0;
    double gamma_max = 1.5;
    double modulus = 80e9;
    double strength = 500e6;
    double exponent = 0.2;
    double tau_sat = 400e6;
    double gamma_c = 0.1;
    double softening = 100e6;
};

/// Shear stress profile selected by the synth flags.
inline std::function<double(double)> stress_profile(const SynthArgs& a)
{
    if (a.profile == "elastic") {
        return [g = a.modulus](double gamma) { return g * gamma; };
    }
    if (a.profile == "power-law") {
        return [k = a.strength, e = a.exponent](double gamma) { return k * std::pow(gamma, e); };
    }
    return [ts = a.tau_sat, gc = a.gamma_c, h = a.softening](double gamma) {
        return ts * (1.0 - std::exp(-gamma / gc)) - h * gamma;
    };
}

inline void run_synth(const SynthArgs& a, const std::vector<std::string>& args)
{
    if (a.n < 16) throw UsageError("--n must be at least 16");
    if (!(a.sigma >= 0.0)) throw UsageError("--sigma must be non-negative");
    if (!(a.rate > 0.0)) throw UsageError("--rate must be positive");
    if (!(a.gamma_max > 0.0)) throw UsageError("--gamma-max must be positive");
    if (!(a.radius_mm > 0.0) || !(a.length_mm > 0.0)) throw UsageError("geometry must be positive");

    const SpecimenGeometry geom(a.radius_mm * 1e-3, a.length_mm * 1e-3);
    const auto tau = stress_profile(a);
    const double theta_max = a.gamma_max * geom.length() / geom.radius();
    const double theta_rate = a.rate * geom.length() / geom.radius();

    std::mt19937_64 rng(a.seed);
    std::normal_distribution<double> noise(0.0, 1.0);
    std::vector<double> theta(a.n), torque(a.n), time(a.n);
    for (std::size_t i = 0; i < a.n; ++i) {
        theta[i] = theta_max * static_cast<double>(i + 1) / static_cast<double>(a.n);
        const double m = torque_from_stress_profile(tau, theta[i], geom);
        const double e = a.sigma * noise(rng);
        torque[i] = a.relative ? m * (1.0 + e) : m + e;
        time[i] = theta[i] / theta_rate;
    }

    std::ostringstream config;
    config << "profile=" << a.profile << " n=" << a.n << " seed=" << a.seed << " sigma=" << num(a.sigma)
           << " noise=" << (a.relative ? "relative" : "absolute") << " strain_rate=" << num(a.rate)
           << " radius_m=" << num(geom.radius()) << " length_m=" << num(geom.length())
           << " gamma_max=" << num(a.gamma_max);
    if (a.profile == "elastic") config << " modulus=" << num(a.modulus);
    if (a.profile == "power-law") config << " strength=" << num(a.strength) << " exponent=" << num(a.exponent);
    if (a.profile == "voce") {
        config << " tau_sat=" << num(a.tau_sat) << " gamma_c=" << num(a.gamma_c) << " softening=" << num(a.softening);
    }
    write_file(a.output, [&](std::ostream& f) {
        io::write_csv(f, provenance(args, config.str()), {"theta_rad", "torque_nm", "time_s"}, {theta, torque, time});
    });
}

// ---------------------------------------------------------------- coeffs

inline void run_coeffs(const SavGolSpec& spec, std::ostream& out)
{
    try {
        for (double c : savgol_coefficients(spec)) out << io::format_double(c) << '\n';
    } catch (const Error& e) {
        if (e.code() == ErrorCode::InvalidSpec) throw UsageError(e.what());
        throw;
    }
}

}  // namespace detail

/// Entry point shared by the executable and the tests. args[0] is the
/// program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Smoothing of noisy 2-D series and torsion-test reduction", "smoothcurve"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    detail::SmoothArgs smooth;
    auto* smooth_cmd = app.add_subcommand("smooth", "smooth one column against another");
    smooth_cmd->add_option("input", smooth.input, "input CSV")->required();
    smooth_cmd->add_option("-o,--output", smooth.output, "output CSV (x, y_raw, y_smooth)")->required();
    smooth_cmd->add_option("--plot", smooth.plot, "also write an SVG chart to this path");
    detail::add_column_options(smooth_cmd, smooth.columns, false);
    detail::add_smoother_options(smooth_cmd, smooth.smoother, "--method", "loess");

    detail::ReduceArgs red;
    auto* reduce_cmd = app.add_subcommand("reduce", "torque-twist record to shear stress-strain");
    reduce_cmd->add_option("input", red.input, "input CSV")->required();
    reduce_cmd->add_option("-o,--output", red.output, "output CSV (theta_rad, torque_nm, gamma, tau_pa)")->required();
    reduce_cmd->add_option("--plot", red.plot, "also write an SVG of stress vs strain");
    detail::add_column_options(reduce_cmd, red.columns, true);
    reduce_cmd->add_option("--radius-mm", red.radius_mm, "gauge radius in mm (half the diameter)")->required();
    reduce_cmd->add_option("--length-mm", red.length_mm, "gauge length in mm")->required();
    reduce_cmd->add_option("--method", red.method, "stress formula")
        ->check(CLI::IsMember({"fields-backofen", "hill"}))
        ->capture_default_str();
    detail::add_smoother_options(reduce_cmd, red.smoother, "--smoother", "savgol");
    reduce_cmd->add_option("--derivative", red.derivative, "differentiation method")
        ->check(CLI::IsMember({"savgol", "spline"}))
        ->capture_default_str();
    reduce_cmd->add_option("--deriv-window", red.deriv_window, "savgol derivative frame width")->capture_default_str();
    reduce_cmd->add_option("--deriv-degree", red.deriv_degree, "savgol derivative polynomial degree")
        ->capture_default_str();
    reduce_cmd->add_option("--deriv-p", red.deriv_p, "spline derivative penalty (0 interpolates)")
        ->capture_default_str();
    reduce_cmd->add_option("--resample", red.resample, "uniform twist grid size (default: input length)");
    red.twist_rate_opt = reduce_cmd->add_option("--twist-rate", red.twist_rate, "twist rate in rad/s, for the header");

    detail::OutlierArgs outl;
    auto* outliers_cmd = app.add_subcommand("outliers", "report (or delete) points far from a robust loess trend");
    outliers_cmd->add_option("input", outl.input, "input CSV")->required();
    outliers_cmd->add_option("-o,--output", outl.output, "report CSV, or the cleaned series with --delete")->required();
    detail::add_column_options(outliers_cmd, outl.columns, false);
    outliers_cmd->add_option("--k", outl.k, "threshold in robust standard deviations")->capture_default_str();
    outliers_cmd->add_flag("--delete", outl.remove, "write the series without the flagged points");
    outliers_cmd->add_option("--span", outl.span, "reference loess span")->capture_default_str();
    outliers_cmd->add_option("--degree", outl.degree, "reference loess degree")->capture_default_str();
    outliers_cmd->add_option("--robust-iters", outl.robust_iters, "reference robustness passes")->capture_default_str();

    detail::SynthArgs syn;
    auto* synth_cmd = app.add_subcommand("synth", "synthetic torque-twist record from a stress-strain law");
    synth_cmd->add_option("-o,--output", syn.output, "output CSV (theta_rad, torque_nm, time_s)")->required();
    synth_cmd->add_option("--profile", syn.profile, "stress-strain law")
        ->check(CLI::IsMember({"elastic", "power-law", "voce"}))
        ->capture_default_str();
    synth_cmd->add_option("--sigma", syn.sigma, "Gaussian torque noise (N m, or fraction with --relative)")
        ->capture_default_str();
    synth_cmd->add_flag("--relative", syn.relative, "noise is multiplicative");
    synth_cmd->add_option("--n", syn.n, "number of samples")->capture_default_str();
    synth_cmd->add_option("--seed", syn.seed, "random seed")->capture_default_str();
    synth_cmd->add_option("--rate", syn.rate, "shear strain rate in 1/s (sets the time column)")->capture_default_str();
    synth_cmd->add_option("--radius-mm", syn.radius_mm, "gauge radius in mm")->capture_default_str();
    synth_cmd->add_option("--length-mm", syn.length_mm, "gauge length in mm")->capture_default_str();
    synth_cmd->add_option("--gamma-max", syn.gamma_max, "final surface shear strain")->capture_default_str();
    synth_cmd->add_option("--modulus", syn.modulus, "elastic: shear modulus in Pa")->capture_default_str();
    synth_cmd->add_option("--strength", syn.strength, "power-law: coefficient in Pa")->capture_default_str();
    synth_cmd->add_option("--exponent", syn.exponent, "power-law: exponent")->capture_default_str();
    synth_cmd->add_option("--tau-sat", syn.tau_sat, "voce: saturation stress in Pa")->capture_default_str();
    synth_cmd->add_option("--gamma-c", syn.gamma_c, "voce: characteristic strain")->capture_default_str();
    synth_cmd->add_option("--softening", syn.softening, "voce: linear softening slope in Pa")->capture_default_str();

    SavGolSpec coeff_spec{5, 2, 0};
    auto* coeffs_cmd = app.add_subcommand("coeffs", "print Savitzky-Golay convolution weights");
    coeffs_cmd->add_option("--window", coeff_spec.window, "frame width (odd)")->capture_default_str();
    coeffs_cmd->add_option("--degree", coeff_spec.degree, "polynomial degree")->capture_default_str();
    coeffs_cmd->add_option("--deriv", coeff_spec.deriv_order, "derivative order")->capture_default_str();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsageFailure;
    }

    try {
        if (*smooth_cmd) detail::run_smooth(smooth, args);
        if (*reduce_cmd) detail::run_reduce(red, args);
        if (*outliers_cmd) detail::run_outliers(outl, args);
        if (*synth_cmd) detail::run_synth(syn, args);
        if (*coeffs_cmd) detail::run_coeffs(coeff_spec, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageFailure;
    } catch (const io::ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return kParseFailure;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kComputationFailure;
    }
    return kOk;
}

inline int run(int argc, char** argv, std::ostream& out, std::ostream& err)
{
    return run(std::vector<std::string>(argv, argv + argc), out, err);
}

}  // namespace smoothcurve::cli
