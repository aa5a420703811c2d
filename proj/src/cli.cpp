// SPDX-License-Identifier: Apache-2.0
#include "leoscat/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "leoscat/angular_pdf.hpp"
#include "leoscat/montecarlo.hpp"

namespace leoscat::cli {

namespace {

struct CommonOpts {
    double elevation_deg = 0.0;
    double height_m = 65.0;
    double ratio = 0.6;
    std::optional<double> rms_delay_ns;
    std::optional<double> max_delay_ns;
    std::string schedule_path;
    std::string out_path;
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool need_elevation = true) {
    auto* elev = cmd->add_option("--elevation", opts.elevation_deg,
                                 "Line-of-sight elevation angle in degrees [0, 180]")
                     ->check(CLI::Range(0.0, 180.0));
    if (need_elevation) elev->required();
    cmd->add_option("--height", opts.height_m, "Maximum building height H in meters")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--ratio", opts.ratio, "Axis ratio b/a for the ratio closure")
        ->check(CLI::Range(1e-9, 1.0))
        ->capture_default_str();
    cmd->add_option("--rms-delay-ns", opts.rms_delay_ns,
                    "RMS delay spread target in ns (default: schedule value)");
    cmd->add_option("--max-delay-ns", opts.max_delay_ns,
                    "Maximum relative delay in ns; selects the delay closure");
    cmd->add_option("--schedule", opts.schedule_path,
                    "CSV schedule file 'elevation_deg,rms_delay_ns' overriding the built-in");
    cmd->add_option("--out", opts.out_path, "Output CSV path (default: stdout)");
}

SceneSpec scene_from(const CommonOpts& opts) {
    SceneSpec spec;
    spec.height_m = opts.height_m;
    spec.elevation_deg = opts.elevation_deg;
    spec.axis_ratio = opts.ratio;
    if (opts.max_delay_ns) {
        spec.mode = ClosureMode::max_delay;
        spec.max_delay_ns = opts.max_delay_ns;
    }
    spec.sigma_tau_ns = opts.rms_delay_ns;
    if (!opts.schedule_path.empty())
        spec.schedule = DelaySpreadSchedule::from_csv(opts.schedule_path);
    return spec;
}

using ConfigItems = std::map<std::string, std::string>;

std::vector<std::string> make_meta(const std::string& command, const ConfigItems& items) {
    std::vector<std::string> meta;
    meta.push_back(std::string("# leoscat ") + kVersion);
    meta.push_back("# command: " + command);
    std::string cfg = "# config:";
    for (const auto& [key, value] : items) cfg += " " + key + "=" + value;
    meta.push_back(cfg);
    return meta;
}

ConfigItems common_config(const CommonOpts& opts, const SceneSpec& spec, double resolved_sigma_ns) {
    ConfigItems items;
    items["elevation_deg"] = format_double(opts.elevation_deg);
    items["height_m"] = format_double(opts.height_m);
    if (spec.mode == ClosureMode::max_delay) {
        items["closure"] = "max_delay";
        items["max_delay_ns"] = format_double(*spec.max_delay_ns);
    } else {
        items["closure"] = "ratio";
        items["ratio"] = format_double(opts.ratio);
    }
    items["rms_delay_ns"] = format_double(resolved_sigma_ns);
    items["schedule"] = opts.schedule_path.empty() ? "builtin" : opts.schedule_path;
    return items;
}

void emit(const CsvTable& table, const std::string& out_path) {
    const std::string text = to_string(table);
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open output path: " + out_path);
    out << text;
    if (!out) throw std::invalid_argument("failed writing output path: " + out_path);
}

AzimuthSupport parse_support(const std::string& text) {
    if (text.empty()) return AzimuthSupport();
    const auto comma = text.find(',');
    if (comma == std::string::npos)
        throw std::invalid_argument("support must be LO,HI in degrees");
    const double lo = std::stod(text.substr(0, comma));
    const double hi = std::stod(text.substr(comma + 1));
    return AzimuthSupport::from_degrees(lo, hi);
}

double resolved_sigma_ns(const SceneSpec& spec) {
    if (spec.sigma_tau_ns) return *spec.sigma_tau_ns;
    const double folded = spec.elevation_deg > 90.0 ? 180.0 - spec.elevation_deg
                                                    : spec.elevation_deg;
    return delay_spread_target(folded, spec.schedule);
}

// ---- subcommand runners -------------------------------------------------

int run_geometry(const CommonOpts& opts) {
    const SceneSpec spec = scene_from(opts);
    const Scene scene = solve_scene(spec);
    const double sigma_ns = rms_delay_spread(scene.axes, scene.folded) * 1e9;
    const double max_delay_ns = max_relative_delay(scene.axes, scene.folded) * 1e9;

    CsvTable table;
    table.meta = make_meta("geometry", common_config(opts, spec, resolved_sigma_ns(spec)));
    table.header = "elevation_deg,height_m,a_m,b_m,c_m,sigma_tau_ns,max_delay_ns,x_prime_min_m";
    table.rows.push_back({format_double(opts.elevation_deg), format_double(opts.height_m),
                          format_double(scene.axes.a), format_double(scene.axes.b),
                          format_double(scene.axes.c), format_double(sigma_ns),
                          format_double(max_delay_ns),
                          format_double(x_prime_min(scene.axes, scene.folded))});
    emit(table, opts.out_path);
    return 0;
}

int run_sweep(const CommonOpts& opts, double start_deg, double end_deg, double step_deg) {
    SceneSpec spec = scene_from(opts);
    CsvTable table = sweep(start_deg, end_deg, step_deg, spec);
    ConfigItems items = common_config(opts, spec, 0.0);
    items.erase("rms_delay_ns"); // per-row targets come from the schedule
    items.erase("elevation_deg");
    items["start_deg"] = format_double(start_deg);
    items["end_deg"] = format_double(end_deg);
    items["step_deg"] = format_double(step_deg);
    table.meta = make_meta("sweep", items);
    emit(table, opts.out_path);
    if (!table.row_errors.empty()) {
        for (const auto& err : table.row_errors) std::cerr << err << "\n";
        return 3;
    }
    return 0;
}

int run_delay_stats(const CommonOpts& opts) {
    const SceneSpec spec = scene_from(opts);
    const Scene scene = solve_scene(spec);
    const ExcessMoments moments = excess_moments(scene.axes, scene.folded);
    const double sigma_ns = rms_delay_spread(scene.axes, scene.folded) * 1e9;

    CsvTable table;
    table.meta = make_meta("delay-stats", common_config(opts, spec, resolved_sigma_ns(spec)));
    table.header =
        "elevation_deg,a_m,b_m,c_m,mean_excess_m,second_moment_m2,sigma_tau_ns,max_delay_ns";
    table.rows.push_back(
        {format_double(opts.elevation_deg), format_double(scene.axes.a),
         format_double(scene.axes.b), format_double(scene.axes.c),
         format_double(moments.mean_m), format_double(moments.second_m2),
         format_double(sigma_ns),
         format_double(max_relative_delay(scene.axes, scene.folded) * 1e9)});
    emit(table, opts.out_path);
    return 0;
}

int run_pdf(const CommonOpts& opts, const std::string& which, const std::string& support_text,
            int points) {
    const SceneSpec spec = scene_from(opts);
    const Scene scene = solve_scene(spec);
    const AzimuthSupport support = parse_support(support_text);
    const JointAoaPdf pdf(scene.axes, scene.folded, support);

    ConfigItems items = common_config(opts, spec, resolved_sigma_ns(spec));
    items["output"] = which;
    items["points"] = std::to_string(points);
    items["support_deg"] = support_text.empty() ? "0,360" : support_text;

    CsvTable table;
    table.meta = make_meta("pdf", items);
    if (!support.full_circle())
        table.meta.push_back("# support_mass: " + format_double(pdf.support_mass()));

    if (which == "joint") {
        table.header = "alpha_deg,beta_deg,density_per_rad2";
        for (int i = 0; i < points; ++i) {
            const double alpha = kTwoPi * i / points;
            for (int j = 0; j < points; ++j) {
                const double beta = kHalfPi * j / (points - 1);
                table.rows.push_back({format_double(rad_to_deg(alpha)),
                                      format_double(rad_to_deg(beta)),
                                      format_double(joint_pdf(pdf, alpha, beta))});
            }
        }
    } else if (which == "marginal-azimuth") {
        table.header = "alpha_deg,density_per_rad";
        for (int i = 0; i < points; ++i) {
            const double alpha = kTwoPi * i / points;
            table.rows.push_back(
                {format_double(rad_to_deg(alpha)), format_double(marginal_azimuth(pdf, alpha))});
        }
    } else {
        table.header = "beta_deg,density_per_rad";
        for (int j = 0; j < points; ++j) {
            const double beta = kHalfPi * j / (points - 1);
            table.rows.push_back(
                {format_double(rad_to_deg(beta)), format_double(marginal_elevation(pdf, beta))});
        }
    }
    emit(table, opts.out_path);
    return 0;
}

void append_spectrum_rows(CsvTable& table, const DopplerSpectrum& s) {
    table.header = "f_over_fd,density";
    for (const auto& line : s.lines)
        table.meta.push_back("# line " + format_double(line.freq) + " " +
                             format_double(line.power));
    for (std::size_t i = 0; i < s.freq_grid.size(); ++i)
        table.rows.push_back({format_double(s.freq_grid[i]), format_double(s.density[i])});
}

int run_psd(const CommonOpts& opts, const std::string& method, const std::string& support_text,
            int bins, double doppler_hz, std::optional<double> k_factor,
            std::optional<double> f_los) {
    const SceneSpec spec = scene_from(opts);
    const Scene scene = solve_scene(spec);
    const AzimuthSupport support = parse_support(support_text);
    const PsdMethod psd_method = (method == "delta") ? PsdMethod::delta : PsdMethod::binned;

    DopplerSpectrum s = scene_spectrum(scene, psd_method, support, bins, doppler_hz);
    if (k_factor) {
        const double los = f_los ? *f_los : std::cos(deg_to_rad(opts.elevation_deg));
        s = compose_rician(s, *k_factor, los);
    }

    ConfigItems items = common_config(opts, spec, resolved_sigma_ns(spec));
    items["method"] = method;
    items["bins"] = std::to_string(bins);
    items["doppler_hz"] = format_double(doppler_hz);
    items["support_deg"] = support_text.empty() ? "0,360" : support_text;
    if (k_factor) {
        items["k_factor"] = format_double(*k_factor);
        items["f_los"] =
            format_double(f_los ? *f_los : std::cos(deg_to_rad(opts.elevation_deg)));
    }

    CsvTable table;
    table.meta = make_meta(k_factor ? "compose" : "psd", items);
    if (!support.full_circle()) {
        const JointAoaPdf pdf(scene.axes, scene.folded, support);
        table.meta.push_back("# support_mass: " + format_double(pdf.support_mass()));
    }
    append_spectrum_rows(table, s);
    emit(table, opts.out_path);
    return 0;
}

int run_mc(const CommonOpts& opts, std::size_t samples, std::uint64_t seed, int bins,
           const std::string& dump_rays_path) {
    const SceneSpec spec = scene_from(opts);
    const Scene scene = solve_scene(spec);
    const mc::RayEnsemble ensemble = mc::sample_rays(scene.axes, scene.folded, samples, seed);
    const mc::EmpiricalHistogram hist = mc::empirical_doppler(ensemble, bins);
    const mc::DelayStatsSample stats = mc::empirical_delay_stats(ensemble);

    ConfigItems items = common_config(opts, spec, resolved_sigma_ns(spec));
    items["samples"] = std::to_string(samples);
    items["seed"] = std::to_string(seed);
    items["bins"] = std::to_string(bins);

    CsvTable table;
    table.meta = make_meta("mc", items);
    table.meta.push_back("# stats mean_excess_delay_s=" + format_double(stats.mean_s) +
                         " rms_delay_s=" + format_double(stats.rms_s) +
                         " max_delay_s=" + format_double(stats.max_s));
    table.meta.push_back(
        "# acceptance_fraction: " +
        format_double(static_cast<double>(samples) / static_cast<double>(ensemble.attempts)));
    table.header = "bin_center,density";
    for (std::size_t b = 0; b + 1 < hist.edges.size(); ++b) {
        const double center = 0.5 * (hist.edges[b] + hist.edges[b + 1]);
        table.rows.push_back({format_double(center), format_double(hist.density[b])});
    }
    emit(table, opts.out_path);

    if (!dump_rays_path.empty()) {
        CsvTable rays;
        rays.meta = make_meta("mc --dump-rays", items);
        rays.header = "alpha,beta,r,excess_delay_s,doppler_norm";
        for (const auto& ray : ensemble.rays)
            rays.rows.push_back({format_double(ray.alpha), format_double(ray.beta),
                                 format_double(ray.r), format_double(ray.excess_delay),
                                 format_double(ray.doppler_norm)});
        emit(rays, dump_rays_path);
    }
    return 0;
}

int run_synth(const CommonOpts& opts, std::size_t rays, double duration_s, double rate_hz,
              double doppler_hz, std::uint64_t seed) {
    const SceneSpec spec = scene_from(opts);
    const Scene scene = solve_scene(spec);
    const mc::RayEnsemble ensemble = mc::sample_rays(scene.axes, scene.folded, rays, seed);
    const double f_d = scene.mirrored ? -doppler_hz : doppler_hz;
    const mc::WaveformSeries series =
        mc::synthesize_waveform(ensemble, f_d, duration_s, rate_hz);

    ConfigItems items = common_config(opts, spec, resolved_sigma_ns(spec));
    items["rays"] = std::to_string(rays);
    items["duration_s"] = format_double(duration_s);
    items["rate_hz"] = format_double(rate_hz);
    items["doppler_hz"] = format_double(doppler_hz);
    items["seed"] = std::to_string(seed);

    CsvTable table;
    table.meta = make_meta("synth", items);
    table.header = "t,re,im";
    const double dt = 1.0 / rate_hz;
    for (std::size_t k = 0; k < series.samples.size(); ++k)
        table.rows.push_back({format_double(k * dt), format_double(series.samples[k].real()),
                              format_double(series.samples[k].imag())});
    emit(table, opts.out_path);
    return 0;
}

} // namespace

std::string format_double(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.9g", value);
    return buf;
}

std::string to_string(const CsvTable& table) {
    std::ostringstream os;
    for (const auto& line : table.meta) os << line << "\n";
    os << table.header << "\n";
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) os << ",";
            os << row[i];
        }
        os << "\n";
    }
    return os.str();
}

CsvTable sweep(double start_deg, double end_deg, double step_deg, const SceneSpec& scene) {
    if (!(start_deg >= 0.0 && start_deg <= end_deg && end_deg <= 90.0))
        throw std::invalid_argument("sweep: need 0 <= start <= end <= 90");
    if (!(step_deg > 0.0)) throw std::invalid_argument("sweep: step must be > 0");

    CsvTable table;
    table.header = "elevation_deg,a_m,b_m,c_m,sigma_tau_ns,max_delay_ns";
    const int steps = static_cast<int>(std::floor((end_deg - start_deg) / step_deg + 1e-9));
    for (int i = 0; i <= steps; ++i) {
        const double elev = start_deg + i * step_deg;
        SceneSpec row_spec = scene;
        row_spec.elevation_deg = elev;
        try {
            const Scene solved = solve_scene(row_spec);
            const double sigma_ns = rms_delay_spread(solved.axes, solved.folded) * 1e9;
            const double max_ns = max_relative_delay(solved.axes, solved.folded) * 1e9;
            table.rows.push_back({format_double(elev), format_double(solved.axes.a),
                                  format_double(solved.axes.b), format_double(solved.axes.c),
                                  format_double(sigma_ns), format_double(max_ns)});
        } catch (const std::exception& e) {
            table.rows.push_back({format_double(elev), "nan", "nan", "nan", "nan", "nan"});
            table.row_errors.push_back("# row-error elevation=" + format_double(elev) + ": " +
                                       e.what());
        }
    }
    // Row errors double as in-file markers so a partial sweep is still usable.
    for (const auto& err : table.row_errors) table.meta.push_back(err);
    return table;
}

int run(int argc, const char* const* argv) {
    CLI::App app{"Semi-ellipsoid scatterer channel statistics for LEO downlinks"};
    app.set_version_flag("--version", std::string("leoscat ") + kVersion);
    app.set_config("--config");
    app.require_subcommand(1);

    CommonOpts opts;

    auto* geometry_cmd =
        app.add_subcommand("geometry", "Solve the scatterer ellipsoid at one elevation");
    add_common(geometry_cmd, opts);

    auto* sweep_cmd =
        app.add_subcommand("sweep", "Solve the geometry across an elevation range");
    double start_deg = 0.0, end_deg = 90.0, step_deg = 1.0;
    add_common(sweep_cmd, opts, false);
    sweep_cmd->add_option("--start", start_deg, "First elevation in degrees")
        ->capture_default_str();
    sweep_cmd->add_option("--end", end_deg, "Last elevation in degrees")->capture_default_str();
    sweep_cmd->add_option("--step", step_deg, "Elevation step in degrees")->capture_default_str();

    auto* delay_cmd =
        app.add_subcommand("delay-stats", "Excess-path moments of the solved geometry");
    add_common(delay_cmd, opts);

    auto* pdf_cmd = app.add_subcommand("pdf", "Angle-of-arrival densities");
    add_common(pdf_cmd, opts);
    bool pdf_joint = false, pdf_maz = false, pdf_mel = false;
    std::string pdf_support;
    int pdf_points = 361;
    pdf_cmd->add_flag("--joint", pdf_joint, "Joint density on an (alpha, beta) grid");
    pdf_cmd->add_flag("--marginal-azimuth", pdf_maz, "Marginal azimuth density");
    pdf_cmd->add_flag("--marginal-elevation", pdf_mel, "Marginal elevation density");
    pdf_cmd->add_option("--support", pdf_support, "Azimuth support LO,HI in degrees");
    pdf_cmd->add_option("--points", pdf_points, "Evaluation grid points")
        ->check(CLI::Range(2, 100000))
        ->capture_default_str();

    auto* psd_cmd = app.add_subcommand("psd", "Doppler power spectral density");
    add_common(psd_cmd, opts);
    std::string psd_method = "binned", psd_support;
    int psd_bins = 201;
    double psd_doppler_hz = 100.0;
    psd_cmd->add_option("--method", psd_method, "PSD route")
        ->check(CLI::IsMember({"delta", "binned"}))
        ->capture_default_str();
    psd_cmd->add_option("--support", psd_support, "Azimuth support LO,HI in degrees");
    psd_cmd->add_option("--bins", psd_bins, "Frequency bins (binned) or grid points (delta)")
        ->check(CLI::Range(8, 1000000))
        ->capture_default_str();
    psd_cmd->add_option("--doppler-hz", psd_doppler_hz, "Physical Doppler scale f_d in Hz")
        ->capture_default_str();

    auto* compose_cmd =
        app.add_subcommand("compose", "Rician LOS + NLOS composite spectrum");
    add_common(compose_cmd, opts);
    std::string cmp_method = "binned", cmp_support;
    int cmp_bins = 201;
    double cmp_doppler_hz = 100.0, cmp_k = 0.0;
    std::optional<double> cmp_flos;
    compose_cmd->add_option("--method", cmp_method, "PSD route")
        ->check(CLI::IsMember({"delta", "binned"}))
        ->capture_default_str();
    compose_cmd->add_option("--support", cmp_support, "Azimuth support LO,HI in degrees");
    compose_cmd->add_option("--bins", cmp_bins, "Frequency bins")
        ->check(CLI::Range(8, 1000000))
        ->capture_default_str();
    compose_cmd->add_option("--doppler-hz", cmp_doppler_hz, "Physical Doppler scale in Hz")
        ->capture_default_str();
    compose_cmd->add_option("--k-factor", cmp_k, "Rician K factor (LOS/NLOS power ratio)")
        ->required()
        ->check(CLI::NonNegativeNumber);
    compose_cmd->add_option("--f-los", cmp_flos,
                            "Normalized LOS line frequency (default: cos(elevation))");

    auto* mc_cmd = app.add_subcommand("mc", "Monte Carlo scatterer sampling statistics");
    add_common(mc_cmd, opts);
    std::size_t mc_samples = 1000000;
    std::uint64_t mc_seed = 42;
    int mc_bins = 201;
    std::string mc_dump;
    mc_cmd->add_option("--samples", mc_samples, "Number of scatterer samples")
        ->check(CLI::Range(std::size_t{1}, std::size_t{1000000000}))
        ->capture_default_str();
    mc_cmd->add_option("--seed", mc_seed, "RNG seed")->capture_default_str();
    mc_cmd->add_option("--bins", mc_bins, "Doppler histogram bins")
        ->check(CLI::Range(8, 1000000))
        ->capture_default_str();
    mc_cmd->add_option("--dump-rays", mc_dump, "Also write a per-ray CSV to this path");

    auto* synth_cmd = app.add_subcommand("synth", "Sum-of-rays waveform synthesis");
    add_common(synth_cmd, opts);
    std::size_t synth_rays = 10000;
    std::uint64_t synth_seed = 42;
    double synth_duration = 2.0, synth_rate = 420.0, synth_doppler = 100.0;
    synth_cmd->add_option("--rays", synth_rays, "Number of rays")
        ->check(CLI::Range(std::size_t{1}, std::size_t{100000000}))
        ->capture_default_str();
    synth_cmd->add_option("--duration", synth_duration, "Waveform duration in seconds")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    synth_cmd->add_option("--rate", synth_rate, "Sample rate in Hz")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    synth_cmd->add_option("--doppler-hz", synth_doppler, "Physical Doppler scale in Hz")
        ->capture_default_str();
    synth_cmd->add_option("--seed", synth_seed, "RNG seed")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (geometry_cmd->parsed()) return run_geometry(opts);
        if (sweep_cmd->parsed()) return run_sweep(opts, start_deg, end_deg, step_deg);
        if (delay_cmd->parsed()) return run_delay_stats(opts);
        if (pdf_cmd->parsed()) {
            const int chosen = int(pdf_joint) + int(pdf_maz) + int(pdf_mel);
            if (chosen > 1)
                throw std::invalid_argument(
                    "pdf: choose one of --joint, --marginal-azimuth, --marginal-elevation");
            const std::string which =
                pdf_joint ? "joint" : (pdf_mel ? "marginal-elevation" : "marginal-azimuth");
            return run_pdf(opts, which, pdf_support, pdf_points);
        }
        if (psd_cmd->parsed())
            return run_psd(opts, psd_method, psd_support, psd_bins, psd_doppler_hz, std::nullopt,
                           std::nullopt);
        if (compose_cmd->parsed())
            return run_psd(opts, cmp_method, cmp_support, cmp_bins, cmp_doppler_hz, cmp_k,
                           cmp_flos);
        if (mc_cmd->parsed()) return run_mc(opts, mc_samples, mc_seed, mc_bins, mc_dump);
        if (synth_cmd->parsed())
            return run_synth(opts, synth_rays, synth_duration, synth_rate, synth_doppler,
                             synth_seed);
        std::cerr << "error: no subcommand given\n";
        return 2;
    } catch (const convergence_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const bracketing_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const unreachable_target_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

int run(const std::vector<std::string>& args) {
    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& arg : args) argv.push_back(arg.c_str());
    return run(static_cast<int>(argv.size()), argv.data());
}

} // namespace leoscat::cli
