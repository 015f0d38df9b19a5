#include "commands.hpp"

#include <exception>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "rtmbe/cstr_filter.hpp"
#include "rtmbe/errors.hpp"
#include "rtmbe/format.hpp"
#include "rtmbe/simulation.hpp"
#include "rtmbe/trajectory_io.hpp"

namespace rtmbe::cli {
namespace {

// Maps library exceptions onto exit codes, printing one diagnostic line.
template <class Fn>
int guarded(std::ostream& err, Fn&& fn) {
  try {
    return fn();
  } catch (const LengthMismatch& e) {
    err << "error: " << e.what() << '\n';
    return kLengthMismatch;
  } catch (const NumericalError& e) {
    err << "error: " << e.what() << '\n';
    return kNumerical;
  } catch (const FileError& e) {
    err << "error: " << e.what() << '\n';
    return kFileOrFormat;
  } catch (const FormatError& e) {
    err << "error: " << e.what() << '\n';
    return kFileOrFormat;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kFileOrFormat;
  } catch (const InvalidParameter& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kNumerical;
  }
}

ModelParameters parameters_from(const std::optional<std::filesystem::path>& path) {
  return path ? load_parameters(*path) : cstr_default_parameters();
}

}  // namespace

int cmd_simulate(const SimulateOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    SimulationConfig cfg;
    cfg.n = opts.n;
    cfg.seed = opts.seed;
    if (opts.Ts) cfg.Ts = *opts.Ts;
    if (opts.substeps) cfg.substeps = *opts.substeps;
    if (!(opts.noise_scale >= 0.0)) throw InvalidParameter("noise scale must be non-negative");
    cfg.noise_std *= opts.noise_scale;
    cfg.params = parameters_from(opts.params);

    const auto data = simulate_cstr(cfg);
    std::error_code ec;
    std::filesystem::create_directories(opts.out_dir, ec);
    if (ec) throw FileError("cannot create " + opts.out_dir.string() + ": " + ec.message());

    write_trajectories(data.us, data.ys, opts.out_dir / "data_u.bin", opts.out_dir / "data_y.bin");
    write_vectors<kStateDim>(opts.out_dir / "data_x.bin", data.xs);
    out << "Simulated " << cfg.n << " samples (Ts = " << shortest_repr(cfg.Ts) << " h) into "
        << opts.out_dir.string() << '\n';
    return static_cast<int>(kOk);
  });
}

int cmd_filter(const FilterOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto data = read_trajectories(opts.u_path, opts.y_path);

    CstrFilterConfig cfg;
    if (opts.Ts) cfg.Ts = *opts.Ts;
    if (opts.substeps) cfg.substeps = *opts.substeps;
    cfg.params = parameters_from(opts.params);
    const auto kf = make_cstr_filter(cfg);

    // Nothing is printed until filtering has succeeded, so a failure leaves
    // stdout empty.
    const auto sol = kf.forward_trajectory(data.us, data.ys);
    std::ostringstream text;
    text << "Data length " << data.ys.size() << '\n'
         << "loglik = " << shortest_repr(sol.ll) << '\n';
    out << text.str();
    return static_cast<int>(kOk);
  });
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Real-time model-based estimation toolkit: CSTR simulation and UKF filtering"};
  app.require_subcommand(1);

  SimulateOptions sim;
  auto* simulate = app.add_subcommand("simulate", "Simulate the CSTR and write trajectory files");
  simulate->add_option("--n", sim.n, "Number of samples")->required();
  simulate->add_option("--seed", sim.seed, "PRNG seed")->required();
  simulate->add_option("--ts", sim.Ts, "Sample time [h]")->check(CLI::PositiveNumber);
  simulate->add_option("--substeps", sim.substeps, "RK4 substeps per sample")
      ->check(CLI::PositiveNumber);
  simulate->add_option("--noise-scale", sim.noise_scale,
                       "Multiplier on the default sensor noise (0 = noise free)")
      ->check(CLI::NonNegativeNumber);
  simulate->add_option("--out-dir", sim.out_dir, "Output directory");
  simulate->add_option("--params", sim.params, "Model parameter file")->check(CLI::ExistingFile);

  FilterOptions filt;
  auto* filter = app.add_subcommand("filter", "Run the UKF over trajectory files");
  filter->add_option("--u", filt.u_path, "Input trajectory file");
  filter->add_option("--y", filt.y_path, "Measurement trajectory file");
  filter->add_option("--ts", filt.Ts, "Sample time [h]")->check(CLI::PositiveNumber);
  filter->add_option("--substeps", filt.substeps, "RK4 substeps per sample")
      ->check(CLI::PositiveNumber);
  filter->add_option("--params", filt.params, "Model parameter file")->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? static_cast<int>(kOk) : static_cast<int>(kUsage);
  }

  if (simulate->parsed()) return cmd_simulate(sim, out, err);
  return cmd_filter(filt, out, err);
}

}  // namespace rtmbe::cli
