#pragma once

// Command-line front end. Exit status: 0 success, 2 usage error, 1 domain,
// configuration or I/O error. Diagnostics go to the error stream only.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bfpower/config.hpp"
#include "bfpower/crossover.hpp"
#include "bfpower/csv.hpp"
#include "bfpower/errors.hpp"
#include "bfpower/figures.hpp"
#include "bfpower/format.hpp"
#include "bfpower/power_model.hpp"
#include "bfpower/quantization.hpp"
#include "bfpower/sweep.hpp"
#include "bfpower/units.hpp"

namespace bfpower {

inline constexpr const char* kConfigEnvVar = "BFPOWER_CONFIG";

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline std::string read_text_file(const std::filesystem::path& path) {
  errno = 0;
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    const int err = errno;
    throw IoError("cannot read '" + path.string() + "': " +
                  (err ? std::generic_category().message(err) : std::string("unknown error")));
  }
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

namespace detail {

struct CliOptions {
  std::string config_path;
  std::string output;
  bool exact = false;
  int precision = -1;

  std::string arch;
  int n_ant = 0;
  int n_rf = 0;
  int bits = 0;
  std::string bandwidth;
  std::string adc;
  bool breakdown = false;

  std::string crossover_kind;
  bool asymptotic = false;

  double gamma_db = 0.0;
  double epsilon_db = 0.0;

  std::string spec_path;
  unsigned workers = 0;

  std::string figure_id;
  std::vector<int> fig_n_ant;
  int fig_n_rf = 0;
  int fig_n_rf_ratio = 0;
  std::string fig_bits;
  std::vector<std::string> fig_bandwidth;
  std::vector<double> fig_gamma_db;
  std::vector<std::string> fig_adc;
};

inline RunConfig load_config(const CliOptions& opt) {
  if (!opt.config_path.empty()) return parse_config(read_text_file(opt.config_path));
  if (const char* env = std::getenv(kConfigEnvVar); env != nullptr && *env != '\0') {
    return parse_config(read_text_file(env));
  }
  return RunConfig{};
}

inline double cli_frequency(const std::string& text, const char* flag) {
  try {
    return parse_frequency(text);
  } catch (const UnitError& e) {
    throw UsageError(std::string(flag) + ": " + e.what());
  }
}

inline std::pair<int, int> cli_bits_range(const std::string& text) {
  auto to_int = [&](std::string_view s) {
    int v = 0;
    s = trim(s);
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
      throw UsageError("--bits: expected N or LO..HI, got '" + text + "'");
    }
    return v;
  };
  const std::string_view v = text;
  if (const auto dots = v.find(".."); dots != std::string_view::npos) {
    return {to_int(v.substr(0, dots)), to_int(v.substr(dots + 2))};
  }
  const int b = to_int(v);
  return {b, b};
}

class CliRunner {
 public:
  CliRunner(const CliOptions& opt, std::ostream& out, std::ostream& err)
      : opt_(opt), out_(out), err_(err), cfg_(load_config(opt)) {
    digits_ = opt.exact ? 0 : (opt.precision >= 0 ? opt.precision : cfg_.defaults.precision);
  }

  int power(bool n_rf_given) {
    const auto arch = parse_architecture(opt_.arch);
    if (arch == Architecture::hbf && !n_rf_given) throw UsageError("--n-rf is required for hbf");
    const auto design = ReceiverDesign::make(arch, opt_.n_ant, n_rf_given ? opt_.n_rf : 1,
                                             opt_.bits, cli_frequency(opt_.bandwidth, "--bandwidth"));
    const auto result = total_power(design, cfg_.components, adc());
    out_ << "P_tot = " << display(result.total, digits_) << " W\n";
    if (opt_.breakdown) {
      for (const auto& [label, watts] : result.per_component) {
        out_ << "  " << label << " = " << display(watts, digits_) << " W\n";
      }
    }
    return 0;
  }

  int crossover(bool n_ant_given, bool bandwidth_given, bool bits_given) {
    const bool want_bits = opt_.crossover_kind == "bits";
    if (want_bits && !bandwidth_given) throw UsageError("crossover bits needs --bandwidth");
    if (!want_bits && !bits_given) throw UsageError("crossover bandwidth needs --bits");
    if (!opt_.asymptotic && !n_ant_given) throw UsageError("--n-ant is required unless --asymptotic");
    const auto& model = adc();

    if (want_bits) {
      const double bw = cli_frequency(opt_.bandwidth, "--bandwidth");
      const auto r = opt_.asymptotic
                         ? asymptotic_bits_star(opt_.n_rf, cfg_.components, model, bw)
                         : bits_star({opt_.n_ant, opt_.n_rf, cfg_.components, model}, bw);
      if (r.bits) {
        out_ << "b* = " << *r.bits << "\n";
      } else {
        out_ << "b* = none (DBF exceeds HBF at every resolution)\n";
      }
      out_ << "raw R = " << display(r.raw_levels, digits_) << "\n";
    } else {
      const auto r = opt_.asymptotic
                         ? asymptotic_bandwidth_star(opt_.n_rf, cfg_.components, model, opt_.bits)
                         : bandwidth_star({opt_.n_ant, opt_.n_rf, cfg_.components, model}, opt_.bits);
      if (r.bandwidth) {
        out_ << "B* = "
             << (digits_ > 0 ? with_si_prefix(*r.bandwidth, "Hz", digits_)
                             : shortest(*r.bandwidth) + " Hz")
             << "\n";
      } else {
        out_ << "B* = none (DBF exceeds HBF at every bandwidth)\n";
      }
    }
    return 0;
  }

  int snr_eff() {
    const double gamma = from_db(opt_.gamma_db);
    const double ef = effective_snr(gamma, opt_.bits);
    out_ << "gamma_ef = " << display(to_db(ef), digits_) << " dB\n";
    out_ << "loss = " << display(to_db(gamma) - to_db(ef), digits_) << " dB\n";
    return 0;
  }

  int bmin(bool epsilon_given) {
    const double eps = epsilon_given ? opt_.epsilon_db : cfg_.defaults.epsilon_db;
    out_ << "b_m = " << min_adequate_bits(from_db(opt_.gamma_db), eps) << "\n";
    return 0;
  }

  int sweep(bool workers_given) {
    const auto file = parse_sweep_file(read_text_file(opt_.spec_path), cfg_);
    const unsigned workers = workers_given ? opt_.workers : file.config.defaults.workers;
    const auto result = run_sweep(file.spec, file.config.components, workers);
    const auto target = output_target(file.config);
    emit(sweep_dataset(result, file.spec.gamma_db.has_value()), target);

    if (!result.skipped.empty()) {
      if (target) {
        const auto sidecar = *target + ".skipped.csv";
        emit_csv(skipped_dataset(result), sidecar);
        err_ << "note: " << result.skipped.size() << " hybrid point(s) skipped, see " << sidecar
             << "\n";
      } else {
        for (const auto& s : result.skipped) {
          err_ << "skipped: " << to_string(s.arch) << " n_ant=" << s.n_ant
               << " not divisible by n_rf divisor " << s.divisor << "\n";
        }
      }
    }
    for (const auto& e : result.errors) err_ << "error: " << e.where << ": " << e.message << "\n";
    return result.errors.empty() ? 0 : 1;
  }

  int figure(const CLI::App& sub) {
    FigureOverrides o;
    if (sub.count("--n-ant")) o.n_ant = opt_.fig_n_ant;
    if (sub.count("--n-rf")) o.n_rf = opt_.fig_n_rf;
    if (sub.count("--n-rf-ratio")) o.n_rf_divisor = opt_.fig_n_rf_ratio;
    if (sub.count("--bits")) o.bits = cli_bits_range(opt_.fig_bits);
    if (sub.count("--bandwidth")) {
      std::vector<double> bws;
      for (const auto& s : opt_.fig_bandwidth) bws.push_back(cli_frequency(s, "--bandwidth"));
      o.bandwidth = bws;
    }
    if (sub.count("--gamma-db")) o.gamma_db = opt_.fig_gamma_db;
    if (sub.count("--adc")) {
      std::vector<AdcModel> adcs;
      for (const auto& s : opt_.fig_adc) adcs.push_back(cfg_.adc(s));
      o.adcs = adcs;
    }
    emit(figure_dataset(parse_figure_id(opt_.figure_id), cfg_.components, o),
         output_target(cfg_));
    return 0;
  }

 private:
  const AdcModel& adc() const { return cfg_.adc(opt_.adc.empty() ? cfg_.defaults.adc : opt_.adc); }

  std::optional<std::string> output_target(const RunConfig& cfg) const {
    if (!opt_.output.empty()) {
      return opt_.output == "-" ? std::nullopt : std::optional<std::string>(opt_.output);
    }
    return cfg.defaults.output;
  }

  void emit(const Dataset& data, const std::optional<std::string>& target) {
    if (target) {
      emit_csv(data, *target);
    } else {
      write_csv(data, out_);
    }
  }

  const CliOptions& opt_;
  std::ostream& out_;
  std::ostream& err_;
  RunConfig cfg_;
  int digits_ = 4;
};

}  // namespace detail

inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  detail::CliOptions opt;
  CLI::App app{"Power and effective-SNR model for analog, hybrid and digital beamforming receivers",
               "bfpower"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--config", opt.config_path,
                 std::string("Configuration file (default: $") + kConfigEnvVar + ")");
  app.add_option("-o,--output", opt.output, "CSV output path ('-' for standard output)");
  app.add_flag("--exact", opt.exact, "Print full round-trip precision");
  app.add_option("--precision", opt.precision, "Significant digits for printed values")
      ->check(CLI::Range(1, 17));

  auto* power = app.add_subcommand("power", "Total power of one receiver design");
  power->add_option("--arch", opt.arch, "abf | hbf | dbf")
      ->required()
      ->check(CLI::IsMember({"abf", "hbf", "dbf"}, CLI::ignore_case));
  power->add_option("--n-ant", opt.n_ant, "Number of antennas")->required()->check(CLI::PositiveNumber);
  auto* power_n_rf =
      power->add_option("--n-rf", opt.n_rf, "RF chains (hybrid only)")->check(CLI::PositiveNumber);
  power->add_option("--bits", opt.bits, "ADC resolution")->required();
  power->add_option("--bandwidth", opt.bandwidth, "Bandwidth with unit, e.g. 1GHz")->required();
  power->add_option("--adc", opt.adc, "ADC profile name");
  power->add_flag("--breakdown", opt.breakdown, "Also print per-component power");

  auto* cross = app.add_subcommand("crossover", "DBF vs HBF break-even resolution or bandwidth");
  cross->add_option("kind", opt.crossover_kind, "bits | bandwidth")
      ->required()
      ->check(CLI::IsMember({"bits", "bandwidth"}));
  auto* cross_n_ant = cross->add_option("--n-ant", opt.n_ant, "Number of antennas")
                          ->check(CLI::PositiveNumber);
  cross->add_option("--n-rf", opt.n_rf, "Hybrid RF chains")->required()->check(CLI::PositiveNumber);
  auto* cross_bw = cross->add_option("--bandwidth", opt.bandwidth, "Fixed bandwidth (bits query)");
  auto* cross_bits = cross->add_option("--bits", opt.bits, "Fixed resolution (bandwidth query)");
  cross_bw->excludes(cross_bits);
  cross->add_option("--adc", opt.adc, "ADC profile name");
  cross->add_flag("--asymptotic", opt.asymptotic, "Large-array limit (no --n-ant)");

  auto* snr = app.add_subcommand("snr-eff", "Effective SNR after quantization");
  snr->add_option("--gamma-db", opt.gamma_db, "Unquantized SNR in dB")->required();
  snr->add_option("--bits", opt.bits, "ADC resolution")->required();

  auto* bmin = app.add_subcommand("bmin", "Smallest resolution with negligible SNR loss");
  bmin->add_option("--gamma-db", opt.gamma_db, "Unquantized SNR in dB")->required();
  auto* bmin_eps = bmin->add_option("--epsilon-db", opt.epsilon_db, "Tolerated loss in dB (0.3)");

  auto* sweep = app.add_subcommand("sweep", "Evaluate a sweep spec file, CSV output");
  sweep->add_option("--spec", opt.spec_path, "Sweep spec file")->required();
  auto* sweep_workers = sweep->add_option("--workers", opt.workers, "Worker threads (0 = all cores)");

  std::vector<std::string> figure_names;
  for (const auto& [id, name] : kFigureNames) figure_names.emplace_back(name);
  auto* figure = app.add_subcommand("figure", "Dataset behind one comparison figure, CSV output");
  figure->add_option("figure-id", opt.figure_id)->required()->check(CLI::IsMember(figure_names));
  figure->add_option("--n-ant", opt.fig_n_ant, "Antenna counts")->delimiter(',');
  figure->add_option("--n-rf", opt.fig_n_rf, "Hybrid RF chains (power figures)");
  figure->add_option("--n-rf-ratio", opt.fig_n_rf_ratio, "n_rf = n_ant / K (crossover figures)");
  figure->add_option("--bits", opt.fig_bits, "Resolution N or range LO..HI");
  figure->add_option("--bandwidth", opt.fig_bandwidth, "Bandwidths with units")->delimiter(',');
  figure->add_option("--gamma-db", opt.fig_gamma_db, "SNR values in dB")->delimiter(',');
  figure->add_option("--adc", opt.fig_adc, "ADC profile names")->delimiter(',');

  try {
    std::reverse(args.begin(), args.end());
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\nRun with --help for more information.\n";
    return 2;
  }

  try {
    detail::CliRunner run(opt, out, err);
    if (power->parsed()) return run.power(power_n_rf->count() > 0);
    if (cross->parsed()) {
      return run.crossover(cross_n_ant->count() > 0, cross_bw->count() > 0, cross_bits->count() > 0);
    }
    if (snr->parsed()) return run.snr_eff();
    if (bmin->parsed()) return run.bmin(bmin_eps->count() > 0);
    if (sweep->parsed()) return run.sweep(sweep_workers->count() > 0);
    if (figure->parsed()) return run.figure(*figure);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const UnitError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

inline int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run_cli(std::move(args), out, err);
}

}  // namespace bfpower
