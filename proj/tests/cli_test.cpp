#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "bfpower/cli.hpp"

namespace bfpower {
namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() : path_(std::filesystem::temp_directory_path() / "bfpower_cli_test") {
    std::filesystem::remove_all(path_);
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }
  std::string write(const std::string& name, const std::string& text) const {
    const auto p = path_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string file(const std::string& name) const { return (path_ / name).string(); }

 private:
  std::filesystem::path path_;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

TEST(Cli, CrossoverBits) {
  const auto r = cli({"crossover", "bits", "--n-ant", "64", "--n-rf", "4", "--bandwidth", "1GHz"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "b* = 6\nraw R = 65.28\n");
  EXPECT_TRUE(r.err.empty());

  const auto hp = cli({"crossover", "bits", "--n-ant", "256", "--n-rf", "32", "--bandwidth",
                       "1.5 GHz", "--adc", "hpadc"});
  EXPECT_EQ(hp.out.substr(0, 7), "b* = 4\n");
}

TEST(Cli, CrossoverBandwidthAndAsymptotic) {
  EXPECT_EQ(cli({"crossover", "bandwidth", "--n-ant", "64", "--n-rf", "4", "--bits", "9"}).out,
            "B* = 127.5 MHz\n");
  EXPECT_EQ(cli({"--exact", "crossover", "bandwidth", "--n-ant", "64", "--n-rf", "4", "--bits",
                 "9"})
                .out,
            "B* = 127506642.20647775 Hz\n");
  const auto a = cli({"crossover", "bits", "--asymptotic", "--n-rf", "4", "--bandwidth", "1GHz"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out.substr(0, 7), "b* = 5\n");
}

TEST(Cli, PowerWithBreakdown) {
  const auto r = cli({"power", "--arch", "hbf", "--n-ant", "16", "--n-rf", "4", "--bits", "4",
                      "--bandwidth", "1GHz", "--breakdown"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, 16), "P_tot = 2.488 W\n");
  EXPECT_NE(r.out.find("  adcs = "), std::string::npos);
  EXPECT_NE(r.out.find("  rf_chains = "), std::string::npos);
  EXPECT_EQ(cli({"power", "--arch", "dbf", "--n-ant", "16", "--bits", "4", "--bandwidth", "1GHz",
                 "--precision", "7"})
                .out,
            "P_tot = 1.529728 W\n");
}

TEST(Cli, SnrEffAndBmin) {
  const auto lossless = cli({"snr-eff", "--gamma-db", "0", "--bits", "20"});
  EXPECT_EQ(lossless.code, 0);
  EXPECT_NE(lossless.out.find("gamma_ef = "), std::string::npos);
  EXPECT_NE(lossless.out.find("loss = "), std::string::npos);
  EXPECT_EQ(cli({"bmin", "--gamma-db", "-10"}).out, "b_m = 3\n");
  EXPECT_EQ(cli({"bmin", "--gamma-db", "20"}).out, "b_m = 6\n");
  EXPECT_EQ(cli({"bmin", "--gamma-db", "20", "--epsilon-db", "3"}).out, "b_m = 4\n");
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(cli({"--help"}).code, 0);
  EXPECT_EQ(cli({}).code, 2);
  EXPECT_EQ(cli({"teleport"}).code, 2);

  const auto missing = cli({"power", "--arch", "dbf", "--n-ant", "16", "--bits", "4"});
  EXPECT_EQ(missing.code, 2);
  EXPECT_TRUE(missing.out.empty());
  EXPECT_FALSE(missing.err.empty());

  const auto hbf_no_nrf =
      cli({"power", "--arch", "hbf", "--n-ant", "16", "--bits", "4", "--bandwidth", "1GHz"});
  EXPECT_EQ(hbf_no_nrf.code, 2);
  EXPECT_EQ(cli({"power", "--arch", "dbf", "--n-ant", "16", "--bits", "4", "--bandwidth", "1 GW"})
                .code,
            2);

  const auto domain = cli({"crossover", "bits", "--n-ant", "16", "--n-rf", "16", "--bandwidth", "1GHz"});
  EXPECT_EQ(domain.code, 1);
  EXPECT_TRUE(domain.out.empty());
  EXPECT_NE(domain.err.find("error: "), std::string::npos);
  EXPECT_EQ(cli({"power", "--arch", "dbf", "--n-ant", "16", "--bits", "21", "--bandwidth", "1GHz"})
                .code,
            1);
  EXPECT_EQ(cli({"--config", "/nonexistent/bfpower.ini", "bmin", "--gamma-db", "0"}).code, 1);
}

TEST(Cli, FigureIsDeterministic) {
  const auto a = cli({"figure", "bstar-vs-bandwidth"});
  const auto b = cli({"figure", "bstar-vs-bandwidth"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out, slurp(std::string(BFPOWER_GOLDEN_DIR) + "/bstar-vs-bandwidth.csv"));
  EXPECT_EQ(cli({"figure", "fig-42"}).code, 2);

  const auto small = cli({"figure", "snr-eff-vs-bits", "--gamma-db", "-10,20", "--bits", "1..2"});
  EXPECT_EQ(small.code, 0);
  EXPECT_EQ(small.out.substr(0, small.out.find('\n')), "gamma_db,bits,eta,gamma_ef_db");
  EXPECT_EQ(std::count(small.out.begin(), small.out.end(), '\n'), 5);
  EXPECT_NE(small.out.find("\n-10,1,0.3634,-12.116356268184422\n"), std::string::npos);
}

TEST(Cli, SweepWritesCsvAndSidecar) {
  TempDir dir;
  const auto spec = dir.write("s.ini",
                              "[sweep]\narchitectures = hbf, dbf\nn_ant = 12, 16\nn_rf_ratio = 8\n"
                              "bits = 1..3\nbandwidth = 1 GHz\n");
  const auto out = dir.file("out.csv");
  const auto r = cli({"-o", out, "sweep", "--spec", spec, "--workers", "3"});
  EXPECT_EQ(r.code, 0) << r.err;
  const auto csv = slurp(out);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "arch,adc,n_ant,n_rf,bandwidth_hz,bits,p_tot_w");
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 1 + 6 + 3);
  EXPECT_EQ(slurp(out + ".skipped.csv"), "arch,n_ant,n_rf_divisor,reason\nhbf,12,8,n_ant not divisible by n_rf divisor\n");

  const auto to_stdout = cli({"sweep", "--spec", spec, "--workers", "1"});
  EXPECT_EQ(to_stdout.out, csv);
  EXPECT_NE(to_stdout.err.find("skipped: hbf n_ant=12"), std::string::npos);
}

TEST(Cli, SweepReportsPointErrors) {
  TempDir dir;
  const auto spec = dir.write("s.ini",
                              "[sweep]\narchitectures = hbf\nn_ant = 4, 16\nn_rf = 8\n"
                              "bits = 2\nbandwidth = 1 GHz\n");
  const auto r = cli({"sweep", "--spec", spec});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 2);
  EXPECT_NE(r.err.find("error: hbf"), std::string::npos);
}

TEST(Cli, ConfigFromFlagAndEnvironment) {
  TempDir dir;
  const auto cfg = dir.write("c.ini", "[adc.lpadc]\nc = 12.5 pJ\n[defaults]\nprecision = 3\n");
  const std::vector<std::string> args{"crossover", "bits", "--n-ant", "64", "--n-rf", "4",
                                      "--bandwidth", "1GHz"};
  auto with_flag = args;
  with_flag.insert(with_flag.begin(), {"--config", cfg});
  const auto flagged = cli(with_flag);
  EXPECT_EQ(flagged.out, "b* = 1\nraw R = 2.58\n");

  ::setenv(kConfigEnvVar, cfg.c_str(), 1);
  const auto env = cli(args);
  ::unsetenv(kConfigEnvVar);
  EXPECT_EQ(env.out, flagged.out);
  EXPECT_EQ(cli(args).out, "b* = 6\nraw R = 65.28\n");
}

}  // namespace
}  // namespace bfpower
