#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "cli.hpp"
#include "support.hpp"

namespace vbs::cli {
namespace {

namespace fs = std::filesystem;
using vbs::testing::data_path;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "vbs");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("vbs_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  fs::path write_identity() const {
    const fs::path p = dir_ / "identity.json";
    std::ofstream(p) << R"({"modes": 2, "omega_initial_cm1": [100, 200], "omega_final_cm1": [100, 200],
      "duschinsky": [[1, 0], [0, 1]], "delta": [0, 0]})";
    return p;
  }
  std::string out(const std::string& sub) const { return (dir_ / sub).string(); }

  fs::path dir_;
};

TEST_F(CliTest, CompileFormic) {
  const Result r = run_cli({"compile", data_path("formic_acid_a1.json"), "--out", out("c")});
  ASSERT_EQ(r.code, kOk) << r.err;
  const auto doc = nlohmann::json::parse(slurp(dir_ / "c" / "circuit.json"));
  const double expected[] = {0.10, 0.07, 0.02, -0.06, -0.08, -0.11, -0.19};
  for (int k = 0; k < 7; ++k) EXPECT_NEAR(doc["log_squeezing"][k].get<double>(), expected[k], 0.005);
  EXPECT_NE(slurp(dir_ / "c" / "apparatus.txt").find("squeezed coherent state"), std::string::npos);
}

TEST_F(CliTest, CompileIdentity) {
  ASSERT_EQ(run_cli({"compile", write_identity().string(), "-o", out("c")}).code, kOk);
  const auto doc = nlohmann::json::parse(slurp(dir_ / "c" / "circuit.json"));
  for (const auto& v : doc["log_squeezing"]) EXPECT_EQ(v.get<double>(), 0.0);
  for (const auto& v : doc["input_coherent"]) EXPECT_EQ(v.get<double>(), 0.0);
}

TEST_F(CliTest, MissingFileIsIoError) {
  const Result r = run_cli({"compile", out("absent.json"), "-o", out("c")});
  EXPECT_EQ(r.code, kIoError);
  EXPECT_FALSE(r.err.empty());
}

TEST_F(CliTest, InvalidModelIsValidationError) {
  const fs::path p = dir_ / "bad.json";
  std::ofstream(p) << R"({"modes": 1, "omega_initial_cm1": [-5], "omega_final_cm1": [5],
    "duschinsky": [[1]], "delta": [0]})";
  EXPECT_EQ(run_cli({"spectrum", p.string(), "-o", out("s")}).code, kValidationError);
}

TEST_F(CliTest, MalformedJsonIsIoError) {
  const fs::path p = dir_ / "broken.json";
  std::ofstream(p) << "{ modes: ";
  EXPECT_EQ(run_cli({"compile", p.string(), "-o", out("c")}).code, kIoError);
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(run_cli({}).code, kValidationError);
  EXPECT_EQ(run_cli({"frobnicate"}).code, kValidationError);
  EXPECT_EQ(run_cli({"spectrum"}).code, kValidationError);
  EXPECT_EQ(run_cli({"spectrum", write_identity().string(), "--bin", "0"}).code, kValidationError);
  EXPECT_EQ(run_cli({"verify", "--oracle", "tarot"}).code, kValidationError);
  EXPECT_EQ(run_cli({"--help"}).code, kOk);
}

TEST_F(CliTest, SpectrumFormicTable) {
  const Result r = run_cli({"spectrum", data_path("formic_acid_a1.json"), "-o", out("s")});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_NE(r.out.find("captured probability"), std::string::npos);
  std::istringstream csv(slurp(dir_ / "s" / "fcp.csv"));
  std::string line;
  std::getline(csv, line);
  EXPECT_EQ(line, "occupations,omega_vib_cm1,fcf");
  std::map<std::string, double> fcf;
  while (std::getline(csv, line)) {
    const auto a = line.find(','), b = line.rfind(',');
    fcf[line.substr(0, a)] = std::stod(line.substr(b + 1));
  }
  for (const auto& ref : vbs::testing::formic_reference_fcfs()) {
    ASSERT_TRUE(fcf.count(ref.state.to_string())) << ref.state.to_string();
    EXPECT_NEAR(fcf[ref.state.to_string()], ref.fcf, 0.002);
  }
  EXPECT_EQ(slurp(dir_ / "s" / "sticks.csv").substr(0, 19), "omega_cm1,intensity");
  EXPECT_EQ(slurp(dir_ / "s" / "binned.csv").substr(0, 18), "bin_left_cm1,value");
}

TEST_F(CliTest, SpectrumIdentity) {
  ASSERT_EQ(run_cli({"spectrum", write_identity().string(), "-o", out("s")}).code, kOk);
  EXPECT_EQ(slurp(dir_ / "s" / "sticks.csv"), "omega_cm1,intensity\n0,1\n");
}

TEST_F(CliTest, TruncationExitCode) {
  const std::string f = data_path("formic_acid_a1.json");
  const Result r = run_cli({"spectrum", f, "--cutoff", "0", "-o", out("s")});
  EXPECT_EQ(r.code, kTruncation);
  EXPECT_NE(r.out.find("0.215"), std::string::npos);
  EXPECT_EQ(run_cli({"spectrum", f, "--cutoff", "0", "--allow-truncation", "-o", out("s")}).code, kOk);
  EXPECT_EQ(run_cli({"sample", f, "--cutoff", "0", "-o", out("m")}).code, kTruncation);
}

TEST_F(CliTest, SampleHistogramGeometry) {
  ASSERT_EQ(run_cli({"sample", data_path("formic_acid_a1.json"), "-o", out("m")}).code, kOk);
  std::istringstream csv(slurp(dir_ / "m" / "histogram.csv"));
  std::string line;
  std::getline(csv, line);
  EXPECT_EQ(line, "bin_left_cm1,value");
  double expected_left = 0.0;
  while (std::getline(csv, line)) {
    EXPECT_EQ(std::stod(line.substr(0, line.find(','))), expected_left);
    expected_left += 200.0;
  }
  std::istringstream samples(slurp(dir_ / "m" / "samples.csv"));
  std::size_t rows = 0;
  while (std::getline(samples, line)) ++rows;
  EXPECT_EQ(rows, 301u);
}

TEST_F(CliTest, SampleIdentitySingleVacuum) {
  ASSERT_EQ(run_cli({"sample", write_identity().string(), "--samples", "1", "-o", out("m")}).code, kOk);
  EXPECT_EQ(slurp(dir_ / "m" / "samples.csv"), "sample_index,occupations,omega_vib_cm1\n0,0 0,0\n");
}

TEST_F(CliTest, RerunsAreByteIdentical) {
  const std::string f = data_path("formic_acid_a1.json");
  ASSERT_EQ(run_cli({"sample", f, "--samples", "5000", "--seed", "9", "-o", out("a")}).code, kOk);
  ASSERT_EQ(run_cli({"sample", f, "--samples", "5000", "--seed", "9", "--threads", "4", "-o", out("b")}).code, kOk);
  ASSERT_EQ(run_cli({"spectrum", f, "-o", out("a")}).code, kOk);
  ASSERT_EQ(run_cli({"spectrum", f, "--threads", "3", "-o", out("b")}).code, kOk);
  for (const char* name : {"samples.csv", "histogram.csv", "exact.csv", "fcp.csv", "sticks.csv", "binned.csv"}) {
    EXPECT_EQ(slurp(dir_ / "a" / name), slurp(dir_ / "b" / name)) << name;
  }
}

TEST_F(CliTest, VerifyOracles) {
  const Result q = run_cli({"verify", "--oracle", "quadrature", "-o", out("v")});
  EXPECT_EQ(q.code, kOk) << q.out;
  EXPECT_NE(q.out.find("fc_vs_quadrature"), std::string::npos);
  const Result p = run_cli({"verify", data_path("formic_acid_a1.json"), "--oracle", "permanent", "-o", out("v")});
  EXPECT_EQ(p.code, kOk) << p.out;
  EXPECT_NE(slurp(dir_ / "v" / "verify.txt").find("hong_ou_mandel"), std::string::npos);
}

TEST_F(CliTest, VerifyCorruptedW) {
  const Result r = run_cli({"verify", "--oracle", "none", "--corrupt-w", "-o", out("v")});
  EXPECT_EQ(r.code, kVerificationFailed);
  EXPECT_NE(r.out.find("FAIL"), std::string::npos);
}

}  // namespace
}  // namespace vbs::cli
