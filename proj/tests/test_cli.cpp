#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "bures/cli.hpp"

using namespace bures;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string body(const std::string& text) {
  std::istringstream in(text);
  std::string line, b;
  while (std::getline(in, line)) {
    if (!line.empty() && line[0] != '#') b += line + "\n";
  }
  return b;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

TEST(Cli, MomentsPhysical) {
  const Result r = run({"moments", "--m", "2", "--n", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_NEAR(j["mean"].get<double>(), 0.219628, 1e-6);
  EXPECT_NEAR(j["variance"].get<double>(), 0.03413, 1e-5);
  EXPECT_TRUE(j["specialization_check"]["pass"].get<bool>());
}

TEST(Cli, MomentsDegenerateAndInduced) {
  const json one = json::parse(run({"moments", "--m", "1", "--n", "5"}).out);
  EXPECT_EQ(one["mean"].get<double>(), 0.0);
  EXPECT_EQ(one["variance"].get<double>(), 0.0);
  const Result r = run({"moments", "--m", "3", "--alpha", "0.75"});
  ASSERT_EQ(r.code, 0);
  const json j = json::parse(r.out);
  EXPECT_FALSE(j.contains("mean"));
  EXPECT_FALSE(j.contains("variance"));
  EXPECT_TRUE(j.contains("induced_variance_T"));
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, cli::kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"moments", "--m", "3", "--n", "2"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"moments", "--m", "3"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"moments", "--m", "2", "--n", "3", "--alpha", "0.5"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"sample", "--m", "2", "--n", "2", "--count", "50"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"verify", "nonsense"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, VerifyIdentitiesTable) {
  const Result r = run({"verify", "identities", "--seed", "7"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.err);
  EXPECT_TRUE(j["pass"].get<bool>());
  EXPECT_EQ(j["manifest"]["seed"].get<int>(), 7);
  std::size_t random_rows = 0;
  std::istringstream in(r.out);
  std::string line;
  while (std::getline(in, line)) {
    const bool random_case = line.rfind("identities,\"A", 0) == 0 || line.rfind("identities,\"L41", 0) == 0 ||
                             line.rfind("identities,\"T3t2 m=", 0) == 0;
    if (random_case && line.find("swap") == std::string::npos) {
      ++random_rows;
    }
  }
  EXPECT_EQ(random_rows, 5000u);
}

TEST(Cli, VerifyFailureExitsOne) {
  const Result r = run({"verify", "closedforms", "--m-max", "2", "--closedform-tol", "1e-30", "--alphas", "0.3"});
  EXPECT_EQ(r.code, cli::kExitCheckFailed);
  EXPECT_FALSE(json::parse(r.err)["suites"][0]["failing"].empty());
}

TEST(Cli, SampleIsDeterministicAndReportsDegenerate) {
  const auto dir = std::filesystem::temp_directory_path() / "bures_cli_test";
  std::filesystem::create_directories(dir);
  const auto a = dir / "a.csv", b = dir / "b.csv";
  const std::vector<std::string> base{"sample", "--m", "2", "--n", "3", "--count", "500", "--seed", "3"};
  auto args_a = base, args_b = base;
  args_a.insert(args_a.end(), {"--out", a.string()});
  args_b.insert(args_b.end(), {"--out", b.string()});
  const Result ra = run(args_a);
  ASSERT_EQ(ra.code, 0) << ra.err;
  ASSERT_EQ(run(args_b).code, 0);
  EXPECT_EQ(body(slurp(a)), body(slurp(b)));
  EXPECT_EQ(body(slurp(a)).size() > 0, true);
  const json rep = json::parse(ra.out);
  EXPECT_TRUE(rep.contains("mean_delta_se"));

  const Result deg = run({"sample", "--m", "1", "--n", "3", "--count", "200", "--method", "matrix", "--out",
                          (dir / "c.csv").string()});
  ASSERT_EQ(deg.code, 0) << deg.err;
  EXPECT_TRUE(json::parse(deg.out)["degenerate"].get<bool>());
  std::filesystem::remove_all(dir);
}

TEST(Cli, DistributionSingleBin) {
  const Result r = run({"distribution", "--m", "2", "--n", "2", "--count", "400", "--bins", "1", "--method", "matrix"});
  ASSERT_EQ(r.code, 0) << r.err;
  const std::string b = body(r.out);
  std::istringstream in(b);
  std::string header, row, extra;
  std::getline(in, header);
  std::getline(in, row);
  EXPECT_EQ(header, "bin_center,empirical_density,gaussian_density");
  EXPECT_FALSE(std::getline(in, extra));
  // one bin holding every sample has density 1 / width
  const auto c1 = row.find(','), c2 = row.find(',', c1 + 1);
  const double dens = std::stod(row.substr(c1 + 1, c2 - c1 - 1));
  EXPECT_GT(dens, 0.0);
  EXPECT_EQ(run({"distribution", "--m", "1", "--n", "2", "--count", "200"}).code, cli::kExitUsage);
}

TEST(Cli, OracleReport) {
  const Result r = run({"oracle", "--m", "1", "--alpha", "0"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_LT(j["I_A"]["relative_difference"].get<double>(), 1e-8);
  EXPECT_TRUE(j["converged"].get<bool>());
}

TEST(Cli, HistogramIntegratesToOne) {
  const SampleBatch b = sample_matrix_model(3, 4, 2000, 12);
  for (int bins : {1, 7, 40}) {
    const auto rows = cli::standardized_histogram(b, bins);
    ASSERT_EQ(rows.size(), static_cast<std::size_t>(bins));
    const double width = bins > 1 ? rows[1].center - rows[0].center : 0.0;
    double lo = 1e300, hi = -1e300;
    for (double v : b.values) {
      lo = std::min(lo, standardize(v, b.params));
      hi = std::max(hi, standardize(v, b.params));
    }
    const double w = bins > 1 ? width : hi - lo;
    double total = 0.0;
    for (const auto& r : rows) total += r.empirical * w;
    EXPECT_NEAR(total, 1.0, 1e-12);
    if (bins == 1) {
      EXPECT_NEAR(rows[0].empirical, 1.0 / (hi - lo), 1e-12);
    }
  }
}
