#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <gtest/gtest.h>
#include <json.hpp>

namespace {

namespace fs = std::filesystem;

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + DUODECIC_CLI_PATH + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) throw std::runtime_error("popen failed");
  std::string out;
  std::array<char, 4096> buf{};
  while (auto n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

fs::path scratch(const std::string& name) { return fs::temp_directory_path() / ("duodecic_cli_test_" + name); }

void write(const fs::path& p, const std::string& text) { std::ofstream(p) << text; }

TEST(Cli, Index) {
  auto r = run("index --m 60");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "2: 15\n3: 0\n5: 0\n");
  EXPECT_EQ(run("index --m 17 --p 2").out, "9\n");
  auto j = nlohmann::json::parse(run("index --m 60 --format json").out);
  EXPECT_EQ(j.at("vp_index").at("2"), 15);
  EXPECT_EQ(run("index --m 4096").code, 2);
  EXPECT_EQ(run("index --m 60 --p 4").code, 2);
  EXPECT_EQ(run("index --m banana").code, 2);
}

TEST(Cli, Basis) {
  auto j = nlohmann::json::parse(run("basis --m 2352 --global --format json").out);
  std::vector<std::string> dens;
  for (const auto& e : j) dens.push_back(e.at("den"));
  // The lattice at 7 is strictly larger than a basis with theta^6/4 would give.
  EXPECT_EQ(dens, (std::vector<std::string>{"1", "1", "1", "2", "2", "2", "28", "28", "56", "56", "112", "112"}));

  auto power = run("basis --m 60 --p 3");
  EXPECT_EQ(power.code, 0);
  EXPECT_EQ(power.out, run("basis --m 7 --global").out);
  EXPECT_NE(power.out.find("11: t^11\n"), std::string::npos);
  EXPECT_EQ(power.out.find('/'), std::string::npos);

  auto tex = run("basis --m 60 --p 2 --format latex");
  EXPECT_NE(tex.out.find("\\frac"), std::string::npos);
  EXPECT_EQ(run("basis --m 60 --p 2 --global").code, 2);
}

TEST(Cli, Disc) {
  auto r = run("disc --m 60");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("d_K = -2^16*3^23*5^11"), std::string::npos);
}

TEST(Cli, Verify) {
  auto r = run("verify --m 60");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("result: pass"), std::string::npos);
  EXPECT_EQ(run("verify --m 2352").code, 0);
  auto nc = run("verify --m 3125");
  EXPECT_EQ(nc.code, 0);
  EXPECT_NE(nc.out.find("oracle-only"), std::string::npos);
  EXPECT_EQ(run("verify --m 1").code, 2);
}

// A table whose A1 rows are wrong must make verification fail with exit code 1.
TEST(Cli, VerifyFailsOnCorruptedTable) {
  std::ifstream in(DUODECIC_CASE_TABLE_PATH);
  std::stringstream s;
  s << in.rdbuf();
  std::string text = s.str();
  const std::string good = "row 2 t^6 - 2\n";
  const auto at = text.find(good);
  ASSERT_NE(at, std::string::npos);
  text.replace(at, good.size(), "row 2 t^6 - 4\n");
  const auto path = scratch("bad_table.txt");
  write(path, text);
  auto r = run("verify --m 20", "DUODECIC_CASE_TABLE=" + path.string());
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("result: FAIL"), std::string::npos);
  fs::remove(path);
}

TEST(Cli, Table) {
  auto one = run("table --which 1");
  EXPECT_EQ(one.code, 0);
  int rows = 0;
  std::istringstream lines(one.out);
  for (std::string line; std::getline(lines, line);) rows += line.rfind("| A", 0) == 0;
  EXPECT_EQ(rows, 15);
  EXPECT_EQ(one.out, run("table --which 1").out);
  auto two = run("table --which 2 --format latex");
  EXPECT_EQ(two.code, 0);
  EXPECT_NE(two.out.find("\\begin{tabular}"), std::string::npos);
  EXPECT_EQ(run("table --which 3").code, 2);
}

TEST(Cli, Batch) {
  const auto in = scratch("in.txt"), out = scratch("out.json");
  write(in, "# sample\n20\n60\n\n2352  # comment\n");
  auto r = run("batch --input " + in.string() + " --output " + out.string());
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("3 processed, 0 rejected"), std::string::npos);
  std::ifstream f(out);
  auto j = nlohmann::json::parse(f);
  ASSERT_EQ(j.size(), 3u);
  EXPECT_EQ(j[0].at("index").at("factors"), (nlohmann::json{{"2", 12}}));
  EXPECT_EQ(j[1].at("index").at("factors"), (nlohmann::json{{"2", 15}}));
  EXPECT_EQ(j[2].at("index").at("factors"), (nlohmann::json{{"2", 21}, {"7", 6}}));

  write(in, "4096\n");
  r = run("batch --input " + in.string() + " --output " + out.string());
  EXPECT_NE(r.out.find("0 processed, 1 rejected"), std::string::npos);

  write(in, "");
  r = run("batch --input " + in.string() + " --output " + out.string());
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("0 processed"), std::string::npos);
  std::ifstream f2(out);
  EXPECT_EQ(nlohmann::json::parse(f2), nlohmann::json::array());

  EXPECT_NE(run("batch --input /nonexistent/x --output " + out.string()).code, 0);
  fs::remove(in);
  fs::remove(out);
}

}  // namespace
