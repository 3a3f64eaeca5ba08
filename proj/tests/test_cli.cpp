#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "ordreg/data.hpp"
#include "ordreg/io.hpp"
#include "oracles.hpp"

namespace fs = std::filesystem;
using json = nlohmann::json;

namespace {

const std::string kCli = ORDREG_CLI_PATH;

fs::path workspace() {
  static fs::path dir = [] {
    auto d = fs::temp_directory_path() / "ordreg_cli_tests";
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

int run(const std::string& args, const std::string& stderr_to = "") {
  std::string cmd = kCli + " " + args;
  if (!stderr_to.empty()) {
    cmd += " 2> " + stderr_to;
  } else {
    cmd += " 2> /dev/null";
  }
  cmd += " > /dev/null";
  return std::system(cmd.c_str());
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Sweep CSVs carry wall times; strip that column before comparing.
std::string sweep_without_time(const fs::path& path) {
  std::ifstream in(path);
  std::string line;
  std::string out;
  while (std::getline(in, line)) {
    std::stringstream fields(line);
    std::string field;
    int col = 0;
    while (std::getline(fields, field, ',')) {
      if (col != 5) {
        out += field;
        out += '|';
      }
      ++col;
    }
    out += '\n';
  }
  return out;
}

}  // namespace

TEST_CASE("synth is deterministic per seed and honors zero noise") {
  auto dir = workspace();
  const std::string first = (dir / "s1").string();
  const std::string second = (dir / "s2").string();
  REQUIRE(run("synth --n 20 --p 8 --seed 7 --out " + first) == 0);
  REQUIRE(run("synth --n 20 --p 8 --seed 7 --out " + second) == 0);
  CHECK(ordreg::file_fnv1a64(first + ".data.csv") == ordreg::file_fnv1a64(second + ".data.csv"));
  CHECK(ordreg::file_fnv1a64(first + ".coef.csv") == ordreg::file_fnv1a64(second + ".coef.csv"));

  const std::string different = (dir / "s3").string();
  REQUIRE(run("synth --n 20 --p 8 --seed 8 --out " + different) == 0);
  CHECK(ordreg::file_fnv1a64(first + ".data.csv") != ordreg::file_fnv1a64(different + ".data.csv"));

  const std::string clean = (dir / "s0").string();
  REQUIRE(run("synth --n 10 --p 4 --noise-var 0 --seed 2 --out " + clean) == 0);
  auto d = ordreg::load_dataset_csv<double>(clean + ".data.csv");
  auto coef = ordreg::read_coefficients_csv<double>(clean + ".coef.csv");
  CHECK((d.b - d.a * coef).lpNorm<Eigen::Infinity>() == 0.0);

  json manifest = ordreg::read_json(clean + ".manifest.json");
  CHECK(manifest.at("seeds").at("synth") == 2);
  CHECK(manifest.at("dataset").at("n") == 10);
  CHECK(manifest.at("dataset").at("p") == 4);
}

TEST_CASE("lambda writes the sequence CSV and flags non-monotone raw output") {
  auto dir = workspace();
  const std::string out = (dir / "seq.csv").string();
  REQUIRE(run("lambda --p 200 --q 0.4 --mode n=p --length 100 --out " + out) == 0);
  std::ifstream in(out);
  std::string header;
  std::getline(in, header);
  CHECK(header == "k,lambda_bh,lambda");
  double prev = 1e300;
  std::string line;
  int rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    const auto second_comma = line.find(',', line.find(',') + 1);
    const double lam = std::stod(line.substr(second_comma + 1));
    CHECK(lam <= prev);
    prev = lam;
  }
  CHECK(rows == 100);

  const std::string warn_file = (dir / "warn.txt").string();
  const std::string nonmono = (dir / "nonmono.csv").string();
  REQUIRE(run("lambda --p 5000 --q 0.055 --mode n=p --length 2500 --no-clip --out " + nonmono, warn_file) ==
          0);
  CHECK(slurp(warn_file).find("non-monotone") != std::string::npos);

  // default length must stay within the mode's admissible range
  const std::string warn_default = (dir / "warn_default.txt").string();
  const std::string nonmono_default = (dir / "nonmono_default.csv").string();
  REQUIRE(run("lambda --p 5000 --q 0.055 --no-clip --out " + nonmono_default, warn_default) == 0);
  CHECK(slurp(warn_default).find("non-monotone") != std::string::npos);

  const std::string tiny = (dir / "tiny.csv").string();
  REQUIRE(run("lambda --p 3 --q 0.5 --length 1 --out " + tiny) == 0);
  std::ifstream tin(tiny);
  std::string tline;
  int tiny_rows = 0;
  while (std::getline(tin, tline)) {
    ++tiny_rows;
  }
  CHECK(tiny_rows == 2);  // header + one row

  // degenerate denominator surfaces as a nonzero exit with an error payload
  const std::string err_file = (dir / "err.txt").string();
  CHECK(run("lambda --p 10 --q 0.4 --mode n=p --length 9 --out " + (dir / "bad.csv").string(), err_file) !=
        0);
  CHECK(slurp(err_file).find("DegenerateDenominator") != std::string::npos);
}

TEST_CASE("fit subcommand end to end") {
  auto dir = workspace();
  const std::string prefix = (dir / "fitdata").string();
  REQUIRE(run("synth --n 40 --p 25 --seed 3 --out " + prefix) == 0);
  const std::string data = prefix + ".data.csv";

  SUBCASE("ordered ridge converges and writes all artifacts") {
    const std::string trace = (dir / "ol2.trace.csv").string();
    const std::string result = (dir / "ol2.result.json").string();
    REQUIRE(run("fit --data " + data + " --penalty ol2 --q 0.4 --rho 1 --alpha 1 --trace-out " + trace +
                " --result-out " + result) == 0);
    json r = ordreg::read_json(result);
    CHECK(r.at("converged") == true);
    CHECK(r.at("nonzero_count") == 25);
    auto coef = ordreg::read_coefficients_csv<double>(r.at("coefficients_path").get<std::string>());
    CHECK(coef.size() == 25);
    std::ifstream tin(trace);
    std::string header;
    std::getline(tin, header);
    CHECK(header == "iter,r_norm,s_norm,eps_pri,eps_dual,objective");
    json manifest = ordreg::read_json(result + ".manifest.json");
    CHECK(manifest.at("config").at("penalty") == "ol2");
    CHECK(manifest.at("config").at("rho") == 1.0);
  }
  SUBCASE("lasso picks 0.1 lambda_max automatically and echoes it") {
    const std::string trace = (dir / "lasso.trace.csv").string();
    const std::string result = (dir / "lasso.result.json").string();
    REQUIRE(run("fit --data " + data + " --penalty lasso --trace-out " + trace + " --result-out " + result) ==
            0);
    json r = ordreg::read_json(result);
    const std::string spec = r.at("lambda_spec").get<std::string>();
    CHECK(spec.find("0.1*lambda_max") != std::string::npos);
    json manifest = ordreg::read_json(result + ".manifest.json");
    CHECK(manifest.at("config").at("lambda_spec").get<std::string>().find("lasso") != std::string::npos);
  }
  SUBCASE("hitting max_iter reports converged=false but exits 0") {
    const std::string trace = (dir / "cap.trace.csv").string();
    const std::string result = (dir / "cap.result.json").string();
    REQUIRE(run("fit --data " + data + " --penalty ol2 --q 0.4 --max-iter 1 --trace-out " + trace +
                " --result-out " + result) == 0);
    json r = ordreg::read_json(result);
    CHECK(r.at("converged") == false);
    CHECK(r.at("iterations") == 1);
  }
  SUBCASE("missing dataset exits nonzero with a machine-readable error") {
    const std::string err_file = (dir / "fiterr.txt").string();
    CHECK(run("fit --data /nonexistent.csv --penalty ol2 --trace-out x --result-out y", err_file) != 0);
    json err = json::parse(slurp(err_file));
    CHECK(err.at("error") == "IoError");
  }
}

TEST_CASE("eval counts sign disagreements with zero coefficients") {
  auto dir = workspace();
  ordreg::Dataset<double> d;
  d.a = ordreg::Matrix<double>::Identity(5, 5);
  d.b.resize(5);
  d.b << -1, 1, -1, -1, 1;
  const std::string data = (dir / "eval.libsvm").string();
  ordreg::write_libsvm(data, d);

  ordreg::Vector<double> zero = ordreg::Vector<double>::Zero(5);
  const std::string coef = (dir / "zero.coef.csv").string();
  ordreg::write_coefficients_csv(coef, zero);
  json result{{"converged", true},      {"iterations", 1},     {"wall_time_s", 0.0},
              {"nonzero_count", 0},     {"lambda_spec", "manual"}, {"coefficients_path", coef}};
  const std::string result_path = (dir / "zero.result.json").string();
  ordreg::write_json(result_path, result);

  const std::string metrics = (dir / "metrics.json").string();
  REQUIRE(run("eval --data " + data + " --p-override 5 --result " + result_path + " --metrics-out " +
              metrics) == 0);
  json m = ordreg::read_json(metrics);
  CHECK(m.at("misclassified") == 3);
  CHECK(m.at("n_test") == 5);
}

TEST_CASE("sweep output does not depend on the parallelism degree") {
  auto dir = workspace();
  ordreg::SynthSpec<double> spec;
  spec.n = 40;
  spec.p = 30;
  spec.seed = 19;
  auto synth = ordreg::generate_synthetic(spec);
  for (ordreg::Index i = 0; i < synth.data.n(); ++i) {
    synth.data.b[i] = synth.data.b[i] < 0 ? -1.0 : 1.0;
  }
  const std::string data = (dir / "sweep.libsvm").string();
  ordreg::write_libsvm(data, synth.data);

  const std::string serial = (dir / "serial.csv").string();
  const std::string parallel = (dir / "parallel.csv").string();
  const std::string common = " --train-n 26 --split-seed 4 --q-grid 0.2 0.4 --alpha-en 0.2 --out ";
  REQUIRE(run("sweep --data " + data + common + serial + " --parallel 1") == 0);
  REQUIRE(run("sweep --data " + data + common + parallel + " --parallel 4") == 0);
  CHECK(sweep_without_time(serial) == sweep_without_time(parallel));

  // 2 q values x 3 methods + 3 average rows + header
  std::ifstream in(serial);
  int rows = 0;
  std::string line;
  while (std::getline(in, line)) {
    ++rows;
  }
  CHECK(rows == 1 + 6 + 3);
}

TEST_CASE("re-running the fit command from its manifest reproduces the outputs") {
  auto dir = workspace();
  const std::string prefix = (dir / "rerun").string();
  REQUIRE(run("synth --n 30 --p 20 --seed 11 --out " + prefix) == 0);
  const std::string trace1 = (dir / "r1.trace.csv").string();
  const std::string result1 = (dir / "r1.result.json").string();
  REQUIRE(run("fit --data " + prefix + ".data.csv --penalty oenet --q 0.3 --alpha-en 0.2 --trace-out " +
              trace1 + " --result-out " + result1) == 0);

  json manifest = ordreg::read_json(result1 + ".manifest.json");
  std::vector<std::string> command = manifest.at("command").get<std::vector<std::string>>();
  const std::string trace2 = (dir / "r2.trace.csv").string();
  const std::string result2 = (dir / "r2.result.json").string();
  std::string repeat;
  for (std::size_t i = 1; i < command.size(); ++i) {
    std::string word = command[i];
    if (command[i - 1] == "--trace-out") {
      word = trace2;
    } else if (command[i - 1] == "--result-out") {
      word = result2;
    }
    repeat += word + " ";
  }
  REQUIRE(run(repeat) == 0);

  CHECK(ordreg::file_fnv1a64(trace1) == ordreg::file_fnv1a64(trace2));
  CHECK(ordreg::file_fnv1a64(result1 + ".coef.csv") == ordreg::file_fnv1a64(result2 + ".coef.csv"));
  json a = ordreg::read_json(result1);
  json b = ordreg::read_json(result2);
  a.erase("wall_time_s");
  b.erase("wall_time_s");
  a.erase("coefficients_path");
  b.erase("coefficients_path");
  CHECK(a == b);
}
