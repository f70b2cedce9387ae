#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#ifndef ARROWHEAD_CLI
#error "ARROWHEAD_CLI must name the built executable"
#endif

namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  const std::string command = env + " '" + std::string(ARROWHEAD_CLI) + "' " + args + " 2>/dev/null";
  Run result;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buffer[4096];
  std::size_t n;
  while ((n = fread(buffer, 1, sizeof buffer, pipe)) > 0) result.out.append(buffer, n);
  const int status = pclose(pipe);
  result.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::size_t line_count(const std::string& s) {
  std::size_t n = 0;
  for (char c : s) n += c == '\n';
  return n;
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("arrowhead_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_CASE("build writes the vertex CSV") {
  TempDir dir;
  const fs::path out = dir.path / "v3.csv";
  const Run r = run("build --level 3 --out '" + out.string() + "'");
  CHECK(r.code == 0);
  const std::string csv = slurp(out);
  CHECK(line_count(csv) == 29);
  CHECK(csv.rfind("chain_index,x,y,arc_coordinate\n", 0) == 0);
  std::size_t leftovers = 0;
  for (const auto& entry : fs::directory_iterator(dir.path)) leftovers += entry.path() != out;
  CHECK(leftovers == 0);
}

TEST_CASE("spectrum at level 2 lists 1 and 3 with multiplicity 3") {
  const Run r = run("spectrum --level 2 --method exact");
  CHECK(r.code == 0);
  std::istringstream in(r.out);
  std::string header, first, second;
  std::getline(in, header);
  std::getline(in, first);
  std::getline(in, second);
  CHECK(header == "level,k,eigenvalue,multiplicity");
  CHECK(std::stod(first.substr(4)) == doctest::Approx(1.0));
  CHECK(first.substr(first.size() - 2) == ",3");
  CHECK(std::stod(second.substr(4)) == doctest::Approx(3.0));
  CHECK(second.substr(second.size() - 2) == ",3");
}

TEST_CASE("decimate up prints three children to 12 digits") {
  const Run r = run("decimate --up 1");
  CHECK(r.code == 0);
  CHECK(r.out == "parent,branch,child\n1,0,0.120614758428\n1,1,3.53208888624\n1,2,2.34729635533\n");
  const Run down = run("decimate --down 0.120614758428");
  CHECK(down.code == 0);
  CHECK(down.out.rfind("child,parent\n0.120614758428,0.999999999999", 0) == 0);
  CHECK(run("decimate --up 5").code == 1);
  CHECK(run("decimate").code == 1);
}

TEST_CASE("render") {
  TempDir dir;
  const fs::path out = dir.path / "c.svg";
  CHECK(run("render --level 4 --out '" + out.string() + "'").code == 0);
  const std::string svg = slurp(out);
  const auto start = svg.find("points=\"");
  REQUIRE(start != std::string::npos);
  const std::string pts = svg.substr(start + 8, svg.find('"', start + 8) - start - 8);
  std::size_t commas = 0;
  for (char c : pts) commas += c == ',';
  CHECK(commas == 82);

  const Run eigen = run("render --level 2 --eigen --eigen-block 0 --eigen-mode 1");
  CHECK(eigen.code == 0);
  std::size_t circles = 0;
  for (auto pos = eigen.out.find("<circle"); pos != std::string::npos; pos = eigen.out.find("<circle", pos + 1)) ++circles;
  CHECK(circles == 10);
}

TEST_CASE("other subcommands") {
  const Run energy = run("energy --max-level 3 --scheme raw");
  CHECK(energy.code == 0);
  CHECK(line_count(energy.out) == 4);
  const Run harmonic = run("harmonic --level 2 --boundary 0,1,2,3");
  CHECK(harmonic.code == 0);
  CHECK(line_count(harmonic.out) == 11);
  const Run laplacian = run("laplacian --level 3 --function quadratic");
  CHECK(laplacian.code == 0);
  CHECK(laplacian.out.find("\n2,0.037037037037037035,-2.66666666") != std::string::npos);
  const Run counting = run("counting --max-level 5 --method exact");
  CHECK(counting.code == 0);
  CHECK(counting.out.find(",240,geometric\n") != std::string::npos);
}

TEST_CASE("usage errors exit 1") {
  CHECK(run("").code == 1);
  CHECK(run("frobnicate").code == 1);
  CHECK(run("build --level 3 --bogus").code == 1);
  CHECK(run("spectrum --method guess").code == 1);
  CHECK(run("laplacian --weights 0.5,0.5,0.5").code == 1);
  CHECK(run("build --level 3 --out /nonexistent-dir/v.csv").code == 1);
  CHECK(run("build --level 13").code == 1);
  CHECK(run("report --depth 3").code == 1);
}

TEST_CASE("depth limit override") {
  CHECK(run("build --level 4", "ARROWHEAD_DEPTH_LIMIT=3").code == 1);
  CHECK(run("build --level 3", "ARROWHEAD_DEPTH_LIMIT=3").code == 0);
  CHECK(run("build --level 3", "ARROWHEAD_DEPTH_LIMIT=abc").code == 1);
}

TEST_CASE("report is byte-identical across runs") {
  TempDir dir;
  const fs::path a = dir.path / "a.json";
  const fs::path b = dir.path / "b.json";
  CHECK(run("report --out '" + a.string() + "'").code == 0);
  CHECK(run("report --out '" + b.string() + "'").code == 0);
  const std::string first = slurp(a);
  CHECK(first.size() > 1000);
  CHECK(first == slurp(b));
  const Run text = run("report --format text");
  CHECK(text.out.find("energy_ratio_raw: 0.33333333333333331 pass") != std::string::npos);
  CHECK(text.out.find("dirichlet_count_level_4: 78 pass") != std::string::npos);
}
