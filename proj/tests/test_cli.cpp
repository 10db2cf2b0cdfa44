#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(PARTLAW_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  while (fgets(buf.data(), buf.size(), pipe) != nullptr) out += buf.data();
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::size_t lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST_CASE("sample prints JSON lines") {
  const Run r = run("sample --measure runiform --n 10 --m 3 --count 4 --seed 1");
  CHECK(r.code == 0);
  CHECK(lines(r.out) == 4);
  CHECK(r.out.find("\"parts\":[") != std::string::npos);
  CHECK(run("sample --measure runiform --n 10 --m 3 --count 4 --seed 1").out == r.out);
  CHECK(run("sample --measure rjack --n 10 --m 3 --alpha 2 --exact-length --count 2 --seed 1").code == 0);
}

TEST_CASE("spectrum prints CSV") {
  const Run r = run("spectrum --measure plancherel --n 20 --count 3 --seed 2 --alpha 2");
  CHECK(r.code == 0);
  CHECK(r.out.rfind("index,n,m,lambda\n", 0) == 0);
  CHECK(lines(r.out) == 4);
}

TEST_CASE("experiment writes its output") {
  const auto path = (std::filesystem::temp_directory_path() / "partlaw_cli_test.csv").string();
  const Run r = run("experiment --theorem t1 --n 200 --m 2 --alpha 2 --samples 30 --seed 3 --out " + path);
  CHECK(r.code == 0);
  std::ifstream in(path);
  std::string header;
  std::getline(in, header);
  CHECK(header == "index,normalized_value,ecdf,target_cdf");
  CHECK(std::filesystem::exists(path + ".meta.json"));
  CHECK(std::filesystem::exists(path + ".bins.csv"));
}

TEST_CASE("limit-cdf tables") {
  const Run r = run("limit-cdf --law mu --m 2 --alpha 2 --from 0.5 --to 1 --points 3");
  CHECK(r.code == 0);
  CHECK(lines(r.out) == 4);
  CHECK(r.out.find("0.75,0.70710678118654") != std::string::npos);
  CHECK(run("limit-cdf --law tw2 --from -3 --to 3 --points 7").code == 0);
  CHECK(run("limit-cdf --law gumbel --alpha 2 --from -3 --to 3 --points 7").code == 0);
  const Run mc = run("limit-cdf --law mu --m 4 --alpha 1 --from 0.1 --to 0.5 --points 2");
  CHECK(mc.out.find("cdf_standard_error") != std::string::npos);
}

TEST_CASE("check suites pass") {
  for (const char* suite : {"identities", "pmf", "counts", "profiles"}) {
    const Run r = run(std::string("check --suite ") + suite);
    CHECK(r.code == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);
  }
}

TEST_CASE("exit codes") {
  CHECK(run("experiment --theorem t3 --n 100 --m 2 --samples 5 --seed 1 --out /tmp/x.csv --bins 0").code == 0);
  CHECK(run("experiment --theorem t1 --n 100 --samples 5 --seed 1 --out /tmp/x.csv").code == 2);
  CHECK(run("experiment --theorem t4 --n 100 --alpha 2 --samples 5 --seed 1 --out /tmp/x.csv").code == 2);
  CHECK(run("sample --measure runiform --n 3 --m 4 --exact-length --count 1 --seed 1").code == 2);
  CHECK(run("limit-cdf --law gamma --from 0 --to 1 --points 3").code == 2);
  CHECK(run("bogus").code == 2);
  CHECK(run("check --suite nope").code == 2);
  CHECK(run("sample --measure rjack --n 3000 --m 12 --alpha 1 --count 1 --seed 1").code == 3);
  CHECK(run("experiment --theorem t1 --n 50 --m 2 --samples 5 --seed 1 --out /nonexistent-dir/x.csv").code == 3);
}
