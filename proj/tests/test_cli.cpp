#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#include "doctest.h"

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  Run r;
  std::string cmd = std::string(STRATOFOREST_CLI) + " " + args + " 2>&1";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::array<char, 4096> buf{};
  std::size_t k;
  while ((k = std::fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), k);
  int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_CASE("cli enumerate count") {
  auto r = run("enumerate --n 4 --codim 0 --count");
  CHECK(r.code == 0);
  CHECK(r.out.find("140") != std::string::npos);
}

TEST_CASE("cli nerve homology") {
  auto r = run("nerve --n 2 --homology");
  CHECK(r.code == 0);
  CHECK(r.out.find("H0=Z") != std::string::npos);
  CHECK(r.out.find("H1=Z") != std::string::npos);
}

TEST_CASE("cli usage errors exit with 2") {
  CHECK(run("enumerate --n").code == 2);
  CHECK(run("no-such-command").code == 2);
}

TEST_CASE("cli module errors exit with 1") {
  auto r = run("--json-errors trace --coeffs 1,0,0");
  CHECK(r.code == 1);
  CHECK(r.out.find("{") != std::string::npos);
}

TEST_CASE("cli output is reproducible") {
  for (const char* args : {"poset --n 2 --codim 2 --dot", "trace --coeffs 1,0,-1", "orbits --n 3"}) {
    auto a = run(args), b = run(args);
    CHECK(a.code == 0);
    CHECK_FALSE(a.out.empty());
    CHECK(a.out == b.out);
  }
}
