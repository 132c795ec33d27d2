#include "doctest.h"
#include "stratoforest/homotopy.hpp"

using namespace stratoforest;

TEST_CASE("cover degrees") {
  CHECK(cover_degree(2) == 1);
  CHECK(cover_degree(3) == 3);
  CHECK(cover_degree(4) == 16);
  CHECK(cover_degree(5) == 125);
  CHECK_THROWS(cover_degree(1));
}

TEST_CASE("power sums of critical values") {
  auto s = critical_power_sums(Polynomial(3, {0.0, -3.0}));  // values -2, 2
  REQUIRE(s.size() == 2);
  CHECK(std::abs(s[0]) < 1e-12);
  CHECK(std::abs(s[1] - 8.0) < 1e-12);
}

TEST_CASE("sheet collection finds the whole fiber") {
  for (int n : {2, 3}) {
    FiberBase b = collect_sheets(n, 17);
    CHECK(static_cast<long long>(b.sheets.size()) == cover_degree(n));
    for (const auto& p : b.sheets) CHECK(critical_value_error(p, b.values) < 1e-8);
  }
}

TEST_CASE("solving a fiber moves every sheet") {
  FiberBase b = collect_sheets(3, 4);
  std::vector<cplx> target = {cplx(1, 1), cplx(-1, 0.5)};
  auto sols = solve_fiber(b, target);
  CHECK(sols.size() == 3);
  for (const auto& p : sols) CHECK(critical_value_error(p, target) < 1e-8);
}

TEST_CASE("survey output is deterministic") {
  FiberBase b = collect_sheets(3, 1);
  auto r1 = fiber_survey(b, parse_cell(3, "AxB"), 4, 9);
  auto r2 = fiber_survey(b, parse_cell(3, "AxB"), 4, 9);
  CHECK(r1.counts == r2.counts);
  CHECK(r1.samples == 4);
  auto csv = survey_csv({r1});
  CHECK(csv.rfind("cell,signature_hash,count\n", 0) == 0);
  CHECK(csv == survey_csv({r2}));
  for (const auto& [sig, c] : r1.counts) CHECK(signature_hash(sig).size() == 16);
}
