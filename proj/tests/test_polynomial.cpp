#include <algorithm>
#include <numbers>
#include <random>

#include "doctest.h"
#include "stratoforest/homotopy.hpp"
#include "stratoforest/polynomial.hpp"

using namespace stratoforest;

namespace {

std::vector<cplx> sorted(std::vector<cplx> v) {
  std::sort(v.begin(), v.end(), [](cplx a, cplx b) { return std::pair(a.real(), a.imag()) < std::pair(b.real(), b.imag()); });
  return v;
}

bool near(cplx a, cplx b, double tol = 1e-9) { return std::abs(a - b) <= tol * (1 + std::abs(b)); }

}  // namespace

TEST_CASE("parsing and the Tschirnhausen shift") {
  Polynomial p = Polynomial::parse("1,0,-1");
  CHECK(p.n == 2);
  REQUIRE(p.coeffs.size() == 1);
  CHECK(p.coeffs[0] == cplx(-1, 0));
  Polynomial cube = Polynomial::parse("1,3,3,1");  // (z+1)^3
  CHECK(cube.n == 3);
  CHECK(std::abs(cube.coeffs[0]) < 1e-14);
  CHECK(std::abs(cube.coeffs[1]) < 1e-14);
  Polynomial c = Polynomial::parse("1, 0, -1-i");
  CHECK(c.coeffs[0] == cplx(-1, -1));
  Polynomial j = Polynomial::parse(R"({"n": 3, "coeffs": [[1, 2], [-3, 0]]})");
  CHECK(j.n == 3);
  CHECK(j.coeffs[0] == cplx(1, 2));
  CHECK(j.coeffs[1] == cplx(-3, 0));
  CHECK(Polynomial::parse(j.to_json()).coeffs == j.coeffs);
  CHECK_THROWS(Polynomial::parse("2,0,1"));
  CHECK_THROWS(Polynomial::parse("1,x,1"));
}

TEST_CASE("roots of z^n - 1 are the roots of unity") {
  for (int n = 2; n <= 9; ++n) {
    std::vector<cplx> c(n + 1, 0.0);
    c[0] = -1;
    c[n] = 1;
    auto got = polynomial_roots(c);
    REQUIRE(static_cast<int>(got.size()) == n);
    for (int k = 0; k < n; ++k) {
      cplx w = std::polar(1.0, 2 * std::numbers::pi * k / n);
      CHECK(std::count_if(got.begin(), got.end(), [&](cplx g) { return near(g, w); }) == 1);
    }
  }
}

TEST_CASE("random roots are recovered") {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 50; ++trial) {
    int n = 2 + trial % 7;
    std::vector<cplx> r(n);
    for (auto& x : r) x = {g(rng), g(rng)};
    std::vector<cplx> c{1.0};
    for (auto x : r) {
      std::vector<cplx> next(c.size() + 1, 0.0);
      for (std::size_t i = 0; i < c.size(); ++i) {
        next[i + 1] += c[i];
        next[i] -= x * c[i];
      }
      c = next;
    }
    auto got = polynomial_roots(c);
    for (auto x : r) {
      double best = 1e300;
      for (auto y : got) best = std::min(best, std::abs(x - y));
      CHECK(best < 1e-8);
    }
  }
}

TEST_CASE("critical values of z^3 - 3z are -2 and 2") {
  Polynomial p(3, {0.0, -3.0});
  auto v = sorted(critical_values(p));
  REQUIRE(v.size() == 2);
  CHECK(near(v[0], -2.0));
  CHECK(near(v[1], 2.0));
  auto cp = critical_points(p);
  CHECK(cp.size() == 2);
  CHECK(sigma_sequence(v).counts == std::array<int, 8>{0, 0, 0, 0, 1, 1, 0, 0});
}

TEST_CASE("z^3 + b has a double critical point with value b") {
  for (cplx b : {cplx(1, 1), cplx(-2, 0.5), cplx(0, -3)}) {
    Polynomial p(3, {b, 0.0});
    auto cp = critical_points(p);
    REQUIRE(cp.size() == 1);
    CHECK(cp[0].multiplicity == 2);
    auto v = critical_values(p);
    REQUIRE(v.size() == 2);
    CHECK(near(v[0], b));
    CHECK(near(v[1], b));
  }
}

TEST_CASE("a vanishing critical value means a repeated root") {
  CHECK_THROWS_AS(critical_values(Polynomial(2, {0.0})), DistinctRootsViolated);
  CHECK_THROWS_AS(critical_values(Polynomial(3, {2.0, -3.0})), DistinctRootsViolated);  // (z-1)^2 (z+2)
}

TEST_CASE("value classification") {
  CHECK(classify_value({1, 1}) == 0);
  CHECK(classify_value({-1, 1}) == 1);
  CHECK(classify_value({-1, -1}) == 2);
  CHECK(classify_value({1, -1}) == 3);
  CHECK(classify_value({2, 0}) == 4);
  CHECK(classify_value({-2, 0}) == 5);
  CHECK(classify_value({0, 2}) == 6);
  CHECK(classify_value({0, -2}) == 7);
  CHECK(classify_value({1, 1e-12}) == 4);
  CHECK_THROWS_AS(classify_value({1, 1e-7}), AmbiguousClassification);
  CHECK(axis_ray(4) == 0);
  CHECK(axis_ray(5) == 2);
  CHECK(axis_ray(6) == 1);
  CHECK(axis_ray(7) == 3);
  CHECK(axis_ray(0) == -1);
}

TEST_CASE("sigma sequences and generic cells") {
  SigmaSequence s = sigma_sequence({cplx(1, 1), cplx(-1, 1), cplx(3, 0)});
  CHECK(s.counts == std::array<int, 8>{1, 1, 0, 0, 1, 0, 0, 0});
  CHECK(s.dimension() == 5);
  CHECK(s.total() == 3);
  CHECK(s.to_string() == "(1,1,0,0,1,0,0,0)");
  auto cells = generic_cells(3);
  CHECK(cells.size() == 10);
  for (const auto& c : cells) {
    CHECK(c.dimension() == 4);
    CHECK(parse_cell(3, cell_name(c)) == c);
  }
  CHECK(generic_cells(4).size() == 20);
  CHECK(cell_name(parse_cell(3, "AxC")) == "AxC");
  CHECK_THROWS(parse_cell(3, "AxE"));
  CHECK_THROWS(parse_cell(3, "A"));
}
