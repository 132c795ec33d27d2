#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "stratoforest/polynomial.hpp"
#include "stratoforest/tracer.hpp"
#include "stratoforest/whitehead.hpp"

using namespace stratoforest;

namespace {

using Pairing = std::vector<std::pair<int, int>>;

std::set<Pairing> brute_pairings(int m) {
  std::vector<int> slots;
  for (int i = 0; i < 2 * m; ++i) slots.push_back(i);
  std::set<Pairing> out;
  for (auto x : fixtures::all_matchings(slots))
    if (fixtures::is_noncrossing(x)) {
      std::sort(x.begin(), x.end());
      out.insert(x);
    }
  return out;
}

Signature star(int m) {
  std::string coeffs = "1";
  for (int k = 1; k < m; ++k) coeffs += ",0";
  return trace_drawing(Polynomial::parse(coeffs + ",-1"));
}

}  // namespace

TEST_CASE("catalan numbers") {
  CHECK(catalan(0) == 1);
  CHECK(catalan(2) == 2);
  CHECK(catalan(3) == 5);
  CHECK(catalan(5) == 42);
  for (int m = 1; m <= 6; ++m) CHECK(static_cast<long long>(noncrossing_pairings(m).size()) == catalan(m));
}

TEST_CASE("complete smoothings at a valency-2m vertex are the noncrossing pairings") {
  for (int m = 2; m <= 5; ++m) {
    INFO("m = " << m);
    Signature s = star(m);
    REQUIRE(critical_count(s) == 1);
    std::set<Pairing> got;
    for (const auto& [mv, t] : enumerate_smoothings(s))
      if (mv.kind == MoveKind::CompleteSmooth) {
        Pairing p = mv.pairing;
        for (auto& [a, b] : p)
          if (a > b) std::swap(a, b);
        std::sort(p.begin(), p.end());
        got.insert(p);
        CHECK(codimension(t) == 0);
      }
    CHECK(static_cast<long long>(got.size()) == catalan(m));
    CHECK(got == brute_pairings(m));
  }
}

TEST_CASE("smoothing and contraction are inverse at n = 3") {
  for (const auto& s : enumerate_all(3, 1)) {
    if (codimension(s) != 1) continue;
    auto ups = enumerate_smoothings(s);
    CHECK_FALSE(ups.empty());
    for (const auto& [mv, t] : ups) {
      CHECK(codimension(t) == 0);
      bool back = false;
      for (const auto& [mv2, u] : enumerate_contractions(t)) back = back || u == s;
      CHECK(back);
    }
  }
}

TEST_CASE("contractions raise codimension and apply reproduces them") {
  for (const auto& s : enumerate_generic_signatures(3)) {
    auto downs = enumerate_contractions(s);
    CHECK_FALSE(downs.empty());
    for (const auto& [mv, t] : downs) {
      CHECK(codimension(t) > codimension(s));
      CHECK(apply(s, mv) == t);
    }
  }
}

TEST_CASE("bad move sites are rejected") {
  Signature s = fixtures::z2_minus_1();
  Move mv;
  mv.kind = MoveKind::CompleteSmooth;
  mv.vertex = 0;  // a leaf
  mv.pairing = {{0, 1}};
  CHECK_THROWS_AS(apply(s, mv), MoveError);
  Move face;
  face.kind = MoveKind::CompleteContract;
  face.face = 1000;
  face.half_edges = {0, 2};
  CHECK_THROWS_AS(apply(s, face), MoveError);
}
