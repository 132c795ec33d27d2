#include <algorithm>

#include "doctest.h"
#include "fixtures.hpp"
#include "stratoforest/superimpose.hpp"

using namespace stratoforest;

namespace {

std::vector<Signature> common_lower(const Signature& a, const Signature& b, int max_codim) {
  auto ca = fixtures::contraction_closure(a, max_codim);
  auto cb = fixtures::contraction_closure(b, max_codim);
  std::vector<Signature> out;
  std::set_intersection(ca.begin(), ca.end(), cb.begin(), cb.end(), std::back_inserter(out));
  return out;
}

int interleaving_count(const GenericSignature& a, const GenericSignature& b, const Chord& c, bool opposite) {
  Color own = leaf_color(c.first);
  std::set<Chord> seen;
  for (const auto* g : {&a, &b})
    for (const auto* m : {&g->red, &g->blue})
      for (const auto& d : *m) {
        bool same = leaf_color(d.first) == own;
        if (same == opposite) continue;
        if (d != c && fixtures::interleave(c, d)) seen.insert(d);
      }
  return static_cast<int>(seen.size());
}

GenericSignature generic(int n, std::vector<Chord> red, std::vector<Chord> blue) {
  auto g = make_generic(n, std::move(red), std::move(blue));
  REQUIRE(g.has_value());
  return *g;
}

}  // namespace

TEST_CASE("one signature superimposes to itself") {
  for (const auto& g : enumerate_generic(3)) {
    auto r = common_incident({g});
    REQUIRE(r.has_value());
    CHECK(*r == to_signature(g));
    auto twice = common_incident({g, g});
    REQUIRE(twice.has_value());
    CHECK(*twice == to_signature(g));
  }
}

TEST_CASE("crossing counts match interleaving") {
  auto gens = enumerate_generic(3);
  for (std::size_t i = 0; i < gens.size(); i += 3)
    for (std::size_t j = 1; j < gens.size(); j += 4) {
      auto arr = superimpose({gens[i], gens[j]});
      for (int d = 0; d < static_cast<int>(arr.diagonals.size()); ++d) {
        Chord c{arr.diagonals[d].a, arr.diagonals[d].b};
        CHECK(arr.opposite_crossings(d) == interleaving_count(gens[i], gens[j], c, true));
        CHECK(arr.crossings(d) == interleaving_count(gens[i], gens[j], c, true) + interleaving_count(gens[i], gens[j], c, false));
      }
    }
}

TEST_CASE("n = 2 pairs") {
  auto gens = enumerate_generic(2);
  REQUIRE(gens.size() == 4);
  int adjacent = 0, opposite = 0;
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      auto r = common_incident({gens[i], gens[j]});
      auto lower = common_lower(to_signature(gens[i]), to_signature(gens[j]), 2);
      if (r) {
        ++adjacent;
        CHECK(codimension(*r) == 1);
        CHECK(lower.size() == 1);
        CHECK(lower.front() == *r);
      } else {
        ++opposite;
        CHECK(lower.empty());
      }
    }
  CHECK(adjacent == 4);
  CHECK(opposite == 2);
}

TEST_CASE("z^2 - 1 is the superimposition of its two neighbours") {
  auto center = fixtures::z2_minus_1();
  std::vector<GenericSignature> near;
  for (const auto& g : enumerate_generic(2))
    if (fixtures::contraction_closure(to_signature(g), 1).count(center)) near.push_back(g);
  REQUIRE(near.size() == 2);
  auto r = common_incident(near);
  REQUIRE(r.has_value());
  CHECK(*r == center);
}

TEST_CASE("incompatible pairs exist at n = 3 and yield nothing") {
  int incompatible = 0;
  auto gens = enumerate_generic(3);
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      auto arr = superimpose({gens[i], gens[j]});
      int worst = 0;
      for (int d = 0; d < static_cast<int>(arr.diagonals.size()); ++d) worst = std::max(worst, arr.opposite_crossings(d));
      CHECK(compatible(arr) == (worst <= 2));
      CHECK(compatible(std::vector<GenericSignature>{gens[i], gens[j]}) == compatible(arr));
      if (!compatible(arr)) {
        ++incompatible;
        CHECK_FALSE(common_incident({gens[i], gens[j]}).has_value());
      }
    }
  CHECK(incompatible > 0);
}

TEST_CASE("existence agrees with the contraction closures for every n <= 3 pair") {
  for (int n : {2, 3}) {
    auto gens = enumerate_generic(n);
    int found = 0;
    for (std::size_t i = 0; i < gens.size(); ++i)
      for (std::size_t j = i + 1; j < gens.size(); ++j) {
        auto a = to_signature(gens[i]), b = to_signature(gens[j]);
        auto lower = common_lower(a, b, 2 * (n - 1));
        auto r = common_incident({gens[i], gens[j]});
        CHECK(r.has_value() == !lower.empty());
        if (r) {
          ++found;
          CHECK(std::binary_search(lower.begin(), lower.end(), *r));
          for (std::uint64_t seed : {1ull, 99ull}) CHECK(common_incident({gens[i], gens[j]}, seed) == r);
        }
      }
    CHECK(found > 0);
  }
}

TEST_CASE("hexagon pair gives the H-shaped graph") {
  auto expected = fixtures::hexagon_graph();
  CHECK(codimension(expected) == 4);
  for (auto [a, b] : {fixtures::hexagon_pair(), fixtures::hexagon_pair_swapped()}) {
    auto arr = superimpose({a, b});
    CHECK(compatible(arr));
    int reds = 0, blues = 0, quads = 0;
    for (std::size_t r = 0; r < arr.polygons.size(); ++r) {
      (arr.polygons[r].color == Color::Red ? reds : blues)++;
      for (std::size_t q = 0; q < arr.polygons.size(); ++q)
        if (arr.polygons[r].color == Color::Red && arr.polygons[q].color == Color::Blue)
          quads += classify_intersection(arr, static_cast<int>(r), static_cast<int>(q)) == OverlapPattern::Quadrilateral;
    }
    CHECK(reds == 1);
    CHECK(blues == 1);
    CHECK(quads == 1);
    for (std::uint64_t seed : {0ull, 3ull, 17ull}) {
      auto r = common_incident({a, b}, seed);
      REQUIRE(r.has_value());
      CHECK(*r == expected);
    }
    CHECK(fixtures::contraction_closure(to_signature(a), 4).count(expected));
    CHECK(fixtures::contraction_closure(to_signature(b), 4).count(expected));
  }
}

TEST_CASE("concurrent crossings classify as a quadruple point") {
  auto a = generic(5, {{0, 10}, {2, 4}, {12, 14}, {6, 8}, {16, 18}}, {{5, 15}, {7, 9}, {17, 19}, {1, 3}, {11, 13}});
  auto b = generic(5, {{4, 14}, {0, 2}, {10, 12}, {6, 8}, {16, 18}}, {{9, 19}, {5, 7}, {15, 17}, {1, 3}, {11, 13}});
  auto arr = superimpose({a, b});
  CHECK(compatible(arr));
  CHECK(arr.polygons.size() == 4);
  for (std::size_t r = 0; r < arr.polygons.size(); ++r)
    for (std::size_t q = 0; q < arr.polygons.size(); ++q)
      if (arr.polygons[r].color == Color::Red && arr.polygons[q].color == Color::Blue)
        CHECK(classify_intersection(arr, static_cast<int>(r), static_cast<int>(q)) == OverlapPattern::QuadruplePoint);
  auto s = common_incident({a, b});
  REQUIRE(s.has_value());
  CHECK(codimension(*s) == 4);
  CHECK(common_incident({a, b}, 4) == s);
  CHECK(fixtures::contraction_closure(to_signature(a), 4).count(*s));
  CHECK(fixtures::contraction_closure(to_signature(b), 4).count(*s));
}

TEST_CASE("overlap pattern names") {
  CHECK(to_string(OverlapPattern::Disjoint) == "disjoint");
  CHECK(to_string(OverlapPattern::Quadrilateral) == "quadrilateral");
  CHECK(to_string(OverlapPattern::DoubleTriangle) == "double-triangle");
  CHECK(to_string(OverlapPattern::QuadruplePoint) == "quadruple-point");
  CHECK(to_string(OverlapPattern::NotAllowed) == "not-allowed");
}

TEST_CASE("arrangement output") {
  auto [a, b] = fixtures::hexagon_pair();
  auto arr = superimpose({a, b});
  auto g = canonical_graph(arr);
  CHECK(g.failure.empty());
  auto svg = arrangement_svg(arr, &g);
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("#c9a6e0") != std::string::npos);
  auto json = arrangement_json(arr);
  CHECK(json.find("\"diagonals\"") != std::string::npos);
  CHECK(json.find("\"polygons\"") != std::string::npos);
}
