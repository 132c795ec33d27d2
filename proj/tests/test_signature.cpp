#include "doctest.h"
#include "fixtures.hpp"
#include "stratoforest/signature.hpp"

using namespace stratoforest;

TEST_CASE("generic counts match brute force over matching pairs") {
  CHECK_THROWS(enumerate_generic(1));
  for (int n : {2, 3, 4}) {
    INFO("n = " << n);
    CHECK(static_cast<int>(enumerate_generic(n).size()) == fixtures::brute_generic_count(n));
  }
  CHECK(enumerate_generic(2).size() == 4);
  CHECK(enumerate_generic(3).size() == 22);
  CHECK(enumerate_generic(4).size() == 140);
}

TEST_CASE("noncrossing matchings agree with filtered brute force") {
  for (int m = 1; m <= 5; ++m) {
    std::vector<int> pts;
    for (int k = 0; k < 2 * m; ++k) pts.push_back(3 * k + 1);
    std::set<std::vector<Chord>> brute, fast;
    for (auto x : fixtures::all_matchings(pts))
      if (fixtures::is_noncrossing(x)) {
        std::sort(x.begin(), x.end());
        brute.insert(x);
      }
    for (auto x : noncrossing_matchings(pts)) {
      std::sort(x.begin(), x.end());
      fast.insert(x);
    }
    CHECK(brute == fast);
  }
}

TEST_CASE("chord interleaving") {
  CHECK(chords_cross({0, 6}, {3, 9}));
  CHECK_FALSE(chords_cross({0, 6}, {7, 9}));
  CHECK_FALSE(chords_cross({0, 6}, {0, 3}));
  for (int a = 0; a < 12; ++a)
    for (int b = a + 1; b < 12; ++b)
      for (int c = 0; c < 12; ++c)
        for (int d = c + 1; d < 12; ++d) CHECK(chords_cross({a, b}, {c, d}) == fixtures::interleave({a, b}, {c, d}));
}

TEST_CASE("make_generic enforces the crossing bijection") {
  CHECK(make_generic(2, {{0, 2}, {4, 6}}, {{1, 3}, {5, 7}}).has_value());
  CHECK(make_generic(2, {{0, 2}, {4, 6}}, {{3, 5}, {1, 7}}).has_value());
  CHECK(make_generic(2, {{0, 6}, {2, 4}}, {{1, 3}, {5, 7}}).has_value());
  CHECK_FALSE(make_generic(3, {{0, 2}, {4, 10}, {6, 8}}, {{1, 7}, {3, 5}, {9, 11}}).has_value());
  CHECK_FALSE(make_generic(1, {{0, 2}}, {{1, 3}}) == std::nullopt);
}

TEST_CASE("generic round trip and codimension") {
  for (const auto& g : enumerate_generic(3)) {
    Signature s = to_signature(g);
    CHECK(codimension(s) == 0);
    CHECK(is_generic(s));
    auto back = to_generic(s);
    REQUIRE(back.has_value());
    CHECK(to_signature(*back) == s);
    CHECK(decode(s.encode()) == s);
  }
}

TEST_CASE("hand-built z^2 - 1 drawing validates with codimension 1") {
  Signature s = fixtures::z2_minus_1();
  CHECK(codimension(s) == 1);
  CHECK(critical_count(s) == 1);
  CHECK_FALSE(is_generic(s));
  auto red = components(s, Color::Red);
  REQUIRE(red.size() == 1);
  CHECK(red[0] == std::vector<int>{0, 2, 4, 6});
  CHECK(components(s, Color::Blue).size() == 2);
}

TEST_CASE("validation rejects broken drawings") {
  using fixtures::Node;
  // Swapping two slots at the critical vertex breaks planarity.
  std::vector<Node> inner = {
      {VertexKind::Critical, Color::Red, {9, 10, 2, 6}},
      {VertexKind::Root, Color::Red, {0, 1, 8, 7}},
      {VertexKind::Root, Color::Red, {8, 3, 4, 5}},
  };
  CHECK_THROWS_AS(fixtures::from_adjacency(2, inner, {9, 9, 8, 10, 10, 10, 8, 9}), SignatureError);
  // A root whose edges do not alternate in color.
  std::vector<Node> bad = {
      {VertexKind::Root, Color::Red, {0, 2, 1, 7}},
      {VertexKind::Root, Color::Red, {3, 4, 5, 6}},
  };
  CHECK_THROWS_AS(fixtures::from_adjacency(2, bad, {8, 8, 8, 9, 9, 9, 9, 8}), SignatureError);
}

TEST_CASE("rotation action") {
  auto gens = enumerate_generic_signatures(3);
  std::set<Signature> all(gens.begin(), gens.end());
  for (const auto& s : gens) {
    Signature r = rotate(s, 1);
    CHECK(all.count(r) == 1);
    CHECK(rotate(s, 12) == s);
    CHECK(rotate(rotate(s, 5), 7) == s);
  }
  Signature z = fixtures::z2_minus_1();
  CHECK(rotate(z, 4) == z);
  CHECK_FALSE(rotate(z, 2) == z);
  CHECK_FALSE(rotate(z, 1) == z);
  CHECK(critical_count(rotate(z, 1)) == 1);
}

TEST_CASE("orbit sizes at n = 4") {
  auto orbits = orbit_decompose(enumerate_generic_signatures(4));
  std::map<int, int> sizes;
  for (const auto& o : orbits) ++sizes[o.size];
  CHECK(sizes == std::map<int, int>{{4, 1}, {8, 3}, {16, 7}});
}

TEST_CASE("faces lie over quadrants") {
  Signature s = to_signature(enumerate_generic(2)[0]);
  auto fs = faces(s);
  const int V = static_cast<int>(s.vertices().size());
  const int E = static_cast<int>(s.edges().size()) + s.leaf_count();
  CHECK(static_cast<int>(fs.size()) == 1 - V + E);
  std::map<int, int> per;
  for (const auto& f : fs) ++per[face_quadrant(s, f)];
  CHECK(per.count(-1) == 0);
  CHECK(per.size() == 4);
}
