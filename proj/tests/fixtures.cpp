#include "fixtures.hpp"

#include <deque>
#include <map>
#include <stdexcept>

#include "stratoforest/whitehead.hpp"

namespace fixtures {

using namespace stratoforest;

Signature from_adjacency(int n, const std::vector<Node>& inner, const std::vector<int>& leaf_neighbor) {
  const int L = 4 * n;
  std::vector<Node> all;
  for (int k = 0; k < L; ++k) all.push_back(Node{VertexKind::Leaf, leaf_color(k), {leaf_neighbor[k]}});
  all.insert(all.end(), inner.begin(), inner.end());
  std::vector<Vertex> vs;
  for (int k = 0; k < L; ++k) vs.push_back(Vertex{VertexKind::Leaf, k, leaf_color(k)});
  for (const auto& x : inner) vs.push_back(Vertex{x.kind, -1, x.kind == VertexKind::Critical ? x.color : Color::Red});
  std::vector<Edge> es;
  std::map<std::pair<int, int>, int> id;
  std::vector<std::vector<int>> rot(all.size());
  for (int v = 0; v < static_cast<int>(all.size()); ++v)
    for (int w : all[v].ccw) {
      auto key = std::make_pair(std::min(v, w), std::max(v, w));
      auto it = id.find(key);
      if (it == id.end()) {
        Color c;
        if (all[v].kind == VertexKind::Leaf || all[v].kind == VertexKind::Critical)
          c = all[v].color;
        else if (all[w].kind == VertexKind::Leaf || all[w].kind == VertexKind::Critical)
          c = all[w].color;
        else
          throw std::logic_error("root-to-root edge needs an explicit color");
        it = id.emplace(key, static_cast<int>(es.size())).first;
        es.push_back(Edge{c, key.first, key.second});
      }
      rot[v].push_back(2 * it->second + (v == es[it->second].u ? 0 : 1));
    }
  return validate(Signature(n, std::move(vs), std::move(es), std::move(rot)));
}

Signature z2_minus_1() {
  const int C = 8, R1 = 9, R2 = 10;
  std::vector<Node> inner = {
      {VertexKind::Critical, Color::Red, {R1, 2, R2, 6}},
      {VertexKind::Root, Color::Red, {0, 1, C, 7}},
      {VertexKind::Root, Color::Red, {C, 3, 4, 5}},
  };
  return from_adjacency(2, inner, {R1, R1, C, R2, R2, R2, C, R1});
}

std::pair<GenericSignature, GenericSignature> hexagon_pair() {
  std::vector<Chord> blue0 = {{1, 3}, {9, 11}, {13, 19}, {5, 7}, {15, 17}};
  std::vector<Chord> blue1 = {{1, 19}, {3, 9}, {11, 13}, {5, 7}, {15, 17}};
  std::vector<Chord> red0 = {{4, 6}, {8, 14}, {16, 18}, {0, 2}, {10, 12}};
  std::vector<Chord> red1 = {{6, 8}, {14, 16}, {4, 18}, {0, 2}, {10, 12}};
  return {*make_generic(5, red0, blue0), *make_generic(5, red1, blue1)};
}

std::pair<GenericSignature, GenericSignature> hexagon_pair_swapped() {
  auto [a, b] = hexagon_pair();
  return {*make_generic(5, b.red, a.blue), *make_generic(5, a.red, b.blue)};
}

Signature hexagon_graph() {
  // X, Y blue and U, V red valency-4 vertices; R0 is the central root, R1..R4 sit on leaf edges.
  const int X = 20, Y = 21, U = 22, V = 23, R0 = 24, R1 = 25, R2 = 26, R3 = 27, R4 = 28;
  std::vector<Node> inner = {
      {VertexKind::Critical, Color::Blue, {R1, 3, R0, 19}},
      {VertexKind::Critical, Color::Blue, {R0, 9, R2, 13}},
      {VertexKind::Critical, Color::Red, {4, R3, 8, R0}},
      {VertexKind::Critical, Color::Red, {R0, 14, R4, 18}},
      {VertexKind::Root, Color::Red, {X, U, Y, V}},
      {VertexKind::Root, Color::Red, {1, 2, X, 0}},
      {VertexKind::Root, Color::Red, {Y, 10, 11, 12}},
      {VertexKind::Root, Color::Red, {5, 6, 7, U}},
      {VertexKind::Root, Color::Red, {17, V, 15, 16}},
  };
  std::vector<int> leaf = {R1, R1, R1, X, U, R3, R3, R3, U, Y, R2, R2, R2, Y, V, R4, R4, R4, V, X};
  return from_adjacency(5, inner, leaf);
}

std::vector<std::vector<Chord>> all_matchings(const std::vector<int>& points) {
  if (points.empty()) return {{}};
  std::vector<std::vector<Chord>> out;
  for (std::size_t j = 1; j < points.size(); ++j) {
    std::vector<int> rest;
    for (std::size_t k = 1; k < points.size(); ++k)
      if (k != j) rest.push_back(points[k]);
    for (auto m : all_matchings(rest)) {
      m.emplace_back(std::min(points[0], points[j]), std::max(points[0], points[j]));
      out.push_back(std::move(m));
    }
  }
  return out;
}

bool interleave(const Chord& a, const Chord& b) {
  std::set<int> ends = {a.first, a.second, b.first, b.second};
  if (ends.size() < 4) return false;
  auto lo = std::min(a.first, a.second), hi = std::max(a.first, a.second);
  int inside = 0;
  for (int x : {b.first, b.second})
    if (lo < x && x < hi) ++inside;
  return inside == 1;
}

bool is_noncrossing(const std::vector<Chord>& m) {
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j)
      if (interleave(m[i], m[j])) return false;
  return true;
}

int brute_generic_count(int n) {
  std::vector<int> even, odd;
  for (int k = 0; k < 4 * n; ++k) (k % 2 ? odd : even).push_back(k);
  std::vector<std::vector<Chord>> reds, blues;
  for (auto& m : all_matchings(even))
    if (is_noncrossing(m)) reds.push_back(m);
  for (auto& m : all_matchings(odd))
    if (is_noncrossing(m)) blues.push_back(m);
  int count = 0;
  for (const auto& r : reds)
    for (const auto& b : blues) {
      bool ok = true;
      for (const auto& x : r) {
        int hits = 0;
        for (const auto& y : b) hits += interleave(x, y);
        ok = ok && hits == 1;
      }
      for (const auto& y : b) {
        int hits = 0;
        for (const auto& x : r) hits += interleave(x, y);
        ok = ok && hits == 1;
      }
      count += ok;
    }
  return count;
}

std::set<Signature> contraction_closure(const Signature& s, int max_codim) {
  std::set<Signature> seen{s};
  std::deque<Signature> queue{s};
  while (!queue.empty()) {
    Signature x = queue.front();
    queue.pop_front();
    for (auto& [mv, t] : enumerate_contractions(x))
      if (codimension(t) <= max_codim && seen.insert(t).second) queue.push_back(t);
  }
  return seen;
}

}  // namespace fixtures
