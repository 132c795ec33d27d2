#include "stratoforest/superimpose.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>
#include <queue>
#include <random>
#include <set>
#include <sstream>

#include "json.hpp"

namespace stratoforest {

namespace {

constexpr double kPi = std::numbers::pi;

using Pt = std::pair<double, double>;

/// Proper intersection of segments ab and cd; returns parameters along each.
bool segment_hit(Pt a, Pt b, Pt c, Pt d, double& s, double& t) {
  double rx = b.first - a.first, ry = b.second - a.second;
  double qx = d.first - c.first, qy = d.second - c.second;
  double den = rx * qy - ry * qx;
  if (std::abs(den) < 1e-300) return false;
  double wx = c.first - a.first, wy = c.second - a.second;
  s = (wx * qy - wy * qx) / den;
  t = (wx * ry - wy * rx) / den;
  const double eps = 1e-12;
  return s > eps && s < 1 - eps && t > eps && t < 1 - eps;
}

struct Dsu {
  std::vector<int> p;
  explicit Dsu(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
  void unite(int a, int b) { p[find(a)] = find(b); }
};

Pt point_of(const Arrangement& arr, int i) { return {arr.points[i].x, arr.points[i].y}; }

int polygon_of(const Cell& c, Color col) { return col == Color::Red ? c.red_polygon : c.blue_polygon; }

}  // namespace

int Arrangement::crossings(int d) const {
  int k = 0;
  for (const auto& p : points)
    if (p.leaf < 0 && (p.d1 == d || p.d2 == d)) ++k;
  return k;
}

int Arrangement::opposite_crossings(int d) const {
  int k = 0;
  for (const auto& p : points)
    if (p.leaf < 0 && (p.d1 == d || p.d2 == d) && diagonals[p.d1].color != diagonals[p.d2].color) ++k;
  return k;
}

Arrangement superimpose(const std::vector<GenericSignature>& sigs, std::uint64_t seed) {
  if (sigs.empty()) throw std::invalid_argument("superimpose needs at least one signature");
  Arrangement arr;
  arr.n = sigs[0].n;
  arr.signature_count = static_cast<int>(sigs.size());
  for (const auto& g : sigs)
    if (g.n != arr.n) throw std::invalid_argument("signatures of different degrees");
  const int L = 4 * arr.n;
  const double step = 2 * kPi / L;

  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::uniform_real_distribution<double> jitter(-0.02 * step, 0.02 * step);
  for (int k = 0; k < L; ++k) {
    arr.angle.push_back(k * step + jitter(rng));
    arr.points.push_back(ArrPoint{std::cos(arr.angle[k]), std::sin(arr.angle[k]), k, -1, -1});
  }

  std::map<std::pair<int, int>, int> index;
  for (int s = 0; s < arr.signature_count; ++s)
    for (int c = 0; c < 2; ++c)
      for (auto ch : (c == 0 ? sigs[s].red : sigs[s].blue)) {
        if (ch.first > ch.second) std::swap(ch.first, ch.second);
        auto [it, fresh] = index.emplace(ch, static_cast<int>(arr.diagonals.size()));
        if (fresh) arr.diagonals.push_back(Diagonal{ch.first, ch.second, c == 0 ? Color::Red : Color::Blue, {}});
        arr.diagonals[it->second].owners.push_back(s);
      }

  const int D = static_cast<int>(arr.diagonals.size());
  // Points along each diagonal, keyed by the parameter from a to b.
  std::vector<std::vector<std::pair<double, int>>> along(D);
  for (int d = 0; d < D; ++d) {
    along[d].emplace_back(0.0, arr.diagonals[d].a);
    along[d].emplace_back(1.0, arr.diagonals[d].b);
  }
  for (int i = 0; i < D; ++i)
    for (int j = i + 1; j < D; ++j) {
      const auto& x = arr.diagonals[i];
      const auto& y = arr.diagonals[j];
      if (!chords_cross({x.a, x.b}, {y.a, y.b})) continue;
      double s = 0, t = 0;
      if (!segment_hit(point_of(arr, x.a), point_of(arr, x.b), point_of(arr, y.a), point_of(arr, y.b), s, t))
        throw DegenerateUnresolved("interleaving diagonals do not meet after perturbation");
      Pt a = point_of(arr, x.a), b = point_of(arr, x.b);
      int id = static_cast<int>(arr.points.size());
      arr.points.push_back(ArrPoint{a.first + s * (b.first - a.first), a.second + s * (b.second - a.second), -1, i, j});
      along[i].emplace_back(s, id);
      along[j].emplace_back(t, id);
    }

  // Half-edges come in twin pairs 2k, 2k+1.
  struct HalfEdge {
    int from, to, diagonal, arc;
    double dir;
  };
  std::vector<HalfEdge> he;
  auto add_pair = [&](int u, int v, int d, int arc, double du, double dv) {
    he.push_back(HalfEdge{u, v, d, arc, du});
    he.push_back(HalfEdge{v, u, d, arc, dv});
  };
  for (int d = 0; d < D; ++d) {
    std::sort(along[d].begin(), along[d].end());
    for (std::size_t k = 0; k + 1 < along[d].size(); ++k) {
      int u = along[d][k].second, v = along[d][k + 1].second;
      double dx = arr.points[v].x - arr.points[u].x, dy = arr.points[v].y - arr.points[u].y;
      add_pair(u, v, d, -1, std::atan2(dy, dx), std::atan2(-dy, -dx));
    }
  }
  for (int k = 0; k < L; ++k) {
    int k1 = (k + 1) % L;
    add_pair(k, k1, -1, k, arr.angle[k] + kPi / 2, arr.angle[k1] - kPi / 2);
  }
  const int P = static_cast<int>(arr.points.size());
  const int H = static_cast<int>(he.size());
  std::vector<std::vector<int>> out(P);
  for (int h = 0; h < H; ++h) out[he[h].from].push_back(h);
  std::vector<int> pos(H);
  for (int p = 0; p < P; ++p) {
    auto key = [&](int h) { return std::remainder(he[h].dir - 0.0, 2 * kPi); };
    std::sort(out[p].begin(), out[p].end(), [&](int x, int y) { return key(x) < key(y); });
    for (std::size_t i = 0; i < out[p].size(); ++i) pos[out[p][i]] = static_cast<int>(i);
  }
  // The face to the left of h continues with the half-edge just clockwise of its twin.
  auto next = [&](int h) {
    int t = h ^ 1;
    const auto& o = out[he[t].from];
    return o[(pos[t] - 1 + o.size()) % o.size()];
  };
  std::vector<int> face(H, -1);
  std::vector<std::vector<int>> loops;
  for (int h = 0; h < H; ++h) {
    if (face[h] >= 0) continue;
    std::vector<int> loop;
    int x = h;
    do {
      face[x] = static_cast<int>(loops.size());
      loop.push_back(x);
      x = next(x);
    } while (x != h);
    loops.push_back(loop);
  }
  std::vector<int> cell_of(loops.size(), -1);
  int outer = -1;
  for (std::size_t f = 0; f < loops.size(); ++f) {
    double area = 0;
    for (int h : loops[f]) {
      Pt a = point_of(arr, he[h].from), b = point_of(arr, he[h].to);
      area += a.first * b.second - a.second * b.first;
    }
    // Arcs are drawn as chords here; the outer loop is the only one with negative area.
    if (area < 0) {
      if (outer >= 0) throw DegenerateUnresolved("arrangement has two unbounded faces");
      outer = static_cast<int>(f);
    } else {
      cell_of[f] = static_cast<int>(arr.cells.size());
      arr.cells.emplace_back();
    }
  }
  for (std::size_t f = 0; f < loops.size(); ++f) {
    if (cell_of[f] < 0) continue;
    Cell& c = arr.cells[cell_of[f]];
    for (int h : loops[f]) {
      c.sides.push_back(Side{he[h].diagonal, he[h].arc, he[h].from, he[h].to, cell_of[face[h ^ 1]]});
      c.cx += arr.points[he[h].from].x;
      c.cy += arr.points[he[h].from].y;
    }
    c.cx /= static_cast<double>(c.sides.size());
    c.cy /= static_cast<double>(c.sides.size());
  }

  const int C = static_cast<int>(arr.cells.size());
  for (Color col : {Color::Red, Color::Blue}) {
    Dsu dsu(C);
    for (int i = 0; i < C; ++i)
      for (const auto& s : arr.cells[i].sides)
        if (s.diagonal >= 0 && arr.diagonals[s.diagonal].color != col && s.neighbor >= 0) dsu.unite(i, s.neighbor);
    std::vector<char> open(C, 0);
    for (int i = 0; i < C; ++i)
      for (const auto& s : arr.cells[i].sides)
        if (s.arc >= 0) open[dsu.find(i)] = 1;
    std::map<int, int> poly;
    for (int i = 0; i < C; ++i) {
      int r = dsu.find(i);
      if (open[r]) continue;
      auto [it, fresh] = poly.emplace(r, static_cast<int>(arr.polygons.size()));
      if (fresh) arr.polygons.push_back(Polygon{col, {}, {}});
      Polygon& pg = arr.polygons[it->second];
      pg.cells.push_back(i);
      (col == Color::Red ? arr.cells[i].red_polygon : arr.cells[i].blue_polygon) = it->second;
      for (const auto& s : arr.cells[i].sides)
        if (s.diagonal >= 0 && arr.diagonals[s.diagonal].color == col &&
            std::find(pg.diagonals.begin(), pg.diagonals.end(), s.diagonal) == pg.diagonals.end())
          pg.diagonals.push_back(s.diagonal);
    }
  }
  for (auto& pg : arr.polygons) std::sort(pg.diagonals.begin(), pg.diagonals.end());
  for (auto& c : arr.cells) {
    bool r = c.red_polygon >= 0, b = c.blue_polygon >= 0;
    c.color = (r && b) ? FaceColor::Purple : r ? FaceColor::Red : b ? FaceColor::Blue : FaceColor::Neutral;
  }
  return arr;
}

bool compatible(const Arrangement& arr) {
  for (int d = 0; d < static_cast<int>(arr.diagonals.size()); ++d)
    if (arr.opposite_crossings(d) > arr.signature_count) return false;
  return true;
}

bool compatible(const std::vector<GenericSignature>& sigs) { return compatible(superimpose(sigs)); }

std::string to_string(OverlapPattern p) {
  switch (p) {
    case OverlapPattern::Disjoint: return "disjoint";
    case OverlapPattern::Triangle: return "triangle";
    case OverlapPattern::Quadrilateral: return "quadrilateral";
    case OverlapPattern::DoubleTriangle: return "double-triangle";
    case OverlapPattern::QuadruplePoint: return "quadruple-point";
    case OverlapPattern::NotAllowed: return "not-allowed";
  }
  return "unknown";
}

namespace {

/// Crossing of two diagonals with the leaves at their unperturbed positions.
Pt exact_crossing(const Arrangement& arr, int d1, int d2) {
  const double L = 4.0 * arr.n;
  auto at = [&](int k) { return Pt{std::cos(2 * kPi * k / L), std::sin(2 * kPi * k / L)}; };
  const auto &x = arr.diagonals[d1], &y = arr.diagonals[d2];
  Pt a = at(x.a), b = at(x.b), c = at(y.a), d = at(y.b);
  double rx = b.first - a.first, ry = b.second - a.second;
  double qx = d.first - c.first, qy = d.second - c.second;
  double s = ((c.first - a.first) * qy - (c.second - a.second) * qx) / (rx * qy - ry * qx);
  return {a.first + s * rx, a.second + s * ry};
}

/// Crossing points of two same-color diagonals that are corners of the polygon.
std::vector<int> crossing_corners(const Arrangement& arr, int poly) {
  std::set<int> out;
  for (int cell : arr.polygons[poly].cells)
    for (const auto& s : arr.cells[cell].sides) {
      const ArrPoint& x = arr.points[s.p];
      if (x.leaf >= 0 || arr.diagonals[x.d1].color != arr.diagonals[x.d2].color) continue;
      if (arr.diagonals[x.d1].color == arr.polygons[poly].color) out.insert(s.p);
    }
  return {out.begin(), out.end()};
}

bool overlaps(const Arrangement& arr, int red_polygon, int blue_polygon) {
  for (const auto& c : arr.cells)
    if (c.red_polygon == red_polygon && c.blue_polygon == blue_polygon) return true;
  return false;
}

}  // namespace

OverlapPattern classify_intersection(const Arrangement& arr, int red_polygon, int blue_polygon) {
  for (int x : crossing_corners(arr, red_polygon))
    for (int y : crossing_corners(arr, blue_polygon)) {
      Pt p = exact_crossing(arr, arr.points[x].d1, arr.points[x].d2);
      Pt q = exact_crossing(arr, arr.points[y].d1, arr.points[y].d2);
      if (std::hypot(p.first - q.first, p.second - q.second) < 1e-9) return OverlapPattern::QuadruplePoint;
    }
  std::vector<int> purple;
  for (int i = 0; i < static_cast<int>(arr.cells.size()); ++i)
    if (arr.cells[i].red_polygon == red_polygon && arr.cells[i].blue_polygon == blue_polygon) purple.push_back(i);
  if (purple.empty()) return OverlapPattern::Disjoint;
  if (purple.size() != 1) return OverlapPattern::NotAllowed;
  const Cell& cell = arr.cells[purple[0]];
  std::vector<Color> cs;
  for (const auto& s : cell.sides) {
    if (s.diagonal < 0) return OverlapPattern::NotAllowed;
    cs.push_back(arr.diagonals[s.diagonal].color);
  }
  const int reds = static_cast<int>(std::count(cs.begin(), cs.end(), Color::Red));
  if (cs.size() == 4 && reds == 2 && cs[0] != cs[1] && cs[1] != cs[2]) return OverlapPattern::Quadrilateral;
  if (cs.size() != 3 || reds == 0 || reds == 3) return OverlapPattern::NotAllowed;
  // The two sides of the majority color meet at a crossing x; the pattern is a double triangle when
  // the face diagonally opposite at x lies in another polygon of that color overlapping the same polygon.
  Color c = reds == 2 ? Color::Red : Color::Blue;
  const int own = c == Color::Red ? red_polygon : blue_polygon;
  int x = -1;
  for (std::size_t i = 0; i < cs.size(); ++i)
    if (cs[i] == c && cs[(i + 1) % cs.size()] == c) x = cell.sides[i].q;
  std::set<int> near;
  for (const auto& s : cell.sides)
    if (s.p == x || s.q == x) near.insert(s.neighbor);
  for (int i = 0; i < static_cast<int>(arr.cells.size()); ++i) {
    if (i == purple[0] || near.count(i)) continue;
    bool corner = false;
    for (const auto& s : arr.cells[i].sides) corner = corner || s.p == x;
    if (!corner) continue;
    int q = polygon_of(arr.cells[i], c);
    if (q < 0 || q == own) continue;
    bool shared = c == Color::Red ? overlaps(arr, q, blue_polygon) : overlaps(arr, red_polygon, q);
    if (shared) return OverlapPattern::DoubleTriangle;
  }
  return OverlapPattern::Triangle;
}

namespace {

class GraphBuilder {
 public:
  explicit GraphBuilder(const Arrangement& arr) : arr_(arr), L_(4 * arr.n) {
    g_.n = arr.n;
    vertex_node_.assign(arr.cells.size(), -1);
  }

  CanonicalGraph run() {
    place_vertices();
    if (ok()) connect_adjacent();
    if (ok()) connect_through_purple();
    if (ok()) connect_at_crossings();
    if (ok()) attach_leaves();
    if (ok()) elide();
    return g_;
  }

 private:
  const Arrangement& arr_;
  const int L_;
  CanonicalGraph g_;
  std::vector<int> vertex_node_;
  std::set<std::tuple<int, int, int>> seen_;
  std::map<std::pair<int, int>, int> ports_;

  bool ok() const { return g_.failure.empty(); }
  void fail(const std::string& why) {
    if (g_.failure.empty()) g_.failure = why;
  }

  Color side_color(const Side& s) const { return arr_.diagonals[s.diagonal].color; }
  Pt centroid(int cell) const { return {arr_.cells[cell].cx, arr_.cells[cell].cy}; }
  Pt node_pos(int node) const {
    if (node < L_) return point_of(arr_, node);
    return g_.inner_pos[node - L_];
  }

  bool is_vertex_cell(int cell, Color c) const {
    const Cell& x = arr_.cells[cell];
    FaceColor want = c == Color::Red ? FaceColor::Red : FaceColor::Blue;
    return x.color == want && vertex_node_[cell] >= 0;
  }

  void place_vertices() {
    for (int i = 0; i < static_cast<int>(arr_.cells.size()); ++i) {
      const Cell& c = arr_.cells[i];
      if (c.sides.size() <= 3) continue;
      if (c.color != FaceColor::Red && c.color != FaceColor::Blue) continue;
      vertex_node_[i] = L_ + static_cast<int>(g_.inner_color.size());
      g_.inner_color.push_back(c.color == FaceColor::Red ? Color::Red : Color::Blue);
      g_.inner_pos.emplace_back(c.cx, c.cy);
    }
  }

  /// Two points straddling the side between cells a and b, each slightly inside its cell.
  void port(std::vector<Pt>& path, int a, int b) {
    const Side* side = nullptr;
    for (const auto& s : arr_.cells[a].sides)
      if (s.neighbor == b) side = &s;
    int k = ports_[{std::min(a, b), std::max(a, b)}]++;
    double t = 0.5 + (k % 2 == 0 ? 1 : -1) * 0.3 * (1.0 - std::pow(0.6, (k + 1) / 2));
    Pt p = point_of(arr_, side->p), q = point_of(arr_, side->q);
    Pt x{p.first + t * (q.first - p.first), p.second + t * (q.second - p.second)};
    const double eps = 0.02;
    Pt ca = centroid(a), cb = centroid(b);
    path.emplace_back(x.first + eps * (ca.first - x.first), x.second + eps * (ca.second - x.second));
    path.emplace_back(x.first + eps * (cb.first - x.first), x.second + eps * (cb.second - x.second));
  }

  /// Polyline through the cell sequence, starting at `from` and ending at the centroid of the last cell.
  std::vector<Pt> route(Pt from, bool from_is_center, const std::vector<int>& cells) {
    std::vector<Pt> path{from};
    if (!from_is_center) {
      Pt c = centroid(cells.front());
      path.emplace_back(from.first + 0.1 * (c.first - from.first), from.second + 0.1 * (c.second - from.second));
    }
    for (std::size_t i = 0; i + 1 < cells.size(); ++i) port(path, cells[i], cells[i + 1]);
    path.push_back(centroid(cells.back()));
    return path;
  }

  void add_edge(Color c, int u, int v, std::vector<Pt> path) {
    if (u == v) {
      fail("loop edge at node " + std::to_string(u));
      return;
    }
    auto key = std::make_tuple(std::min(u, v), std::max(u, v), static_cast<int>(c));
    if (!seen_.insert(key).second) return;
    g_.edges.push_back(GraphEdge{c, u, v, std::move(path)});
  }

  /// Shortest cell path inside polygon `poly` of color c from `start` to the nearest vertex cell.
  std::vector<int> to_vertex(int start, int poly, Color c) {
    std::map<int, int> parent{{start, -1}};
    std::queue<int> q;
    q.push(start);
    while (!q.empty()) {
      int x = q.front();
      q.pop();
      if (is_vertex_cell(x, c)) {
        std::vector<int> path;
        for (int y = x; y >= 0; y = parent[y]) path.push_back(y);
        std::reverse(path.begin(), path.end());
        return path;
      }
      for (const auto& s : arr_.cells[x].sides) {
        if (s.diagonal < 0 || s.neighbor < 0 || side_color(s) == c) continue;
        if (polygon_of(arr_.cells[s.neighbor], c) != poly || parent.count(s.neighbor)) continue;
        parent[s.neighbor] = x;
        q.push(s.neighbor);
      }
    }
    return {};
  }

  void connect_adjacent() {
    for (int a = 0; a < static_cast<int>(arr_.cells.size()); ++a) {
      if (vertex_node_[a] < 0) continue;
      Color c = g_.inner_color[vertex_node_[a] - L_];
      for (const auto& s : arr_.cells[a].sides) {
        if (s.diagonal < 0 || s.neighbor < a || side_color(s) == c) continue;
        if (!is_vertex_cell(s.neighbor, c)) continue;
        add_edge(c, vertex_node_[a], vertex_node_[s.neighbor], route(centroid(a), true, {a, s.neighbor}));
      }
    }
  }

  void connect_through_purple() {
    for (int p = 0; p < static_cast<int>(arr_.cells.size()); ++p) {
      if (arr_.cells[p].color != FaceColor::Purple) continue;
      for (Color c : {Color::Red, Color::Blue}) {
        std::vector<int> nb;
        for (const auto& s : arr_.cells[p].sides)
          if (s.diagonal >= 0 && side_color(s) != c && s.neighbor >= 0 && is_vertex_cell(s.neighbor, c)) nb.push_back(s.neighbor);
        for (std::size_t i = 0; i < nb.size(); ++i)
          for (std::size_t j = i + 1; j < nb.size(); ++j)
            add_edge(c, vertex_node_[nb[i]], vertex_node_[nb[j]], route(centroid(nb[i]), true, {nb[i], p, nb[j]}));
      }
    }
  }

  std::vector<int> cells_at(int point) const {
    std::vector<int> out;
    for (int i = 0; i < static_cast<int>(arr_.cells.size()); ++i)
      for (const auto& s : arr_.cells[i].sides)
        if (s.p == point) out.push_back(i);
    return out;
  }

  void connect_at_crossings() {
    for (int x = L_; x < static_cast<int>(arr_.points.size()); ++x) {
      const ArrPoint& pt = arr_.points[x];
      Color c = arr_.diagonals[pt.d1].color;
      if (arr_.diagonals[pt.d2].color != c) continue;
      std::vector<int> corner;
      for (int cell : cells_at(x))
        if (polygon_of(arr_.cells[cell], c) >= 0) corner.push_back(cell);
      if (corner.size() < 2) continue;
      if (corner.size() > 2) {
        fail("more than two polygons meet at a crossing");
        return;
      }
      int pa = polygon_of(arr_.cells[corner[0]], c), pb = polygon_of(arr_.cells[corner[1]], c);
      if (pa == pb) continue;
      auto ra = to_vertex(corner[0], pa, c);
      auto rb = to_vertex(corner[1], pb, c);
      if (ra.empty() || rb.empty()) {
        fail("polygon without a vertex cell");
        return;
      }
      Pt at{pt.x, pt.y};
      auto half_a = route(at, false, ra);
      auto half_b = route(at, false, rb);
      std::reverse(half_a.begin(), half_a.end());
      half_a.insert(half_a.end(), half_b.begin() + 1, half_b.end());
      add_edge(c, vertex_node_[ra.back()], vertex_node_[rb.back()], std::move(half_a));
    }
  }

  void attach_leaves() {
    const int D = static_cast<int>(arr_.diagonals.size());
    std::vector<char> bounding(D, 0);
    for (const auto& cell : arr_.cells)
      for (const auto& s : cell.sides)
        if (s.diagonal >= 0 && polygon_of(cell, side_color(s)) >= 0) bounding[s.diagonal] = 1;
    std::vector<int> degree(L_, 0);
    for (int d = 0; d < D; ++d) {
      if (bounding[d]) continue;
      const auto& dg = arr_.diagonals[d];
      add_edge(dg.color, dg.a, dg.b, {point_of(arr_, dg.a), point_of(arr_, dg.b)});
      ++degree[dg.a];
      ++degree[dg.b];
    }
    for (int leaf = 0; leaf < L_; ++leaf) {
      Color c = leaf_color(leaf);
      for (int cell : cells_at(leaf)) {
        int poly = polygon_of(arr_.cells[cell], c);
        if (poly < 0) continue;
        auto r = to_vertex(cell, poly, c);
        if (r.empty()) {
          fail("no vertex cell reachable from leaf " + std::to_string(leaf));
          return;
        }
        add_edge(c, leaf, vertex_node_[r.back()], route(point_of(arr_, leaf), false, r));
        ++degree[leaf];
      }
      if (degree[leaf] != 1) {
        fail("leaf " + std::to_string(leaf) + " attached " + std::to_string(degree[leaf]) + " times");
        return;
      }
    }
  }

  void elide() {
    bool changed = true;
    while (changed) {
      changed = false;
      std::map<int, std::vector<int>> inc;
      for (int e = 0; e < static_cast<int>(g_.edges.size()); ++e) {
        inc[g_.edges[e].u].push_back(e);
        inc[g_.edges[e].v].push_back(e);
      }
      for (auto& [node, es] : inc) {
        if (node < L_ || es.size() != 2) continue;
        GraphEdge a = g_.edges[es[0]], b = g_.edges[es[1]];
        if (a.v != node) {
          std::swap(a.u, a.v);
          std::reverse(a.path.begin(), a.path.end());
        }
        if (b.u != node) {
          std::swap(b.u, b.v);
          std::reverse(b.path.begin(), b.path.end());
        }
        GraphEdge m{a.color, a.u, b.v, a.path};
        m.path.insert(m.path.end(), b.path.begin() + 1, b.path.end());
        g_.edges.erase(g_.edges.begin() + std::max(es[0], es[1]));
        g_.edges.erase(g_.edges.begin() + std::min(es[0], es[1]));
        if (m.u == m.v) {
          fail("elision closed a loop");
          return;
        }
        g_.edges.push_back(std::move(m));
        changed = true;
        break;
      }
    }
    // Renumber inner vertices that still carry edges.
    std::vector<int> degree(g_.inner_color.size(), 0);
    for (const auto& e : g_.edges)
      for (int x : {e.u, e.v})
        if (x >= L_) ++degree[x - L_];
    std::vector<int> remap(g_.inner_color.size(), -1);
    std::vector<Color> colors;
    std::vector<Pt> places;
    for (std::size_t i = 0; i < degree.size(); ++i) {
      if (degree[i] == 0) continue;
      remap[i] = L_ + static_cast<int>(colors.size());
      colors.push_back(g_.inner_color[i]);
      places.push_back(g_.inner_pos[i]);
    }
    for (auto& e : g_.edges) {
      if (e.u >= L_) e.u = remap[e.u - L_];
      if (e.v >= L_) e.v = remap[e.v - L_];
    }
    g_.inner_color = std::move(colors);
    g_.inner_pos = std::move(places);
  }
};

}  // namespace

CanonicalGraph canonical_graph(const Arrangement& arr) { return GraphBuilder(arr).run(); }

std::optional<Signature> graph_signature(const CanonicalGraph& g) {
  if (!g.failure.empty()) return std::nullopt;
  const int L = 4 * g.n;
  const int E = static_cast<int>(g.edges.size());
  // Crossings along each edge as (segment + fraction, root id).
  std::vector<std::vector<std::pair<double, int>>> hits(E);
  std::vector<Pt> roots;
  for (int e = 0; e < E; ++e)
    for (int f = e + 1; f < E; ++f) {
      const auto& pe = g.edges[e].path;
      const auto& pf = g.edges[f].path;
      for (std::size_t i = 0; i + 1 < pe.size(); ++i)
        for (std::size_t j = 0; j + 1 < pf.size(); ++j) {
          // Segments meeting at a shared end node touch there; that is not a crossing.
          bool shared = (i == 0 || i + 2 == pe.size()) && (j == 0 || j + 2 == pf.size()) &&
                        (pe[i] == pf[j] || pe[i] == pf[j + 1] || pe[i + 1] == pf[j] || pe[i + 1] == pf[j + 1]);
          double s = 0, t = 0;
          if (shared || !segment_hit(pe[i], pe[i + 1], pf[j], pf[j + 1], s, t)) continue;
          if (g.edges[e].color == g.edges[f].color) return std::nullopt;
          int id = static_cast<int>(roots.size());
          roots.emplace_back(pe[i].first + s * (pe[i + 1].first - pe[i].first), pe[i].second + s * (pe[i + 1].second - pe[i].second));
          hits[e].emplace_back(static_cast<double>(i) + s, id);
          hits[f].emplace_back(static_cast<double>(j) + t, id);
        }
    }
  const int inner = static_cast<int>(g.inner_color.size());
  std::vector<Vertex> vs;
  for (int k = 0; k < L; ++k) vs.push_back(Vertex{VertexKind::Leaf, k, leaf_color(k)});
  for (int i = 0; i < inner; ++i) vs.push_back(Vertex{VertexKind::Critical, -1, g.inner_color[i]});
  for (std::size_t r = 0; r < roots.size(); ++r) vs.push_back(Vertex{VertexKind::Root, -1, Color::Red});
  std::vector<Pt> place(vs.size());
  for (int k = 0; k < L; ++k) place[k] = {std::cos(2 * kPi * k / L), std::sin(2 * kPi * k / L)};
  for (int i = 0; i < inner; ++i) place[L + i] = g.inner_pos[i];
  for (std::size_t r = 0; r < roots.size(); ++r) place[L + inner + r] = roots[r];

  std::vector<Edge> es;
  std::vector<std::vector<std::pair<double, int>>> around(vs.size());
  auto point_at = [](const std::vector<Pt>& path, double u) {
    std::size_t i = std::min(static_cast<std::size_t>(u), path.size() - 2);
    double s = u - static_cast<double>(i);
    return Pt{path[i].first + s * (path[i + 1].first - path[i].first), path[i].second + s * (path[i + 1].second - path[i].second)};
  };
  for (int e = 0; e < E; ++e) {
    const auto& ge = g.edges[e];
    const double last = static_cast<double>(ge.path.size() - 1);
    std::sort(hits[e].begin(), hits[e].end());
    std::vector<std::pair<double, int>> stops{{0.0, ge.u}};
    for (auto [u, r] : hits[e]) stops.emplace_back(u, L + inner + r);
    stops.emplace_back(last, ge.v);
    for (std::size_t k = 0; k + 1 < stops.size(); ++k) {
      auto [u0, a] = stops[k];
      auto [u1, b] = stops[k + 1];
      // Direction leaving each end, probed a short way along the polyline.
      double du = std::min(1e-3, 0.25 * (u1 - u0));
      Pt pa = point_at(ge.path, u0), qa = point_at(ge.path, u0 + du);
      Pt pb = point_at(ge.path, u1), qb = point_at(ge.path, u1 - du);
      int id = static_cast<int>(es.size());
      es.push_back(Edge{ge.color, a, b});
      around[a].emplace_back(std::atan2(qa.second - pa.second, qa.first - pa.first), 2 * id);
      around[b].emplace_back(std::atan2(qb.second - pb.second, qb.first - pb.first), 2 * id + 1);
    }
  }
  std::vector<std::vector<int>> rot(vs.size());
  for (std::size_t v = 0; v < vs.size(); ++v) {
    std::sort(around[v].begin(), around[v].end());
    for (auto [ang, h] : around[v]) rot[v].push_back(h);
  }
  try {
    return validate(Signature(g.n, std::move(vs), std::move(es), std::move(rot)));
  } catch (const SignatureError&) {
    return std::nullopt;
  }
}

std::optional<Signature> common_incident(const std::vector<GenericSignature>& sigs, std::uint64_t seed) {
  Arrangement arr = superimpose(sigs, seed);
  if (!compatible(arr)) return std::nullopt;
  return graph_signature(canonical_graph(arr));
}

std::string arrangement_svg(const Arrangement& arr, const CanonicalGraph* graph) {
  const double scale = 200, off = 220;
  auto X = [&](double x) { return off + scale * x; };
  auto Y = [&](double y) { return off - scale * y; };
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"440\" height=\"440\" viewBox=\"0 0 440 440\">\n";
  os << "<circle cx=\"" << off << "\" cy=\"" << off << "\" r=\"" << scale << "\" fill=\"white\" stroke=\"black\"/>\n";
  for (const auto& c : arr.cells) {
    const char* fill = nullptr;
    if (c.color == FaceColor::Red) fill = "#f4b6b6";
    if (c.color == FaceColor::Blue) fill = "#b6c8f4";
    if (c.color == FaceColor::Purple) fill = "#c9a6e0";
    if (!fill) continue;
    os << "<polygon fill=\"" << fill << "\" stroke=\"none\" points=\"";
    for (const auto& s : c.sides) os << X(arr.points[s.p].x) << "," << Y(arr.points[s.p].y) << " ";
    os << "\"/>\n";
  }
  for (const auto& d : arr.diagonals) {
    const auto &a = arr.points[d.a], &b = arr.points[d.b];
    os << "<line x1=\"" << X(a.x) << "\" y1=\"" << Y(a.y) << "\" x2=\"" << X(b.x) << "\" y2=\"" << Y(b.y)
       << "\" stroke=\"" << (d.color == Color::Red ? "#c00000" : "#0030c0") << "\" stroke-width=\"1\"/>\n";
  }
  if (graph) {
    for (const auto& e : graph->edges) {
      os << "<polyline fill=\"none\" stroke=\"" << (e.color == Color::Red ? "#800000" : "#001880")
         << "\" stroke-width=\"3\" points=\"";
      for (auto [x, y] : e.path) os << X(x) << "," << Y(y) << " ";
      os << "\"/>\n";
    }
    for (std::size_t i = 0; i < graph->inner_pos.size(); ++i)
      os << "<circle cx=\"" << X(graph->inner_pos[i].first) << "\" cy=\"" << Y(graph->inner_pos[i].second)
         << "\" r=\"4\" fill=\"" << (graph->inner_color[i] == Color::Red ? "#800000" : "#001880") << "\"/>\n";
  }
  for (int k = 0; k < 4 * arr.n; ++k) {
    const auto& p = arr.points[k];
    os << "<text x=\"" << X(1.07 * p.x) << "\" y=\"" << Y(1.07 * p.y) << "\" font-size=\"10\" text-anchor=\"middle\">" << k
       << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

std::string arrangement_json(const Arrangement& arr) {
  nlohmann::json j;
  j["n"] = arr.n;
  j["signature_count"] = arr.signature_count;
  j["diagonals"] = nlohmann::json::array();
  for (int d = 0; d < static_cast<int>(arr.diagonals.size()); ++d) {
    const auto& x = arr.diagonals[d];
    j["diagonals"].push_back({{"a", x.a},
                              {"b", x.b},
                              {"color", std::string(1, color_char(x.color))},
                              {"owners", x.owners},
                              {"crossings", arr.crossings(d)},
                              {"opposite_crossings", arr.opposite_crossings(d)}});
  }
  static const char* names[] = {"neutral", "red", "blue", "purple"};
  j["cells"] = nlohmann::json::array();
  for (const auto& c : arr.cells) {
    nlohmann::json sides = nlohmann::json::array();
    for (const auto& s : c.sides) sides.push_back({{"diagonal", s.diagonal}, {"arc", s.arc}, {"neighbor", s.neighbor}});
    j["cells"].push_back({{"color", names[static_cast<int>(c.color)]},
                          {"red_polygon", c.red_polygon},
                          {"blue_polygon", c.blue_polygon},
                          {"sides", sides}});
  }
  j["polygons"] = nlohmann::json::array();
  for (const auto& p : arr.polygons)
    j["polygons"].push_back({{"color", std::string(1, color_char(p.color))}, {"cells", p.cells}, {"diagonals", p.diagonals}});
  j["compatible"] = compatible(arr);
  return j.dump(2);
}

}  // namespace stratoforest
