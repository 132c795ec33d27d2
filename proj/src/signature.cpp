#include "stratoforest/signature.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

#include "json.hpp"

namespace stratoforest {

namespace {

struct UnionFind {
  std::vector<int> p;
  explicit UnionFind(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    p[a] = b;
    return true;
  }
};

std::string vname(const Signature& s, int v) {
  const Vertex& x = s.vertices()[v];
  switch (x.kind) {
    case VertexKind::Leaf: return "leaf " + std::to_string(x.label);
    case VertexKind::Root: return "root vertex " + std::to_string(v);
    case VertexKind::Critical: return "critical vertex " + std::to_string(v);
  }
  return "vertex " + std::to_string(v);
}

// Boundary-augmented planar map used for face tracing. Arc k runs from leaf k to
// leaf k+1; its forward half-edge is 2E+2k (at leaf k), backward 2E+2k+1.
struct Augmented {
  const Signature& s;
  int E2;
  int L;
  std::vector<std::vector<int>> rot;
  std::vector<int> org;
  std::vector<int> pos;

  explicit Augmented(const Signature& sig) : s(sig), E2(2 * static_cast<int>(sig.edges().size())), L(sig.leaf_count()) {
    int total = E2 + 2 * L;
    org.assign(total, -1);
    pos.assign(total, -1);
    rot = sig.rotation();
    for (int h = 0; h < E2; ++h) org[h] = sig.origin(h);
    for (int k = 0; k < L; ++k) {
      int lv = sig.leaf_vertex(k);
      int nv = sig.leaf_vertex((k + 1) % L);
      org[E2 + 2 * k] = lv;
      org[E2 + 2 * k + 1] = nv;
    }
    for (int k = 0; k < L; ++k) {
      int lv = sig.leaf_vertex(k);
      std::vector<int> r;
      r.push_back(E2 + 2 * k);
      for (int h : sig.rotation()[lv]) r.push_back(h);
      r.push_back(E2 + 2 * ((k - 1 + L) % L) + 1);
      rot[lv] = r;
    }
    for (auto& r : rot)
      for (std::size_t i = 0; i < r.size(); ++i) pos[r[i]] = static_cast<int>(i);
  }

  int next(int h) const {
    int t = org[h ^ 1];
    const auto& r = rot[t];
    int d = static_cast<int>(r.size());
    return r[(pos[h ^ 1] - 1 + d) % d];
  }

  bool is_arc(int h) const { return h >= E2; }
  bool is_forward_arc(int h) const { return h >= E2 && ((h - E2) % 2 == 0); }
  int arc_index(int h) const { return (h - E2) / 2; }
};

std::vector<std::vector<int>> trace_augmented_faces(const Augmented& a, bool& outer_ok) {
  int total = a.E2 + 2 * a.L;
  std::vector<char> seen(total, 0);
  std::vector<std::vector<int>> out;
  outer_ok = true;
  for (int start = 0; start < total; ++start) {
    if (seen[start] || a.pos[start] < 0) continue;
    std::vector<int> cyc;
    int h = start;
    bool outer = false;
    std::size_t guard = 0;
    while (!seen[h]) {
      seen[h] = 1;
      cyc.push_back(h);
      if (a.is_arc(h) && !a.is_forward_arc(h)) outer = true;
      h = a.next(h);
      if (++guard > static_cast<std::size_t>(total) + 1) break;
    }
    if (outer) {
      for (int x : cyc)
        if (!(a.is_arc(x) && !a.is_forward_arc(x))) outer_ok = false;
      continue;
    }
    std::vector<int> f;
    for (int x : cyc) f.push_back(a.is_arc(x) ? -(a.arc_index(x) + 1) : x);
    out.push_back(std::move(f));
  }
  return out;
}

bool rotation_well_formed(const Signature& s) {
  std::vector<int> cnt(2 * s.edges().size(), 0);
  for (std::size_t v = 0; v < s.rotation().size(); ++v)
    for (int h : s.rotation()[v]) {
      if (h < 0 || h >= static_cast<int>(cnt.size())) return false;
      if (s.origin(h) != static_cast<int>(v)) return false;
      ++cnt[h];
    }
  return std::all_of(cnt.begin(), cnt.end(), [](int c) { return c == 1; });
}

Color quadrant_earlier_color(int q) { return (q % 2 == 0) ? Color::Red : Color::Blue; }

}  // namespace

std::string to_string(ViolationKind k) {
  switch (k) {
    case ViolationKind::CycleFound: return "CycleFound";
    case ViolationKind::BadLeafCount: return "BadLeafCount";
    case ViolationKind::ColorAlternationViolated: return "ColorAlternationViolated";
    case ViolationKind::TooManyCriticalVertices: return "TooManyCriticalVertices";
    case ViolationKind::ParityClassViolated: return "ParityClassViolated";
    case ViolationKind::NonPlanarRotation: return "NonPlanarRotation";
    case ViolationKind::RootCountMismatch: return "RootCountMismatch";
    case ViolationKind::MultipleRootNotAllowed: return "MultipleRootNotAllowed";
    case ViolationKind::MalformedMap: return "MalformedMap";
  }
  return "Unknown";
}

Signature::Signature(int n, std::vector<Vertex> vertices, std::vector<Edge> edges,
                     std::vector<std::vector<int>> rotation)
    : n_(n), vertices_(std::move(vertices)), edges_(std::move(edges)), rotation_(std::move(rotation)) {
  if (rotation_.size() != vertices_.size()) throw SignatureError("rotation size does not match vertex count");
}

int Signature::leaf_vertex(int label) const {
  for (std::size_t v = 0; v < vertices_.size(); ++v)
    if (vertices_[v].kind == VertexKind::Leaf && vertices_[v].label == label) return static_cast<int>(v);
  throw SignatureError("no leaf with label " + std::to_string(label));
}

Signature Signature::canonical() const {
  const int V = static_cast<int>(vertices_.size());
  const int E = static_cast<int>(edges_.size());
  std::vector<int> vid(V, -1), eid(E, -1), entry(V, -1);
  std::vector<int> order;
  std::deque<int> queue;

  std::vector<std::pair<int, int>> leaves;
  for (int v = 0; v < V; ++v)
    if (vertices_[v].kind == VertexKind::Leaf) leaves.emplace_back(vertices_[v].label, v);
  std::sort(leaves.begin(), leaves.end());
  for (auto [lab, v] : leaves) {
    vid[v] = static_cast<int>(order.size());
    order.push_back(v);
    queue.push_back(v);
  }

  std::vector<Edge> nedges;
  std::vector<int> first_half(E, -1);
  auto run = [&]() {
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      const auto& r = rotation_[v];
      if (r.empty()) continue;
      int start = 0;
      if (entry[v] >= 0) start = static_cast<int>(std::find(r.begin(), r.end(), entry[v]) - r.begin());
      for (std::size_t i = 0; i < r.size(); ++i) {
        int h = r[(start + i) % r.size()];
        int e = h >> 1;
        int w = target(h);
        if (eid[e] < 0) {
          eid[e] = static_cast<int>(nedges.size());
          first_half[e] = h;
          nedges.push_back(Edge{edges_[e].color, -1, -1});
        }
        if (vid[w] < 0) {
          vid[w] = static_cast<int>(order.size());
          order.push_back(w);
          entry[w] = h ^ 1;
          queue.push_back(w);
        }
      }
    }
  };
  run();
  for (int v = 0; v < V; ++v)
    if (vid[v] < 0) {
      vid[v] = static_cast<int>(order.size());
      order.push_back(v);
      queue.push_back(v);
      run();
    }

  auto new_half = [&](int h) {
    int e = h >> 1;
    return 2 * eid[e] + (h == first_half[e] ? 0 : 1);
  };
  for (int e = 0; e < E; ++e) {
    int h0 = first_half[e];
    nedges[eid[e]].u = vid[origin(h0)];
    nedges[eid[e]].v = vid[target(h0)];
  }
  std::vector<Vertex> nverts(V);
  std::vector<std::vector<int>> nrot(V);
  for (int v = 0; v < V; ++v) {
    nverts[vid[v]] = vertices_[v];
    const auto& r = rotation_[v];
    int start = 0;
    if (entry[v] >= 0) start = static_cast<int>(std::find(r.begin(), r.end(), entry[v]) - r.begin());
    std::vector<int> nr;
    for (std::size_t i = 0; i < r.size(); ++i) nr.push_back(new_half(r[(start + i) % r.size()]));
    nrot[vid[v]] = std::move(nr);
  }
  return Signature(n_, std::move(nverts), std::move(nedges), std::move(nrot));
}

std::string Signature::encode() const {
  nlohmann::json j;
  j["n"] = n_;
  nlohmann::json vs = nlohmann::json::array();
  for (std::size_t v = 0; v < vertices_.size(); ++v) {
    nlohmann::json x;
    x["id"] = v;
    switch (vertices_[v].kind) {
      case VertexKind::Leaf:
        x["kind"] = "leaf";
        x["label"] = vertices_[v].label;
        break;
      case VertexKind::Root: x["kind"] = "root"; break;
      case VertexKind::Critical:
        x["kind"] = "critical";
        x["color"] = std::string(1, color_char(vertices_[v].color));
        break;
    }
    vs.push_back(x);
  }
  j["vertices"] = vs;
  std::vector<int> slot(2 * edges_.size(), -1);
  for (const auto& r : rotation_)
    for (std::size_t i = 0; i < r.size(); ++i) slot[r[i]] = static_cast<int>(i);
  nlohmann::json es = nlohmann::json::array();
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    nlohmann::json x;
    x["id"] = e;
    x["color"] = std::string(1, color_char(edges_[e].color));
    x["ends"] = nlohmann::json::array({nlohmann::json::array({edges_[e].u, slot[2 * e]}),
                                       nlohmann::json::array({edges_[e].v, slot[2 * e + 1]})});
    es.push_back(x);
  }
  j["edges"] = es;
  nlohmann::json rot = nlohmann::json::object();
  for (std::size_t v = 0; v < rotation_.size(); ++v) {
    nlohmann::json r = nlohmann::json::array();
    for (int h : rotation_[v]) r.push_back(h >> 1);
    rot[std::to_string(v)] = r;
  }
  j["rotation"] = rot;
  return j.dump();
}

Signature decode(const std::string& bytes) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(bytes);
  } catch (const nlohmann::json::parse_error& e) {
    throw SignatureError("parse error at offset " + std::to_string(e.byte) + ": " + e.what());
  }
  auto fail = [](const std::string& where, const std::string& what) {
    throw SignatureError("malformed signature at " + where + ": " + what);
  };
  if (!j.is_object()) fail("/", "expected an object");
  if (!j.contains("n") || !j["n"].is_number_integer()) fail("/n", "expected an integer");
  int n = j["n"].get<int>();
  if (!j.contains("vertices") || !j["vertices"].is_array()) fail("/vertices", "expected an array");
  if (!j.contains("edges") || !j["edges"].is_array()) fail("/edges", "expected an array");
  std::vector<Vertex> verts;
  for (std::size_t i = 0; i < j["vertices"].size(); ++i) {
    const auto& x = j["vertices"][i];
    std::string where = "/vertices/" + std::to_string(i);
    if (!x.is_object() || !x.contains("kind") || !x["kind"].is_string()) fail(where, "missing kind");
    if (x.contains("id") && (!x["id"].is_number_integer() || x["id"].get<std::size_t>() != i))
      fail(where + "/id", "ids must be consecutive from 0");
    std::string kind = x["kind"].get<std::string>();
    Vertex v;
    if (kind == "leaf") {
      v.kind = VertexKind::Leaf;
      if (!x.contains("label") || !x["label"].is_number_integer()) fail(where + "/label", "expected an integer");
      v.label = x["label"].get<int>();
      v.color = leaf_color(v.label);
    } else if (kind == "root") {
      v.kind = VertexKind::Root;
    } else if (kind == "critical") {
      v.kind = VertexKind::Critical;
      if (!x.contains("color") || !x["color"].is_string()) fail(where + "/color", "expected R or B");
      std::string c = x["color"].get<std::string>();
      if (c != "R" && c != "B") fail(where + "/color", "expected R or B");
      v.color = c == "R" ? Color::Red : Color::Blue;
    } else {
      fail(where + "/kind", "unknown kind '" + kind + "'");
    }
    verts.push_back(v);
  }
  const int V = static_cast<int>(verts.size());
  std::vector<Edge> edges;
  std::vector<std::vector<int>> rot(V);
  std::vector<std::vector<std::pair<int, int>>> slots(V);
  for (std::size_t i = 0; i < j["edges"].size(); ++i) {
    const auto& x = j["edges"][i];
    std::string where = "/edges/" + std::to_string(i);
    if (!x.is_object() || !x.contains("color") || !x["color"].is_string()) fail(where + "/color", "expected R or B");
    std::string c = x["color"].get<std::string>();
    if (c != "R" && c != "B") fail(where + "/color", "expected R or B");
    if (!x.contains("ends") || !x["ends"].is_array() || x["ends"].size() != 2) fail(where + "/ends", "expected two ends");
    Edge e;
    e.color = c == "R" ? Color::Red : Color::Blue;
    int ends[2], sl[2];
    for (int k = 0; k < 2; ++k) {
      const auto& en = x["ends"][k];
      if (!en.is_array() || en.size() != 2 || !en[0].is_number_integer() || !en[1].is_number_integer())
        fail(where + "/ends/" + std::to_string(k), "expected [vertex, slot]");
      ends[k] = en[0].get<int>();
      sl[k] = en[1].get<int>();
      if (ends[k] < 0 || ends[k] >= V) fail(where + "/ends/" + std::to_string(k), "vertex out of range");
    }
    e.u = ends[0];
    e.v = ends[1];
    int id = static_cast<int>(edges.size());
    edges.push_back(e);
    slots[ends[0]].emplace_back(sl[0], 2 * id);
    slots[ends[1]].emplace_back(sl[1], 2 * id + 1);
  }
  for (int v = 0; v < V; ++v) {
    auto& s = slots[v];
    std::sort(s.begin(), s.end());
    for (std::size_t k = 0; k < s.size(); ++k) {
      if (s[k].first != static_cast<int>(k)) fail("/vertices/" + std::to_string(v), "slots are not 0..d-1");
      rot[v].push_back(s[k].second);
    }
  }
  if (j.contains("rotation")) {
    const auto& r = j["rotation"];
    if (!r.is_object()) fail("/rotation", "expected an object");
    for (auto it = r.begin(); it != r.end(); ++it) {
      int v = -1;
      try {
        v = std::stoi(it.key());
      } catch (...) {
        fail("/rotation/" + it.key(), "key is not a vertex id");
      }
      if (v < 0 || v >= V) fail("/rotation/" + it.key(), "vertex out of range");
      if (!it.value().is_array() || it.value().size() != rot[v].size())
        fail("/rotation/" + it.key(), "length disagrees with edge slots");
      for (std::size_t k = 0; k < rot[v].size(); ++k)
        if (!it.value()[k].is_number_integer() || it.value()[k].get<int>() != (rot[v][k] >> 1))
          fail("/rotation/" + it.key() + "/" + std::to_string(k), "disagrees with edge slots");
    }
  }
  return validate(Signature(n, std::move(verts), std::move(edges), std::move(rot)));
}

std::vector<std::vector<int>> faces(const Signature& s) {
  Augmented a(s);
  bool ok = true;
  return trace_augmented_faces(a, ok);
}

int face_quadrant(const Signature& s, const std::vector<int>& face) {
  (void)s;
  for (int h : face)
    if (h < 0) return axis_class(-h - 1);
  return -1;
}

std::vector<int> half_edge_orientation(const Signature& s) {
  std::vector<int> o(2 * s.edges().size(), 0);
  for (const auto& f : faces(s)) {
    int q = face_quadrant(s, f);
    if (q < 0) continue;
    Color early = quadrant_earlier_color(q);
    for (int h : f)
      if (h >= 0) o[h] = (s.half_color(h) == early) ? 1 : -1;
  }
  return o;
}

std::vector<int> edge_rays(const Signature& s) {
  std::vector<int> ray(s.edges().size(), -1);
  std::deque<int> q;
  for (std::size_t v = 0; v < s.vertices().size(); ++v) {
    const Vertex& x = s.vertices()[v];
    if (x.kind != VertexKind::Leaf || s.rotation()[v].size() != 1) continue;
    int e = s.rotation()[v][0] >> 1;
    if (ray[e] < 0) {
      ray[e] = axis_class(x.label);
      q.push_back(e);
    }
  }
  while (!q.empty()) {
    int e = q.front();
    q.pop_front();
    for (int end : {s.edges()[e].u, s.edges()[e].v}) {
      const Vertex& x = s.vertices()[end];
      if (x.kind == VertexKind::Leaf) continue;
      for (int h : s.rotation()[end]) {
        int f = h >> 1;
        if (f == e || s.edges()[f].color != s.edges()[e].color || ray[f] >= 0) continue;
        ray[f] = (x.kind == VertexKind::Root) ? (ray[e] + 2) % 4 : ray[e];
        q.push_back(f);
      }
    }
  }
  return ray;
}

std::vector<Violation> violations(const Signature& s, const ValidateOptions& opt) {
  std::vector<Violation> out;
  auto add = [&](ViolationKind k, std::string w) { out.push_back({k, std::move(w)}); };
  const int n = s.n();
  const int V = static_cast<int>(s.vertices().size());
  const int E = static_cast<int>(s.edges().size());
  const int L = 4 * n;

  if (n < 2) add(ViolationKind::MalformedMap, "degree must be at least 2");
  for (int e = 0; e < E; ++e) {
    const Edge& x = s.edges()[e];
    if (x.u < 0 || x.u >= V || x.v < 0 || x.v >= V) {
      add(ViolationKind::MalformedMap, "edge " + std::to_string(e) + " has an endpoint out of range");
      return out;
    }
    if (x.u == x.v) add(ViolationKind::CycleFound, "edge " + std::to_string(e) + " is a loop");
  }
  if (!rotation_well_formed(s)) {
    add(ViolationKind::MalformedMap, "rotation does not list every half-edge exactly once at its origin");
    return out;
  }

  std::vector<int> seen_label(std::max(L, 0), 0);
  int leaves = 0;
  bool leaves_ok = true;
  for (int v = 0; v < V; ++v) {
    const Vertex& x = s.vertices()[v];
    if (x.kind != VertexKind::Leaf) continue;
    ++leaves;
    if (x.label < 0 || x.label >= L) {
      add(ViolationKind::BadLeafCount, "leaf label " + std::to_string(x.label) + " out of range");
      leaves_ok = false;
      continue;
    }
    if (seen_label[x.label]++) {
      add(ViolationKind::BadLeafCount, "leaf label " + std::to_string(x.label) + " repeated");
      leaves_ok = false;
    }
    if (s.rotation()[v].size() != 1) {
      add(ViolationKind::BadLeafCount, vname(s, v) + " does not have valency 1");
      leaves_ok = false;
    } else if (s.half_color(s.rotation()[v][0]) != leaf_color(x.label)) {
      add(ViolationKind::ColorAlternationViolated, vname(s, v) + " carries an edge of the wrong color");
    }
  }
  if (leaves != L) {
    add(ViolationKind::BadLeafCount, "expected " + std::to_string(L) + " leaves, found " + std::to_string(leaves));
    leaves_ok = false;
  }

  int roots = 0;
  int crit_mult = 0;
  int crit = 0;
  for (int v = 0; v < V; ++v) {
    const Vertex& x = s.vertices()[v];
    const auto& r = s.rotation()[v];
    int d = static_cast<int>(r.size());
    if (x.kind == VertexKind::Root) {
      ++roots;
      if (d < 4 || d % 4 != 0) {
        add(ViolationKind::ColorAlternationViolated, vname(s, v) + " has valency " + std::to_string(d));
        continue;
      }
      if (d > 4 && opt.distinct_roots)
        add(ViolationKind::MultipleRootNotAllowed, vname(s, v) + " has valency " + std::to_string(d));
      for (int i = 0; i < d; ++i)
        if (s.half_color(r[i]) == s.half_color(r[(i + 1) % d])) {
          add(ViolationKind::ColorAlternationViolated, vname(s, v) + " does not alternate colors");
          break;
        }
    } else if (x.kind == VertexKind::Critical) {
      ++crit;
      crit_mult += d / 2 - 1;
      if (d < 4 || d % 2 != 0)
        add(ViolationKind::ColorAlternationViolated, vname(s, v) + " has valency " + std::to_string(d));
      for (int h : r)
        if (s.half_color(h) != x.color) {
          add(ViolationKind::ColorAlternationViolated, vname(s, v) + " is not monochromatic");
          break;
        }
    }
  }
  if (roots != n)
    add(ViolationKind::RootCountMismatch, "expected " + std::to_string(n) + " roots, found " + std::to_string(roots));
  if (crit > n - 1 || crit_mult > n - 1)
    add(ViolationKind::TooManyCriticalVertices,
        std::to_string(crit) + " critical vertices of total multiplicity " + std::to_string(crit_mult));

  {
    UnionFind uf(V);
    for (int e = 0; e < E; ++e)
      if (!uf.unite(s.edges()[e].u, s.edges()[e].v)) {
        add(ViolationKind::CycleFound, "edge " + std::to_string(e) + " closes a cycle");
        break;
      }
  }
  if (!leaves_ok) return out;

  Augmented a(s);
  bool outer_ok = true;
  auto fs = trace_augmented_faces(a, outer_ok);
  {
    UnionFind uf(V);
    for (int e = 0; e < E; ++e) uf.unite(s.edges()[e].u, s.edges()[e].v);
    for (int k = 0; k + 1 < L; ++k) uf.unite(s.leaf_vertex(k), s.leaf_vertex(k + 1));
    int comps = 0;
    for (int v = 0; v < V; ++v)
      if (uf.find(v) == v) ++comps;
    int euler = V - (E + L) + static_cast<int>(fs.size()) + 1;
    if (comps != 1) add(ViolationKind::MalformedMap, "some component contains no leaf");
    else if (euler != 2 || !outer_ok) add(ViolationKind::NonPlanarRotation, "rotation system is not a disk embedding");
  }

  auto ray = edge_rays(s);
  for (int v = 0; v < V; ++v) {
    const Vertex& x = s.vertices()[v];
    const auto& r = s.rotation()[v];
    if (x.kind == VertexKind::Leaf) continue;
    for (int h : r) {
      int e = h >> 1;
      if (ray[e] < 0) continue;
      for (int g : r) {
        int f = g >> 1;
        if (f == e || ray[f] < 0 || s.edges()[f].color != s.edges()[e].color) continue;
        bool same = ray[f] == ray[e];
        if ((x.kind == VertexKind::Critical && !same) || (x.kind == VertexKind::Root && same)) {
          add(ViolationKind::ParityClassViolated, "curve through " + vname(s, v) + " joins the wrong axis classes");
          goto rays_done;
        }
      }
    }
    if (x.kind == VertexKind::Root) {
      int d = static_cast<int>(r.size());
      for (int i = 0; i < d; ++i) {
        int a0 = ray[r[i] >> 1], a1 = ray[r[(i + 1) % d] >> 1];
        if (a0 >= 0 && a1 >= 0 && (a0 + 1) % 4 != a1) {
          add(ViolationKind::ColorAlternationViolated, vname(s, v) + " is not ordered R+, iR+, R-, iR-");
          break;
        }
      }
    }
  }
rays_done:

  std::vector<int> orient(2 * E, 0);
  int interior_mult = 0;
  for (std::size_t fi = 0; fi < fs.size(); ++fi) {
    const auto& f = fs[fi];
    int q = -1, arcs = 0;
    for (int h : f)
      if (h < 0) {
        ++arcs;
        int qq = axis_class(-h - 1);
        if (q < 0) q = qq;
        else if (q != qq) add(ViolationKind::ColorAlternationViolated, "face " + std::to_string(fi) + " spans two quadrants");
      }
    if (arcs == 0) {
      add(ViolationKind::CycleFound, "face " + std::to_string(fi) + " does not reach the boundary");
      continue;
    }
    interior_mult += arcs - 1;
    Color early = quadrant_earlier_color(q);
    for (int h : f)
      if (h >= 0) orient[h] = (s.half_color(h) == early) ? 1 : -1;
    // Between consecutive arcs: later-color run, a root, earlier-color run.
    std::size_t m = f.size();
    std::size_t first_arc = 0;
    while (f[first_arc] >= 0) ++first_arc;
    std::vector<std::vector<int>> runs(1);
    for (std::size_t i = 1; i <= m; ++i) {
      int h = f[(first_arc + i) % m];
      if (h < 0) runs.emplace_back();
      else runs.back().push_back(h);
    }
    runs.pop_back();
    for (const auto& run : runs) {
      int switches = 0;
      bool bad = run.empty() || s.half_color(run.front()) == early || s.half_color(run.back()) != early;
      for (std::size_t t = 0; t + 1 < run.size() && !bad; ++t) {
        int mid = s.target(run[t]);
        bool sw = s.half_color(run[t]) != s.half_color(run[t + 1]);
        VertexKind mk = s.vertices()[mid].kind;
        if (sw) {
          ++switches;
          if (mk != VertexKind::Root) bad = true;
        } else if (mk != VertexKind::Critical) {
          bad = true;
        }
      }
      if (bad || switches != 1) {
        add(ViolationKind::ColorAlternationViolated, "boundary of face " + std::to_string(fi) + " is not monotone");
        break;
      }
    }
  }
  for (int h = 0; h < 2 * E; ++h)
    if (orient[h] != 0 && orient[h ^ 1] != 0 && orient[h] != -orient[h ^ 1]) {
      add(ViolationKind::ColorAlternationViolated, "edge " + std::to_string(h >> 1) + " has inconsistent orientation");
      break;
    }
  for (int v = 0; v < V; ++v) {
    if (s.vertices()[v].kind != VertexKind::Critical) continue;
    const auto& r = s.rotation()[v];
    for (std::size_t i = 0; i < r.size(); ++i)
      if (orient[r[i]] == orient[r[(i + 1) % r.size()]]) {
        add(ViolationKind::ColorAlternationViolated, vname(s, v) + " does not alternate orientations");
        break;
      }
  }
  if (crit_mult + interior_mult != n - 1 && crit_mult <= n - 1)
    add(ViolationKind::TooManyCriticalVertices,
        "critical multiplicities " + std::to_string(crit_mult) + " + " + std::to_string(interior_mult) +
            " do not add up to " + std::to_string(n - 1));
  return out;
}

Signature validate(const Signature& raw, const ValidateOptions& opt) {
  auto v = violations(raw, opt);
  if (!v.empty()) {
    std::ostringstream os;
    os << "invalid signature:";
    for (const auto& x : v) os << "\n  " << to_string(x.kind) << ": " << x.where;
    throw SignatureError(os.str());
  }
  return raw.canonical();
}

int codimension(const Signature& s) {
  int c = 0;
  for (std::size_t v = 0; v < s.vertices().size(); ++v)
    if (s.vertices()[v].kind == VertexKind::Critical) c += static_cast<int>(s.rotation()[v].size()) - 3;
  return c;
}

int critical_count(const Signature& s) {
  int c = 0;
  for (const auto& x : s.vertices())
    if (x.kind == VertexKind::Critical) ++c;
  return c;
}

bool is_generic(const Signature& s) { return critical_count(s) == 0; }

Signature rotate(const Signature& s, int steps) {
  const int L = s.leaf_count();
  int k = ((steps % L) + L) % L;
  bool swap = (k % 2) != 0;
  std::vector<Vertex> vs = s.vertices();
  for (auto& x : vs) {
    if (x.kind == VertexKind::Leaf) {
      x.label = (x.label + k) % L;
      x.color = leaf_color(x.label);
    } else if (x.kind == VertexKind::Critical && swap) {
      x.color = other(x.color);
    }
  }
  std::vector<Edge> es = s.edges();
  if (swap)
    for (auto& e : es) e.color = other(e.color);
  return Signature(s.n(), std::move(vs), std::move(es), s.rotation()).canonical();
}

std::vector<Orbit> orbit_decompose(const std::vector<Signature>& sigs) {
  std::set<Signature> pending(sigs.begin(), sigs.end());
  std::vector<Orbit> out;
  while (!pending.empty()) {
    Signature s = *pending.begin();
    std::set<Signature> orb;
    Signature cur = s;
    while (orb.insert(cur).second) cur = rotate(cur, 1);
    Orbit o;
    o.size = static_cast<int>(orb.size());
    o.members.assign(orb.begin(), orb.end());
    o.representative = o.members.front();
    for (const auto& m : orb) pending.erase(m);
    out.push_back(std::move(o));
  }
  std::stable_sort(out.begin(), out.end(), [](const Orbit& a, const Orbit& b) { return a.size < b.size; });
  return out;
}

bool chords_cross(const Chord& a, const Chord& b) {
  auto inside = [&](int x) { return a.first < x && x < a.second; };
  if (a.first == b.first || a.first == b.second || a.second == b.first || a.second == b.second) return false;
  return inside(b.first) != inside(b.second);
}

std::optional<GenericSignature> make_generic(int n, std::vector<Chord> red, std::vector<Chord> blue) {
  for (auto& c : red)
    if (c.first > c.second) std::swap(c.first, c.second);
  for (auto& c : blue)
    if (c.first > c.second) std::swap(c.first, c.second);
  std::sort(red.begin(), red.end());
  std::sort(blue.begin(), blue.end());
  if (static_cast<int>(red.size()) != n || static_cast<int>(blue.size()) != n) return std::nullopt;
  GenericSignature g{n, red, blue, {}};
  std::vector<int> blue_hits(n, 0);
  for (int i = 0; i < n; ++i) {
    int hits = 0, which = -1;
    for (int j = 0; j < n; ++j)
      if (chords_cross(red[i], blue[j])) {
        ++hits;
        which = j;
        ++blue_hits[j];
      }
    if (hits != 1) return std::nullopt;
    g.crossing.emplace_back(i, which);
  }
  for (int h : blue_hits)
    if (h != 1) return std::nullopt;
  return g;
}

Signature to_signature(const GenericSignature& g) {
  const int n = g.n;
  const int L = 4 * n;
  std::vector<Vertex> vs;
  for (int k = 0; k < L; ++k) vs.push_back(Vertex{VertexKind::Leaf, k, leaf_color(k)});
  std::vector<Edge> es;
  std::vector<std::vector<int>> rot(L + n);
  for (int r = 0; r < n; ++r) {
    vs.push_back(Vertex{VertexKind::Root, -1, Color::Red});
    int root = L + r;
    const Chord& rc = g.red[g.crossing[r].first];
    const Chord& bc = g.blue[g.crossing[r].second];
    std::vector<std::pair<int, Color>> ends = {{rc.first, Color::Red}, {rc.second, Color::Red},
                                               {bc.first, Color::Blue}, {bc.second, Color::Blue}};
    std::sort(ends.begin(), ends.end());
    for (auto [lab, col] : ends) {
      int e = static_cast<int>(es.size());
      es.push_back(Edge{col, root, lab});
      rot[root].push_back(2 * e);
      rot[lab].push_back(2 * e + 1);
    }
  }
  return Signature(n, std::move(vs), std::move(es), std::move(rot)).canonical();
}

std::optional<GenericSignature> to_generic(const Signature& s) {
  if (!is_generic(s)) return std::nullopt;
  std::vector<Chord> red, blue;
  for (std::size_t v = 0; v < s.vertices().size(); ++v) {
    if (s.vertices()[v].kind != VertexKind::Root) continue;
    std::vector<int> rl, bl;
    for (int h : s.rotation()[v]) {
      int w = s.target(h);
      if (s.vertices()[w].kind != VertexKind::Leaf) return std::nullopt;
      (s.half_color(h) == Color::Red ? rl : bl).push_back(s.vertices()[w].label);
    }
    if (rl.size() != 2 || bl.size() != 2) return std::nullopt;
    red.emplace_back(std::min(rl[0], rl[1]), std::max(rl[0], rl[1]));
    blue.emplace_back(std::min(bl[0], bl[1]), std::max(bl[0], bl[1]));
  }
  return make_generic(s.n(), red, blue);
}

std::vector<std::vector<Chord>> noncrossing_matchings(const std::vector<int>& points) {
  if (points.empty()) return {{}};
  std::vector<std::vector<Chord>> out;
  for (std::size_t i = 1; i < points.size(); i += 2) {
    std::vector<int> inner(points.begin() + 1, points.begin() + static_cast<long>(i));
    std::vector<int> outer(points.begin() + static_cast<long>(i) + 1, points.end());
    auto a = noncrossing_matchings(inner);
    auto b = noncrossing_matchings(outer);
    for (const auto& x : a)
      for (const auto& y : b) {
        std::vector<Chord> m;
        m.emplace_back(std::min(points[0], points[i]), std::max(points[0], points[i]));
        m.insert(m.end(), x.begin(), x.end());
        m.insert(m.end(), y.begin(), y.end());
        std::sort(m.begin(), m.end());
        out.push_back(std::move(m));
      }
  }
  return out;
}

std::vector<GenericSignature> enumerate_generic(int n, const EnumerationLimits& lim) {
  if (n < 2) throw SizeLimitExceeded("degree must be at least 2");
  if (n > lim.max_n) throw SizeLimitExceeded("degree " + std::to_string(n) + " exceeds the configured bound " +
                                             std::to_string(lim.max_n));
  std::vector<int> even, odd;
  for (int k = 0; k < 4 * n; ++k) (k % 2 ? odd : even).push_back(k);
  auto rm = noncrossing_matchings(even);
  auto bm = noncrossing_matchings(odd);
  std::vector<GenericSignature> out;
  for (const auto& r : rm)
    for (const auto& b : bm)
      if (auto g = make_generic(n, r, b)) out.push_back(*g);
  return out;
}

std::vector<Signature> enumerate_generic_signatures(int n, const EnumerationLimits& lim) {
  std::vector<Signature> out;
  for (const auto& g : enumerate_generic(n, lim)) out.push_back(to_signature(g));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> edge_components(const Signature& s, Color c) {
  const int V = static_cast<int>(s.vertices().size());
  UnionFind uf(V);
  for (const auto& e : s.edges())
    if (e.color == c) uf.unite(e.u, e.v);
  std::vector<int> out(s.edges().size(), -1);
  for (std::size_t e = 0; e < s.edges().size(); ++e)
    if (s.edges()[e].color == c) out[e] = uf.find(s.edges()[e].u);
  return out;
}

std::vector<std::vector<int>> components(const Signature& s, Color c) {
  const int V = static_cast<int>(s.vertices().size());
  UnionFind uf(V);
  for (const auto& e : s.edges())
    if (e.color == c) uf.unite(e.u, e.v);
  std::map<int, std::vector<int>> groups;
  for (int v = 0; v < V; ++v) {
    const Vertex& x = s.vertices()[v];
    if (x.kind == VertexKind::Leaf && leaf_color(x.label) == c) groups[uf.find(v)].push_back(x.label);
  }
  std::vector<std::vector<int>> out;
  for (auto& [k, g] : groups) {
    std::sort(g.begin(), g.end());
    out.push_back(g);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace stratoforest
