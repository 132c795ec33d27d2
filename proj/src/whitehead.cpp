#include "stratoforest/whitehead.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "json.hpp"

namespace stratoforest {

namespace {

struct Draft {
  int n;
  std::vector<Vertex> verts;
  std::vector<Edge> edges;
  std::vector<std::vector<int>> rot;
  std::vector<char> dead_v, dead_e;

  explicit Draft(const Signature& s)
      : n(s.n()), verts(s.vertices()), edges(s.edges()), rot(s.rotation()),
        dead_v(s.vertices().size(), 0), dead_e(s.edges().size(), 0) {}

  int add_vertex(Vertex v) {
    verts.push_back(v);
    rot.emplace_back();
    dead_v.push_back(0);
    return static_cast<int>(verts.size()) - 1;
  }
  int add_edge(Color c, int u, int v) {
    edges.push_back(Edge{c, u, v});
    dead_e.push_back(0);
    return static_cast<int>(edges.size()) - 1;
  }
  void set_origin(int h, int v) {
    if (h & 1) edges[h >> 1].v = v;
    else edges[h >> 1].u = v;
  }
  int origin(int h) const { return (h & 1) ? edges[h >> 1].v : edges[h >> 1].u; }
  void replace_in_rot(int v, int old_h, int new_h) {
    for (int& x : rot[v])
      if (x == old_h) x = new_h;
  }

  Signature finish() const {
    std::vector<int> vmap(verts.size(), -1), emap(edges.size(), -1);
    std::vector<Vertex> nv;
    std::vector<Edge> ne;
    for (std::size_t v = 0; v < verts.size(); ++v)
      if (!dead_v[v]) {
        vmap[v] = static_cast<int>(nv.size());
        nv.push_back(verts[v]);
      }
    for (std::size_t e = 0; e < edges.size(); ++e)
      if (!dead_e[e]) {
        emap[e] = static_cast<int>(ne.size());
        ne.push_back(Edge{edges[e].color, vmap[edges[e].u], vmap[edges[e].v]});
      }
    std::vector<std::vector<int>> nr(nv.size());
    for (std::size_t v = 0; v < verts.size(); ++v) {
      if (dead_v[v]) continue;
      for (int h : rot[v]) nr[vmap[v]].push_back(2 * emap[h >> 1] + (h & 1));
    }
    return Signature(n, std::move(nv), std::move(ne), std::move(nr));
  }
};

Signature checked(const Signature& raw, const char* what) {
  auto v = violations(raw);
  if (!v.empty()) {
    std::string msg = std::string("ResultNotASignature after ") + what + ":";
    for (const auto& x : v) msg += " " + to_string(x.kind) + " (" + x.where + ")";
    throw MoveError(msg);
  }
  return raw.canonical();
}

int slot_of(const std::vector<int>& r, int h) {
  return static_cast<int>(std::find(r.begin(), r.end(), h) - r.begin());
}

// Sides of one color on a face: maximal runs of half-edges of that color.
std::vector<std::vector<int>> face_sides(const Signature& s, const std::vector<int>& f, Color c) {
  std::vector<std::vector<int>> sides;
  std::size_t m = f.size();
  std::size_t start = 0;
  while (start < m && f[start] >= 0 && s.half_color(f[start]) == c) ++start;
  if (start == m) {
    sides.push_back(f);
    return sides;
  }
  std::vector<int> cur;
  for (std::size_t i = 1; i <= m; ++i) {
    int h = f[(start + i) % m];
    if (h >= 0 && s.half_color(h) == c) {
      cur.push_back(h);
    } else if (!cur.empty()) {
      sides.push_back(cur);
      cur.clear();
    }
  }
  if (!cur.empty()) sides.push_back(cur);
  return sides;
}

}  // namespace

std::string to_string(MoveKind k) {
  switch (k) {
    case MoveKind::CompleteContract: return "CompleteContract";
    case MoveKind::PartialContract: return "PartialContract";
    case MoveKind::CompleteSmooth: return "CompleteSmooth";
    case MoveKind::PartialSmooth: return "PartialSmooth";
  }
  return "Unknown";
}

long long catalan(int m) {
  long long c = 1;
  for (int k = 0; k < m; ++k) c = c * 2 * (2 * k + 1) / (k + 2);
  return c;
}

std::vector<std::vector<std::pair<int, int>>> noncrossing_pairings(int m) {
  std::vector<int> slots(2 * m);
  for (int i = 0; i < 2 * m; ++i) slots[i] = i;
  return noncrossing_matchings(slots);
}

Signature apply(const Signature& s, const Move& mv) {
  const int V = static_cast<int>(s.vertices().size());
  const int E = static_cast<int>(s.edges().size());
  Draft d(s);
  switch (mv.kind) {
    case MoveKind::CompleteContract: {
      if (mv.half_edges.size() < 2) throw MoveError("SiteInvariantViolated: need at least two segments");
      auto fs = faces(s);
      if (mv.face < 0 || mv.face >= static_cast<int>(fs.size())) throw MoveError("SiteNotFound: face");
      const auto& f = fs[mv.face];
      auto comp = edge_components(s, mv.color);
      std::set<int> comps;
      std::vector<int> order;
      for (int h : mv.half_edges) {
        auto it = std::find(f.begin(), f.end(), h);
        if (h < 0 || it == f.end()) throw MoveError("SiteNotFound: segment not on face");
        if (s.half_color(h) != mv.color) throw MoveError("SiteInvariantViolated: segment color");
        if (!comps.insert(comp[h >> 1]).second) throw MoveError("SiteInvariantViolated: two segments of one tree");
        order.push_back(static_cast<int>(it - f.begin()));
      }
      if (!std::is_sorted(order.begin(), order.end())) throw MoveError("SiteInvariantViolated: segments out of face order");
      int p = d.add_vertex(Vertex{VertexKind::Critical, -1, mv.color});
      std::vector<int> prot;
      for (int h : mv.half_edges) {
        int v = s.target(h);
        int tail = h ^ 1;
        d.set_origin(tail, p);
        int ne = d.add_edge(mv.color, p, v);
        d.replace_in_rot(v, tail, 2 * ne + 1);
        prot.push_back(tail);
        prot.push_back(2 * ne);
      }
      d.rot[p] = prot;
      return checked(d.finish(), "CompleteContract");
    }
    case MoveKind::PartialContract: {
      if (mv.half_edges.size() != 1) throw MoveError("SiteNotFound: edge");
      int h = mv.half_edges[0];
      if (h < 0 || h >= 2 * E) throw MoveError("SiteNotFound: edge");
      int a = s.origin(h), b = s.target(h);
      const auto& va = s.vertices()[a];
      const auto& vb = s.vertices()[b];
      if (va.kind != VertexKind::Critical || vb.kind != VertexKind::Critical || va.color != vb.color)
        throw MoveError("SiteInvariantViolated: edge does not join two critical vertices of one color");
      std::vector<int> merged;
      const auto& ra = s.rotation()[a];
      const auto& rb = s.rotation()[b];
      int ia = slot_of(ra, h), ib = slot_of(rb, h ^ 1);
      for (std::size_t k = 1; k < ra.size(); ++k) merged.push_back(ra[(ia + k) % ra.size()]);
      for (std::size_t k = 1; k < rb.size(); ++k) {
        int g = rb[(ib + k) % rb.size()];
        d.set_origin(g, a);
        merged.push_back(g);
      }
      d.rot[a] = merged;
      d.rot[b].clear();
      d.dead_v[b] = 1;
      d.dead_e[h >> 1] = 1;
      return checked(d.finish(), "PartialContract");
    }
    case MoveKind::CompleteSmooth: {
      int c = mv.vertex;
      if (c < 0 || c >= V || s.vertices()[c].kind != VertexKind::Critical) throw MoveError("SiteNotFound: vertex");
      const auto& r = s.rotation()[c];
      int deg = static_cast<int>(r.size());
      if (static_cast<int>(mv.pairing.size()) * 2 != deg) throw MoveError("SiteInvariantViolated: pairing size");
      std::vector<int> used(deg, 0);
      for (auto [i, j] : mv.pairing) {
        if (i < 0 || j < 0 || i >= deg || j >= deg || used[i]++ || used[j]++)
          throw MoveError("SiteInvariantViolated: pairing is not perfect");
        for (auto [k, l] : mv.pairing) {
          auto in = [&](int x) { return std::min(i, j) < x && x < std::max(i, j); };
          if (in(k) != in(l)) throw MoveError("SiteInvariantViolated: pairing crosses");
        }
      }
      for (auto [i, j] : mv.pairing) {
        int a = r[i], b = r[j];
        int x = s.target(a), y = s.target(b);
        int ne = d.add_edge(s.half_color(a), x, y);
        d.replace_in_rot(x, a ^ 1, 2 * ne);
        d.replace_in_rot(y, b ^ 1, 2 * ne + 1);
        d.dead_e[a >> 1] = 1;
        d.dead_e[b >> 1] = 1;
      }
      d.dead_v[c] = 1;
      d.rot[c].clear();
      return checked(d.finish(), "CompleteSmooth");
    }
    case MoveKind::PartialSmooth: {
      int c = mv.vertex;
      if (c < 0 || c >= V || s.vertices()[c].kind != VertexKind::Critical) throw MoveError("SiteNotFound: vertex");
      const auto& r = s.rotation()[c];
      int deg = static_cast<int>(r.size());
      int len = mv.block_len;
      if (len < 3 || deg - len < 3 || len % 2 == 0 || mv.block_start < 0 || mv.block_start >= deg)
        throw MoveError("SiteInvariantViolated: blocks must be contiguous with odd size at least 3");
      int c2 = d.add_vertex(Vertex{VertexKind::Critical, -1, s.vertices()[c].color});
      int ne = d.add_edge(s.vertices()[c].color, c, c2);
      std::vector<int> keep, moved;
      for (int k = 0; k < deg; ++k) {
        int h = r[(mv.block_start + k) % deg];
        if (k < len) {
          moved.push_back(h);
          d.set_origin(h, c2);
        } else {
          keep.push_back(h);
        }
      }
      keep.push_back(2 * ne);
      moved.push_back(2 * ne + 1);
      d.rot[c] = keep;
      d.rot[c2] = moved;
      return checked(d.finish(), "PartialSmooth");
    }
  }
  throw MoveError("unknown move kind");
}

std::vector<std::pair<Move, Signature>> enumerate_contractions(const Signature& s) {
  std::vector<std::pair<Move, Signature>> out;
  auto fs = faces(s);
  for (int fi = 0; fi < static_cast<int>(fs.size()); ++fi) {
    for (Color c : {Color::Red, Color::Blue}) {
      auto sides = face_sides(s, fs[fi], c);
      int k = static_cast<int>(sides.size());
      if (k < 2) continue;
      auto comp = edge_components(s, c);
      std::vector<int> pos(2 * s.edges().size(), -1);
      for (int i = 0; i < static_cast<int>(fs[fi].size()); ++i)
        if (fs[fi][i] >= 0) pos[fs[fi][i]] = i;
      for (int mask = 1; mask < (1 << k); ++mask) {
        if (__builtin_popcount(static_cast<unsigned>(mask)) < 2) continue;
        std::vector<int> chosen;
        std::set<int> cs;
        bool ok = true;
        for (int i = 0; i < k; ++i)
          if (mask & (1 << i)) {
            chosen.push_back(i);
            if (!cs.insert(comp[sides[i][0] >> 1]).second) ok = false;
          }
        if (!ok) continue;
        std::vector<std::size_t> idx(chosen.size(), 0);
        while (true) {
          Move mv;
          mv.kind = MoveKind::CompleteContract;
          mv.color = c;
          mv.face = fi;
          for (std::size_t t = 0; t < chosen.size(); ++t) mv.half_edges.push_back(sides[chosen[t]][idx[t]]);
          std::sort(mv.half_edges.begin(), mv.half_edges.end(), [&](int a, int b) { return pos[a] < pos[b]; });
          out.emplace_back(mv, apply(s, mv));
          std::size_t t = 0;
          while (t < chosen.size() && ++idx[t] == sides[chosen[t]].size()) idx[t++] = 0;
          if (t == chosen.size()) break;
        }
      }
    }
  }
  for (int e = 0; e < static_cast<int>(s.edges().size()); ++e) {
    const auto& ed = s.edges()[e];
    const auto& a = s.vertices()[ed.u];
    const auto& b = s.vertices()[ed.v];
    if (a.kind == VertexKind::Critical && b.kind == VertexKind::Critical && a.color == b.color) {
      Move mv;
      mv.kind = MoveKind::PartialContract;
      mv.color = a.color;
      mv.half_edges = {2 * e};
      out.emplace_back(mv, apply(s, mv));
    }
  }
  std::set<Signature> distinct;
  for (const auto& [mv, t] : out) distinct.insert(t);
  if (distinct.size() != out.size()) throw MoveError("two contracting moves produced the same signature");
  return out;
}

std::vector<std::pair<Move, Signature>> enumerate_smoothings(const Signature& s) {
  std::vector<std::pair<Move, Signature>> out;
  for (int v = 0; v < static_cast<int>(s.vertices().size()); ++v) {
    if (s.vertices()[v].kind != VertexKind::Critical) continue;
    int deg = static_cast<int>(s.rotation()[v].size());
    Color c = s.vertices()[v].color;
    for (const auto& p : noncrossing_pairings(deg / 2)) {
      Move mv;
      mv.kind = MoveKind::CompleteSmooth;
      mv.color = c;
      mv.vertex = v;
      mv.pairing = p;
      out.emplace_back(mv, apply(s, mv));
    }
    for (int start = 1; start < deg; ++start)
      for (int len = 3; len <= deg - 3; len += 2) {
        if (start + len > deg) continue;
        Move mv;
        mv.kind = MoveKind::PartialSmooth;
        mv.color = c;
        mv.vertex = v;
        mv.block_start = start;
        mv.block_len = len;
        out.emplace_back(mv, apply(s, mv));
      }
  }
  std::set<Signature> distinct;
  for (const auto& [mv, t] : out) distinct.insert(t);
  if (distinct.size() != out.size()) throw MoveError("two smoothing moves produced the same signature");
  return out;
}

std::string move_to_json(const Move& mv) {
  nlohmann::json j;
  j["kind"] = to_string(mv.kind);
  j["color"] = std::string(1, color_char(mv.color));
  switch (mv.kind) {
    case MoveKind::CompleteContract:
      j["face"] = mv.face;
      j["half_edges"] = mv.half_edges;
      break;
    case MoveKind::PartialContract: j["half_edges"] = mv.half_edges; break;
    case MoveKind::CompleteSmooth: {
      j["vertex"] = mv.vertex;
      nlohmann::json p = nlohmann::json::array();
      for (auto [a, b] : mv.pairing) p.push_back({a, b});
      j["pairing"] = p;
      break;
    }
    case MoveKind::PartialSmooth:
      j["vertex"] = mv.vertex;
      j["block_start"] = mv.block_start;
      j["block_len"] = mv.block_len;
      break;
  }
  return j.dump();
}

}  // namespace stratoforest
