#include "stratoforest/poset.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "json.hpp"
#include "stratoforest/whitehead.hpp"

namespace stratoforest {

namespace {

void close_transitively(StratPoset& p) {
  const int N = static_cast<int>(p.nodes.size());
  p.above.assign(N, std::vector<char>(N, 0));
  std::vector<int> order(N);
  for (int i = 0; i < N; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) { return p.codim[a] > p.codim[b]; });
  for (int i : order)
    for (int j : p.up[i]) {
      p.above[i][j] = 1;
      for (int k = 0; k < N; ++k)
        if (p.above[j][k]) p.above[i][k] = 1;
    }
}

std::vector<std::vector<int>> meet_partition(const std::vector<std::vector<int>>& a,
                                             const std::vector<std::vector<int>>& b) {
  std::vector<std::vector<int>> out;
  for (const auto& x : a)
    for (const auto& y : b) {
      std::vector<int> z;
      std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(z));
      if (!z.empty()) out.push_back(z);
    }
  std::sort(out.begin(), out.end());
  return out;
}

bool refines(const std::vector<std::vector<int>>& fine, const std::vector<std::vector<int>>& coarse) {
  for (const auto& x : fine) {
    bool inside = false;
    for (const auto& y : coarse)
      if (std::includes(y.begin(), y.end(), x.begin(), x.end())) inside = true;
    if (!inside) return false;
  }
  return true;
}

std::vector<int> common_lower(const StratPoset& p, int s, int t) {
  std::vector<int> d;
  for (int x = 0; x < static_cast<int>(p.size()); ++x)
    if (p.precedes_eq(x, s) && p.precedes_eq(x, t)) d.push_back(x);
  return d;
}

}  // namespace

int StratPoset::index(const Signature& s) const {
  auto it = index_.find(s);
  if (it == index_.end()) throw NodeNotFound("signature is not a node of the poset");
  return it->second;
}

StratPoset poset_from_nodes(int n, int max_codim, std::vector<Signature> nodes) {
  StratPoset p;
  p.n = n;
  p.max_codim = max_codim;
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  p.nodes = std::move(nodes);
  const int N = static_cast<int>(p.nodes.size());
  for (int i = 0; i < N; ++i) p.index_[p.nodes[i]] = i;
  p.codim.resize(N);
  p.up.assign(N, {});
  p.down.assign(N, {});
  for (int i = 0; i < N; ++i) p.codim[i] = codimension(p.nodes[i]);
  for (int i = 0; i < N; ++i)
    for (const auto& [mv, t] : enumerate_contractions(p.nodes[i])) {
      auto it = p.index_.find(t);
      if (it == p.index_.end()) continue;
      p.up[i].push_back(it->second);
      p.down[it->second].push_back(i);
    }
  for (auto& v : p.up) std::sort(v.begin(), v.end());
  for (auto& v : p.down) std::sort(v.begin(), v.end());
  close_transitively(p);
  return p;
}

StratPoset build_poset(int n, int max_codim, const EnumerationLimits& lim) {
  return poset_from_nodes(n, max_codim, enumerate_all(n, max_codim, lim));
}

std::vector<int> closure_set(const StratPoset& p, int s) {
  if (s < 0 || s >= static_cast<int>(p.size())) throw NodeNotFound("node index out of range");
  std::vector<int> out;
  for (int t = 0; t < static_cast<int>(p.size()); ++t)
    if (p.precedes_eq(s, t)) out.push_back(t);
  return out;
}

std::vector<int> star_set(const StratPoset& p, int s) {
  if (s < 0 || s >= static_cast<int>(p.size())) throw NodeNotFound("node index out of range");
  std::vector<int> out;
  for (int t = 0; t < static_cast<int>(p.size()); ++t)
    if (p.precedes_eq(t, s)) out.push_back(t);
  return out;
}

std::vector<int> maximal_nodes(const StratPoset& p) {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(p.size()); ++i)
    if (p.up[i].empty()) out.push_back(i);
  return out;
}

bool component_parity_compatible(const Signature& s, const Signature& t) {
  for (Color c : {Color::Red, Color::Blue}) {
    auto a = components(s, c);
    auto b = components(t, c);
    for (const auto& x : a)
      for (const auto& y : b) {
        std::vector<int> z;
        std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(z));
        if ((x.size() - z.size()) % 2 != 0 || (y.size() - z.size()) % 2 != 0) return false;
      }
  }
  return true;
}

std::optional<int> greatest_lower_bound(const StratPoset& p, int s, int t) {
  if (s < 0 || t < 0 || s >= static_cast<int>(p.size()) || t >= static_cast<int>(p.size()))
    throw NodeNotFound("node index out of range");
  if (s == t) return s;
  auto d = common_lower(p, s, t);
  if (d.empty()) return std::nullopt;
  std::vector<std::vector<std::vector<int>>> target;
  for (Color c : {Color::Red, Color::Blue})
    target.push_back(meet_partition(components(p.nodes[s], c), components(p.nodes[t], c)));
  // Coarsest partitions below the meet first, then highest codimension.
  std::vector<int> best;
  for (int x : d) {
    bool dominated = false;
    auto rx = components(p.nodes[x], Color::Red);
    auto bx = components(p.nodes[x], Color::Blue);
    if (!refines(rx, target[0]) || !refines(bx, target[1])) continue;
    for (int y : d) {
      if (y == x) continue;
      auto ry = components(p.nodes[y], Color::Red);
      auto by = components(p.nodes[y], Color::Blue);
      bool coarser = refines(rx, ry) && refines(bx, by) && (rx != ry || bx != by);
      if (coarser) dominated = true;
    }
    if (!dominated) best.push_back(x);
  }
  if (best.empty()) return std::nullopt;
  int top = -1;
  for (int x : best)
    if (top < 0 || p.codim[x] > p.codim[top]) top = x;
  int ties = 0;
  for (int x : best)
    if (p.codim[x] == p.codim[top]) ++ties;
  if (ties != 1) return std::nullopt;
  return top;
}

std::optional<int> glb_brute_force(const StratPoset& p, int s, int t) {
  auto d = common_lower(p, s, t);
  std::optional<int> found;
  for (int x : d) {
    bool greatest = true;
    for (int y : d)
      if (!p.precedes_eq(y, x)) greatest = false;
    if (greatest) {
      if (found) return std::nullopt;
      found = x;
    }
  }
  return found;
}

CheckReport lattice_check(const StratPoset& p, int apex) {
  CheckReport r;
  auto xs = star_set(p, apex);
  auto in = [&](int x) { return std::find(xs.begin(), xs.end(), x) != xs.end(); };
  auto greatest_of = [&](const std::vector<int>& d) -> std::optional<int> {
    for (int x : d) {
      bool g = true;
      for (int y : d)
        if (!p.precedes_eq(y, x)) g = false;
      if (g) return x;
    }
    return std::nullopt;
  };
  auto least_of = [&](const std::vector<int>& d) -> std::optional<int> {
    for (int x : d) {
      bool g = true;
      for (int y : d)
        if (!p.precedes_eq(x, y)) g = false;
      if (g) return x;
    }
    return std::nullopt;
  };
  auto meet = [&](int a, int b) -> std::optional<int> {
    std::vector<int> d;
    for (int x : xs)
      if (p.precedes_eq(x, a) && p.precedes_eq(x, b)) d.push_back(x);
    return greatest_of(d);
  };
  auto join = [&](int a, int b) -> std::optional<int> {
    std::vector<int> d;
    for (int x : xs)
      if (p.precedes_eq(a, x) && p.precedes_eq(b, x)) d.push_back(x);
    return least_of(d);
  };
  auto fail = [&](const std::string& m) {
    r.pass = false;
    if (r.counterexamples.size() < 20) r.counterexamples.push_back(m);
  };
  for (int a : xs)
    for (int b : xs) {
      std::string pair = "(" + std::to_string(a) + "," + std::to_string(b) + ")";
      auto j = join(a, b);
      if (!j || !in(*j)) fail("no join for " + pair);
      bool has_lower = false;
      for (int x : xs)
        if (p.precedes_eq(x, a) && p.precedes_eq(x, b)) has_lower = true;
      auto m = meet(a, b);
      if (has_lower && !m) fail("no meet for " + pair);
      if (join(b, a) != j || meet(b, a) != m) fail("not commutative at " + pair);
      if (m && join(a, *m) != a) fail("absorption a v (a ^ b) fails at " + pair);
      if (j && meet(a, *j) != a) fail("absorption a ^ (a v b) fails at " + pair);
      if (p.precedes_eq(a, b) && (m != a || j != b)) fail("comparable pair " + pair + " has wrong meet/join");
    }
  for (int a : xs)
    for (int b : xs)
      for (int c : xs) {
        auto ab = join(a, b), bc = join(b, c);
        if (ab && bc && join(*ab, c) != join(a, *bc)) fail("join not associative");
        auto mab = meet(a, b), mbc = meet(b, c);
        if (mab && mbc) {
          auto l = meet(*mab, c), rr = meet(a, *mbc);
          if (l != rr) fail("meet not associative");
        }
      }
  return r;
}

CheckReport frontier_check(const StratPoset& p) {
  CheckReport r;
  const int N = static_cast<int>(p.size());
  std::vector<std::vector<int>> cl(N);
  for (int i = 0; i < N; ++i) cl[i] = closure_set(p, i);
  for (int s = 0; s < N; ++s)
    for (int t = 0; t < N; ++t) {
      bool member = std::binary_search(cl[s].begin(), cl[s].end(), t);
      bool subset = std::includes(cl[s].begin(), cl[s].end(), cl[t].begin(), cl[t].end());
      if (member != subset) {
        r.pass = false;
        if (r.counterexamples.size() < 20)
          r.counterexamples.push_back("(" + std::to_string(s) + "," + std::to_string(t) + ")");
      }
    }
  return r;
}

std::vector<std::vector<int>> gm_filtration(const StratPoset& p) {
  const int top = 2 * (p.n - 1);
  std::vector<std::vector<int>> out;
  for (int i = 0; i <= top; ++i) {
    std::set<int> x;
    for (int s = 0; s < static_cast<int>(p.size()); ++s)
      if (top - p.codim[s] <= i)
        for (int t : closure_set(p, s)) x.insert(t);
    for (int s : x)
      for (int t : closure_set(p, s))
        if (!x.count(t)) throw std::logic_error("filtration level is not closed");
    out.emplace_back(x.begin(), x.end());
  }
  return out;
}

std::string poset_to_dot(const StratPoset& p) {
  std::ostringstream os;
  os << "digraph poset {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < p.size(); ++i)
    os << "  n" << i << " [label=\"" << i << " (codim " << p.codim[i] << ")\"];\n";
  for (std::size_t i = 0; i < p.size(); ++i)
    for (int j : p.up[i]) os << "  n" << i << " -> n" << j << ";\n";
  os << "}\n";
  return os.str();
}

std::string poset_to_json(const StratPoset& p) {
  nlohmann::json j;
  j["n"] = p.n;
  j["max_codim"] = p.max_codim;
  nlohmann::json nodes = nlohmann::json::array();
  for (std::size_t i = 0; i < p.size(); ++i) {
    nlohmann::json x;
    x["id"] = i;
    x["codim"] = p.codim[i];
    x["signature"] = nlohmann::json::parse(p.nodes[i].encode());
    nodes.push_back(x);
  }
  j["nodes"] = nodes;
  nlohmann::json covers = nlohmann::json::array();
  for (std::size_t i = 0; i < p.size(); ++i)
    for (int k : p.up[i]) covers.push_back({i, k});
  j["covers"] = covers;
  return j.dump();
}

}  // namespace stratoforest
