#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>

#include "fixtures.hpp"
#include "stratoforest/homotopy.hpp"
#include "stratoforest/nerve.hpp"
#include "stratoforest/poset.hpp"
#include "stratoforest/superimpose.hpp"
#include "stratoforest/tracer.hpp"
#include "stratoforest/whitehead.hpp"

using namespace stratoforest;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [" << what << "]";
    }
  }
};

/// Greatest element of the common predecessors of a and b, by explicit reachability.
std::optional<int> brute_glb(const StratPoset& p, int a, int b) {
  const int N = static_cast<int>(p.size());
  std::vector<std::vector<char>> r(N, std::vector<char>(N, 0));
  for (int s = 0; s < N; ++s) {
    r[s][s] = 1;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y : p.up[x])
        if (!r[s][y]) {
          r[s][y] = 1;
          stack.push_back(y);
        }
    }
  }
  std::vector<int> lower;
  for (int x = 0; x < N; ++x)
    if (r[x][a] && r[x][b]) lower.push_back(x);
  for (int g : lower)
    if (std::all_of(lower.begin(), lower.end(), [&](int x) { return r[x][g]; })) return g;
  return std::nullopt;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void generic_enumeration(Outcome& o) {
  auto t0 = std::chrono::steady_clock::now();
  const std::map<int, int> want = {{2, 4}, {3, 22}, {4, 140}};
  for (auto [n, count] : want) {
    int got = static_cast<int>(enumerate_generic(n).size());
    o.require(got == count, "n=" + std::to_string(n) + " count " + std::to_string(got));
    o.require(fixtures::brute_generic_count(n) == count, "brute force n=" + std::to_string(n));
  }
  std::map<int, int> sizes;
  for (const auto& orb : orbit_decompose(enumerate_generic_signatures(4))) ++sizes[orb.size];
  o.require(sizes == std::map<int, int>{{4, 1}, {8, 3}, {16, 7}}, "n=4 orbit classes");
  double t = seconds_since(t0);
  o.require(t < 10, "runtime");
  o.detail << " counts 4/22/140, orbits 1x4 3x8 7x16, " << t << " s";
}

void catalan_smoothing(Outcome& o) {
  auto t0 = std::chrono::steady_clock::now();
  const long long want[] = {2, 5, 14, 42};
  for (int m = 2; m <= 5; ++m) {
    std::string coeffs = "1";
    for (int k = 1; k < m; ++k) coeffs += ",0";
    Signature s = trace_drawing(Polynomial::parse(coeffs + ",-1"));
    std::set<std::vector<std::pair<int, int>>> got;
    for (const auto& [mv, t] : enumerate_smoothings(s))
      if (mv.kind == MoveKind::CompleteSmooth) {
        auto p = mv.pairing;
        for (auto& [a, b] : p)
          if (a > b) std::swap(a, b);
        std::sort(p.begin(), p.end());
        got.insert(p);
      }
    std::vector<int> slots;
    for (int i = 0; i < 2 * m; ++i) slots.push_back(i);
    std::set<std::vector<std::pair<int, int>>> brute;
    for (auto x : fixtures::all_matchings(slots))
      if (fixtures::is_noncrossing(x)) {
        std::sort(x.begin(), x.end());
        brute.insert(x);
      }
    o.require(static_cast<long long>(got.size()) == want[m - 2], "m=" + std::to_string(m) + " count " + std::to_string(got.size()));
    o.require(got == brute, "m=" + std::to_string(m) + " differs from brute force");
  }
  double t = seconds_since(t0);
  o.require(t < 1, "runtime");
  o.detail << " 2/5/14/42, " << t << " s";
}

void cover_degrees(Outcome& o) {
  o.require(cover_degree(2) == 1 && cover_degree(3) == 3 && cover_degree(4) == 16, "cover_degree");
  for (int n : {2, 3, 4}) {
    FiberBase b = collect_sheets(n, 17);
    double worst = 0;
    for (const auto& p : b.sheets) worst = std::max(worst, critical_value_error(p, b.values));
    o.require(static_cast<long long>(b.sheets.size()) == cover_degree(n), "n=" + std::to_string(n) + " sheets " + std::to_string(b.sheets.size()));
    o.require(worst < 1e-8, "n=" + std::to_string(n) + " error");
    o.detail << " n=" << n << ":" << b.sheets.size() << " (err " << worst << ")";
  }
}

void fiber_survey_n3(Outcome& o) {
  auto t0 = std::chrono::steady_clock::now();
  FiberBase base = collect_sheets(3, 1);
  o.require(base.sheets.size() == 3, "base fiber");
  for (const auto& cell : generic_cells(3)) {
    auto r = fiber_survey(base, cell, 50, 20240601);
    bool same = std::count(cell.counts.begin(), cell.counts.end(), 2) == 1;
    std::size_t want = same ? 1 : 3;
    o.require(r.counts.size() == want && r.failures == 0,
              cell_name(cell) + " distinct " + std::to_string(r.counts.size()) + " failures " + std::to_string(r.failures));
  }
  double t = seconds_since(t0);
  o.require(t < 120, "runtime");
  o.detail << " 10 cells x 50 samples, " << t << " s";
}

void tracer_oracles(Outcome& o) {
  Signature g = trace_drawing(Polynomial(2, {cplx(-1, -1)}));
  o.require(codimension(g) == 0 && is_generic(g), "z^2-(1+i) generic");
  Polynomial p(2, {-1.0});
  Signature s = trace_drawing(p);
  int red4 = 0, crit = 0;
  for (int v = 0; v < static_cast<int>(s.vertices().size()); ++v)
    if (s.vertices()[v].kind == VertexKind::Critical) {
      ++crit;
      red4 += s.vertices()[v].color == Color::Red && s.rotation()[v].size() == 4;
    }
  o.require(crit == 1 && red4 == 1, "one red valency-4 critical vertex");
  o.require(codimension(s) == 1, "codim 1");
  o.require(s == fixtures::z2_minus_1(), "equals axes/hyperbola drawing");
  o.detail << " z^2-(1+i) codim " << codimension(g) << ", z^2-1 codim " << codimension(s) << " with " << red4 << " red valency-4 vertex";
}

void poset_laws(Outcome& o) {
  for (auto [n, c] : {std::pair{2, 2}, std::pair{3, 2}}) {
    auto p = build_poset(n, c);
    const int N = static_cast<int>(p.size());
    auto fr = frontier_check(p);
    o.require(fr.pass, "n=" + std::to_string(n) + " frontier");
    int nonempty = 0, missing = 0, wrong = 0, parity = 0;
    for (int a = 0; a < N; ++a)
      for (int b = a + 1; b < N; ++b) {
        auto sa = star_set(p, a), sb = star_set(p, b);
        bool meet = false;
        for (int x : sa) meet = meet || std::count(sb.begin(), sb.end(), x);
        if (!meet) continue;
        ++nonempty;
        if (!component_parity_compatible(p.nodes[a], p.nodes[b])) ++parity;
        auto g = greatest_lower_bound(p, a, b);
        auto brute = brute_glb(p, a, b);
        if (g != brute) ++wrong;
        if (!g) ++missing;
      }
    o.require(parity == 0, "n=" + std::to_string(n) + " parity violations " + std::to_string(parity));
    o.require(wrong == 0, "n=" + std::to_string(n) + " glb differs from brute force " + std::to_string(wrong));
    o.require(missing == 0, "n=" + std::to_string(n) + " glb missing for " + std::to_string(missing) + " of " + std::to_string(nonempty) + " pairs");
  }
}

void cech_pipeline(Outcome& o) {
  auto t0 = std::chrono::steady_clock::now();
  auto cover = build_cover(build_poset(2, 2));
  o.require(cover.sets.size() == 4, "cover size " + std::to_string(cover.sets.size()));
  auto c = build_nerve(cover);
  bool cycle = c.vertex_count == 4 && c.dimension() == 1 && c.simplices[1].size() == 4;
  if (cycle) {
    std::vector<int> degree(4, 0);
    for (const auto& e : c.simplices[1])
      for (int v : e) ++degree[v];
    cycle = degree == std::vector<int>{2, 2, 2, 2};
  }
  o.require(cycle, "nerve is not a 4-cycle");
  auto h = homology(c);
  std::string hs;
  for (std::size_t k = 0; k < h.size(); ++k) hs += " H" + std::to_string(k) + "=" + h[k].to_string();
  bool ok = h.size() >= 2 && h[0].to_string() == "Z" && h[1].to_string() == "Z";
  for (std::size_t k = 2; k < h.size(); ++k) ok = ok && h[k].to_string() == "0";
  o.require(ok, "homology" + hs);
  double t = seconds_since(t0);
  o.require(t < 1, "runtime");
  o.detail << hs << ", " << t << " s";
}

void superimposition(Outcome& o) {
  auto t0 = std::chrono::steady_clock::now();
  auto expected = fixtures::hexagon_graph();
  for (auto [a, b] : {fixtures::hexagon_pair(), fixtures::hexagon_pair_swapped()}) {
    auto r = common_incident({a, b});
    o.require(r && *r == expected, "hexagon pair graph");
  }
  int pairs = 0, disagree = 0;
  for (int n : {2, 3}) {
    auto gens = enumerate_generic(n);
    for (std::size_t i = 0; i < gens.size(); ++i)
      for (std::size_t j = i + 1; j < gens.size(); ++j) {
        ++pairs;
        auto ca = fixtures::contraction_closure(to_signature(gens[i]), 2 * (n - 1));
        auto cb = fixtures::contraction_closure(to_signature(gens[j]), 2 * (n - 1));
        bool common = std::any_of(ca.begin(), ca.end(), [&](const Signature& s) { return cb.count(s) > 0; });
        auto r = common_incident({gens[i], gens[j]});
        if (r.has_value() != common || (r && (!ca.count(*r) || !cb.count(*r)))) ++disagree;
      }
  }
  o.require(disagree == 0, std::to_string(disagree) + " pairs disagree with the closure oracle");
  double t = seconds_since(t0);
  o.require(t < 60, "runtime");
  o.detail << " hexagon pair gives the H graph, " << pairs << " pairs checked, " << t << " s";
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<void(Outcome&)>>> criteria = {
      {"generic enumeration and n=4 orbits", generic_enumeration},
      {"Catalan smoothing law", catalan_smoothing},
      {"cover degrees and sheet tracking", cover_degrees},
      {"n=3 fiber survey", fiber_survey_n3},
      {"tracer oracles", tracer_oracles},
      {"poset laws", poset_laws},
      {"n=2 Cech pipeline", cech_pipeline},
      {"superimposition", superimposition},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << " [exception: " << e.what() << "]";
    }
    failed += !o.pass;
    std::printf("%s %zu %s:%s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail.str().c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
