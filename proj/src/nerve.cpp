#include "stratoforest/nerve.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <map>

#include "json.hpp"

namespace stratoforest {

using boost::multiprecision::cpp_int;

Cover build_cover(const StratPoset& p) {
  Cover c;
  std::vector<char> covered(p.size(), 0);
  for (int m : maximal_nodes(p)) {
    c.apexes.push_back(m);
    c.sets.push_back(star_set(p, m));
    for (int x : c.sets.back()) covered[x] = 1;
  }
  for (std::size_t i = 0; i < p.size(); ++i)
    if (!covered[i]) throw CoverageGap("node " + std::to_string(i) + " lies in no star set");
  return c;
}

NerveComplex build_nerve(const Cover& cover, int max_dim) {
  NerveComplex c;
  c.vertex_count = static_cast<int>(cover.sets.size());
  const int V = c.vertex_count;
  std::vector<int> current;
  auto extend = [&](auto&& self, int next, const std::vector<int>& common) -> void {
    int k = static_cast<int>(current.size()) - 1;
    if (k >= 0) {
      if (static_cast<int>(c.simplices.size()) <= k) c.simplices.resize(k + 1);
      c.simplices[k].push_back(current);
    }
    if (max_dim >= 0 && k >= max_dim) return;
    for (int v = next; v < V; ++v) {
      std::vector<int> meet;
      if (current.empty())
        meet = cover.sets[v];
      else
        std::set_intersection(common.begin(), common.end(), cover.sets[v].begin(), cover.sets[v].end(),
                              std::back_inserter(meet));
      if (meet.empty()) continue;
      current.push_back(v);
      self(self, v + 1, meet);
      current.pop_back();
    }
  };
  extend(extend, 0, {});
  for (auto& level : c.simplices) std::sort(level.begin(), level.end());
  return c;
}

IntMatrix NerveComplex::boundary(int k) const {
  if (k <= 0 || k > dimension()) return {};
  const auto& faces = simplices[k - 1];
  std::map<std::vector<int>, int> row;
  for (std::size_t i = 0; i < faces.size(); ++i) row[faces[i]] = static_cast<int>(i);
  IntMatrix m(faces.size(), std::vector<long long>(simplices[k].size(), 0));
  for (std::size_t j = 0; j < simplices[k].size(); ++j) {
    const auto& s = simplices[k][j];
    for (std::size_t drop = 0; drop < s.size(); ++drop) {
      std::vector<int> f;
      for (std::size_t q = 0; q < s.size(); ++q)
        if (q != drop) f.push_back(s[q]);
      m[row.at(f)][j] += (drop % 2 == 0) ? 1 : -1;
    }
  }
  return m;
}

namespace {

std::vector<cpp_int> smith(std::vector<std::vector<cpp_int>> a) {
  const std::size_t R = a.size();
  const std::size_t C = R ? a[0].size() : 0;
  std::vector<cpp_int> diag;
  std::size_t t = 0;
  while (t < R && t < C) {
    std::size_t pr = R, pc = C;
    cpp_int best = 0;
    for (std::size_t i = t; i < R; ++i)
      for (std::size_t j = t; j < C; ++j)
        if (a[i][j] != 0 && (best == 0 || abs(a[i][j]) < best)) {
          best = abs(a[i][j]);
          pr = i;
          pc = j;
        }
    if (pr == R) break;
    std::swap(a[t], a[pr]);
    for (auto& r : a) std::swap(r[t], r[pc]);
    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t i = t + 1; i < R; ++i) {
        if (a[i][t] == 0) continue;
        cpp_int q = a[i][t] / a[t][t];
        for (std::size_t j = t; j < C; ++j) a[i][j] -= q * a[t][j];
        if (a[i][t] != 0) {
          std::swap(a[t], a[i]);
          clean = false;
        }
      }
      for (std::size_t j = t + 1; j < C; ++j) {
        if (a[t][j] == 0) continue;
        cpp_int q = a[t][j] / a[t][t];
        for (std::size_t i = t; i < R; ++i) a[i][j] -= q * a[i][t];
        if (a[t][j] != 0) {
          for (auto& r : a) std::swap(r[t], r[j]);
          clean = false;
        }
      }
      if (!clean) continue;
      for (std::size_t i = t + 1; i < R && clean; ++i)
        for (std::size_t j = t + 1; j < C; ++j)
          if (a[i][j] % a[t][t] != 0) {
            for (std::size_t q = t; q < C; ++q) a[t][q] += a[i][q];
            clean = false;
            break;
          }
    }
    diag.push_back(abs(a[t][t]));
    ++t;
  }
  return diag;
}

}  // namespace

std::vector<std::string> smith_diagonal(const IntMatrix& m) {
  std::vector<std::vector<cpp_int>> a;
  for (const auto& r : m) a.emplace_back(r.begin(), r.end());
  std::vector<std::string> out;
  for (const auto& d : smith(std::move(a))) out.push_back(d.str());
  return out;
}

std::string HomologyGroup::to_string() const {
  std::string s;
  if (rank == 1) s = "Z";
  else if (rank > 1) s = "Z^" + std::to_string(rank);
  for (const auto& t : torsion) s += (s.empty() ? "" : " + ") + std::string("Z/") + t;
  return s.empty() ? "0" : s;
}

std::vector<HomologyGroup> homology(const NerveComplex& c) {
  const int D = c.dimension();
  std::vector<std::vector<std::string>> diag(D + 2);
  for (int k = 1; k <= D; ++k) diag[k] = smith_diagonal(c.boundary(k));
  std::vector<HomologyGroup> out;
  for (int k = 0; k <= D; ++k) {
    HomologyGroup g;
    int cycles = static_cast<int>(c.simplices[k].size()) - static_cast<int>(diag[k].size());
    int boundaries = static_cast<int>(diag[k + 1].size());
    g.rank = cycles - boundaries;
    for (const auto& d : diag[k + 1])
      if (d != "1") g.torsion.push_back(d);
    out.push_back(g);
  }
  return out;
}

std::string nerve_to_json(const NerveComplex& c) {
  nlohmann::json j;
  j["vertex_count"] = c.vertex_count;
  j["simplices"] = c.simplices;
  nlohmann::json h = nlohmann::json::array();
  for (const auto& g : homology(c)) h.push_back({{"rank", g.rank}, {"torsion", g.torsion}, {"group", g.to_string()}});
  j["homology"] = h;
  return j.dump();
}

}  // namespace stratoforest
