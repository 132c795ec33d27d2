#include "stratoforest/tracer.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace stratoforest {

namespace {

constexpr double kPi = std::numbers::pi;

struct RawEdge {
  Color color;
  int u, v;
  double au, av;
};

struct Path {
  cplx z;
  int from;
  double angle;
  std::vector<cplx> pts;
};

struct AxisVertex {
  CriticalPoint cp;
  int ray;
  int vertex;
};

class Tracer {
 public:
  Tracer(const Polynomial& p, const TraceOptions& opt) : p_(p), opt_(opt) {
    full_ = p.full();
    d1_ = differentiate(full_);
    d2_ = differentiate(d1_);
  }

  TraceResult run();

 private:
  cplx P(cplx z) const { return horner(full_, z); }
  cplx dP(cplx z) const { return horner(d1_, z); }
  cplx ddP(cplx z) const { return horner(d2_, z); }

  bool newton_level(cplx& z, cplx target) const;
  void advance(Path& path, cplx s, double t0, double t1);
  std::vector<Path> start_paths(int q, cplx s, double& T);

  const Polynomial& p_;
  TraceOptions opt_;
  std::vector<cplx> full_, d1_, d2_;
  std::vector<RawEdge> edges_;
  std::vector<TracedSegment> segments_;
};

bool Tracer::newton_level(cplx& z, cplx target) const {
  for (int it = 0; it < 10; ++it) {
    cplx d = dP(z);
    if (std::abs(d) == 0.0) return false;
    cplx step = (P(z) - target) / d;
    z -= step;
    double magnitude = std::abs(target);
    double r = 1.0;
    for (auto c : full_) {
      magnitude += std::abs(c) * r;
      r *= std::abs(z);
    }
    const double floor = 1e-14 * magnitude / std::abs(d);
    if (std::abs(step) <= 1e-13 * (1.0 + std::abs(z)) + floor) return true;
  }
  return false;
}

void Tracer::advance(Path& path, cplx s, double t0, double t1) {
  double u = std::log(t0);
  const double u1 = std::log(t1);
  double h = -opt_.initial_step;
  cplx z = path.z;
  while (u > u1) {
    double hn = std::max(h, u1 - u);
    double tn = (u + hn <= u1) ? t1 : std::exp(u + hn);
    double t = std::exp(u);
    cplx d1 = dP(z);
    cplx pred = z + s * (tn - t) / d1;
    double rho = std::abs(d1) / std::max(std::abs(ddP(z)), 1e-300);
    bool ok = std::abs(pred - z) <= 0.1 * rho;
    cplx zn = pred;
    if (ok) ok = newton_level(zn, s * tn);
    if (ok) ok = std::abs(zn - pred) <= 0.1 * std::abs(pred - z) + 1e-12 * (1.0 + std::abs(z));
    if (!ok) {
      h *= 0.5;
      if (-h < opt_.min_step) throw TraceStalled("continuation step underflow near z = " + std::to_string(z.real()) + "+" + std::to_string(z.imag()) + "i");
      continue;
    }
    z = zn;
    u = (tn == t1) ? u1 : u + hn;
    path.pts.push_back(z);
    h = std::max(h * 1.5, -0.5);
  }
  path.z = z;
}

std::vector<Path> Tracer::start_paths(int q, cplx s, double& T) {
  const int n = p_.n;
  const double step = 2 * kPi / (4 * n);
  for (int attempt = 0; attempt < 10; ++attempt, T *= 16) {
    auto c = full_;
    c[0] -= s * T;
    auto zs = polynomial_roots(c, opt_.root_tol);
    std::vector<Path> out;
    std::vector<char> used(4 * n, 0);
    bool good = true;
    for (auto z : zs) {
      double th = std::arg(z);
      if (th < 0) th += 2 * kPi;
      int k = static_cast<int>(std::lround(th / step)) % (4 * n);
      double dev = std::abs(std::remainder(th - k * step, 2 * kPi));
      if (dev > 0.25 * step || axis_class(k) != q || used[k]) {
        good = false;
        break;
      }
      used[k] = 1;
      out.push_back(Path{z, k, 0.0, {z}});
    }
    if (good) return out;
  }
  throw VertexResolutionFailed("could not match asymptotic directions to leaves");
}

TraceResult Tracer::run() {
  const int n = p_.n;
  const int L = 4 * n;
  TraceResult res;
  critical_values(p_, opt_.root_tol);
  res.roots = polynomial_roots(full_, opt_.root_tol);
  double scale = 1.0;
  for (auto a : p_.coeffs) scale = std::max(scale, std::pow(std::abs(a), 1.0 / n));
  for (std::size_t i = 0; i < res.roots.size(); ++i)
    for (std::size_t j = i + 1; j < res.roots.size(); ++j)
      if (std::abs(res.roots[i] - res.roots[j]) < 1e-7 * scale) throw DistinctRootsViolated("P has a multiple root");
  res.critical = critical_points(p_, opt_.root_tol);

  std::vector<Vertex> verts;
  for (int k = 0; k < L; ++k) verts.push_back(Vertex{VertexKind::Leaf, k, leaf_color(k)});
  for (int r = 0; r < n; ++r) verts.push_back(Vertex{VertexKind::Root, -1, Color::Red});
  std::vector<AxisVertex> axis;
  for (const auto& cp : res.critical) {
    int ray = axis_ray(classify_value(cp.value, opt_.axis_tol));
    if (ray < 0) continue;
    Color c = (ray % 2 == 0) ? Color::Red : Color::Blue;
    axis.push_back(AxisVertex{cp, ray, static_cast<int>(verts.size())});
    verts.push_back(Vertex{VertexKind::Critical, -1, c});
  }

  double R0 = opt_.start_radius;
  if (R0 <= 0) {
    double b = 1.0;
    for (int i = 0; i < n - 1; ++i) b = std::max(b, std::pow(std::abs(p_.coeffs[i]), 1.0 / (n - i)));
    R0 = 2.0 * b;
  }
  res.start_radius = R0;

  double min_sep = 1e300;
  double min_slope = 1e300;
  for (std::size_t i = 0; i < res.roots.size(); ++i) {
    min_slope = std::min(min_slope, std::abs(dP(res.roots[i])));
    for (std::size_t j = i + 1; j < res.roots.size(); ++j) min_sep = std::min(min_sep, std::abs(res.roots[i] - res.roots[j]));
  }
  const double t_end = 1e-4 * min_slope * min_sep;
  std::vector<std::vector<int>> root_hits(n, std::vector<int>(4, 0));

  for (int q = 0; q < 4; ++q) {
    const cplx s = std::polar(1.0, q * kPi / 2);
    const Color color = (q % 2 == 0) ? Color::Red : Color::Blue;
    std::vector<const AxisVertex*> levels;
    double vmax = 0;
    for (const auto& a : axis) {
      vmax = std::max(vmax, std::abs(a.cp.value));
      if (a.ray == q) levels.push_back(&a);
    }
    std::sort(levels.begin(), levels.end(),
              [](const AxisVertex* a, const AxisVertex* b) { return std::abs(a->cp.value) > std::abs(b->cp.value); });
    double T = std::max(std::pow(R0, n), 4 * vmax);
    auto paths = start_paths(q, s, T);
    double t = T;
    auto finish = [&](Path& path, int vertex, double angle) {
      edges_.push_back(RawEdge{color, path.from, vertex, path.angle, angle});
      segments_.push_back(TracedSegment{color, std::move(path.pts)});
    };

    std::size_t li = 0;
    while (li < levels.size()) {
      const double tc = std::abs(levels[li]->cp.value);
      std::vector<const AxisVertex*> group;
      while (li < levels.size() && std::abs(std::abs(levels[li]->cp.value) - tc) <= 1e-9 * tc) group.push_back(levels[li++]);
      double gap = (li < levels.size()) ? (tc - std::abs(levels[li]->cp.value)) / tc : 1.0;
      gap = std::min(gap, (t - tc) / tc);
      const double delta = std::min(opt_.vertex_offset, 0.01 * gap);
      const double t_hi = tc * (1 + delta);
      const double t_lo = tc * (1 - delta);
      for (auto& path : paths) advance(path, s, t, t_hi);

      std::vector<char> taken(paths.size(), 0);
      std::vector<Path> departures;
      for (const AxisVertex* av : group) {
        const int m = av->cp.multiplicity;
        const cplx c = av->cp.z;
        double fact = 1;
        for (int k = 2; k <= m + 1; ++k) fact *= k;
        const cplx a = p_.derivative(c, m + 1) / fact;
        const double r_exp = std::pow(delta * tc / std::abs(a), 1.0 / (m + 1));
        int count = 0;
        for (std::size_t i = 0; i < paths.size(); ++i)
          if (!taken[i] && std::abs(paths[i].z - c) < 3 * r_exp) {
            taken[i] = 1;
            ++count;
            paths[i].pts.push_back(c);
            finish(paths[i], av->vertex, std::arg(paths[i].z - c));
          }
        if (count != m + 1)
          throw VertexResolutionFailed("expected " + std::to_string(m + 1) + " curves arriving at a critical point, found " +
                                       std::to_string(count));
        const cplx w0 = std::pow(-delta * tc * s / a, 1.0 / (m + 1));
        std::vector<cplx> outs;
        for (int j = 0; j <= m; ++j) {
          cplx z = c + w0 * std::polar(1.0, 2 * kPi * j / (m + 1));
          if (!newton_level(z, s * t_lo)) throw VertexResolutionFailed("could not leave a critical point");
          for (auto o : outs)
            if (std::abs(o - z) < 0.1 * r_exp) throw VertexResolutionFailed("departing curves coincide");
          outs.push_back(z);
          departures.push_back(Path{z, av->vertex, std::arg(z - c), {c, z}});
        }
      }
      std::vector<Path> next;
      for (std::size_t i = 0; i < paths.size(); ++i)
        if (!taken[i]) {
          advance(paths[i], s, t_hi, t_lo);
          next.push_back(std::move(paths[i]));
        }
      for (auto& d : departures) next.push_back(std::move(d));
      paths = std::move(next);
      t = t_lo;
    }
    if (static_cast<int>(paths.size()) != n) throw VertexResolutionFailed("curve count mismatch before reaching the roots");
    for (auto& path : paths) {
      advance(path, s, t, std::min(t_end, 0.5 * t));
      cplx z = path.z;
      if (!newton_level(z, 0.0)) throw VertexResolutionFailed("could not reach a root");
      int best = -1;
      for (int r = 0; r < n; ++r)
        if (best < 0 || std::abs(res.roots[r] - z) < std::abs(res.roots[best] - z)) best = r;
      if (std::abs(res.roots[best] - z) > 0.25 * min_sep) throw VertexResolutionFailed("curve ended away from every root");
      if (root_hits[best][q]++) throw VertexResolutionFailed("two curves of one ray reached the same root");
      path.pts.push_back(res.roots[best]);
      finish(path, L + best, std::arg(s / dP(res.roots[best])));
    }
  }

  std::vector<std::vector<std::pair<double, int>>> around(verts.size());
  std::vector<Edge> edges;
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    edges.push_back(Edge{edges_[e].color, edges_[e].u, edges_[e].v});
    around[edges_[e].u].push_back({edges_[e].au, static_cast<int>(2 * e)});
    around[edges_[e].v].push_back({edges_[e].av, static_cast<int>(2 * e + 1)});
  }
  std::vector<std::vector<int>> rotation(verts.size());
  for (std::size_t v = 0; v < verts.size(); ++v) {
    std::sort(around[v].begin(), around[v].end());
    for (auto& [ang, h] : around[v]) rotation[v].push_back(h);
  }
  Signature raw(n, verts, edges, rotation);
  res.signature = validate(raw);
  res.segments = std::move(segments_);
  return res;
}

}  // namespace

TraceResult trace(const Polynomial& p, const TraceOptions& opt) { return Tracer(p, opt).run(); }

Signature trace_drawing(const Polynomial& p, const TraceOptions& opt) { return trace(p, opt).signature; }

int axis_codimension(const Polynomial& p, const TraceOptions& opt) {
  int c = 0;
  for (const auto& cp : critical_points(p, opt.root_tol))
    if (axis_ray(classify_value(cp.value, opt.axis_tol)) >= 0) c += 2 * (cp.multiplicity + 1) - 3;
  return c;
}

Polynomial rotate_polynomial(const Polynomial& p) {
  std::vector<cplx> a(p.coeffs);
  for (int k = 0; k < static_cast<int>(a.size()); ++k)
    a[k] *= cplx(0, 1) * std::polar(1.0, -kPi * k / (2.0 * p.n));
  return Polynomial(p.n, std::move(a));
}

}  // namespace stratoforest
