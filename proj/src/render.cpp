#include "stratoforest/render.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace stratoforest {

namespace {

constexpr double kPi = std::numbers::pi;
const char* kRed = "#c00000";
const char* kBlue = "#0030c0";
const char* kTint[4] = {"#fde9d9", "#e2efda", "#ddebf7", "#fff2cc"};

const char* stroke(Color c) { return c == Color::Red ? kRed : kBlue; }

struct Frame {
  double r, off;
  double x(double u) const { return off + r * u; }
  double y(double v) const { return off - r * v; }
};

std::ostream& num(std::ostream& os, double v) {
  double k = std::round(v * 100) / 100;
  if (k == 0) k = 0;
  return os << k;
}

void header(std::ostream& os, const Frame& f) {
  double size = 2 * f.off;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size << "\" viewBox=\"0 0 "
     << size << " " << size << "\">\n";
}

}  // namespace

std::vector<std::pair<double, double>> signature_layout(const Signature& s) {
  const auto& vs = s.vertices();
  const int L = s.leaf_count();
  std::vector<std::pair<double, double>> p(vs.size(), {0.0, 0.0});
  std::vector<std::vector<int>> nb(vs.size());
  for (const auto& e : s.edges()) {
    nb[e.u].push_back(e.v);
    nb[e.v].push_back(e.u);
  }
  for (std::size_t v = 0; v < vs.size(); ++v)
    if (vs[v].kind == VertexKind::Leaf) {
      double a = 2 * kPi * vs[v].label / L;
      p[v] = {std::cos(a), std::sin(a)};
    }
  for (int it = 0; it < 500; ++it)
    for (std::size_t v = 0; v < vs.size(); ++v) {
      if (vs[v].kind == VertexKind::Leaf || nb[v].empty()) continue;
      double x = 0, y = 0;
      for (int w : nb[v]) {
        x += p[w].first;
        y += p[w].second;
      }
      p[v] = {x / nb[v].size(), y / nb[v].size()};
    }
  return p;
}

std::string signature_svg(const Signature& s, const RenderSpec& spec) {
  Frame f{spec.radius, spec.radius * 1.15};
  auto pos = signature_layout(s);
  const int L = s.leaf_count();
  auto control = [&](int h) {
    auto [ax, ay] = pos[s.origin(h)];
    auto [bx, by] = pos[s.target(h)];
    return std::pair<double, double>{0.4 * (ax + bx), 0.4 * (ay + by)};
  };
  std::ostringstream os;
  header(os, f);
  os << "<circle cx=\"" << f.off << "\" cy=\"" << f.off << "\" r=\"" << f.r << "\" fill=\"white\" stroke=\"black\"/>\n";
  if (spec.tint) {
    for (const auto& face : faces(s)) {
      int q = face_quadrant(s, face);
      if (q < 0) continue;
      int start = face[0] >= 0 ? s.origin(face[0]) : s.leaf_vertex(-face[0] - 1);
      os << "<path fill=\"" << kTint[q] << "\" stroke=\"none\" d=\"M";
      num(os << " ", f.x(pos[start].first)) << " ";
      num(os, f.y(pos[start].second));
      for (int h : face) {
        if (h >= 0) {
          auto [cx, cy] = control(h);
          auto [tx, ty] = pos[s.target(h)];
          num(os << " Q ", f.x(cx)) << " ";
          num(os, f.y(cy)) << " ";
          num(os, f.x(tx)) << " ";
          num(os, f.y(ty));
        } else {
          int k = (-h) % L;
          auto [tx, ty] = pos[s.leaf_vertex(k)];
          os << " A " << f.r << " " << f.r << " 0 0 0 ";
          num(os, f.x(tx)) << " ";
          num(os, f.y(ty));
        }
      }
      os << " Z\"/>\n";
    }
  }
  for (std::size_t e = 0; e < s.edges().size(); ++e) {
    int h = 2 * static_cast<int>(e);
    auto [ax, ay] = pos[s.origin(h)];
    auto [bx, by] = pos[s.target(h)];
    auto [cx, cy] = control(h);
    os << "<path fill=\"none\" stroke=\"" << stroke(s.edges()[e].color) << "\" stroke-width=\"2\" d=\"M ";
    num(os, f.x(ax)) << " ";
    num(os, f.y(ay)) << " Q ";
    num(os, f.x(cx)) << " ";
    num(os, f.y(cy)) << " ";
    num(os, f.x(bx)) << " ";
    num(os, f.y(by)) << "\"/>\n";
  }
  for (std::size_t v = 0; v < s.vertices().size(); ++v) {
    const Vertex& x = s.vertices()[v];
    if (x.kind == VertexKind::Leaf) {
      if (!spec.labels) continue;
      os << "<text x=\"";
      num(os, f.x(1.08 * pos[v].first)) << "\" y=\"";
      num(os, f.y(1.08 * pos[v].second) + 4) << "\" font-size=\"12\" text-anchor=\"middle\" fill=\"" << stroke(x.color)
                                             << "\">" << x.label << "</text>\n";
      continue;
    }
    os << "<circle cx=\"";
    num(os, f.x(pos[v].first)) << "\" cy=\"";
    num(os, f.y(pos[v].second)) << "\" r=\"4\" ";
    if (x.kind == VertexKind::Root)
      os << "fill=\"white\" stroke=\"black\"/>\n";
    else
      os << "fill=\"" << stroke(x.color) << "\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

std::string drawing_svg(const TraceResult& r, const RenderSpec& spec) {
  Frame f{spec.radius, spec.radius * 1.15};
  const double R = r.start_radius > 0 ? r.start_radius : 1.0;
  std::ostringstream os;
  header(os, f);
  os << "<circle cx=\"" << f.off << "\" cy=\"" << f.off << "\" r=\"" << f.r << "\" fill=\"white\" stroke=\"black\"/>\n";
  for (const auto& seg : r.segments) {
    os << "<polyline fill=\"none\" stroke=\"" << stroke(seg.color) << "\" stroke-width=\"2\" points=\"";
    for (auto z : seg.points) {
      num(os, f.x(z.real() / R)) << ",";
      num(os, f.y(z.imag() / R)) << " ";
    }
    os << "\"/>\n";
  }
  for (auto z : r.roots) {
    os << "<circle cx=\"";
    num(os, f.x(z.real() / R)) << "\" cy=\"";
    num(os, f.y(z.imag() / R)) << "\" r=\"4\" fill=\"white\" stroke=\"black\"/>\n";
  }
  for (const auto& c : r.critical) {
    os << "<circle cx=\"";
    num(os, f.x(c.z.real() / R)) << "\" cy=\"";
    num(os, f.y(c.z.imag() / R)) << "\" r=\"3\" fill=\"black\"/>\n";
  }
  if (spec.labels) {
    const int L = 4 * r.signature.n();
    for (int k = 0; k < L; ++k) {
      double a = 2 * kPi * k / L;
      os << "<text x=\"";
      num(os, f.x(1.08 * std::cos(a))) << "\" y=\"";
      num(os, f.y(1.08 * std::sin(a)) + 4) << "\" font-size=\"12\" text-anchor=\"middle\" fill=\"" << stroke(leaf_color(k))
                                           << "\">" << k << "</text>\n";
    }
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace stratoforest
