#include "stratoforest/polynomial.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <regex>
#include <sstream>

#include "json.hpp"

namespace stratoforest {

namespace {

cplx parse_complex(std::string tok) {
  tok.erase(std::remove_if(tok.begin(), tok.end(), ::isspace), tok.end());
  static const std::regex num(R"([+-]?(\d+\.?\d*|\.\d+)([eE][+-]?\d+)?)");
  static const std::regex full(R"(([+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)([+-](?:\d+\.?\d*|\.\d+)?(?:[eE][+-]?\d+)?)[ij])");
  static const std::regex imag(R"(([+-]?(?:\d+\.?\d*|\.\d+)?(?:[eE][+-]?\d+)?)[ij])");
  std::smatch m;
  auto coef = [](const std::string& s) {
    if (s.empty() || s == "+") return 1.0;
    if (s == "-") return -1.0;
    return std::stod(s);
  };
  if (std::regex_match(tok, num)) return {std::stod(tok), 0.0};
  if (std::regex_match(tok, m, full)) return {std::stod(m[1].str()), coef(m[2].str())};
  if (std::regex_match(tok, m, imag)) return {0.0, coef(m[1].str())};
  throw std::invalid_argument("cannot parse coefficient '" + tok + "'");
}

double scale_of(const std::vector<cplx>& c) {
  const int d = static_cast<int>(c.size()) - 1;
  double r = 0;
  for (int k = 0; k < d; ++k) r = std::max(r, std::pow(std::abs(c[k] / c[d]), 1.0 / (d - k)));
  return r;
}

std::vector<cplx> companion_roots(const std::vector<cplx>& c) {
  const int d = static_cast<int>(c.size()) - 1;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
  for (int i = 1; i < d; ++i) m(i, i - 1) = 1.0;
  for (int i = 0; i < d; ++i) m(i, d - 1) = -c[i] / c[d];
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(m, false);
  if (es.info() != Eigen::Success) throw RootFindingDiverged("companion eigenvalue solver failed");
  std::vector<cplx> out(d);
  for (int i = 0; i < d; ++i) out[i] = es.eigenvalues()[i];
  return out;
}

void newton_polish(const std::vector<cplx>& c, std::vector<cplx>& z) {
  auto dc = differentiate(c);
  for (auto& x : z)
    for (int it = 0; it < 8; ++it) {
      cplx d = horner(dc, x);
      if (std::abs(d) == 0.0) break;
      cplx step = horner(c, x) / d;
      x -= step;
      if (std::abs(step) <= 1e-16 * (1 + std::abs(x))) break;
    }
}

}  // namespace

Polynomial::Polynomial(int degree, std::vector<cplx> a) : n(degree), coeffs(std::move(a)) {
  if (n < 2) throw std::invalid_argument("degree must be at least 2");
  if (static_cast<int>(coeffs.size()) != n - 1)
    throw std::invalid_argument("expected " + std::to_string(n - 1) + " coefficients a_0..a_{n-2}");
}

std::vector<cplx> Polynomial::full() const {
  std::vector<cplx> c(coeffs);
  c.push_back(0.0);
  c.push_back(1.0);
  return c;
}

cplx Polynomial::operator()(cplx z) const { return horner(full(), z); }

cplx Polynomial::derivative(cplx z, int order) const {
  auto c = full();
  for (int i = 0; i < order; ++i) c = differentiate(c);
  return horner(c, z);
}

Polynomial Polynomial::parse(const std::string& text) {
  auto first = text.find_first_not_of(" \t\n");
  if (first != std::string::npos && text[first] == '{') {
    auto j = nlohmann::json::parse(text);
    int n = j.at("n").get<int>();
    std::vector<cplx> a;
    for (const auto& c : j.at("coeffs")) a.emplace_back(c.at(0).get<double>(), c.at(1).get<double>());
    return Polynomial(n, std::move(a));
  }
  std::vector<cplx> hi;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) hi.push_back(parse_complex(tok));
  if (hi.size() < 3) throw std::invalid_argument("need at least 3 coefficients (degree >= 2)");
  if (std::abs(hi[0] - cplx(1.0)) > 1e-15) throw std::invalid_argument("polynomial must be monic");
  const int n = static_cast<int>(hi.size()) - 1;
  std::vector<cplx> c(hi.rbegin(), hi.rend());
  // Tschirnhausen shift z -> z - c_{n-1}/n removes the z^{n-1} term.
  cplx shift = -c[n - 1] / static_cast<double>(n);
  std::vector<cplx> out(n + 1, 0.0);
  for (int k = n; k >= 0; --k) {
    for (int i = n; i >= 1; --i) out[i] = out[i] * shift + out[i - 1];
    out[0] = out[0] * shift + c[k];
  }
  // out now holds coefficients of P(z + shift) in increasing order.
  return Polynomial(n, std::vector<cplx>(out.begin(), out.begin() + (n - 1)));
}

std::string Polynomial::to_json() const {
  nlohmann::json j;
  j["n"] = n;
  j["coeffs"] = nlohmann::json::array();
  for (auto c : coeffs) j["coeffs"].push_back({c.real(), c.imag()});
  return j.dump();
}

cplx horner(const std::vector<cplx>& c, cplx z) {
  cplx r = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * z + *it;
  return r;
}

std::vector<cplx> differentiate(const std::vector<cplx>& c) {
  std::vector<cplx> d;
  for (std::size_t k = 1; k < c.size(); ++k) d.push_back(c[k] * static_cast<double>(k));
  if (d.empty()) d.push_back(0.0);
  return d;
}

std::vector<cplx> polynomial_roots(const std::vector<cplx>& c_in, double tol) {
  std::vector<cplx> c(c_in);
  while (c.size() > 1 && std::abs(c.back()) == 0.0) c.pop_back();
  const int d = static_cast<int>(c.size()) - 1;
  if (d < 1) return {};
  if (d == 1) return {-c[0] / c[1]};
  auto dc = differentiate(c);
  const double r0 = std::max(scale_of(c), 1e-3);
  std::vector<cplx> z(d);
  for (int k = 0; k < d; ++k) z[k] = std::polar(r0, 2 * std::numbers::pi * k / d + 0.4);
  bool converged = false;
  for (int it = 0; it < 600 && !converged; ++it) {
    converged = true;
    for (int k = 0; k < d; ++k) {
      cplx pv = horner(c, z[k]);
      cplx dv = horner(dc, z[k]);
      if (std::abs(pv) == 0.0) continue;
      cplx ratio = pv / dv;
      cplx sum = 0;
      for (int j = 0; j < d; ++j)
        if (j != k) sum += 1.0 / (z[k] - z[j]);
      cplx w = ratio / (1.0 - ratio * sum);
      if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) {
        converged = false;
        break;
      }
      z[k] -= w;
      if (std::abs(w) > tol * (r0 + std::abs(z[k]))) converged = false;
    }
  }
  bool finite = std::all_of(z.begin(), z.end(), [](cplx x) { return std::isfinite(x.real()) && std::isfinite(x.imag()); });
  if (!converged || !finite) {
    z = companion_roots(c);
    newton_polish(c, z);
    for (auto x : z)
      if (!std::isfinite(x.real()) || !std::isfinite(x.imag()))
        throw RootFindingDiverged("root finding produced non-finite values");
  }
  return z;
}

std::vector<CriticalPoint> critical_points(const Polynomial& p, double tol) {
  auto full = p.full();
  auto dc = differentiate(full);
  auto zs = polynomial_roots(dc, tol);
  double scale = 1.0 + scale_of(full);
  double cluster = 1e-5 * scale;
  std::vector<CriticalPoint> out;
  std::vector<char> used(zs.size(), 0);
  for (std::size_t i = 0; i < zs.size(); ++i) {
    if (used[i]) continue;
    cplx sum = zs[i];
    int m = 1;
    used[i] = 1;
    for (std::size_t j = i + 1; j < zs.size(); ++j)
      if (!used[j] && std::abs(zs[j] - zs[i]) < cluster) {
        used[j] = 1;
        sum += zs[j];
        ++m;
      }
    CriticalPoint cp;
    cp.z = sum / static_cast<double>(m);
    cp.multiplicity = m;
    cp.value = p(cp.z);
    out.push_back(cp);
  }
  std::sort(out.begin(), out.end(), [](const CriticalPoint& a, const CriticalPoint& b) {
    return std::pair(a.z.real(), a.z.imag()) < std::pair(b.z.real(), b.z.imag());
  });
  return out;
}

std::vector<cplx> critical_values(const Polynomial& p, double tol) {
  double scale = 1.0;
  for (auto a : p.coeffs) scale = std::max(scale, std::abs(a));
  std::vector<cplx> out;
  for (const auto& cp : critical_points(p, tol)) {
    if (std::abs(cp.value) <= 1e3 * tol * scale)
      throw DistinctRootsViolated("critical value vanishes: P has a multiple root");
    for (int k = 0; k < cp.multiplicity; ++k) out.push_back(cp.value);
  }
  return out;
}

int classify_value(cplx v, double axis_tol) {
  const double r = std::abs(v);
  if (r == 0.0) throw DistinctRootsViolated("zero critical value");
  const double dre = std::abs(v.imag()) / r;  // distance to the real axis
  const double dim = std::abs(v.real()) / r;  // distance to the imaginary axis
  const double guard = 1e3 * axis_tol;
  if (dre <= axis_tol) return v.real() > 0 ? 4 : 5;
  if (dim <= axis_tol) return v.imag() > 0 ? 6 : 7;
  if (dre <= guard || dim <= guard) {
    std::ostringstream os;
    os << "value " << v.real() << (v.imag() < 0 ? "" : "+") << v.imag() << "i is too close to an axis to classify";
    throw AmbiguousClassification(os.str());
  }
  if (v.real() > 0) return v.imag() > 0 ? 0 : 3;
  return v.imag() > 0 ? 1 : 2;
}

int axis_ray(int position) {
  switch (position) {
    case 4: return 0;
    case 5: return 2;
    case 6: return 1;
    case 7: return 3;
    default: return -1;
  }
}

int SigmaSequence::dimension() const {
  return 2 * (counts[0] + counts[1] + counts[2] + counts[3]) + counts[4] + counts[5] + counts[6] + counts[7];
}

int SigmaSequence::total() const {
  int t = 0;
  for (int c : counts) t += c;
  return t;
}

std::string SigmaSequence::to_string() const {
  std::string s = "(";
  for (int i = 0; i < 8; ++i) s += std::to_string(counts[i]) + (i < 7 ? "," : ")");
  return s;
}

SigmaSequence sigma_sequence(const std::vector<cplx>& values, double axis_tol) {
  SigmaSequence s;
  for (auto v : values) ++s.counts[classify_value(v, axis_tol)];
  return s;
}

}  // namespace stratoforest
