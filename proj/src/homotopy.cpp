#include "stratoforest/homotopy.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <sstream>

#include "stratoforest/tracer.hpp"

namespace stratoforest {

namespace {

constexpr double kPi = std::numbers::pi;

struct Jet {
  std::vector<cplx> sums;
  Eigen::MatrixXcd jac;
};

Jet power_sum_jet(const std::vector<cplx>& a, int n) {
  Polynomial p(n, a);
  auto full = p.full();
  auto crit = polynomial_roots(differentiate(full), 1e-14);
  const int m = n - 1;
  Jet j;
  j.sums.assign(m, 0.0);
  j.jac = Eigen::MatrixXcd::Zero(m, m);
  for (auto c : crit) {
    cplx v = horner(full, c);
    cplx vk = 1.0;  // v^(k-1)
    for (int k = 1; k <= m; ++k) {
      j.sums[k - 1] += vk * v;
      cplx ci = 1.0;
      for (int i = 0; i < m; ++i) {
        j.jac(k - 1, i) += static_cast<double>(k) * vk * ci;
        ci *= c;
      }
      vk *= v;
    }
  }
  return j;
}

double norm(const std::vector<cplx>& x) {
  double s = 0;
  for (auto v : x) s = std::max(s, std::abs(v));
  return s;
}

Eigen::VectorXcd to_vec(const std::vector<cplx>& x) {
  Eigen::VectorXcd v(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) v[i] = x[i];
  return v;
}

bool correct(std::vector<cplx>& a, int n, const std::vector<cplx>& target, int max_iter, double& first) {
  first = -1;
  for (int it = 0; it < max_iter; ++it) {
    Jet j = power_sum_jet(a, n);
    Eigen::VectorXcd r(target.size());
    for (std::size_t k = 0; k < target.size(); ++k) r[k] = j.sums[k] - target[k];
    Eigen::VectorXcd d = j.jac.fullPivLu().solve(-r);
    if (!d.allFinite()) return false;
    double step = d.cwiseAbs().maxCoeff();
    if (first < 0) first = step;
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += d[i];
    if (step <= 1e-13 * (1.0 + norm(a))) return true;
  }
  return false;
}

bool same_poly(const Polynomial& x, const Polynomial& y) {
  double scale = 1.0 + norm(x.coeffs);
  for (std::size_t i = 0; i < x.coeffs.size(); ++i)
    if (std::abs(x.coeffs[i] - y.coeffs[i]) > 1e-6 * scale) return false;
  return true;
}

std::vector<cplx> sums_of(const std::vector<cplx>& values, int n) {
  std::vector<cplx> s(n - 1, 0.0);
  for (auto v : values) {
    cplx vk = v;
    for (int k = 0; k < n - 1; ++k) {
      s[k] += vk;
      vk *= v;
    }
  }
  return s;
}

cplx random_value(std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  return {g(rng), g(rng)};
}

std::vector<cplx> random_point(std::mt19937_64& rng, int n) {
  std::vector<cplx> v(n - 1);
  for (auto& x : v) x = random_value(rng);
  return v;
}

void add_unique(std::vector<Polynomial>& set, const Polynomial& p) {
  for (const auto& q : set)
    if (same_poly(q, p)) return;
  set.push_back(p);
}

}  // namespace

long long cover_degree(int n) {
  if (n < 2) throw std::invalid_argument("degree must be at least 2");
  long long d = 1;
  for (int i = 0; i < n - 2; ++i) d *= n;
  return d;
}

std::vector<cplx> critical_power_sums(const Polynomial& p) { return power_sum_jet(p.coeffs, p.n).sums; }

Polynomial track_fiber_path(const Polynomial& start, const std::vector<cplx>& from, const std::vector<cplx>& to) {
  const int n = start.n;
  std::vector<cplx> a = start.coeffs;
  double lam = 0, h = 0.05;
  Eigen::VectorXcd dir = to_vec(to) - to_vec(from);
  while (lam < 1.0) {
    double hn = std::min(h, 1.0 - lam);
    Jet j = power_sum_jet(a, n);
    Eigen::VectorXcd da = j.jac.fullPivLu().solve(dir * hn);
    std::vector<cplx> trial(a);
    for (std::size_t i = 0; i < a.size(); ++i) trial[i] += da[i];
    std::vector<cplx> target(to.size());
    for (std::size_t k = 0; k < to.size(); ++k) target[k] = from[k] + (to[k] - from[k]) * (lam + hn);
    double first = 0;
    bool ok = da.allFinite() && correct(trial, n, target, 6, first);
    if (ok) ok = first <= 0.25 * da.cwiseAbs().maxCoeff() + 1e-12;
    if (!ok) {
      h *= 0.5;
      if (h < 1e-10) throw HomotopyPathFailure("fiber path stalled at parameter " + std::to_string(lam));
      continue;
    }
    a = trial;
    lam += hn;
    h = std::min(h * 1.5, 0.1);
  }
  double first = 0;
  if (!correct(a, n, to, 20, first)) throw HomotopyPathFailure("final Newton polish did not converge");
  return Polynomial(n, a);
}

FiberBase collect_sheets(int n, std::uint64_t seed, int stable_loops, int max_loops) {
  std::mt19937_64 rng(seed);
  FiberBase b;
  b.n = n;
  Polynomial base(n, random_point(rng, n));
  b.values = critical_values(base);
  b.sheets.push_back(base);
  if (n == 2) return b;
  auto p0 = sums_of(b.values, n);
  int quiet = 0;
  while (quiet < stable_loops && b.loops < max_loops) {
    ++b.loops;
    std::vector<cplx> p1(p0), p2(p0);
    for (auto& x : p1) x += 2.0 * random_value(rng);
    for (auto& x : p2) x += 2.0 * random_value(rng);
    std::size_t before = b.sheets.size();
    std::vector<Polynomial> found;
    for (const auto& s : b.sheets) {
      try {
        auto x = track_fiber_path(s, p0, p1);
        x = track_fiber_path(x, p1, p2);
        x = track_fiber_path(x, p2, p0);
        if (critical_value_error(x, b.values) < 1e-8) found.push_back(x);
      } catch (const HomotopyPathFailure&) {
      }
    }
    for (const auto& x : found) add_unique(b.sheets, x);
    quiet = (b.sheets.size() == before) ? quiet + 1 : 0;
  }
  return b;
}

double critical_value_error(const Polynomial& p, const std::vector<cplx>& values) {
  auto got = critical_values(p);
  if (got.size() != values.size()) return 1e300;
  std::vector<char> used(values.size(), 0);
  double worst = 0;
  for (auto g : got) {
    int best = -1;
    for (std::size_t i = 0; i < values.size(); ++i)
      if (!used[i] && (best < 0 || std::abs(values[i] - g) < std::abs(values[best] - g))) best = static_cast<int>(i);
    used[best] = 1;
    worst = std::max(worst, std::abs(values[best] - g) / std::max(std::abs(values[best]), 1e-300));
  }
  return worst;
}

std::vector<Polynomial> solve_fiber(const FiberBase& base, const std::vector<cplx>& values, std::uint64_t seed) {
  const int n = base.n;
  auto p0 = sums_of(base.values, n);
  auto p1 = sums_of(values, n);
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 4; ++attempt) {
    std::vector<Polynomial> out;
    bool ok = true;
    std::vector<cplx> mid(p0);
    for (std::size_t k = 0; k < mid.size(); ++k) mid[k] = 0.5 * (p0[k] + p1[k]) + (attempt == 0 ? 0.0 : 1.0) * random_value(rng);
    for (const auto& s : base.sheets) {
      try {
        Polynomial x = (attempt == 0) ? track_fiber_path(s, p0, p1) : track_fiber_path(track_fiber_path(s, p0, mid), mid, p1);
        if (critical_value_error(x, values) > 1e-8) {
          ok = false;
          break;
        }
        for (const auto& y : out)
          if (same_poly(x, y)) ok = false;
        out.push_back(x);
      } catch (const HomotopyPathFailure&) {
        ok = false;
      }
      if (!ok) break;
    }
    if (ok) return out;
  }
  throw HomotopyPathFailure("could not track every sheet to the target critical values");
}

std::vector<SigmaSequence> generic_cells(int n) {
  std::vector<SigmaSequence> out;
  const int m = n - 1;
  for (int a = 0; a <= m; ++a)
    for (int b = 0; a + b <= m; ++b)
      for (int c = 0; a + b + c <= m; ++c) {
        SigmaSequence s;
        s.counts = {a, b, c, m - a - b - c, 0, 0, 0, 0};
        out.push_back(s);
      }
  std::sort(out.begin(), out.end(), [](const SigmaSequence& x, const SigmaSequence& y) { return cell_name(x) < cell_name(y); });
  return out;
}

std::string cell_name(const SigmaSequence& cell) {
  static const char* names[8] = {"A", "B", "C", "D", "R+", "R-", "iR+", "iR-"};
  std::string s;
  for (int q = 0; q < 8; ++q)
    for (int k = 0; k < cell.counts[q]; ++k) s += (s.empty() ? "" : "x") + std::string(names[q]);
  return s;
}

SigmaSequence parse_cell(int n, const std::string& name) {
  SigmaSequence s;
  std::stringstream ss(name);
  std::string tok;
  while (std::getline(ss, tok, 'x')) {
    if (tok.size() != 1 || tok[0] < 'A' || tok[0] > 'D') throw std::invalid_argument("bad cell name '" + name + "'");
    ++s.counts[tok[0] - 'A'];
  }
  if (s.total() != n - 1) throw std::invalid_argument("cell '" + name + "' must list " + std::to_string(n - 1) + " quadrants");
  return s;
}

SurveyResult fiber_survey(const FiberBase& base, const SigmaSequence& cell, int samples, std::uint64_t seed) {
  if (cell.dimension() != 2 * (base.n - 1) || cell.total() != base.n - 1)
    throw std::invalid_argument("fiber survey needs a generic cell");
  SurveyResult r;
  r.cell = cell;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> radius(0.5, 2.0);
  std::uniform_real_distribution<double> frac(0.02, 0.98);
  for (int i = 0; i < samples; ++i) {
    std::vector<cplx> values;
    for (int q = 0; q < 4; ++q)
      for (int k = 0; k < cell.counts[q]; ++k) values.push_back(std::polar(radius(rng), (q + frac(rng)) * kPi / 2));
    ++r.samples;
    try {
      for (const auto& p : solve_fiber(base, values, seed + i)) ++r.counts[trace_drawing(p)];
    } catch (const std::exception&) {
      ++r.failures;
    }
  }
  return r;
}

std::string signature_hash(const Signature& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s.encode()) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string survey_csv(const std::vector<SurveyResult>& results) {
  std::ostringstream os;
  os << "cell,signature_hash,count\n";
  for (const auto& r : results) {
    std::vector<std::pair<std::string, int>> rows;
    for (const auto& [sig, c] : r.counts) rows.emplace_back(signature_hash(sig), c);
    std::sort(rows.begin(), rows.end());
    for (const auto& [h, c] : rows) os << cell_name(r.cell) << "," << h << "," << c << "\n";
  }
  return os.str();
}

}  // namespace stratoforest
