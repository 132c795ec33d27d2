#pragma once

#include <array>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace stratoforest {

using cplx = std::complex<double>;

class DistinctRootsViolated : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
class RootFindingDiverged : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
class AmbiguousClassification : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// z^n + a_{n-2} z^{n-2} + ... + a_0; coeffs[i] is a_i.
struct Polynomial {
  int n = 0;
  std::vector<cplx> coeffs;

  Polynomial() = default;
  Polynomial(int degree, std::vector<cplx> a);

  /// Full coefficient vector c_0..c_n (c_n = 1, c_{n-1} = 0).
  std::vector<cplx> full() const;
  cplx operator()(cplx z) const;
  cplx derivative(cplx z, int order = 1) const;

  /// Parses monic coefficients highest degree first ("1,0,-1", entries like 1+2i), shifted to kill z^{n-1},
  /// or a JSON object {"n":..,"coeffs":[[re,im],..]} listing a_0..a_{n-2}.
  static Polynomial parse(const std::string& text);
  std::string to_json() const;
};

cplx horner(const std::vector<cplx>& c, cplx z);
std::vector<cplx> differentiate(const std::vector<cplx>& c);

/// All roots of sum c_k z^k, by simultaneous (Aberth) iteration with a companion-matrix fallback.
std::vector<cplx> polynomial_roots(const std::vector<cplx>& c, double tol = 1e-12);

struct CriticalPoint {
  cplx z;
  int multiplicity = 1;  ///< order of vanishing of P'
  cplx value;
};

std::vector<CriticalPoint> critical_points(const Polynomial& p, double tol = 1e-12);

/// Critical values with multiplicity; throws DistinctRootsViolated if one vanishes.
std::vector<cplx> critical_values(const Polynomial& p, double tol = 1e-12);

/// Position of a value: 0..3 for quadrants A..D, 4..7 for the semi-axes R+, R-, iR+, iR-.
int classify_value(cplx v, double axis_tol = 1e-9);

/// Image-ray class (0 = R+, 1 = iR+, 2 = R-, 3 = iR-) of an axis position from classify_value, -1 for quadrants.
int axis_ray(int position);

struct SigmaSequence {
  std::array<int, 8> counts{};  ///< a, b, c, d, e, f, g, h
  int dimension() const;
  int total() const;
  bool operator==(const SigmaSequence&) const = default;
  std::string to_string() const;
};

SigmaSequence sigma_sequence(const std::vector<cplx>& values, double axis_tol = 1e-9);

}  // namespace stratoforest
