#pragma once

#include <stdexcept>
#include <vector>

#include "stratoforest/polynomial.hpp"
#include "stratoforest/signature.hpp"

namespace stratoforest {

class TraceStalled : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
class VertexResolutionFailed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct TraceOptions {
  double axis_tol = 1e-9;
  double root_tol = 1e-12;
  double initial_step = 0.05;  ///< step in log|P| along a curve
  double min_step = 1e-12;
  double vertex_offset = 1e-8; ///< relative level offset used to leave and reach critical points
  double start_radius = 0.0;   ///< 0 picks a coefficient bound automatically
};

/// A sampled curve segment of the drawing, for rendering.
struct TracedSegment {
  Color color = Color::Red;
  std::vector<cplx> points;
};

struct TraceResult {
  Signature signature;
  std::vector<TracedSegment> segments;
  std::vector<cplx> roots;
  std::vector<CriticalPoint> critical;
  double start_radius = 0.0;
};

/// Traces P^{-1}(R u iR) from the 4n asymptotic directions and assembles the signature.
TraceResult trace(const Polynomial& p, const TraceOptions& opt = {});

Signature trace_drawing(const Polynomial& p, const TraceOptions& opt = {});

/// Sum over axis-valued critical points of (valency - 3), valency = 2 (multiplicity + 1).
int axis_codimension(const Polynomial& p, const TraceOptions& opt = {});

/// z -> i P(e^{-i pi / 2n} z); its drawing is the drawing of P rotated by one leaf step.
Polynomial rotate_polynomial(const Polynomial& p);

}  // namespace stratoforest
