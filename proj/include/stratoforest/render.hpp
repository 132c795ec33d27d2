#pragma once

#include <string>
#include <utility>
#include <vector>

#include "stratoforest/signature.hpp"
#include "stratoforest/tracer.hpp"

namespace stratoforest {

struct RenderSpec {
  double radius = 200;
  bool labels = true;
  bool tint = true;  ///< fill faces by the quadrant they lie over
};

/// Leaves on the unit circle at 2*pi*k/4n; inner vertices at the barycenter of their neighbors.
std::vector<std::pair<double, double>> signature_layout(const Signature& s);

/// Edges as quadratic curves pulled toward the center.
std::string signature_svg(const Signature& s, const RenderSpec& spec = {});

/// Traced curves of a polynomial, scaled so the start circle maps to the disk boundary.
std::string drawing_svg(const TraceResult& r, const RenderSpec& spec = {});

}  // namespace stratoforest
