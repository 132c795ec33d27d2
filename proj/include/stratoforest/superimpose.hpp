#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "stratoforest/signature.hpp"

namespace stratoforest {

class DegenerateUnresolved : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class FaceColor { Neutral, Red, Blue, Purple };

struct Diagonal {
  int a = 0, b = 0;  ///< leaf labels, a < b
  Color color = Color::Red;
  std::vector<int> owners;  ///< indices of the signatures containing it
};

struct ArrPoint {
  double x = 0, y = 0;
  int leaf = -1;            ///< leaf label, or -1 for a crossing
  int d1 = -1, d2 = -1;     ///< crossing diagonals
};

struct Side {
  int diagonal = -1;  ///< -1 for a boundary arc
  int arc = -1;       ///< boundary arc k runs from leaf k to leaf k+1
  int p = -1, q = -1; ///< end points, counterclockwise around the cell
  int neighbor = -1;  ///< cell on the other side, -1 outside the disk
};

struct Cell {
  std::vector<Side> sides;
  FaceColor color = FaceColor::Neutral;
  int red_polygon = -1;
  int blue_polygon = -1;
  double cx = 0, cy = 0;
};

/// A face of the arrangement of one color's diagonals that touches the boundary circle only at leaves.
struct Polygon {
  Color color = Color::Red;
  std::vector<int> cells;
  std::vector<int> diagonals;  ///< diagonals bounding it
};

struct Arrangement {
  int n = 0;
  int signature_count = 0;
  std::vector<double> angle;  ///< perturbed leaf angles
  std::vector<Diagonal> diagonals;
  std::vector<ArrPoint> points;
  std::vector<Cell> cells;
  std::vector<Polygon> polygons;

  int crossings(int d) const;
  int opposite_crossings(int d) const;
};

/// Straight chords between perturbed 4n-th roots of unity; identical diagonals are merged.
Arrangement superimpose(const std::vector<GenericSignature>& sigs, std::uint64_t seed = 0);

/// No diagonal crosses more than p+1 diagonals of the opposite color.
bool compatible(const std::vector<GenericSignature>& sigs);
bool compatible(const Arrangement& arr);

enum class OverlapPattern { Disjoint, Triangle, Quadrilateral, DoubleTriangle, QuadruplePoint, NotAllowed };
std::string to_string(OverlapPattern p);

OverlapPattern classify_intersection(const Arrangement& arr, int red_polygon, int blue_polygon);

struct GraphEdge {
  Color color = Color::Red;
  int u = -1, v = -1;                  ///< node ids: leaves are 0..4n-1, inner vertices follow
  std::vector<std::pair<double, double>> path;
};

struct CanonicalGraph {
  int n = 0;
  std::vector<Color> inner_color;           ///< color of inner vertex 4n+i
  std::vector<std::pair<double, double>> inner_pos;
  std::vector<GraphEdge> edges;
  std::string failure;                      ///< nonempty when the construction broke down
};

CanonicalGraph canonical_graph(const Arrangement& arr);

/// The canonical graph as a signature, or nullopt if it is not one.
std::optional<Signature> graph_signature(const CanonicalGraph& g);

std::optional<Signature> common_incident(const std::vector<GenericSignature>& sigs, std::uint64_t seed = 0);

std::string arrangement_svg(const Arrangement& arr, const CanonicalGraph* graph = nullptr);
std::string arrangement_json(const Arrangement& arr);

}  // namespace stratoforest
