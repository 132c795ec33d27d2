#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace stratoforest {

enum class Color : std::uint8_t { Red = 0, Blue = 1 };

inline Color other(Color c) { return c == Color::Red ? Color::Blue : Color::Red; }
inline char color_char(Color c) { return c == Color::Red ? 'R' : 'B'; }

/// Color of the boundary leaf with the given label (even labels are red).
inline Color leaf_color(int label) { return (label % 2 == 0) ? Color::Red : Color::Blue; }

/// Axis class of a leaf: 0 = R+, 1 = iR+, 2 = R-, 3 = iR-.
inline int axis_class(int label) { return ((label % 4) + 4) % 4; }

enum class VertexKind : std::uint8_t { Leaf = 0, Root = 1, Critical = 2 };

struct Vertex {
  VertexKind kind = VertexKind::Leaf;
  int label = -1;           ///< leaf label, -1 otherwise
  Color color = Color::Red; ///< meaningful for critical vertices only

  auto operator<=>(const Vertex&) const = default;
};

struct Edge {
  Color color = Color::Red;
  int u = -1;
  int v = -1;

  auto operator<=>(const Edge&) const = default;
};

class SignatureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class ViolationKind {
  CycleFound,
  BadLeafCount,
  ColorAlternationViolated,
  TooManyCriticalVertices,
  ParityClassViolated,
  NonPlanarRotation,
  RootCountMismatch,
  MultipleRootNotAllowed,
  MalformedMap,
};

std::string to_string(ViolationKind k);

struct Violation {
  ViolationKind kind;
  std::string where;
};

/**
 * A signature stored as a planar map.
 *
 * Half-edge h belongs to edge h/2; h is the end at edges[h/2].u when h is
 * even and at edges[h/2].v when odd. rotation[v] lists the half-edges
 * leaving v in counterclockwise order. Leaves sit on the boundary circle in
 * counterclockwise label order; the boundary itself is implicit.
 *
 * Values produced by the library are always in canonical form, so two
 * signatures are isotopic relative to the leaves iff they compare equal.
 */
class Signature {
 public:
  Signature() = default;
  Signature(int n, std::vector<Vertex> vertices, std::vector<Edge> edges,
            std::vector<std::vector<int>> rotation);

  int n() const { return n_; }
  int leaf_count() const { return 4 * n_; }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<std::vector<int>>& rotation() const { return rotation_; }

  int origin(int h) const { return (h & 1) ? edges_[h >> 1].v : edges_[h >> 1].u; }
  int target(int h) const { return origin(h ^ 1); }
  Color half_color(int h) const { return edges_[h >> 1].color; }
  int leaf_vertex(int label) const;

  /// Relabels vertices and edges into the canonical traversal order.
  Signature canonical() const;

  bool operator==(const Signature& o) const {
    return n_ == o.n_ && vertices_ == o.vertices_ && edges_ == o.edges_ && rotation_ == o.rotation_;
  }
  bool operator<(const Signature& o) const {
    return std::tie(n_, vertices_, edges_, rotation_) < std::tie(o.n_, o.vertices_, o.edges_, o.rotation_);
  }

  /// Canonical byte string (sorted-key JSON).
  std::string encode() const;

 private:
  int n_ = 0;
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> rotation_;
};

struct ValidateOptions {
  bool distinct_roots = true;
};

std::vector<Violation> violations(const Signature& s, const ValidateOptions& opt = {});

/// Returns the canonical signature or throws SignatureError listing every violation.
Signature validate(const Signature& raw, const ValidateOptions& opt = {});

int codimension(const Signature& s);
bool is_generic(const Signature& s);
int critical_count(const Signature& s);

Signature decode(const std::string& bytes);

/// Shifts leaf labels by steps; odd steps swap the two colors.
Signature rotate(const Signature& s, int steps);

struct Orbit {
  int size = 0;
  Signature representative;
  std::vector<Signature> members;
};

std::vector<Orbit> orbit_decompose(const std::vector<Signature>& sigs);

/// A chord between two boundary leaves, stored with a < b.
using Chord = std::pair<int, int>;

struct GenericSignature {
  int n = 0;
  std::vector<Chord> red;   ///< non-crossing perfect matching of even leaves
  std::vector<Chord> blue;  ///< non-crossing perfect matching of odd leaves
  std::vector<std::pair<int, int>> crossing;  ///< (red index, blue index)

  bool operator==(const GenericSignature&) const = default;
};

bool chords_cross(const Chord& a, const Chord& b);

/// Checks the crossing-bijection condition and fills gs.crossing.
std::optional<GenericSignature> make_generic(int n, std::vector<Chord> red, std::vector<Chord> blue);

Signature to_signature(const GenericSignature& g);
std::optional<GenericSignature> to_generic(const Signature& s);

/// All non-crossing perfect matchings of the given cyclically ordered points.
std::vector<std::vector<Chord>> noncrossing_matchings(const std::vector<int>& points);

struct EnumerationLimits {
  int max_n = 7;
  std::size_t budget = 2000000;
};

class SizeLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<GenericSignature> enumerate_generic(int n, const EnumerationLimits& lim = {});
std::vector<Signature> enumerate_generic_signatures(int n, const EnumerationLimits& lim = {});

/// Everything reachable from the generic set by contracting moves with codimension <= max_codim.
std::vector<Signature> enumerate_all(int n, int max_codim, const EnumerationLimits& lim = {});

/// Leaf-label sets of the connected components of one color class (roots join the two halves of a curve).
std::vector<std::vector<int>> components(const Signature& s, Color c);

/// Component id of every edge of color c (-1 for the other color).
std::vector<int> edge_components(const Signature& s, Color c);

/// Interior faces as cyclic half-edge sequences; boundary arcs appear as -(k+1) for the arc from leaf k to k+1.
std::vector<std::vector<int>> faces(const Signature& s);

/// Quadrant index (0..3 for A..D) of an interior face.
int face_quadrant(const Signature& s, const std::vector<int>& face);

/// For each half-edge: +1 if moving along it increases |P|, -1 if it decreases, 0 if undetermined.
std::vector<int> half_edge_orientation(const Signature& s);

/// Axis class (0..3) of the image ray of every edge.
std::vector<int> edge_rays(const Signature& s);

}  // namespace stratoforest
