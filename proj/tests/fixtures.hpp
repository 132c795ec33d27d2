#pragma once

#include <set>
#include <utility>
#include <vector>

#include "stratoforest/signature.hpp"

namespace fixtures {

using stratoforest::Chord;
using stratoforest::Color;
using stratoforest::GenericSignature;
using stratoforest::Signature;
using stratoforest::VertexKind;

struct Node {
  VertexKind kind = VertexKind::Leaf;
  Color color = Color::Red;
  std::vector<int> ccw;  ///< neighbors in counterclockwise order
};

/// Builds a signature from neighbor lists. Nodes 0..4n-1 are the leaves; edge colors follow
/// the leaf or critical endpoint.
Signature from_adjacency(int n, const std::vector<Node>& inner, const std::vector<int>& leaf_neighbor);

/// Drawing of z^2 - 1: the two axes (red) crossing at a red critical point, and the hyperbola
/// x^2 - y^2 = 1 (blue) through the roots +-1.
Signature z2_minus_1();

/// Generic n=5 pair whose superimposition overlaps a red and a blue hexagon in a quadrilateral.
std::pair<GenericSignature, GenericSignature> hexagon_pair();
/// Same chords with the other pairing of the two matchings.
std::pair<GenericSignature, GenericSignature> hexagon_pair_swapped();
/// Expected canonical graph of hexagon_pair: blue H, red H, crossing at one root, four kept chords.
Signature hexagon_graph();

/// Every perfect matching of the points (no planarity filter).
std::vector<std::vector<Chord>> all_matchings(const std::vector<int>& points);
/// Interleaving test written from scratch with cyclic positions.
bool interleave(const Chord& a, const Chord& b);
bool is_noncrossing(const std::vector<Chord>& m);

/// Generic signatures counted by brute force over all matching pairs.
int brute_generic_count(int n);

/// Every signature reachable from s by contracting moves, up to codimension max_codim (s included).
std::set<Signature> contraction_closure(const Signature& s, int max_codim);

}  // namespace fixtures
