#pragma once

#include <string>
#include <utility>
#include <vector>

#include "stratoforest/signature.hpp"

namespace stratoforest {

enum class MoveKind { CompleteContract, PartialContract, CompleteSmooth, PartialSmooth };

std::string to_string(MoveKind k);

/**
 * A Whitehead move addressed by sites of a canonical signature.
 *
 * CompleteContract: `face` indexes faces(s); `half_edges` are the pinched
 * segments, one per side, listed in face order.
 * PartialContract: `half_edges` holds one half-edge of the contracted edge.
 * CompleteSmooth: `vertex` plus `pairing` of rotation slots.
 * PartialSmooth: `vertex` plus the slots `block_start .. block_start+block_len-1`
 * that move to the new vertex.
 */
struct Move {
  MoveKind kind = MoveKind::CompleteContract;
  Color color = Color::Red;
  int face = -1;
  std::vector<int> half_edges;
  int vertex = -1;
  std::vector<std::pair<int, int>> pairing;
  int block_start = -1;
  int block_len = 0;

  bool operator==(const Move&) const = default;
};

class MoveError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Signature apply(const Signature& s, const Move& mv);

std::vector<std::pair<Move, Signature>> enumerate_contractions(const Signature& s);
std::vector<std::pair<Move, Signature>> enumerate_smoothings(const Signature& s);

/// Non-crossing perfect pairings of slots 0..2m-1 arranged on a circle.
std::vector<std::vector<std::pair<int, int>>> noncrossing_pairings(int m);

long long catalan(int m);

std::string move_to_json(const Move& mv);

}  // namespace stratoforest
