#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "stratoforest/poset.hpp"

namespace stratoforest {

class CoverageGap : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Cover {
  std::vector<int> apexes;
  std::vector<std::vector<int>> sets;
};

/// Star sets of the maximal nodes; throws CoverageGap if some node is in none of them.
Cover build_cover(const StratPoset& p);

using IntMatrix = std::vector<std::vector<long long>>;

struct NerveComplex {
  int vertex_count = 0;
  /// simplices[k] holds the k-simplices as sorted vertex lists, in lexicographic order.
  std::vector<std::vector<std::vector<int>>> simplices;

  int dimension() const { return static_cast<int>(simplices.size()) - 1; }
  /// Matrix of the boundary map from k-simplices to (k-1)-simplices (rows index faces).
  IntMatrix boundary(int k) const;
};

/// Simplices are the index sets whose star sets have a common member.
NerveComplex build_nerve(const Cover& cover, int max_dim = -1);

struct HomologyGroup {
  int rank = 0;
  std::vector<std::string> torsion;
  std::string to_string() const;
};

/// Nonzero diagonal of the Smith normal form, computed over arbitrary-precision integers.
std::vector<std::string> smith_diagonal(const IntMatrix& m);

std::vector<HomologyGroup> homology(const NerveComplex& c);

std::string nerve_to_json(const NerveComplex& c);

}  // namespace stratoforest
