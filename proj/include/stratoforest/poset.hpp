#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "stratoforest/signature.hpp"

namespace stratoforest {

class NodeNotFound : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/**
 * Incidence poset of signatures. Edge i -> j in `up` means j is obtained from
 * i by one contracting move (i precedes j). `above[i][j]` is the strict
 * transitive closure.
 */
struct StratPoset {
  int n = 0;
  int max_codim = 0;
  std::vector<Signature> nodes;
  std::vector<int> codim;
  std::vector<std::vector<int>> up;
  std::vector<std::vector<int>> down;
  std::vector<std::vector<char>> above;

  int index(const Signature& s) const;
  std::size_t size() const { return nodes.size(); }
  bool precedes(int a, int b) const { return above[a][b] != 0; }
  bool precedes_eq(int a, int b) const { return a == b || above[a][b] != 0; }

 private:
  std::map<Signature, int> index_;
  friend StratPoset build_poset(int, int, const EnumerationLimits&);
  friend StratPoset poset_from_nodes(int, int, std::vector<Signature>);
};

StratPoset build_poset(int n, int max_codim, const EnumerationLimits& lim = {});

/// Poset over an explicit node set; covers are the contracting moves staying inside the set.
StratPoset poset_from_nodes(int n, int max_codim, std::vector<Signature> nodes);

/// {t : s precedes t} together with s itself.
std::vector<int> closure_set(const StratPoset& p, int s);

/// {t : t precedes s} together with s itself.
std::vector<int> star_set(const StratPoset& p, int s);

std::vector<int> maximal_nodes(const StratPoset& p);

/// Every pair of same-color components meets in an even number of leaves.
bool component_parity_compatible(const Signature& s, const Signature& t);

/// Greatest common lower bound, computed from the meet of the component partitions.
std::optional<int> greatest_lower_bound(const StratPoset& p, int s, int t);

/// Greatest element of the common lower set by exhaustive comparison; nullopt if empty or not unique.
std::optional<int> glb_brute_force(const StratPoset& p, int s, int t);

struct CheckReport {
  bool pass = true;
  std::vector<std::string> counterexamples;
};

/// Meet/join structure of the star set of `apex`; meets are required only where a common lower bound exists.
CheckReport lattice_check(const StratPoset& p, int apex);

CheckReport frontier_check(const StratPoset& p);

/// X_(i) for i = 0 .. 2(n-1): nodes whose stratum has real dimension at most i.
std::vector<std::vector<int>> gm_filtration(const StratPoset& p);

std::string poset_to_dot(const StratPoset& p);
std::string poset_to_json(const StratPoset& p);

}  // namespace stratoforest
