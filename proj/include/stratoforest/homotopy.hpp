#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "stratoforest/polynomial.hpp"
#include "stratoforest/signature.hpp"

namespace stratoforest {

class HomotopyPathFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Degree n^(n-2) of the map sending a polynomial to its multiset of critical values.
long long cover_degree(int n);

/// Power sums p_1..p_{n-1} of the critical values (with multiplicity).
std::vector<cplx> critical_power_sums(const Polynomial& p);

/// Continues a solution of power_sums(P) = from to power_sums(P) = to along the straight segment.
Polynomial track_fiber_path(const Polynomial& start, const std::vector<cplx>& from, const std::vector<cplx>& to);

struct FiberBase {
  int n = 0;
  std::vector<cplx> values;
  std::vector<Polynomial> sheets;
  int loops = 0;
};

/// Polynomials sharing the critical values of a random base point, found by monodromy loops
/// until `stable_loops` consecutive loops add nothing new.
FiberBase collect_sheets(int n, std::uint64_t seed, int stable_loops = 40, int max_loops = 2000);

/// Every polynomial whose critical values are `values`, tracked from the base fiber.
std::vector<Polynomial> solve_fiber(const FiberBase& base, const std::vector<cplx>& values, std::uint64_t seed = 7);

/// Largest relative deviation between the critical values of p and `values` under the best matching.
double critical_value_error(const Polynomial& p, const std::vector<cplx>& values);

/// All generic cells of V_n (multisets of n-1 quadrants), as sigma sequences.
std::vector<SigmaSequence> generic_cells(int n);

/// Cell name such as "AxC" listing the quadrant of each critical value.
std::string cell_name(const SigmaSequence& cell);
SigmaSequence parse_cell(int n, const std::string& name);

struct SurveyResult {
  SigmaSequence cell;
  std::map<Signature, int> counts;
  int samples = 0;
  int failures = 0;
};

SurveyResult fiber_survey(const FiberBase& base, const SigmaSequence& cell, int samples, std::uint64_t seed);

/// Stable 64-bit FNV-1a hash of the canonical encoding, as 16 hex digits.
std::string signature_hash(const Signature& s);

std::string survey_csv(const std::vector<SurveyResult>& results);

}  // namespace stratoforest
