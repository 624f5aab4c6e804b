#pragma once

#include <set>
#include <vector>

#include "sunn/signature.hpp"

/// Naive reference implementations used to certify the engine.  They share
/// only the value types with the engine, never its algorithms: arrangements
/// come from raw permutation filtering, edges from a displacement test on
/// coordinate vectors, dimensions from counting interleaving patterns.
/// Everything here is bounded to desk scale (n <= 4) by construction.
namespace sunn::oracle {

struct OracleEdge {
  Arrangement src;
  Arrangement dst;
  Root root;
  Int degree = 0;

  friend auto operator<=>(const OracleEdge&, const OracleEdge&) = default;
};

/// Every ordering of the weight multiset whose halves both decrease weakly,
/// deduplicated.  Refuses n > 4.
std::set<Arrangement> brute_arrangements(const LambdaVector& lambda);

/// Every ordered pair of arrangements whose coordinate vectors differ by a
/// positive multiple of a single noncompact position root, with a level gap
/// of one somewhere among the position subsets realising them.
std::set<OracleEdge> brute_edges(const LambdaVector& lambda);

/// Dimension as the number of interleaving triangular integer patterns over
/// the partition form of the labels.  Desk scale only: refuses more than
/// five labels or entries above 3.
unsigned long long gt_dimension(const std::vector<Int>& labels);

}  // namespace sunn::oracle
