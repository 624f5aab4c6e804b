#pragma once

#include <set>
#include <string>
#include <vector>

#include "sunn/basic.hpp"

/// Identities of the elementary representations inside one multiplet: the
/// splits of the weight multiset into two descending blocks, the induced
/// signature (module labels of the Levi factor plus the conformal weight),
/// and the restricted Weyl reflection that pairs them.
namespace sunn {

/// One split of the weight multiset into a top and a bottom block of size
/// n, each weakly decreasing.  The canonical (sorted) form is the identity
/// used for equality, ordering and merging.
struct Arrangement {
  std::vector<Int> top;
  std::vector<Int> bottom;

  /// "top|bottom" with comma-separated entries, e.g. "4,3|1,0".
  std::string id() const;

  friend bool operator==(const Arrangement& a, const Arrangement& b) {
    return a.top == b.top && a.bottom == b.bottom;
  }
  friend auto operator<=>(const Arrangement& a, const Arrangement& b) {
    if (a.top != b.top) return a.top <=> b.top;
    return a.bottom <=> b.bottom;
  }
};

enum class VertexFlag {
  Chi0Minus,
  Chi0Plus,
  FiniteDimBearing,
  Singlet,
  DiscreteSeries,
  LimitsOfDiscreteSeries,
};

/// Name used in emitted documents, e.g. "chi0-minus".
std::string flag_name(VertexFlag flag);

/// Signature of an elementary representation: the 2n-2 module labels
/// (consecutive differences within each block, the cross-block gap skipped)
/// and the conformal weight c.  c is half-integral, so it is stored doubled
/// to keep all arithmetic exact.
struct ERSignature {
  std::vector<Int> m_labels;
  Int two_c = 0;
  std::set<VertexFlag> flags;

  friend bool operator==(const ERSignature& a, const ERSignature& b) {
    return a.m_labels == b.m_labels && a.two_c == b.two_c;
  }
};

/// All distinct splits of the weight multiset into two size-n blocks,
/// ordered by (two_c, lexicographic top block).  For strictly decreasing
/// lambda the count is binomial(2n,n).
std::vector<Arrangement> all_arrangements(const LambdaVector& lambda);

ERSignature signature_of(const Arrangement& arr);

/// The restricted Weyl reflection: blocks swapped.  An involution; the
/// partner's labels are the half-swapped labels and its weight is negated.
Arrangement ks_partner(const Arrangement& arr);

/// Swap the two halves of a label sequence (the star operation applied to
/// signatures by the reflection above).
std::vector<Int> star(const std::vector<Int>& m_labels);

/// Twice the rho-shift weight: sum of min(i, 2n-i) * m_i.  Equals the
/// negated two_c of the lowest arrangement.
Int two_m_rho(const DynkinLabels& labels);

/// Twice the conformal energy d = c + n^2/2.
Int conformal_2d(Int two_c, Rank rank);
Int conformal_2d(const ERSignature& sig, Rank rank);

}  // namespace sunn
