#pragma once

#include <cstdint>
#include <optional>
#include <vector>

/// Exact arithmetic for the A_{2n-1} root system underlying su(n,n):
/// positive roots, Dynkin labels, Harish-Chandra parameters, reducibility
/// degrees and the suffix-sum coordinate vector for the shifted weight.
namespace sunn {

using Int = std::int64_t;

/// The rank parameter n of su(n,n).  The ambient complex algebra is
/// sl(2n,C), i.e. the root system A_{2n-1} with 2n-1 simple roots.
struct Rank {
  int n;

  explicit Rank(int n_);

  int ambient() const { return 2 * n; }       // number of epsilon coordinates
  int simple_count() const { return 2 * n - 1; }
};

/// Positive root alpha_{jk} = alpha_j + ... + alpha_k, 1 <= j <= k <= 2n-1.
/// A root is noncompact when its interval crosses the middle node,
/// j <= n <= k; only those carry intertwining differential operators.
struct Root {
  int j;
  int k;
  bool noncompact = false;

  friend bool operator==(const Root& a, const Root& b) {
    return a.j == b.j && a.k == b.k;
  }
  friend auto operator<=>(const Root& a, const Root& b) {
    if (a.j != b.j) return a.j <=> b.j;
    return a.k <=> b.k;
  }
};

/// The Dynkin labels m_1..m_{2n-1} of a (shifted) highest weight.  All
/// entries are non-negative; zeros mark the degenerated simple roots and
/// drive the reduced multiplets.
class DynkinLabels {
 public:
  DynkinLabels(Rank rank, std::vector<Int> m);

  const Rank& rank() const { return rank_; }
  const std::vector<Int>& values() const { return m_; }

  /// 1-based access, matching the conventional m_i numbering.
  Int label(int i) const;

  /// Sorted positions i with m_i = 0.
  std::vector<int> zero_set() const;

  bool all_positive() const;

  friend bool operator==(const DynkinLabels& a, const DynkinLabels& b) {
    return a.rank_.n == b.rank_.n && a.m_ == b.m_;
  }

 private:
  Rank rank_;
  std::vector<Int> m_;
};

/// The shifted weight in epsilon coordinates, normalised so the last
/// coordinate vanishes: lambda_i = m_i + m_{i+1} + ... + m_{2n-1},
/// lambda_{2n} = 0.  Weakly decreasing; strictly decreasing exactly when
/// no label vanishes.
class LambdaVector {
 public:
  LambdaVector(Rank rank, std::vector<Int> values);

  const Rank& rank() const { return rank_; }
  const std::vector<Int>& values() const { return values_; }

  /// 1-based coordinate access.
  Int at(int i) const;

  bool strictly_decreasing() const;

  friend bool operator==(const LambdaVector& a, const LambdaVector& b) {
    return a.values_ == b.values_;
  }

 private:
  Rank rank_;
  std::vector<Int> values_;
};

/// All positive roots of A_{2n-1} in lexicographic (j,k) order, with the
/// noncompact flag filled in.  Count is N(N-1)/2 for N = 2n.
std::vector<Root> positive_roots(Rank rank);

/// Harish-Chandra parameter m_root = m_j + ... + m_k.
/// Throws std::out_of_range when the root violates the rank bounds.
Int hc_param(const DynkinLabels& labels, const Root& root);

/// Order of the invariant differential operator attached to the root, i.e.
/// the pairing of the shifted weight with the coroot.  Empty when the
/// pairing is 0 and no operator exists.
std::optional<Int> bgg_degree(const DynkinLabels& labels, const Root& root);

/// Suffix sums of the labels; the canonical coordinate form of the weight.
LambdaVector lambda_vector(const DynkinLabels& labels);

/// Recover the labels from consecutive differences (exact round-trip).
DynkinLabels labels_of(const LambdaVector& lambda);

}  // namespace sunn
