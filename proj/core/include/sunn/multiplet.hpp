#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "sunn/signature.hpp"

/// Multiplet graphs: every arrangement of the weight becomes a vertex, and
/// the covering moves of the block split become directed edges carrying the
/// noncompact root and the order of the intertwining differential operator.
/// Degenerating labels to zero merges vertices and collapses the zero-order
/// edges, which yields the reduced multiplets.
namespace sunn {

/// Minimal-length coset representative: the set of n positions (from 1..2n)
/// whose weight values fill the top block.
struct CosetSubset {
  std::vector<int> positions;  // sorted ascending, size n, values in 1..2n

  /// Length in the Bruhat order: sum of positions minus its minimum.
  int level() const;
};

/// Directed edge src -> dst.  The weight decreases by degree * root along
/// the edge, so two_c(dst) - two_c(src) = 2 * degree and the degree always
/// equals one of the simple labels.
struct Edge {
  int src = 0;
  int dst = 0;
  Root root;
  Int degree = 0;
  bool degenerate_ks = false;
};

struct Vertex {
  Arrangement arrangement;
  ERSignature signature;
};

/// A self-paired vertex (two_c = 0, blocks equal) together with its
/// outgoing operators; the minimal irrep sits in their joint kernel.
struct SingletRecord {
  int vertex = 0;
  std::vector<std::pair<Root, Int>> operators;
};

struct MultipletGraph {
  Rank rank;
  DynkinLabels labels;
  std::string algebra;  // annotation metadata only; graph data is shared
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
  std::vector<SingletRecord> singlets;

  /// Index of the vertex carrying the given canonical arrangement, or -1.
  int index_of(const Arrangement& arr) const;

  /// Index of the unique vertex carrying the flag, or -1.
  int flagged_vertex(VertexFlag flag) const;
};

/// One covering move: the resulting subset, the noncompact root read off
/// from the block ranks, and the operator order m_a.
struct CoverStep {
  CosetSubset target;
  Root root;
  Int degree = 0;
};

/// All covering moves a -> a+1 available from the subset, including the
/// zero-degree ones (those collapse under reduction).
std::vector<CoverStep> cover_edges(const CosetSubset& subset,
                                   const DynkinLabels& labels);

/// The full multiplet for strictly positive labels.  Throws
/// std::invalid_argument when a label vanishes.
MultipletGraph main_multiplet(Rank rank, const DynkinLabels& labels);

/// The degenerated multiplet for labels with at least one zero; subsets
/// whose arrangements coincide are merged and only positive-degree covers
/// survive.  Throws std::invalid_argument when no label vanishes.
MultipletGraph reduced_multiplet(Rank rank, const DynkinLabels& labels);

/// The singlet records of the graph (already stored on it).
std::vector<SingletRecord> singlet_minimal_irreps(const MultipletGraph& graph);

/// A zero pattern together with its mirror image, relevance verdict and
/// the vertex count of the multiplet it generates.
struct ReductionClass {
  std::vector<int> zeros;      // orbit representative, lexicographically least
  std::vector<int> conjugate;  // {2n - a : a in zeros}
  bool physically_relevant = false;
  std::size_t size = 0;
};

/// All order-k zero patterns grouped into mirror orbits, one canonical
/// representative each, sorted.  A pattern is physically relevant exactly
/// when it has no two consecutive positions; sizes are computed at generic
/// labels, so they depend only on the pattern.
std::vector<ReductionClass> classify_reductions(Rank rank, int order);

/// Generic labels for size computations: m_i = 3^i off the zero set.
/// Distinct suffix sums guarantee collision-free arrangements.
DynkinLabels generic_labels(Rank rank, const std::vector<int>& zeros);

}  // namespace sunn
