#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "sunn/multiplet.hpp"

/// Dimension of the finite-dimensional subrepresentation, discrete-series
/// annotations, and the real forms sharing the classification.
namespace sunn {

using BigInt = boost::multiprecision::cpp_int;

enum class AlgebraFamily { SUnn, SL2nR, SUStar2n };

/// One real form together with the factor its representations are induced
/// from.  The quaternionic form exists only for even n.
struct AlgebraTag {
  AlgebraFamily family;
  std::string name;      // e.g. "su(2,2)"
  std::string m_factor;  // e.g. "sl(2,C)_R"
};

AlgebraTag make_algebra_tag(AlgebraFamily family, Rank rank);

/// The forms sharing the multiplet classification at this rank:
/// su(n,n) and sl(2n,R) always, su*(2n) when n is even.
std::vector<AlgebraTag> parabolic_relatives(Rank rank);

/// Dimension of the irrep with the given labels for A_{N-1}, N = size + 1:
/// product of interval sums of the labels over the interval lengths.
/// Exact at any scale.  Throws std::domain_error when a label vanishes.
BigInt weyl_dimension(const std::vector<Int>& labels);
BigInt weyl_dimension(const DynkinLabels& labels);

enum class DSKind { DiscreteSeries, LimitsOfDiscreteSeries };

struct DSAnnotation {
  int vertex = 0;
  DSKind kind = DSKind::DiscreteSeries;
  Int min_two_d = 0;  // lower bound of the doubled conformal energy
};

/// Discrete-series content, restricted to the established statements:
/// su(2,2) main multiplets carry the (anti)holomorphic discrete series in
/// the highest vertex (d >= 4), its m_2 = 0 reduction the limits (d >= 3),
/// and the middle-label reductions of su(3,3)/su(4,4) the limits.  The
/// split forms carry none.
std::vector<DSAnnotation> ds_annotations(const MultipletGraph& graph,
                                         AlgebraFamily family);

/// Copy of the graph with the algebra name set and the discrete-series
/// flags merged into the vertex flags.  Graph data is unchanged.
MultipletGraph annotate(MultipletGraph graph, AlgebraFamily family);

}  // namespace sunn
