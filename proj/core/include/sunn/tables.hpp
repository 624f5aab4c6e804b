#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "sunn/basic.hpp"

/// Frozen symbolic signature tables for the classified multiplets.  Each
/// row lists the module labels of one written member as sums of label
/// intervals, plus the deduction X in the weight pair +/-(m_rho - X).
/// Evaluating a table at concrete labels must reproduce the signature
/// multiset of the computed graph; the self-check suite enforces this for
/// random label assignments.
namespace sunn::tables {

struct Interval {
  int j;
  int k;
};

/// Sum of the interval sums m_j + ... + m_k; an empty list means 0.
using Terms = std::vector<Interval>;

struct Row {
  std::vector<Terms> entries;  // 2n-2 module labels of the minus member
  Terms deduction;             // X in +/-(m_rho - X)
  bool singlet = false;        // self-paired row, weight 0
};

struct ReferenceTable {
  std::string name;
  int n = 0;
  std::vector<int> zeros;
  std::vector<Row> rows;
};

const std::vector<ReferenceTable>& reference_tables();

/// Throws std::invalid_argument for an unknown name.
const ReferenceTable& table_named(const std::string& name);

Int evaluate(const Terms& terms, const DynkinLabels& labels);

/// The (module labels, doubled weight) multiset the table generates at the
/// given labels.  The labels' zero set must match the table's pattern.
std::multiset<std::pair<std::vector<Int>, Int>> expected_signatures(
    const ReferenceTable& table, const DynkinLabels& labels);

}  // namespace sunn::tables
