#include "sunn/tables.hpp"

#include <stdexcept>

#include "sunn/signature.hpp"

namespace sunn::tables {

namespace {

using T = Terms;

T m(int j) { return {{j, j}}; }
T m(int j, int k) { return {{j, k}}; }

T operator+(T a, const T& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

const T z{};  // vanished entry

Row pr(std::vector<T> entries, T deduction) {
  return Row{std::move(entries), std::move(deduction), false};
}

Row sr(std::vector<T> entries, T deduction) {
  return Row{std::move(entries), std::move(deduction), true};
}

std::vector<ReferenceTable> build_tables() {
  std::vector<ReferenceTable> tables;

  tables.push_back({"main-n2", 2, {}, {
    pr({m(1), m(3)}, {}),
    pr({m(1, 2), m(2, 3)}, m(2)),
    pr({m(2), m(1, 3)}, m(1, 2)),
  }});

  tables.push_back({"main-n3", 3, {}, {
    pr({m(1), m(2), m(4), m(5)}, {}),
    pr({m(1), m(2, 3), m(3, 4), m(5)}, m(3)),
    pr({m(1, 2), m(3), m(2, 4), m(5)}, m(2, 3)),
    pr({m(1), m(2, 4), m(3), m(4, 5)}, m(3, 4)),
    pr({m(2), m(3), m(1, 4), m(5)}, m(1, 3)),
    pr({m(1, 2), m(3, 4), m(2, 3), m(4, 5)}, m(2, 4)),
    pr({m(1), m(2, 5), m(3), m(4)}, m(3, 5)),
    pr({m(2), m(3, 4), m(1, 3), m(4, 5)}, m(1, 4)),
    pr({m(1, 2), m(3, 5), m(2, 3), m(4)}, m(2, 5)),
    pr({m(2), m(3, 5), m(1, 3), m(4)}, m(1, 5)),
  }});

  tables.push_back({"main-n4", 4, {}, {
    pr({m(1), m(2), m(3), m(5), m(6), m(7)}, {}),
    pr({m(1), m(2), m(3, 4), m(4, 5), m(6), m(7)}, m(4)),
    pr({m(1), m(2, 3), m(4), m(3, 5), m(6), m(7)}, m(3, 4)),
    pr({m(1), m(2), m(3, 5), m(4), m(5, 6), m(7)}, m(4, 5)),
    pr({m(1, 2), m(3), m(4), m(2, 5), m(6), m(7)}, m(2, 4)),
    pr({m(1), m(2, 3), m(4, 5), m(3, 4), m(5, 6), m(7)}, m(3, 5)),
    pr({m(1), m(2), m(3, 6), m(4), m(5), m(6, 7)}, m(4, 6)),
    pr({m(2), m(3), m(4), m(1, 5), m(6), m(7)}, m(1, 4)),
    pr({m(1, 2), m(3), m(4, 5), m(2, 4), m(5, 6), m(7)}, m(2, 5)),
    pr({m(1), m(2, 3), m(4, 6), m(3, 4), m(5), m(6, 7)}, m(3, 6)),
    pr({m(1), m(2), m(3, 7), m(4), m(5), m(6)}, m(4, 7)),
    pr({m(2), m(3), m(4, 5), m(1, 4), m(5, 6), m(7)}, m(1, 5)),
    pr({m(1, 2), m(3), m(4, 6), m(2, 4), m(5), m(6, 7)}, m(2, 6)),
    pr({m(1), m(2, 3), m(4, 7), m(3, 4), m(5), m(6)}, m(3, 7)),
    pr({m(2), m(3), m(4, 6), m(1, 4), m(5), m(6, 7)}, m(1, 6)),
    pr({m(1, 2), m(3), m(4, 7), m(2, 4), m(5), m(6)}, m(2, 7)),
    pr({m(2), m(3), m(4, 7), m(1, 4), m(5), m(6)}, m(1, 7)),
    pr({m(1), m(2, 4), m(5), m(3), m(4, 6), m(7)}, m(3, 5) + m(4)),
    pr({m(1, 2), m(3, 4), m(5), m(2, 3), m(4, 6), m(7)}, m(2, 5) + m(4)),
    pr({m(1), m(2, 4), m(5, 6), m(3), m(4, 5), m(6, 7)}, m(3, 6) + m(4)),
    pr({m(2), m(3, 4), m(5), m(1, 3), m(4, 6), m(7)}, m(1, 5) + m(4)),
    pr({m(1, 2), m(3, 4), m(5, 6), m(2, 3), m(4, 5), m(6, 7)}, m(2, 6) + m(4)),
    pr({m(1), m(2, 4), m(5, 7), m(3), m(4, 5), m(6)}, m(3, 7) + m(4)),
    pr({m(1, 3), m(4), m(5), m(2), m(3, 6), m(7)}, m(2, 5) + m(3, 4)),
    pr({m(1, 3), m(4), m(5, 6), m(2), m(3, 5), m(6, 7)}, m(2, 6) + m(3, 4)),
    pr({m(1, 2), m(3, 5), m(6), m(2, 3), m(4), m(5, 7)}, m(2, 6) + m(4, 5)),
    pr({m(1), m(2, 5), m(6), m(3), m(4), m(5, 7)}, m(3, 6) + m(4, 5)),
    pr({m(2, 3), m(4), m(5), m(1, 2), m(3, 6), m(7)}, m(1, 5) + m(3, 4)),
    pr({m(2), m(3, 4), m(5, 6), m(1, 3), m(4, 5), m(6, 7)}, m(1, 6) + m(4)),
    pr({m(1, 2), m(3, 4), m(5, 7), m(2, 3), m(4, 5), m(6)}, m(2, 7) + m(4)),
    pr({m(1), m(2, 5), m(6, 7), m(3), m(4), m(5, 6)}, m(3, 7) + m(4, 5)),
    pr({m(3), m(4), m(5), m(1), m(2, 6), m(7)}, m(1, 5) + m(2, 4)),
    pr({m(2, 3), m(4), m(5, 6), m(1, 2), m(3, 5), m(6, 7)}, m(1, 6) + m(3, 4)),
    pr({m(2), m(3, 4), m(5, 7), m(1, 3), m(4, 5), m(6)}, m(1, 7) + m(4)),
    pr({m(1, 3), m(4), m(5, 7), m(2), m(3, 5), m(6)}, m(2, 7) + m(3, 4)),
  }});

  tables.push_back({"reduced-n3-3", 3, {3}, {
    pr({m(1), m(2), m(4), m(5)}, {}),
    pr({m(1, 2), z, m(2, 4), m(5)}, m(2)),
    pr({m(1), m(2, 4), z, m(4, 5)}, m(4)),
    pr({m(2), z, m(1, 4), m(5)}, m(1, 2)),
    pr({m(1), m(2, 5), z, m(4)}, m(4, 5)),
    pr({m(2), m(4), m(1, 2), m(4, 5)}, m(1, 2) + m(4)),
    pr({m(1, 2), m(4), m(2), m(4, 5)}, m(2) + m(4)),
  }});

  tables.push_back({"reduced-n3-13", 3, {1, 3}, {
    pr({z, m(2), m(4), m(5)}, {}),
    pr({m(2), z, m(2) + m(4), m(5)}, m(2)),
    pr({z, m(2) + m(4), z, m(4, 5)}, m(4)),
    pr({z, m(2) + m(4, 5), z, m(4)}, m(4, 5)),
    pr({m(2), m(4), m(2), m(4, 5)}, m(2) + m(4)),
  }});

  tables.push_back({"reduced-n3-15", 3, {1, 5}, {
    pr({z, m(2), m(4), z}, {}),
    pr({z, m(2, 3), m(3, 4), z}, m(3)),
    pr({m(2), m(3), m(2, 4), z}, m(2, 3)),
    pr({z, m(2, 4), m(3), m(4)}, m(3, 4)),
    pr({m(2), m(3, 4), m(2, 3), m(4)}, m(2, 4)),
  }});

  tables.push_back({"reduced-n3-135", 3, {1, 3, 5}, {
    pr({z, m(2), m(4), z}, {}),
    pr({z, m(2) + m(4), z, m(4)}, m(4)),
    pr({m(2), z, m(2) + m(4), z}, m(2)),
    sr({m(2), m(4), m(2), m(4)}, m(2) + m(4)),
  }});

  tables.push_back({"reduced-n4-4", 4, {4}, {
    pr({m(1), m(2), m(3), m(5), m(6), m(7)}, {}),
    pr({m(1), m(2, 3), z, m(3) + m(5), m(6), m(7)}, m(3)),
    pr({m(1), m(2), m(3) + m(5), z, m(5, 6), m(7)}, m(5)),
    pr({m(1, 2), m(3), z, m(2, 3) + m(5), m(6), m(7)}, m(2, 3)),
    pr({m(1), m(2, 3), m(5), m(3), m(5, 6), m(7)}, m(3) + m(5)),
    pr({m(1), m(2), m(3) + m(5, 6), z, m(5), m(6, 7)}, m(5, 6)),
    pr({m(2), m(3), z, m(1, 3) + m(5), m(6), m(7)}, m(1, 3)),
    pr({m(1, 2), m(3), m(5), m(2, 3), m(5, 6), m(7)}, m(2, 3) + m(5)),
    pr({m(1), m(2, 3), m(5, 6), m(3), m(5), m(6, 7)}, m(3) + m(5, 6)),
    pr({m(1), m(2), m(3) + m(5, 7), z, m(5), m(6)}, m(5, 7)),
    pr({m(2), m(3), m(5), m(1, 3), m(5, 6), m(7)}, m(1, 3) + m(5)),
    pr({m(1, 2), m(3), m(5, 6), m(2, 3), m(5), m(6, 7)}, m(2, 3) + m(5, 6)),
    pr({m(1), m(2, 3), m(5, 7), m(3), m(5), m(6)}, m(3) + m(5, 7)),
    pr({m(2), m(3), m(5, 6), m(1, 3), m(5), m(6, 7)}, m(1, 3) + m(5, 6)),
    pr({m(1, 2), m(3), m(5, 7), m(2, 3), m(5), m(6)}, m(2, 3) + m(5, 7)),
    pr({m(2), m(3), m(5, 7), m(1, 3), m(5), m(6)}, m(1, 3) + m(5, 7)),
    pr({m(1, 3), z, m(5), m(2), m(3) + m(5, 6), m(7)}, m(2, 3) + m(5) + m(3)),
    pr({m(1, 3), z, m(5, 6), m(2), m(3) + m(5), m(6, 7)},
       m(2, 3) + m(5, 6) + m(3)),
    pr({m(1, 2), m(3) + m(5), m(6), m(2, 3), z, m(5, 7)},
       m(2, 3) + m(5, 6) + m(5)),
    pr({m(1), m(2, 3) + m(5), m(6), m(3), z, m(5, 7)}, m(3) + m(5, 6) + m(5)),
    pr({m(2, 3), z, m(5), m(1, 2), m(3) + m(5, 6), m(7)},
       m(1, 3) + m(5) + m(3)),
    pr({m(1), m(2, 3) + m(5), m(6, 7), m(3), z, m(5, 6)},
       m(3) + m(5, 7) + m(5)),
    pr({m(3), z, m(5), m(1), m(2, 3) + m(5, 6), m(7)},
       m(1, 3) + m(5) + m(2, 3)),
    pr({m(2, 3), z, m(5, 6), m(1, 2), m(3) + m(5), m(6, 7)},
       m(1, 3) + m(5, 6) + m(3)),
    pr({m(1, 3), z, m(5, 7), m(2), m(3) + m(5), m(6)},
       m(2, 3) + m(5, 7) + m(3)),
  }});

  tables.push_back({"reduced-n4-13", 4, {1, 3}, {
    pr({z, m(2), z, m(5), m(6), m(7)}, {}),
    pr({z, m(2), m(4), m(4, 5), m(6), m(7)}, m(4)),
    pr({m(2), z, m(4), m(2) + m(4, 5), m(6), m(7)}, m(2) + m(4)),
    pr({z, m(2), m(4, 5), m(4), m(5, 6), m(7)}, m(4, 5)),
    pr({m(2), z, m(4, 5), m(2) + m(4), m(5, 6), m(7)}, m(2) + m(4, 5)),
    pr({z, m(2), m(4, 6), m(4), m(5), m(6, 7)}, m(4, 6)),
    pr({m(2), z, m(4, 6), m(2) + m(4), m(5), m(6, 7)}, m(2) + m(4, 6)),
    pr({z, m(2), m(4, 7), m(4), m(5), m(6)}, m(4, 7)),
    pr({m(2), z, m(4, 7), m(2) + m(4), m(5), m(6)}, m(2) + m(4, 7)),
    pr({z, m(2) + m(4), m(5), z, m(4, 6), m(7)}, m(5) + m(4) + m(4)),
    pr({m(2), m(4), m(5), m(2), m(4, 6), m(7)}, m(2) + m(5) + m(4) + m(4)),
    pr({z, m(2) + m(4), m(5, 6), z, m(4, 5), m(6, 7)}, m(5, 6) + m(4) + m(4)),
    pr({m(2), m(4), m(5, 6), m(2), m(4, 5), m(6, 7)},
       m(2) + m(5, 6) + m(4) + m(4)),
    pr({z, m(2) + m(4), m(5, 7), z, m(4, 5), m(6)}, m(5, 7) + m(4) + m(4)),
    pr({z, m(2) + m(4, 5), m(6), z, m(4), m(5, 7)},
       m(6) + m(4, 5) + m(4, 5)),
    pr({m(2), m(4), m(5, 7), m(2), m(4, 5), m(6)},
       m(2) + m(5, 7) + m(4) + m(4)),
    pr({z, m(2) + m(4, 5), m(6, 7), z, m(4), m(5, 6)},
       m(6, 7) + m(4, 5) + m(4, 5)),
    pr({z, m(4), m(5), z, m(2) + m(4, 6), m(7)},
       m(5) + m(2) + m(4) + m(2) + m(4)),
  }});

  tables.push_back({"reduced-n4-135", 4, {1, 3, 5}, {
    pr({z, m(2), z, z, m(6), m(7)}, {}),
    pr({z, m(2), m(4), m(4), m(6), m(7)}, m(4)),
    pr({m(2), z, m(4), m(2) + m(4), m(6), m(7)}, m(2) + m(4)),
    pr({z, m(2), m(4) + m(6), m(4), z, m(6, 7)}, m(4) + m(6)),
    pr({m(2), z, m(4) + m(6), m(2) + m(4), z, m(6, 7)}, m(2) + m(4) + m(6)),
    pr({z, m(2), m(4) + m(6, 7), m(4), z, m(6)}, m(4) + m(6, 7)),
    pr({m(2), z, m(4) + m(6, 7), m(2) + m(4), z, m(6)},
       m(2) + m(4) + m(6, 7)),
    pr({z, m(2) + m(4), z, z, m(4) + m(6), m(7)}, m(4) + m(4)),
    pr({z, m(2) + m(4), m(6), z, m(4), m(6, 7)}, m(6) + m(4) + m(4)),
    pr({z, m(2) + m(4), m(6, 7), z, m(4), m(6)}, m(6, 7) + m(4) + m(4)),
    pr({m(2), m(4), z, m(2), m(4) + m(6), m(7)}, m(2) + m(4) + m(4)),
    pr({z, m(4), z, z, m(2, 6), m(7)}, m(2) + m(4) + m(2) + m(4)),
    pr({m(2), m(4), m(6), m(2), m(4), m(6, 7)}, m(2) + m(6) + m(4) + m(4)),
  }});

  tables.push_back({"reduced-n4-137", 4, {1, 3, 7}, {
    pr({z, m(2), z, m(5), m(6), z}, {}),
    pr({z, m(2), m(4), m(4, 5), m(6), z}, m(4)),
    pr({m(2), z, m(4), m(2) + m(4, 5), m(6), z}, m(2) + m(4)),
    pr({z, m(2), m(4, 5), m(4), m(5, 6), z}, m(4, 5)),
    pr({m(2), z, m(4, 5), m(2) + m(4), m(5, 6), z}, m(2) + m(4, 5)),
    pr({z, m(2), m(4, 6), m(4), m(5), m(6)}, m(4, 6)),
    pr({m(2), z, m(4, 6), m(2) + m(4), m(5), m(6)}, m(2) + m(4, 6)),
    pr({z, m(2) + m(4), m(5), z, m(4, 6), z}, m(5) + m(4) + m(4)),
    pr({z, m(2) + m(4), m(5, 6), z, m(4, 5), m(6)}, m(5, 6) + m(4) + m(4)),
    pr({m(2), m(4), m(5), m(2), m(4, 6), z}, m(2) + m(5) + m(4) + m(4)),
    pr({z, m(2) + m(4, 5), m(6), z, m(4), m(5, 6)},
       m(6) + m(4, 5) + m(4, 5)),
    pr({z, m(4), m(5), z, m(2) + m(4, 6), z},
       m(5) + m(2) + m(4) + m(2) + m(4)),
    pr({m(2), m(4), m(5, 6), m(2), m(4, 5), m(6)},
       m(2) + m(5, 6) + m(4) + m(4)),
  }});

  tables.push_back({"reduced-n4-1357", 4, {1, 3, 5, 7}, {
    pr({z, m(2), z, z, m(6), z}, {}),
    pr({z, m(2), m(4), m(4), m(6), z}, m(4)),
    pr({m(2), z, m(4), m(2) + m(4), m(6), z}, m(2) + m(4)),
    pr({z, m(2), m(4, 6), m(4), z, m(6)}, m(4) + m(6)),
    pr({m(2), z, m(4, 6), m(2) + m(4), z, m(6)}, m(2) + m(4) + m(6)),
    pr({z, m(2) + m(4), z, z, m(4, 6), z}, m(4) + m(4)),
    pr({z, m(2) + m(4), m(6), z, m(4), m(6)}, m(6) + m(4) + m(4)),
    pr({m(2), m(4), z, m(2), m(4, 6), z}, m(2) + m(4) + m(4)),
    pr({z, m(4), z, z, m(2) + m(4, 6), z}, m(2) + m(4) + m(2) + m(4)),
    sr({m(2), m(4), m(6), m(2), m(4), m(6)}, m(2) + m(4) + m(4) + m(6)),
  }});

  return tables;
}

}  // namespace

const std::vector<ReferenceTable>& reference_tables() {
  static const std::vector<ReferenceTable> tables = build_tables();
  return tables;
}

const ReferenceTable& table_named(const std::string& name) {
  for (const ReferenceTable& table : reference_tables())
    if (table.name == name) return table;
  throw std::invalid_argument("unknown reference table: " + name);
}

Int evaluate(const Terms& terms, const DynkinLabels& labels) {
  Int sum = 0;
  for (const Interval& term : terms)
    for (int i = term.j; i <= term.k; ++i) sum += labels.label(i);
  return sum;
}

std::multiset<std::pair<std::vector<Int>, Int>> expected_signatures(
    const ReferenceTable& table, const DynkinLabels& labels) {
  if (labels.rank().n != table.n)
    throw std::invalid_argument("expected_signatures: rank mismatch");
  if (labels.zero_set() != table.zeros)
    throw std::invalid_argument("expected_signatures: zero pattern mismatch");

  std::multiset<std::pair<std::vector<Int>, Int>> out;
  const Int rho2 = two_m_rho(labels);
  for (const Row& row : table.rows) {
    std::vector<Int> entries;
    entries.reserve(row.entries.size());
    for (const Terms& terms : row.entries)
      entries.push_back(evaluate(terms, labels));
    const Int two_c_plus = rho2 - 2 * evaluate(row.deduction, labels);
    if (row.singlet) {
      if (two_c_plus != 0)
        throw std::logic_error("singlet row with nonzero weight in table " +
                               table.name);
      out.emplace(entries, 0);
    } else {
      out.emplace(star(entries), two_c_plus);
      out.emplace(std::move(entries), -two_c_plus);
    }
  }
  return out;
}

}  // namespace sunn::tables
