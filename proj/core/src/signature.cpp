#include "sunn/signature.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace sunn {

namespace {

std::string join(const std::vector<Int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out;
}

Int block_sum(const std::vector<Int>& v) {
  return std::accumulate(v.begin(), v.end(), Int{0});
}

}  // namespace

std::string Arrangement::id() const { return join(top) + "|" + join(bottom); }

std::string flag_name(VertexFlag flag) {
  switch (flag) {
    case VertexFlag::Chi0Minus: return "chi0-minus";
    case VertexFlag::Chi0Plus: return "chi0-plus";
    case VertexFlag::FiniteDimBearing: return "finite-dim-bearing";
    case VertexFlag::Singlet: return "singlet";
    case VertexFlag::DiscreteSeries: return "discrete-series";
    case VertexFlag::LimitsOfDiscreteSeries: return "limits-of-discrete-series";
  }
  throw std::logic_error("flag_name: unknown flag");
}

std::vector<Arrangement> all_arrangements(const LambdaVector& lambda) {
  const int n = lambda.rank().n;
  const int N = lambda.rank().ambient();
  const auto& values = lambda.values();

  // Enumerate n-subsets of positions; positions carry weakly decreasing
  // values, so picking ascending positions yields descending blocks.
  std::set<Arrangement> distinct;
  std::vector<int> pick(static_cast<std::size_t>(n));
  std::iota(pick.begin(), pick.end(), 0);
  while (true) {
    Arrangement arr;
    arr.top.reserve(static_cast<std::size_t>(n));
    arr.bottom.reserve(static_cast<std::size_t>(n));
    std::size_t next = 0;
    for (int pos = 0; pos < N; ++pos) {
      if (next < pick.size() && pick[next] == pos) {
        arr.top.push_back(values[static_cast<std::size_t>(pos)]);
        ++next;
      } else {
        arr.bottom.push_back(values[static_cast<std::size_t>(pos)]);
      }
    }
    distinct.insert(std::move(arr));

    int i = n - 1;
    while (i >= 0 && pick[static_cast<std::size_t>(i)] == N - n + i) --i;
    if (i < 0) break;
    ++pick[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < n; ++j)
      pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
  }

  std::vector<Arrangement> out(distinct.begin(), distinct.end());
  std::stable_sort(out.begin(), out.end(),
                   [](const Arrangement& a, const Arrangement& b) {
                     const Int ca = signature_of(a).two_c;
                     const Int cb = signature_of(b).two_c;
                     if (ca != cb) return ca < cb;
                     return a.top < b.top;
                   });
  return out;
}

ERSignature signature_of(const Arrangement& arr) {
  ERSignature sig;
  sig.m_labels.reserve(2 * (arr.top.size() - 1));
  for (std::size_t i = 0; i + 1 < arr.top.size(); ++i)
    sig.m_labels.push_back(arr.top[i] - arr.top[i + 1]);
  for (std::size_t i = 0; i + 1 < arr.bottom.size(); ++i)
    sig.m_labels.push_back(arr.bottom[i] - arr.bottom[i + 1]);
  sig.two_c = block_sum(arr.bottom) - block_sum(arr.top);
  return sig;
}

Arrangement ks_partner(const Arrangement& arr) {
  return Arrangement{arr.bottom, arr.top};
}

std::vector<Int> star(const std::vector<Int>& m_labels) {
  const std::size_t half = m_labels.size() / 2;
  std::vector<Int> out;
  out.reserve(m_labels.size());
  out.insert(out.end(), m_labels.begin() + static_cast<std::ptrdiff_t>(half),
             m_labels.end());
  out.insert(out.end(), m_labels.begin(),
             m_labels.begin() + static_cast<std::ptrdiff_t>(half));
  return out;
}

Int two_m_rho(const DynkinLabels& labels) {
  const int N = labels.rank().ambient();
  Int sum = 0;
  for (int i = 1; i < N; ++i)
    sum += static_cast<Int>(std::min(i, N - i)) * labels.label(i);
  return sum;
}

Int conformal_2d(Int two_c, Rank rank) {
  return two_c + static_cast<Int>(rank.n) * rank.n;
}

Int conformal_2d(const ERSignature& sig, Rank rank) {
  return conformal_2d(sig.two_c, rank);
}

}  // namespace sunn
