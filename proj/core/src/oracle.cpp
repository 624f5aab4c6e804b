#include "sunn/oracle.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace sunn::oracle {

namespace {

void check_scale(const LambdaVector& lambda) {
  if (lambda.rank().n > 4)
    throw std::domain_error("oracle: refused for n > 4 (factorial enumeration)");
}

bool weakly_decreasing(const std::vector<Int>& v, std::size_t first,
                       std::size_t last) {
  for (std::size_t i = first; i + 1 < last; ++i)
    if (v[i] < v[i + 1]) return false;
  return true;
}

// Coordinate vector of an arrangement: top block then bottom block.
std::vector<Int> mu_of(const Arrangement& arr) {
  std::vector<Int> mu = arr.top;
  mu.insert(mu.end(), arr.bottom.begin(), arr.bottom.end());
  return mu;
}

}  // namespace

std::set<Arrangement> brute_arrangements(const LambdaVector& lambda) {
  check_scale(lambda);
  const int n = lambda.rank().n;
  std::vector<Int> perm = lambda.values();
  std::sort(perm.begin(), perm.end());

  std::set<Arrangement> out;
  do {
    const std::size_t half = static_cast<std::size_t>(n);
    if (!weakly_decreasing(perm, 0, half)) continue;
    if (!weakly_decreasing(perm, half, perm.size())) continue;
    Arrangement arr;
    arr.top.assign(perm.begin(), perm.begin() + static_cast<std::ptrdiff_t>(half));
    arr.bottom.assign(perm.begin() + static_cast<std::ptrdiff_t>(half), perm.end());
    out.insert(std::move(arr));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::set<OracleEdge> brute_edges(const LambdaVector& lambda) {
  check_scale(lambda);
  const int n = lambda.rank().n;
  const int N = lambda.rank().ambient();

  // Realise every arrangement by position subsets and record the levels at
  // which it occurs.
  std::map<Arrangement, std::set<int>> levels;
  for (unsigned mask = 0; mask < (1u << N); ++mask) {
    if (__builtin_popcount(mask) != n) continue;
    Arrangement arr;
    int level = 0;
    int position = 0;
    for (int pos = 1; pos <= N; ++pos) {
      if (mask & (1u << (pos - 1))) {
        arr.top.push_back(lambda.at(pos));
        level += pos;
        ++position;
      } else {
        arr.bottom.push_back(lambda.at(pos));
      }
    }
    levels[arr].insert(level - n * (n + 1) / 2);
  }

  std::set<OracleEdge> out;
  for (const auto& [src, src_levels] : levels) {
    for (const auto& [dst, dst_levels] : levels) {
      if (src == dst) continue;
      const std::vector<Int> mu_src = mu_of(src);
      const std::vector<Int> mu_dst = mu_of(dst);
      // The displacement must be m * (e_p - e_q) with p <= n < q and m >= 1.
      int p = 0, q = 0;
      Int m = 0;
      bool ok = true;
      for (int i = 0; i < N && ok; ++i) {
        const Int d = mu_src[static_cast<std::size_t>(i)] -
                      mu_dst[static_cast<std::size_t>(i)];
        if (d == 0) continue;
        if (d > 0) {
          if (p != 0) ok = false;
          p = i + 1;
          m = d;
        } else {
          if (q != 0) ok = false;
          q = i + 1;
          if (m != -d && m != 0) ok = false;
          if (m == 0) m = -d;
        }
      }
      if (!ok || p == 0 || q == 0 || m < 1) continue;
      if (!(p <= n && n < q)) continue;
      // Some pair of realisations must sit one level apart.
      bool gap_one = false;
      for (int la : src_levels)
        if (dst_levels.count(la + 1)) gap_one = true;
      if (!gap_one) continue;
      out.insert(OracleEdge{src, dst, Root{p, q - 1, true}, m});
    }
  }
  return out;
}

unsigned long long gt_dimension(const std::vector<Int>& labels) {
  if (labels.size() > 5)
    throw std::domain_error("gt_dimension: refused beyond five labels");
  for (Int v : labels) {
    if (v < 1) throw std::domain_error("gt_dimension: labels must be positive");
    if (v > 3) throw std::domain_error("gt_dimension: refused for labels > 3");
  }

  // Top row of a pattern: suffix sums of the shifted labels.
  std::vector<Int> row(labels.size() + 1, 0);
  for (std::size_t i = labels.size(); i-- > 0;)
    row[i] = row[i + 1] + labels[i] - 1;

  std::map<std::vector<Int>, unsigned long long> memo;
  auto count = [&](auto&& self, const std::vector<Int>& r) -> unsigned long long {
    if (r.size() == 1) return 1;
    auto it = memo.find(r);
    if (it != memo.end()) return it->second;
    unsigned long long total = 0;
    std::vector<Int> next(r.size() - 1);
    auto place = [&](auto&& go, std::size_t i) -> void {
      if (i == next.size()) {
        total += self(self, next);
        return;
      }
      for (Int v = r[i + 1]; v <= r[i]; ++v) {
        next[i] = v;
        go(go, i + 1);
      }
    };
    place(place, 0);
    memo.emplace(r, total);
    return total;
  };
  return count(count, row);
}

}  // namespace sunn::oracle
