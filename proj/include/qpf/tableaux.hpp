#pragma once

#include "perm.hpp"

namespace qpf {

/// Partition with weakly decreasing positive parts.
struct PartitionShape {
  std::vector<int> parts;

  PartitionShape() = default;
  explicit PartitionShape(std::vector<int> p) : parts(std::move(p)) {
    for (size_t i = 0; i < parts.size(); ++i) {
      if (parts[i] <= 0) throw std::invalid_argument("PartitionShape: parts must be positive");
      if (i > 0 && parts[i] > parts[i - 1])
        throw std::invalid_argument("PartitionShape: parts must be weakly decreasing");
    }
  }

  int size() const {
    int s = 0;
    for (int p : parts) s += p;
    return s;
  }
  int length() const { return static_cast<int>(parts.size()); }

  PartitionShape conjugate() const {
    std::vector<int> c;
    if (parts.empty()) return PartitionShape{};
    c.resize(parts[0], 0);
    for (int p : parts)
      for (int j = 0; j < p; ++j) ++c[j];
    return PartitionShape(std::move(c));
  }

  friend bool operator==(const PartitionShape& a, const PartitionShape& b) { return a.parts == b.parts; }
  friend bool operator<(const PartitionShape& a, const PartitionShape& b) { return a.parts < b.parts; }

  std::string to_string() const {
    std::string s = "(";
    for (size_t i = 0; i < parts.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(parts[i]);
    }
    return s + ")";
  }
};

/// All partitions of d, lexicographically decreasing.
inline std::vector<PartitionShape> partitions_of(int d) {
  std::vector<PartitionShape> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rem, int maxp) {
    if (rem == 0) {
      out.push_back(PartitionShape(cur));
      return;
    }
    for (int p = std::min(rem, maxp); p >= 1; --p) {
      cur.push_back(p);
      rec(rem - p, p);
      cur.pop_back();
    }
  };
  rec(d, d);
  return out;
}

/// Semistandard Young tableaux of shape lambda with entries <= n, counted by
/// backtracking: rows weakly increase, columns strictly increase.
inline long ssyt_count(const PartitionShape& lambda, int n) {
  const int rows = lambda.length();
  if (rows == 0) return 1;
  std::vector<std::vector<int>> t(rows);
  for (int r = 0; r < rows; ++r) t[r].assign(lambda.parts[r], 0);
  long count = 0;
  std::function<void(int, int)> rec = [&](int r, int c) {
    if (r == rows) {
      ++count;
      return;
    }
    int nr = r, nc = c + 1;
    if (nc >= lambda.parts[r]) { nr = r + 1; nc = 0; }
    int lo = 1;
    if (c > 0) lo = std::max(lo, t[r][c - 1]);
    if (r > 0) lo = std::max(lo, t[r - 1][c] + 1);
    for (int v = lo; v <= n; ++v) {
      t[r][c] = v;
      rec(nr, nc);
    }
  };
  rec(0, 0);
  return count;
}

/// Standard Young tableaux of shape lambda, counted by backtracking over
/// placements of 1..|lambda|.
inline long syt_count(const PartitionShape& lambda) {
  const int rows = lambda.length();
  if (rows == 0) return 1;
  std::vector<int> filled(rows, 0); // cells filled per row
  long count = 0;
  const int total = lambda.size();
  std::function<void(int)> rec = [&](int k) {
    if (k > total) {
      ++count;
      return;
    }
    for (int r = 0; r < rows; ++r) {
      if (filled[r] >= lambda.parts[r]) continue;
      if (r > 0 && filled[r - 1] <= filled[r]) continue; // column would break
      ++filled[r];
      rec(k + 1);
      --filled[r];
    }
  };
  rec(1);
  return count;
}

/// sigma_lambda: the column reading word of the canonical tableau (rows
/// filled 1..|lambda| in sequence), as a permutation in one-line notation.
inline Perm canonical_permutation(const PartitionShape& lambda) {
  if (lambda.parts.empty()) throw std::invalid_argument("canonical_permutation: empty partition");
  const int rows = lambda.length();
  std::vector<int> row_start(rows, 0);
  for (int r = 1; r < rows; ++r) row_start[r] = row_start[r - 1] + lambda.parts[r - 1];
  std::vector<int> word;
  for (int c = 0; c < lambda.parts[0]; ++c)
    for (int r = 0; r < rows; ++r)
      if (c < lambda.parts[r]) word.push_back(row_start[r] + c + 1);
  return Perm(std::move(word));
}

inline long binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

inline long multinomial(const std::vector<int>& parts) {
  long total = 0;
  for (int p : parts) total += p;
  long r = 1;
  for (int p : parts) {
    r *= binomial(total, p);
    total -= p;
  }
  return r;
}

} // namespace qpf
