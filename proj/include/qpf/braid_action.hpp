#pragma once

#include "hecke.hpp"
#include "matrix.hpp"

#include <mutex>

namespace qpf {

/// Matrix of the standard R-matrix R_n on V_n tensor V_n, basis e_i(x)e_j in
/// lexicographic order:
///   e_i(x)e_j -> e_j(x)e_i                        (i < j)
///   e_i(x)e_i -> q e_i(x)e_i
///   e_i(x)e_j -> (q - q^-1) e_i(x)e_j + e_j(x)e_i (i > j)
inline ExactMatrix standard_R(int n) {
  if (n < 1) throw std::invalid_argument("standard_R: n must be >= 1");
  ExactMatrix r(static_cast<long>(n) * n, static_cast<long>(n) * n);
  const RatFunc q = RatFunc::q();
  const RatFunc qmq = rf_q_minus_qinv();
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      long col = static_cast<long>(i - 1) * n + (j - 1);
      long flip = static_cast<long>(j - 1) * n + (i - 1);
      if (i < j) {
        r.at(flip, col) = RatFunc(1);
      } else if (i == j) {
        r.at(col, col) = q;
      } else {
        r.at(col, col) = qmq;
        r.at(flip, col) = RatFunc(1);
      }
    }
  return r;
}

namespace detail {

/// Left-multiply m by 1^(i-1) (x) R (x) 1^(d-i-1) where R acts on dim^2,
/// exploiting that the operator has at most two entries per column.
inline ExactMatrix apply_block_generator(const ExactMatrix& r2, long dim, int d, int i,
                                         const ExactMatrix& m) {
  const long n = dim;
  long left = 1;
  for (int k = 0; k < i - 1; ++k) left *= n;
  long right = 1;
  for (int k = 0; k < d - i - 1; ++k) right *= n;
  const long total = left * n * n * right;
  assert(m.rows() == total);
  ExactMatrix out(total, m.cols());
  // row index decomposes as ((a*n + x)*n + y)*right + b with a < left, b < right
  for (long a = 0; a < left; ++a)
    for (long x = 0; x < n; ++x)
      for (long y = 0; y < n; ++y) {
        const long src_mid = x * n + y;
        for (long b = 0; b < right; ++b) {
          const long row = ((a * n + x) * n + y) * right + b;
          // out[target rows] += R[t, src_mid] * m[row]
          for (long t = 0; t < n * n; ++t) {
            const RatFunc& rv = r2.at(t, src_mid);
            if (rv.is_zero()) continue;
            const long trow = ((a * n + (t / n)) * n + (t % n)) * right + b;
            for (long c = 0; c < m.cols(); ++c) {
              const RatFunc& mv = m.at(row, c);
              if (!mv.is_zero()) out.at(trow, c) += rv * mv;
            }
          }
        }
      }
  return out;
}

} // namespace detail

/// rho_{d,n}(T_i) = 1^(i-1) (x) R_n (x) 1^(d-i-1) on V_n^(x d); memoized.
inline const ExactMatrix& rho_generator(int d, int n, int i) {
  if (i < 1 || i > d - 1) throw std::invalid_argument("rho_generator: index out of range");
  static std::map<std::tuple<int, int, int>, ExactMatrix> cache;
  static std::mutex mtx;
  std::lock_guard<std::mutex> lock(mtx);
  auto key = std::make_tuple(d, n, i);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  long total = 1;
  for (int k = 0; k < d; ++k) total *= n;
  ExactMatrix m =
      detail::apply_block_generator(standard_R(n), n, d, i, ExactMatrix::identity(total));
  return cache.emplace(std::move(key), std::move(m)).first->second;
}

/// rho of a braid word (generator indices). The action is a right action:
/// rho(T_w T_w') = rho(T_w') rho(T_w), so letters are applied left to right
/// as successive left multiplications.
inline ExactMatrix rho_word(int d, int n, const std::vector<int>& word) {
  long total = 1;
  for (int k = 0; k < d; ++k) total *= n;
  ExactMatrix m = ExactMatrix::identity(total);
  const ExactMatrix r2 = standard_R(n);
  for (int i : word) m = detail::apply_block_generator(r2, n, d, i, m);
  return m;
}

/// rho_{d,n}(T_w) via a reduced word of w; memoized per (d, n, w).
inline const ExactMatrix& rho_perm(int d, int n, const Perm& w) {
  static std::map<std::tuple<int, int, std::vector<int>>, ExactMatrix> cache;
  static std::mutex mtx;
  std::lock_guard<std::mutex> lock(mtx);
  auto key = std::make_tuple(d, n, w.one_line());
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  ExactMatrix m = rho_word(d, n, reduced_word(w));
  return cache.emplace(std::move(key), std::move(m)).first->second;
}

/// rho applied to a Hecke algebra element.
inline ExactMatrix rho_hecke(int n, const HeckeElement& e) {
  const int d = e.degree();
  long total = 1;
  for (int k = 0; k < d; ++k) total *= n;
  ExactMatrix m(total, total);
  for (const auto& [w, c] : e.terms()) m = m + RatFunc(c) * rho_perm(d, n, w);
  return m;
}

/// Dimension n^d as long.
inline long pow_long(long n, int d) {
  long t = 1;
  for (int k = 0; k < d; ++k) t *= n;
  return t;
}

} // namespace qpf
