#pragma once

#include "ratfunc.hpp"

#include <functional>
#include <map>
#include <numeric>
#include <vector>

namespace qpf {

/// Dense matrix over Q(q). Immutable in spirit: operations return new values.
class ExactMatrix {
public:
  ExactMatrix() : rows_(0), cols_(0) {}
  ExactMatrix(long rows, long cols)
      : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols) {}

  static ExactMatrix identity(long n) {
    ExactMatrix m(n, n);
    for (long i = 0; i < n; ++i) m.at(i, i) = RatFunc(1);
    return m;
  }

  long rows() const { return rows_; }
  long cols() const { return cols_; }

  RatFunc& at(long r, long c) { return e_[static_cast<size_t>(r) * cols_ + c]; }
  const RatFunc& at(long r, long c) const { return e_[static_cast<size_t>(r) * cols_ + c]; }

  bool is_zero() const {
    for (const auto& x : e_) if (!x.is_zero()) return false;
    return true;
  }

  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }
  friend bool operator!=(const ExactMatrix& a, const ExactMatrix& b) { return !(a == b); }

  ExactMatrix transpose() const {
    ExactMatrix t(cols_, rows_);
    for (long r = 0; r < rows_; ++r)
      for (long c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
  }

  friend ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b) {
    assert(a.rows_ == b.rows_ && a.cols_ == b.cols_);
    ExactMatrix r(a.rows_, a.cols_);
    for (size_t i = 0; i < a.e_.size(); ++i) r.e_[i] = a.e_[i] + b.e_[i];
    return r;
  }
  friend ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b) {
    assert(a.rows_ == b.rows_ && a.cols_ == b.cols_);
    ExactMatrix r(a.rows_, a.cols_);
    for (size_t i = 0; i < a.e_.size(); ++i) r.e_[i] = a.e_[i] - b.e_[i];
    return r;
  }

  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
    assert(a.cols_ == b.rows_);
    ExactMatrix r(a.rows_, b.cols_);
    for (long i = 0; i < a.rows_; ++i)
      for (long k = 0; k < a.cols_; ++k) {
        const RatFunc& aik = a.at(i, k);
        if (aik.is_zero()) continue;
        for (long j = 0; j < b.cols_; ++j) {
          const RatFunc& bkj = b.at(k, j);
          if (bkj.is_zero()) continue;
          r.at(i, j) += aik * bkj;
        }
      }
    return r;
  }

  friend ExactMatrix operator*(const RatFunc& s, const ExactMatrix& a) {
    ExactMatrix r(a.rows_, a.cols_);
    if (s.is_zero()) return r;
    for (size_t i = 0; i < a.e_.size(); ++i)
      if (!a.e_[i].is_zero()) r.e_[i] = s * a.e_[i];
    return r;
  }

  std::vector<RatFunc> apply(const std::vector<RatFunc>& v) const {
    assert(static_cast<long>(v.size()) == cols_);
    std::vector<RatFunc> out(rows_);
    for (long i = 0; i < rows_; ++i)
      for (long j = 0; j < cols_; ++j)
        if (!at(i, j).is_zero() && !v[j].is_zero()) out[i] += at(i, j) * v[j];
    return out;
  }

  /// Kronecker product; block (i,j) of the result is at(i,j) * b.
  friend ExactMatrix kron(const ExactMatrix& a, const ExactMatrix& b) {
    ExactMatrix r(a.rows_ * b.rows_, a.cols_ * b.cols_);
    for (long i = 0; i < a.rows_; ++i)
      for (long j = 0; j < a.cols_; ++j) {
        const RatFunc& s = a.at(i, j);
        if (s.is_zero()) continue;
        for (long p = 0; p < b.rows_; ++p)
          for (long q = 0; q < b.cols_; ++q) {
            const RatFunc& t = b.at(p, q);
            if (!t.is_zero()) r.at(i * b.rows_ + p, j * b.cols_ + q) = s * t;
          }
      }
    return r;
  }

  ExactMatrix evaluate_entries(const mpq_class& q0) const {
    ExactMatrix r(rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i)
      if (!e_[i].is_zero()) r.e_[i] = RatFunc::rational(e_[i].evaluate(q0));
    return r;
  }

private:
  long rows_, cols_;
  std::vector<RatFunc> e_;
};

struct RrefResult {
  ExactMatrix r;
  std::vector<long> pivots; // pivot column per pivot row, increasing
};

/// Reduced row echelon form by Gauss-Jordan elimination with simplest-entry
/// pivoting. Exact throughout.
inline RrefResult rref(const ExactMatrix& m) {
  ExactMatrix a = m;
  const long rows = a.rows(), cols = a.cols();
  std::vector<long> pivots;
  long prow = 0;
  for (long c = 0; c < cols && prow < rows; ++c) {
    long best = -1;
    size_t best_cx = 0;
    for (long r = prow; r < rows; ++r) {
      if (a.at(r, c).is_zero()) continue;
      size_t cx = a.at(r, c).complexity();
      if (best < 0 || cx < best_cx) { best = r; best_cx = cx; }
    }
    if (best < 0) continue;
    if (best != prow)
      for (long j = c; j < cols; ++j) std::swap(a.at(best, j), a.at(prow, j));
    RatFunc inv = a.at(prow, c).inverse();
    a.at(prow, c) = RatFunc(1);
    for (long j = c + 1; j < cols; ++j)
      if (!a.at(prow, j).is_zero()) a.at(prow, j) *= inv;
    for (long r = 0; r < rows; ++r) {
      if (r == prow) continue;
      RatFunc f = a.at(r, c);
      if (f.is_zero()) continue;
      a.at(r, c) = RatFunc();
      for (long j = c + 1; j < cols; ++j)
        if (!a.at(prow, j).is_zero()) a.at(r, j) -= f * a.at(prow, j);
    }
    pivots.push_back(c);
    ++prow;
  }
  return {std::move(a), std::move(pivots)};
}

namespace detail {

struct SparseRow {
  std::vector<std::pair<long, RatFunc>> entries; // (column, value), value != 0
};

/// Kernel of the linear system given by sparse rows on `ncols` unknowns.
/// Splits unknowns into connected components of the row-support graph and
/// solves each component densely; basis vectors come back in ascending order
/// of their parametrizing free column.
inline std::vector<std::vector<RatFunc>>
kernel_of_rows(const std::vector<SparseRow>& rows, long ncols) {
  std::vector<long> parent(ncols);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<long(long)> find = [&](long x) {
    while (parent[x] != x) { parent[x] = parent[parent[x]]; x = parent[x]; }
    return x;
  };
  auto unite = [&](long x, long y) { parent[find(x)] = find(y); };
  for (const auto& row : rows) {
    for (size_t i = 1; i < row.entries.size(); ++i)
      unite(row.entries[0].first, row.entries[i].first);
  }
  // group columns by component root
  std::map<long, std::vector<long>> comps;
  for (long c = 0; c < ncols; ++c) comps[find(c)].push_back(c);
  // assign rows to components
  std::map<long, std::vector<const SparseRow*>> comp_rows;
  for (const auto& row : rows) {
    if (!row.entries.empty()) comp_rows[find(row.entries[0].first)].push_back(&row);
  }

  // free-column order must be global: collect per-component kernels keyed by
  // the free column that parametrizes each vector, then emit in column order
  std::map<long, std::vector<RatFunc>> by_free_col;
  for (const auto& [root, cols] : comps) {
    std::map<long, long> local; // global col -> local index
    for (size_t i = 0; i < cols.size(); ++i) local[cols[i]] = static_cast<long>(i);
    auto it = comp_rows.find(root);
    if (it == comp_rows.end()) {
      for (long c : cols) {
        std::vector<RatFunc> v(ncols);
        v[c] = RatFunc(1);
        by_free_col[c] = std::move(v);
      }
      continue;
    }
    ExactMatrix sub(static_cast<long>(it->second.size()), static_cast<long>(cols.size()));
    for (size_t r = 0; r < it->second.size(); ++r)
      for (const auto& [c, val] : it->second[r]->entries)
        sub.at(static_cast<long>(r), local[c]) = val;
    RrefResult rr = rref(sub);
    std::vector<bool> is_pivot(cols.size(), false);
    for (long p : rr.pivots) is_pivot[p] = true;
    for (size_t f = 0; f < cols.size(); ++f) {
      if (is_pivot[f]) continue;
      std::vector<RatFunc> v(ncols);
      v[cols[f]] = RatFunc(1);
      for (size_t pr = 0; pr < rr.pivots.size(); ++pr) {
        const RatFunc& x = rr.r.at(static_cast<long>(pr), static_cast<long>(f));
        if (!x.is_zero()) v[cols[rr.pivots[pr]]] = -x;
      }
      by_free_col[cols[f]] = std::move(v);
    }
  }
  std::vector<std::vector<RatFunc>> out;
  out.reserve(by_free_col.size());
  for (auto& [c, v] : by_free_col) out.push_back(std::move(v));
  return out;
}

inline std::vector<SparseRow> rows_of(const ExactMatrix& m) {
  std::vector<SparseRow> rows;
  rows.reserve(m.rows());
  for (long r = 0; r < m.rows(); ++r) {
    SparseRow row;
    for (long c = 0; c < m.cols(); ++c)
      if (!m.at(r, c).is_zero()) row.entries.emplace_back(c, m.at(r, c));
    if (!row.entries.empty()) rows.push_back(std::move(row));
  }
  return rows;
}

} // namespace detail

/// Basis of { v : Mv = 0 }.
inline std::vector<std::vector<RatFunc>> kernel(const ExactMatrix& m) {
  return detail::kernel_of_rows(detail::rows_of(m), m.cols());
}

inline long rank(const ExactMatrix& m) {
  return m.cols() - static_cast<long>(kernel(m).size());
}

/// Basis of the column span: the original columns at rref pivot positions.
inline std::vector<std::vector<RatFunc>> column_space(const ExactMatrix& m) {
  RrefResult rr = rref(m);
  std::vector<std::vector<RatFunc>> basis;
  basis.reserve(rr.pivots.size());
  for (long p : rr.pivots) {
    std::vector<RatFunc> col(m.rows());
    for (long r = 0; r < m.rows(); ++r) col[r] = m.at(r, p);
    basis.push_back(std::move(col));
  }
  return basis;
}

inline ExactMatrix matrix_from_columns(const std::vector<std::vector<RatFunc>>& cols, long rows) {
  ExactMatrix m(rows, static_cast<long>(cols.size()));
  for (size_t c = 0; c < cols.size(); ++c) {
    assert(static_cast<long>(cols[c].size()) == rows);
    for (long r = 0; r < rows; ++r) m.at(r, static_cast<long>(c)) = cols[c][r];
  }
  return m;
}

/// Characteristic polynomial det(tI - M), coefficients of t^0..t^n.
/// Faddeev-LeVerrier; M must be square.
inline std::vector<RatFunc> char_poly(const ExactMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("char_poly: matrix not square");
  const long n = m.rows();
  std::vector<RatFunc> c(n + 1);
  c[n] = RatFunc(1);
  ExactMatrix mk(n, n); // starts as zero
  for (long k = 1; k <= n; ++k) {
    // M_k = M * (M_{k-1} + c_{n-k+1} I)
    ExactMatrix t = mk;
    for (long i = 0; i < n; ++i) t.at(i, i) += c[n - k + 1];
    mk = m * t;
    RatFunc tr;
    for (long i = 0; i < n; ++i) tr += mk.at(i, i);
    c[n - k] = -(tr / RatFunc(k));
  }
  return c;
}

/// Evaluate a coefficient-vector polynomial at t0.
inline RatFunc poly_eval(const std::vector<RatFunc>& coeffs, const RatFunc& t0) {
  RatFunc acc;
  for (size_t i = coeffs.size(); i-- > 0;) acc = acc * t0 + coeffs[i];
  return acc;
}

/// Solve A x = b for every column b of rhs; A must have full column rank and
/// the system must be consistent (asserted). Returns the coefficient matrix.
inline ExactMatrix solve_unique(const ExactMatrix& a, const ExactMatrix& rhs) {
  assert(a.rows() == rhs.rows());
  ExactMatrix aug(a.rows(), a.cols() + rhs.cols());
  for (long r = 0; r < a.rows(); ++r) {
    for (long c = 0; c < a.cols(); ++c) aug.at(r, c) = a.at(r, c);
    for (long c = 0; c < rhs.cols(); ++c) aug.at(r, a.cols() + c) = rhs.at(r, c);
  }
  RrefResult rr = rref(aug);
  ExactMatrix x(a.cols(), rhs.cols());
  long pr = 0;
  std::vector<long> pivot_row_of(a.cols(), -1);
  for (long p : rr.pivots) {
    if (p < a.cols()) pivot_row_of[p] = pr;
    else throw std::domain_error("solve_unique: inconsistent system");
    ++pr;
  }
  for (long c = 0; c < a.cols(); ++c)
    if (pivot_row_of[c] < 0) throw std::domain_error("solve_unique: rank-deficient matrix");
  for (long c = 0; c < a.cols(); ++c)
    for (long j = 0; j < rhs.cols(); ++j)
      x.at(c, j) = rr.r.at(pivot_row_of[c], a.cols() + j);
  return x;
}

} // namespace qpf
