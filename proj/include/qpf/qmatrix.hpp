#pragma once

#include "braid_action.hpp"

#include <map>
#include <random>

namespace qpf {

/// Generator x_{row,col} of A_q(m,n), 1 <= row <= m, 1 <= col <= n.
/// Total order: lexicographic by (row, col).
struct QVar {
  int row;
  int col;
  friend bool operator==(const QVar& a, const QVar& b) { return a.row == b.row && a.col == b.col; }
  friend bool operator!=(const QVar& a, const QVar& b) { return !(a == b); }
  friend bool operator<(const QVar& a, const QVar& b) {
    if (a.row != b.row) return a.row < b.row;
    return a.col < b.col;
  }
};

using QWord = std::vector<QVar>;

/// Normal-form monomial: the word is sorted nondecreasing under the QVar order.
struct QMonomial {
  QWord word;
  friend bool operator==(const QMonomial& a, const QMonomial& b) { return a.word == b.word; }
  friend bool operator<(const QMonomial& a, const QMonomial& b) { return a.word < b.word; }
};

inline bool word_sorted(const QWord& w) {
  for (size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i + 1] < w[i]) return false;
  return true;
}

/// Element of A_q(m,n) as a combination of normal-form monomials.
struct QMatrixElement {
  int m = 0, n = 0;
  std::map<QWord, LaurentPoly> terms;

  bool is_zero() const { return terms.empty(); }
  void add(const QWord& w, const LaurentPoly& c) {
    if (c.is_zero()) return;
    auto it = terms.find(w);
    if (it == terms.end()) terms.emplace(w, c);
    else {
      it->second += c;
      if (it->second.is_zero()) terms.erase(it);
    }
  }
  friend bool operator==(const QMatrixElement& a, const QMatrixElement& b) {
    return a.m == b.m && a.n == b.n && a.terms == b.terms;
  }
};

using RawElement = std::vector<std::pair<QWord, LaurentPoly>>;

/// Descent-picking strategy for the rewriting loop: given the list of
/// descent positions, return the index of the one to rewrite.
using ReduceStrategy = std::function<size_t(const QWord&, const std::vector<size_t>&)>;

inline ReduceStrategy leftmost_strategy() {
  return [](const QWord&, const std::vector<size_t>& descents) { return descents.front(); };
}

inline ReduceStrategy random_strategy(std::mt19937_64& rng) {
  return [&rng](const QWord&, const std::vector<size_t>& descents) {
    return descents[rng() % descents.size()];
  };
}

/// Straighten a raw word combination to the ordered-monomial normal form
/// using the defining relations of A_q(m,n):
///   same row,  cols k>l:   x_{ik} x_{il} = q x_{il} x_{ik}
///   same col,  rows i>j:   x_{ik} x_{jk} = q x_{jk} x_{ik}
///   rows i>j, cols l<k:    x_{il} x_{jk} = x_{jk} x_{il}
///   rows i>j, cols k>l:    x_{ik} x_{jl} = x_{jl} x_{ik} + (q-q^-1) x_{il} x_{jk}
inline QMatrixElement normal_form(const RawElement& raw, int m, int n,
                                  const ReduceStrategy& pick = leftmost_strategy()) {
  QMatrixElement out;
  out.m = m;
  out.n = n;
  const LaurentPoly q = LaurentPoly::q_power(1);
  const LaurentPoly qmq = LaurentPoly::q_power(1) - LaurentPoly::q_power(-1);

  std::vector<std::pair<QWord, LaurentPoly>> work(raw.begin(), raw.end());
  for (auto& [w, c] : work)
    for (const QVar& v : w)
      if (v.row < 1 || v.row > m || v.col < 1 || v.col > n)
        throw std::invalid_argument("normal_form: generator out of shape");

  while (!work.empty()) {
    auto [w, c] = std::move(work.back());
    work.pop_back();
    if (c.is_zero()) continue;
    std::vector<size_t> descents;
    for (size_t i = 0; i + 1 < w.size(); ++i)
      if (w[i + 1] < w[i]) descents.push_back(i);
    if (descents.empty()) {
      out.add(w, c);
      continue;
    }
    size_t i = pick(w, descents);
    const QVar a = w[i], b = w[i + 1]; // a > b
    QWord swapped = w;
    std::swap(swapped[i], swapped[i + 1]);
    if (a.row == b.row || a.col == b.col) {
      work.emplace_back(std::move(swapped), q * c);
    } else if (a.col < b.col) { // rows a>b, col of a smaller: plain commute
      work.emplace_back(std::move(swapped), c);
    } else { // rows a>b, cols a>b: q-commutator
      work.emplace_back(std::move(swapped), c);
      QWord inner = w;
      inner[i] = QVar{a.row, b.col};
      inner[i + 1] = QVar{b.row, a.col};
      work.emplace_back(std::move(inner), qmq * c);
    }
  }
  return out;
}

inline QMatrixElement normal_form_word(const QWord& w, int m, int n) {
  return normal_form(RawElement{{w, LaurentPoly(1)}}, m, n);
}

/// Ordered monomial basis of A_q(m,n)_d, lex order on words; memoized.
inline const std::vector<QWord>& degree_basis(int m, int n, int d) {
  static std::map<std::tuple<int, int, int>, std::vector<QWord>> cache;
  static std::mutex mtx;
  std::lock_guard<std::mutex> lock(mtx);
  auto key = std::make_tuple(m, n, d);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  std::vector<QVar> vars;
  for (int r = 1; r <= m; ++r)
    for (int c = 1; c <= n; ++c) vars.push_back({r, c});
  std::vector<QWord> basis;
  QWord cur;
  std::function<void(size_t)> rec = [&](size_t lo) {
    if (static_cast<int>(cur.size()) == d) {
      basis.push_back(cur);
      return;
    }
    for (size_t v = lo; v < vars.size(); ++v) {
      cur.push_back(vars[v]);
      rec(v);
      cur.pop_back();
    }
  };
  rec(0);
  return cache.emplace(std::move(key), std::move(basis)).first->second;
}

inline long basis_index(int m, int n, const QWord& w) {
  const auto& basis = degree_basis(m, n, static_cast<int>(w.size()));
  auto it = std::lower_bound(basis.begin(), basis.end(), w);
  if (it == basis.end() || *it != w)
    throw std::invalid_argument("basis_index: word not in normal form");
  return static_cast<long>(it - basis.begin());
}

/// Product of two elements of A_q(m,n), result in normal form.
inline QMatrixElement qm_multiply(const QMatrixElement& a, const QMatrixElement& b) {
  assert(a.m == b.m && a.n == b.n);
  RawElement raw;
  for (const auto& [wa, ca] : a.terms)
    for (const auto& [wb, cb] : b.terms) {
      QWord w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      raw.emplace_back(std::move(w), ca * cb);
    }
  return normal_form(raw, a.m, a.n);
}

/// Element of A_q(l,m) (x) A_q(m,n): both legs in normal form.
struct TensorElement {
  int l = 0, mid = 0, n = 0;
  std::map<std::pair<QWord, QWord>, LaurentPoly> terms;

  void add(const QWord& a, const QWord& b, const LaurentPoly& c) {
    if (c.is_zero()) return;
    auto key = std::make_pair(a, b);
    auto it = terms.find(key);
    if (it == terms.end()) terms.emplace(std::move(key), c);
    else {
      it->second += c;
      if (it->second.is_zero()) terms.erase(it);
    }
  }
  friend bool operator==(const TensorElement& a, const TensorElement& b) {
    return a.l == b.l && a.mid == b.mid && a.n == b.n && a.terms == b.terms;
  }
};

/// Coproduct Delta: A_q(l,n) -> A_q(l,mid) (x) A_q(mid,n), the multiplicative
/// extension of x_{ij} -> sum_k x_{ik} (x) x_{kj}.
inline TensorElement coproduct(const QMatrixElement& e, int mid) {
  TensorElement out;
  out.l = e.m;
  out.mid = mid;
  out.n = e.n;
  for (const auto& [w, c] : e.terms) {
    const int d = static_cast<int>(w.size());
    // enumerate middle index assignments k_1..k_d
    std::vector<int> k(d, 1);
    for (;;) {
      QWord left(d), right(d);
      for (int t = 0; t < d; ++t) {
        left[t] = QVar{w[t].row, k[t]};
        right[t] = QVar{k[t], w[t].col};
      }
      QMatrixElement ln = normal_form(RawElement{{left, LaurentPoly(1)}}, e.m, mid);
      QMatrixElement rn = normal_form(RawElement{{right, LaurentPoly(1)}}, mid, e.n);
      for (const auto& [lw, lc] : ln.terms)
        for (const auto& [rw, rc] : rn.terms) out.add(lw, rw, c * lc * rc);
      int t = d - 1;
      while (t >= 0 && k[t] == mid) { k[t] = 1; --t; }
      if (t < 0) break;
      ++k[t];
    }
  }
  return out;
}

/// Counit of A_q(n,n): algebra map with eps(x_{ij}) = delta_{ij}.
inline LaurentPoly counit(const QMatrixElement& e) {
  if (e.m != e.n) throw std::invalid_argument("counit: shape must be square");
  LaurentPoly out;
  for (const auto& [w, c] : e.terms) {
    bool diag = true;
    for (const QVar& v : w)
      if (v.row != v.col) { diag = false; break; }
    if (diag) out += c;
  }
  return out;
}

/// det_q = sum_sigma (-q^-1)^{l(sigma)} x_{1 sigma(1)} ... x_{n sigma(n)}.
/// Already an ordered monomial combination (rows strictly increase).
inline QMatrixElement quantum_determinant(int n) {
  QMatrixElement e;
  e.m = e.n = n;
  detail::foreach_perm(n, [&](const Perm& s) {
    QWord w(n);
    for (int i = 1; i <= n; ++i) w[i - 1] = QVar{i, s(i)};
    long l = s.length();
    e.add(w, LaurentPoly::q_power(-l, (l % 2 == 0) ? 1 : -1));
  });
  return e;
}

/// phi^d_subset as a coefficient vector against degree_basis(n, m, d): the
/// degree-d part of the algebra map x_{kl} -> [k == l and k in subset].
inline std::vector<RatFunc> phi_functional(const std::vector<int>& subset, int m, int n, int d) {
  const auto& basis = degree_basis(n, m, d);
  std::vector<bool> in(std::max(m, n) + 1, false);
  for (int s : subset)
    if (s >= 1 && s <= std::max(m, n)) in[s] = true;
  std::vector<RatFunc> out(basis.size());
  for (size_t b = 0; b < basis.size(); ++b) {
    bool one = true;
    for (const QVar& v : basis[b])
      if (v.row != v.col || !in[v.row]) { one = false; break; }
    if (one) out[b] = RatFunc(1);
  }
  return out;
}

/// Trace pairing: X in Hom_{B_d}(V_m^d, V_n^d) against the
/// class of x_{JI} in A_q(n,m)_d equals the matrix entry X_{J,I}.
inline RatFunc pairing(const ExactMatrix& x, const QWord& mono, int m, int n) {
  const int d = static_cast<int>(mono.size());
  if (x.rows() != pow_long(n, d) || x.cols() != pow_long(m, d))
    throw std::invalid_argument("pairing: degree/shape mismatch");
  std::vector<int> jrow(d), icol(d);
  for (int t = 0; t < d; ++t) {
    if (mono[t].row < 1 || mono[t].row > n || mono[t].col < 1 || mono[t].col > m)
      throw std::invalid_argument("pairing: monomial outside A_q(n,m)");
    jrow[t] = mono[t].row;
    icol[t] = mono[t].col;
  }
  return x.at(tuple_to_index(jrow, n), tuple_to_index(icol, m));
}

inline RatFunc pairing(const ExactMatrix& x, const QMatrixElement& e, int m, int n) {
  RatFunc acc;
  for (const auto& [w, c] : e.terms) acc += RatFunc(c) * pairing(x, w, m, n);
  return acc;
}

} // namespace qpf
