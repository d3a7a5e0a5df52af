#pragma once

#include "braid_action.hpp"
#include "threads.hpp"

namespace qpf {

/// A free module of rank dim with an exact Yang-Baxter operator on its tensor
/// square. Spaces built from a standard space by tensor powers remember the
/// construction (base_n, block_d), which enables the Hecke-algebra route for
/// the Yang-Baxter check at sizes where the matrix identity is out of reach.
struct YBSpace {
  long dim = 0;
  ExactMatrix R; // dim^2 x dim^2
  std::string label;
  int base_n = 0;  // provenance: carrier = V_{base_n}^(x block_d)
  int block_d = 0; // 0 when unknown
};

inline YBSpace standard_space(int n) {
  YBSpace s;
  s.dim = n;
  s.R = standard_R(n);
  s.label = "V_" + std::to_string(n);
  s.base_n = n;
  s.block_d = 1;
  return s;
}

/// (V, R)^(x d) = (V^(x d), T_{w_d}) with T_{w_d} built from R via the braid
/// word of the block swap w_d = w_{d,d}.
inline YBSpace tensor_power_space(const YBSpace& s, int d) {
  if (d < 1) throw std::invalid_argument("tensor_power_space: d must be >= 1");
  if (d == 1) return s;
  YBSpace out;
  out.dim = 1;
  for (int k = 0; k < d; ++k) out.dim *= s.dim;
  const std::vector<int> word = reduced_word(block_swap_perm(d, d));
  long carrier2 = out.dim * out.dim;
  ExactMatrix m = ExactMatrix::identity(carrier2);
  for (int i : word) m = detail::apply_block_generator(s.R, s.dim, 2 * d, i, m);
  out.R = std::move(m);
  out.label = "(" + s.label + ")^(x" + std::to_string(d) + ")";
  if (s.block_d > 0) {
    out.base_n = s.base_n;
    out.block_d = s.block_d * d;
  }
  return out;
}

namespace detail {

/// Sparse column-wise application for the Yang-Baxter check: apply
/// 1^(i-1) (x) R (x) 1^(3-i-1) with blocks of size `dim` to a sparse vector
/// on dim^3 coordinates.
inline std::map<long, RatFunc> apply_r_at(const ExactMatrix& r, long dim, int pos,
                                          const std::map<long, RatFunc>& v) {
  std::map<long, RatFunc> out;
  for (const auto& [idx, val] : v) {
    long a, x, y, b; // idx = ((a*dim + x)*dim + y)*right + b split at pos
    if (pos == 1) {
      a = 0;
      x = idx / (dim * dim);
      y = (idx / dim) % dim;
      b = idx % dim;
    } else {
      a = idx / (dim * dim);
      x = (idx / dim) % dim;
      y = idx % dim;
      b = 0;
    }
    long mid = x * dim + y;
    for (long t = 0; t < dim * dim; ++t) {
      const RatFunc& rv = r.at(t, mid);
      if (rv.is_zero()) continue;
      long nx = t / dim, ny = t % dim;
      long nidx = pos == 1 ? (nx * dim + ny) * dim + b : (a * dim + nx) * dim + ny;
      auto& slot = out[nidx];
      slot += rv * val;
      if (slot.is_zero()) out.erase(nidx);
    }
  }
  return out;
}

inline bool yb_check_column(const ExactMatrix& r, long dim, long col) {
  std::map<long, RatFunc> e;
  e[col] = RatFunc(1);
  auto lhs = apply_r_at(r, dim, 1, apply_r_at(r, dim, 2, apply_r_at(r, dim, 1, e)));
  auto rhs = apply_r_at(r, dim, 2, apply_r_at(r, dim, 1, apply_r_at(r, dim, 2, e)));
  return lhs == rhs;
}

} // namespace detail

/// Full matrix check of R12 R23 R12 = R23 R12 R23 on V^(x3), column by column.
inline bool is_yang_baxter_matrix(const YBSpace& s) {
  const long total = s.dim * s.dim * s.dim;
  std::atomic<bool> ok{true};
  parallel_for(total, [&](long col) {
    if (!ok.load()) return;
    if (!detail::yb_check_column(s.R, s.dim, col)) ok.store(false);
  });
  return ok.load();
}

/// Hecke-algebra identity route for provenance spaces: with u, v the two
/// embeddings of the block swap w_{d,d} into S_{3d}, the matrix identity on
/// V^(x3) follows from T_u T_v T_u = T_v T_u T_v in H_{3d}.
inline bool is_yang_baxter_hecke(const YBSpace& s) {
  if (s.block_d <= 0) return false;
  const int d = s.block_d;
  const int big = 3 * d;
  std::vector<int> base = reduced_word(block_swap_perm(d, d));
  HeckeElement u = HeckeElement::unit(big);
  for (int i : base) u = u.times_generator(i);
  HeckeElement v = HeckeElement::unit(big);
  for (int i : base) v = v.times_generator(i + d);
  return u * v * u == v * u * v;
}

/// Yang-Baxter validity. Small carriers get the exact matrix check; larger
/// provenance-carrying spaces use the Hecke route plus random matrix columns.
inline bool is_yang_baxter(const YBSpace& s) {
  const long total = s.dim * s.dim * s.dim;
  if (total <= 2048 || s.block_d <= 0) return is_yang_baxter_matrix(s);
  if (!is_yang_baxter_hecke(s)) return false;
  std::mt19937_64 rng(20240711u);
  const long samples = s.dim <= 16 ? std::min<long>(total, 128) : 12;
  for (long k = 0; k < samples; ++k)
    if (!detail::yb_check_column(s.R, s.dim, static_cast<long>(rng() % total))) return false;
  return true;
}

/// One eigenvalue family entry: sign * q^exponent with its geometric
/// multiplicity.
struct SpectrumEntry {
  int sign; // +1 or -1
  long exponent;
  long multiplicity;
  friend bool operator==(const SpectrumEntry& a, const SpectrumEntry& b) {
    return a.sign == b.sign && a.exponent == b.exponent && a.multiplicity == b.multiplicity;
  }
};

struct SpectrumReport {
  std::vector<SpectrumEntry> entries; // exponent ascending, minus before plus
  long dim = 0;                       // dimension the operator acts on
  bool complete = false;              // multiplicities sum to dim
};

inline std::string eigenvalue_string(int sign, long exponent) {
  std::string s = sign < 0 ? "-" : "";
  if (exponent == 0) return s + "1";
  s += "q";
  if (exponent != 1) s += "^" + std::to_string(exponent);
  return s;
}

/// Geometric multiplicities of every candidate eigenvalue +-q^k with
/// |k| <= max_exp for the operator S.R; honest: `complete` reports whether
/// the candidate family exhausted the carrier dimension.
inline SpectrumReport spectrum(const YBSpace& s, long max_exp) {
  if (max_exp < 0) throw std::invalid_argument("spectrum: max_exp must be >= 0");
  SpectrumReport rep;
  rep.dim = s.R.rows();
  struct Cand {
    int sign;
    long exp;
  };
  std::vector<Cand> cands;
  for (long k = -max_exp; k <= max_exp; ++k) {
    cands.push_back({-1, k});
    cands.push_back({+1, k});
  }
  // Sound pre-filter: if R - lambda I is nonsingular after specializing q to
  // a rational point, the candidate's multiplicity is zero (specialization
  // can only lower rank). Survivors get the exact kernel.
  const mpq_class q0(3);
  const ExactMatrix r_at_q0 = s.R.evaluate_entries(q0);
  std::vector<long> mult(cands.size(), 0);
  parallel_for(static_cast<long>(cands.size()), [&](long i) {
    mpz_class p = 1;
    for (long k = 0; k < std::labs(cands[i].exp); ++k) p *= 3;
    mpq_class l0 = cands[i].exp >= 0 ? mpq_class(p) : mpq_class(1, p);
    if (cands[i].sign < 0) l0 = -l0;
    ExactMatrix m0 = r_at_q0;
    const RatFunc l0r = RatFunc::rational(l0);
    for (long r = 0; r < m0.rows(); ++r) m0.at(r, r) -= l0r;
    if (kernel(m0).empty()) return;
    RatFunc lambda = RatFunc::q_power(cands[i].exp, cands[i].sign);
    ExactMatrix m = s.R;
    for (long r = 0; r < m.rows(); ++r) m.at(r, r) -= lambda;
    mult[i] = static_cast<long>(kernel(m).size());
  });
  long total = 0;
  for (size_t i = 0; i < cands.size(); ++i) {
    if (mult[i] > 0) {
      rep.entries.push_back({cands[i].sign, cands[i].exp, mult[i]});
      total += mult[i];
    }
  }
  std::sort(rep.entries.begin(), rep.entries.end(), [](const SpectrumEntry& a, const SpectrumEntry& b) {
    if (a.exponent != b.exponent) return a.exponent < b.exponent;
    return a.sign < b.sign;
  });
  rep.complete = total == rep.dim;
  return rep;
}

/// Table-style row: "q^-2 -> 1, -1 -> 3, ...".
inline std::string format_spectrum_row(const SpectrumReport& rep) {
  std::string s;
  for (size_t i = 0; i < rep.entries.size(); ++i) {
    if (i) s += ", ";
    s += eigenvalue_string(rep.entries[i].sign, rep.entries[i].exponent) + " -> " +
         std::to_string(rep.entries[i].multiplicity);
  }
  return s;
}

/// Default exponent bound: 2 * (total tensor degree)^2, reading the operator
/// carrier V^(x2d) of a degree-d power space as tensor degree 2d.
inline long default_max_exp(int block_d) {
  long t = 2L * block_d;
  return 2 * t * t;
}

} // namespace qpf
