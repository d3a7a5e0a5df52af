#pragma once

#include "functor.hpp"
#include "report.hpp"
#include "tableaux.hpp"

namespace qpf {

/// alpha_d(n): Lambda_q^d(n) -> V_n^(x d), the q-antisymmetrization
/// ebar_I -> e_I . y_d. Equals the transpose of the Lambda projection.
inline ExactMatrix antisymmetrization(int d, int n) {
  return ext_projection(d, n).transpose();
}

namespace detail {

inline ExactMatrix kron_chain(const std::vector<ExactMatrix>& ms) {
  ExactMatrix acc = ExactMatrix::identity(1);
  for (const auto& m : ms) acc = kron(acc, m);
  return acc;
}

} // namespace detail

/// Composite matrix of the Schur construction for lambda at n:
///   Lambda^{lambda'} --alpha--> tensor^d --T_{sigma_{lambda'}}--> tensor^d
///   --proj--> S^{lambda}
/// The image is the Schur module of highest weight lambda; its dimension is
/// the SSYT(lambda, <= n) count.
inline ExactMatrix schur_composite(const PartitionShape& lambda, int n) {
  const PartitionShape mu = lambda.conjugate(); // source legs
  const int d = lambda.size();
  std::vector<ExactMatrix> alphas, projs;
  for (int p : mu.parts) alphas.push_back(antisymmetrization(p, n));
  for (int p : lambda.parts) projs.push_back(sym_projection(p, n));
  const ExactMatrix& braid = rho_perm(d, n, canonical_permutation(mu));
  return detail::kron_chain(projs) * braid * detail::kron_chain(alphas);
}

/// Composite matrix of the Weyl construction for lambda at n:
///   Gamma^{lambda} --iota--> tensor^d --T_{sigma_lambda}--> tensor^d
///   --proj--> Lambda^{lambda'}
/// Exactly the transpose of schur_composite(lambda, n).
inline ExactMatrix weyl_composite(const PartitionShape& lambda, int n) {
  const PartitionShape mu = lambda.conjugate();
  const int d = lambda.size();
  std::vector<ExactMatrix> iotas, projs;
  for (int p : lambda.parts) iotas.push_back(sym_projection(p, n).transpose());
  for (int p : mu.parts) projs.push_back(ext_projection(p, n));
  const ExactMatrix& braid = rho_perm(d, n, canonical_permutation(lambda));
  return detail::kron_chain(projs) * braid * detail::kron_chain(iotas);
}

/// Image presentation of the Schur (or Weyl) functor evaluation.
struct SchurData {
  PartitionShape shape;
  int n = 0;
  bool weyl = false;
  ExactMatrix composite;                       // source carrier -> target carrier
  std::vector<std::vector<RatFunc>> image_basis; // inside the target carrier
  long dim() const { return static_cast<long>(image_basis.size()); }
};

inline SchurData schur_functor(const PartitionShape& lambda, int n) {
  SchurData s;
  s.shape = lambda;
  s.n = n;
  s.weyl = false;
  s.composite = schur_composite(lambda, n);
  s.image_basis = column_space(s.composite);
  return s;
}

inline SchurData weyl_functor(const PartitionShape& lambda, int n) {
  SchurData s;
  s.shape = lambda;
  s.n = n;
  s.weyl = true;
  s.composite = weyl_composite(lambda, n);
  s.image_basis = column_space(s.composite);
  return s;
}

/// Schur functor as an Image FunctorObject (for induced maps / braiding).
inline FunctorPtr schur_image_functor(const PartitionShape& lambda) {
  const PartitionShape mu = lambda.conjugate();
  std::vector<FunctorPtr> src_legs, dst_legs;
  for (int p : mu.parts) src_legs.push_back(ext_power_functor(p));
  for (int p : lambda.parts) dst_legs.push_back(sym_power_functor(p));
  Morphism alpha{Morphism::AlphaTensor, mu.parts, Perm(), lambda.size(), {}};
  Morphism braid{Morphism::BraidWord, {}, canonical_permutation(mu), lambda.size(), {}};
  Morphism proj{Morphism::ProjSymTensor, lambda.parts, Perm(), lambda.size(), {}};
  Morphism chain{Morphism::Compose, {}, Perm(), lambda.size(), {proj, braid, alpha}};
  return image_functor(product_functor(src_legs), product_functor(dst_legs), std::move(chain));
}

/// W_lambda = (S_lambda)^# : the Weyl composite is the exact transpose of the
/// Schur composite, the dimensions agree with the SSYT oracle, and the
/// pairing of the two image presentations is nondegenerate.
inline Report verify_sw_duality(const PartitionShape& lambda, int n) {
  Report rep;
  rep.name = "sw-duality " + lambda.to_string() + " n=" + std::to_string(n);
  ExactMatrix ms = schur_composite(lambda, n);
  ExactMatrix mw = weyl_composite(lambda, n);
  rep.add_bool("weyl composite equals transpose of schur composite " + lambda.to_string(),
               mw == ms.transpose());
  auto sb = column_space(ms);
  auto wb = column_space(mw);
  rep.add("dim W = dim S for " + lambda.to_string(),
          static_cast<long>(wb.size()), static_cast<long>(sb.size()));
  // duality pairing on the chosen bases: rows x cols pivot minor of ms
  RrefResult rc = rref(ms);
  RrefResult rr = rref(ms.transpose());
  ExactMatrix g(static_cast<long>(rr.pivots.size()), static_cast<long>(rc.pivots.size()));
  for (size_t a = 0; a < rr.pivots.size(); ++a)
    for (size_t b = 0; b < rc.pivots.size(); ++b)
      g.at(static_cast<long>(a), static_cast<long>(b)) = ms.at(rr.pivots[a], rc.pivots[b]);
  rep.add("duality pairing rank for " + lambda.to_string(), rank(g),
          static_cast<long>(sb.size()));
  return rep;
}

/// Quantum Cauchy / (GL_m, GL_n) duality dimension identity at degree d.
inline Report verify_cauchy(int m, int n, int d) {
  Report rep;
  rep.name = "cauchy m=" + std::to_string(m) + " n=" + std::to_string(n) +
             " d=" + std::to_string(d);
  long lhs = binomial(static_cast<long>(m) * n + d - 1, d);
  long sum = 0;
  for (const auto& lam : partitions_of(d)) {
    if (lam.length() > std::min(m, n)) continue;
    sum += ssyt_count(lam, m) * ssyt_count(lam, n);
  }
  rep.add("C(mn+d-1,d) = sum ssyt(l,m)*ssyt(l,n)", lhs, sum);
  rep.add("sum matches dim Hom_{B_d}(V_n, V_m)", sum, intertwiner_space(n, m, d).dim());
  return rep;
}

/// Rank of the composition pairing Hom(l,m) x Hom(m,n) -> Hom(l,n) compared
/// with the truncated Cauchy sum (the dual form of the fundamental theorem).
inline Report verify_fft(int l, int m, int n, int d) {
  Report rep;
  rep.name = "fft l=" + std::to_string(l) + " m=" + std::to_string(m) +
             " n=" + std::to_string(n) + " d=" + std::to_string(d);
  const auto& a = intertwiner_space(l, m, d);
  const auto& b = intertwiner_space(m, n, d);
  const long fl = pow_long(n, d) * pow_long(l, d);
  ExactMatrix products(fl, a.dim() * b.dim());
  for (long i = 0; i < a.dim(); ++i)
    for (long j = 0; j < b.dim(); ++j) {
      ExactMatrix comp = b.basis[j] * a.basis[i];
      for (long r = 0; r < comp.rows(); ++r)
        for (long c = 0; c < comp.cols(); ++c)
          products.at(r * comp.cols() + c, i * b.dim() + j) = comp.at(r, c);
    }
  long expected = 0;
  for (const auto& lam : partitions_of(d)) {
    if (lam.length() > std::min(std::min(l, m), n)) continue;
    expected += ssyt_count(lam, l) * ssyt_count(lam, n);
  }
  rep.add("rank of composition map = truncated Cauchy sum", rank(products), expected);
  return rep;
}

namespace detail {

/// Rows spanning a subspace -> rows of the transposed system, so the span
/// dimension can be computed as (#rows - nullity) over few unknowns.
inline std::vector<SparseRow> transpose_rows(const std::vector<SparseRow>& rows, long ncols) {
  std::vector<SparseRow> t(ncols);
  for (size_t r = 0; r < rows.size(); ++r)
    for (const auto& [c, v] : rows[r].entries)
      t[c].entries.emplace_back(static_cast<long>(r), v);
  std::vector<SparseRow> out;
  for (auto& row : t)
    if (!row.entries.empty()) out.push_back(std::move(row));
  return out;
}

/// Dimension of the span of a family of sparse row vectors.
inline long span_dim(const std::vector<SparseRow>& rows, long ncols) {
  long nullity = static_cast<long>(
      kernel_of_rows(transpose_rows(rows, ncols), static_cast<long>(rows.size())).size());
  return static_cast<long>(rows.size()) - nullity;
}

} // namespace detail

/// Span dimension of {rho_{d,m}(T_w) : w in S_d} inside End(V_m^(x d)).
inline long hecke_span_dimension(int m, int d) {
  const long N = pow_long(m, d);
  std::vector<detail::SparseRow> rows;
  detail::foreach_perm(d, [&](const Perm& w) {
    const ExactMatrix& t = rho_perm(d, m, w);
    detail::SparseRow row;
    for (long r = 0; r < N; ++r)
      for (long c = 0; c < N; ++c)
        if (!t.at(r, c).is_zero()) row.entries.emplace_back(r * N + c, t.at(r, c));
    rows.push_back(std::move(row));
  });
  return detail::span_dim(rows, N * N);
}

/// Jimbo-Schur-Weyl dimension identities on V_m^(x d).
inline Report verify_jimbo_sw(int m, int d) {
  Report rep;
  rep.name = "jimbo-sw m=" + std::to_string(m) + " d=" + std::to_string(d);
  long lhs = pow_long(m, d);
  long sum = 0, hecke_expected = 0;
  for (const auto& lam : partitions_of(d)) {
    if (lam.length() > m) continue;
    long f = syt_count(lam);
    sum += ssyt_count(lam, m) * f;
    hecke_expected += f * f;
  }
  rep.add("m^d = sum ssyt(l,m)*syt(l)", lhs, sum);
  rep.add("Hecke span dim = sum syt(l)^2", hecke_span_dimension(m, d), hecke_expected);
  return rep;
}

} // namespace qpf
