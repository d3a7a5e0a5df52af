#pragma once

#include "qmatrix.hpp"

namespace qpf {

/// Basis of Hom_{B_d}(V_m^(x d), V_n^(x d)): all n^d x m^d matrices X with
/// X rho_{d,m}(T_i) = rho_{d,n}(T_i) X for i = 1..d-1.
struct IntertwinerSpace {
  int m = 0, n = 0, d = 0;
  std::vector<ExactMatrix> basis;
  long dim() const { return static_cast<long>(basis.size()); }
};

inline const IntertwinerSpace& intertwiner_space(int m, int n, int d) {
  static std::map<std::tuple<int, int, int>, IntertwinerSpace> cache;
  static std::mutex mtx;
  std::lock_guard<std::mutex> lock(mtx);
  auto key = std::make_tuple(m, n, d);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  const long rdim = pow_long(n, d); // rows of X
  const long cdim = pow_long(m, d); // cols of X
  const long unknowns = rdim * cdim; // X_{J,I} flattened as J*cdim + I
  std::vector<detail::SparseRow> rows;
  for (int i = 1; i <= d - 1; ++i) {
    const ExactMatrix& gm = rho_generator(d, m, i);
    const ExactMatrix& gn = rho_generator(d, n, i);
    // equation (J,I): sum_{I'} X_{J,I'} gm_{I',I} - sum_{J'} gn_{J,J'} X_{J',I} = 0
    for (long J = 0; J < rdim; ++J)
      for (long I = 0; I < cdim; ++I) {
        detail::SparseRow row;
        std::map<long, RatFunc> acc;
        for (long Ip = 0; Ip < cdim; ++Ip) {
          const RatFunc& g = gm.at(Ip, I);
          if (!g.is_zero()) acc[J * cdim + Ip] += g;
        }
        for (long Jp = 0; Jp < rdim; ++Jp) {
          const RatFunc& g = gn.at(J, Jp);
          if (!g.is_zero()) acc[Jp * cdim + I] -= g;
        }
        for (auto& [c, v] : acc)
          if (!v.is_zero()) row.entries.emplace_back(c, std::move(v));
        if (!row.entries.empty()) rows.push_back(std::move(row));
      }
  }
  IntertwinerSpace sp;
  sp.m = m;
  sp.n = n;
  sp.d = d;
  for (auto& vec : detail::kernel_of_rows(rows, unknowns)) {
    ExactMatrix x(rdim, cdim);
    for (long J = 0; J < rdim; ++J)
      for (long I = 0; I < cdim; ++I) x.at(J, I) = vec[J * cdim + I];
    sp.basis.push_back(std::move(x));
  }
  return cache.emplace(std::move(key), std::move(sp)).first->second;
}

/// Is X a morphism in Hom_{B_d}(V_m^(x d), V_n^(x d))?
inline bool is_intertwiner(const ExactMatrix& x, int m, int n, int d) {
  if (x.rows() != pow_long(n, d) || x.cols() != pow_long(m, d)) return false;
  for (int i = 1; i <= d - 1; ++i)
    if (x * rho_generator(d, m, i) != rho_generator(d, n, i) * x) return false;
  return true;
}

/// Functional in S_q(m,n;d) = (A_q(n,m)_d)^*, stored against degree_basis(n,m,d).
struct SchurFunctional {
  int m = 0, n = 0, d = 0; // element of S_q(m,n;d)
  std::vector<RatFunc> coeffs;
};

/// The pairing matrix P_{mu,beta} = <X_mu, mono_beta> between the intertwiner
/// basis and the monomial basis; invertible, so the two sides are dual.
inline const ExactMatrix& pairing_gram(int m, int n, int d) {
  static std::map<std::tuple<int, int, int>, ExactMatrix> cache;
  static std::mutex mtx;
  std::lock_guard<std::mutex> lock(mtx);
  auto key = std::make_tuple(m, n, d);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  const auto& sp = intertwiner_space(m, n, d);
  const auto& basis = degree_basis(n, m, d);
  ExactMatrix p(sp.dim(), static_cast<long>(basis.size()));
  for (long mu = 0; mu < sp.dim(); ++mu)
    for (size_t b = 0; b < basis.size(); ++b)
      p.at(mu, static_cast<long>(b)) = pairing(sp.basis[mu], basis[b], m, n);
  return cache.emplace(std::move(key), std::move(p)).first->second;
}

/// X -> <X, -> as a functional on A_q(n,m)_d.
inline SchurFunctional functional_of_intertwiner(const ExactMatrix& x, int m, int n, int d) {
  const auto& basis = degree_basis(n, m, d);
  SchurFunctional f;
  f.m = m;
  f.n = n;
  f.d = d;
  f.coeffs.resize(basis.size());
  for (size_t b = 0; b < basis.size(); ++b) f.coeffs[b] = pairing(x, basis[b], m, n);
  return f;
}

/// Inverse of functional_of_intertwiner through the Gram matrix.
inline ExactMatrix intertwiner_of_functional(const SchurFunctional& f) {
  const auto& sp = intertwiner_space(f.m, f.n, f.d);
  const ExactMatrix& p = pairing_gram(f.m, f.n, f.d);
  // solve c^T P = f  <=>  P^T c = f
  ExactMatrix rhs(static_cast<long>(f.coeffs.size()), 1);
  for (size_t b = 0; b < f.coeffs.size(); ++b) rhs.at(static_cast<long>(b), 0) = f.coeffs[b];
  ExactMatrix c = solve_unique(p.transpose(), rhs);
  ExactMatrix x(pow_long(f.n, f.d), pow_long(f.m, f.d));
  for (long mu = 0; mu < sp.dim(); ++mu)
    if (!c.at(mu, 0).is_zero()) x = x + c.at(mu, 0) * sp.basis[mu];
  return x;
}

/// Schur product m_{UWV}: for a in S_q(w,v;d) and b in S_q(u,w;d) the product
/// (a (x) b) o Delta_{v,w,u} lands in S_q(u,v;d); under the trace pairing it
/// matches composition of intertwiners X_a o X_b.
inline SchurFunctional schur_product(const SchurFunctional& a, const SchurFunctional& b) {
  if (a.d != b.d || a.m != b.n)
    throw std::invalid_argument("schur_product: middle dimensions or degrees mismatch");
  const int v = a.n, w = a.m, u = b.m, d = a.d;
  const auto& target = degree_basis(v, u, d);
  const auto& left_basis = degree_basis(v, w, d);
  const auto& right_basis = degree_basis(w, u, d);
  SchurFunctional out;
  out.m = u;
  out.n = v;
  out.d = d;
  out.coeffs.resize(target.size());
  for (size_t t = 0; t < target.size(); ++t) {
    QMatrixElement mono;
    mono.m = v;
    mono.n = u;
    mono.add(target[t], LaurentPoly(1));
    TensorElement delta = coproduct(mono, w);
    RatFunc acc;
    for (const auto& [pair_words, c] : delta.terms) {
      long li = static_cast<long>(std::lower_bound(left_basis.begin(), left_basis.end(),
                                                   pair_words.first) - left_basis.begin());
      long ri = static_cast<long>(std::lower_bound(right_basis.begin(), right_basis.end(),
                                                   pair_words.second) - right_basis.begin());
      const RatFunc& av = a.coeffs[li];
      const RatFunc& bv = b.coeffs[ri];
      if (!av.is_zero() && !bv.is_zero()) acc += RatFunc(c) * av * bv;
    }
    out.coeffs[t] = std::move(acc);
  }
  return out;
}

inline SchurFunctional phi_schur(const std::vector<int>& subset, int m, int n, int d) {
  SchurFunctional f;
  f.m = m;
  f.n = n;
  f.d = d;
  f.coeffs = phi_functional(subset, m, n, d);
  return f;
}

} // namespace qpf
