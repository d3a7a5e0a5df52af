#pragma once

#include "laurent.hpp"
#include "perm.hpp"

#include <map>

namespace qpf {

/// Element of the type-A Iwahori-Hecke algebra H_d in the T_w basis.
/// Multiplication uses T_w T_i = T_{ws_i} when the length goes up and
/// T_w T_i = T_{ws_i} + (q - q^-1) T_w when it goes down.
class HeckeElement {
public:
  explicit HeckeElement(int d) : d_(d) {}

  static HeckeElement unit(int d) {
    HeckeElement e(d);
    e.terms_[Perm::identity(d)] = LaurentPoly(1);
    return e;
  }
  static HeckeElement generator(int d, int i) {
    HeckeElement e(d);
    e.terms_[Perm::transposition(d, i)] = LaurentPoly(1);
    return e;
  }
  static HeckeElement basis(int d, const Perm& w, LaurentPoly c = LaurentPoly(1)) {
    HeckeElement e(d);
    if (!c.is_zero()) e.terms_[w] = std::move(c);
    return e;
  }

  int degree() const { return d_; }
  const std::map<Perm, LaurentPoly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const Perm& w, const LaurentPoly& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) terms_.emplace(w, c);
    else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  friend HeckeElement operator+(const HeckeElement& a, const HeckeElement& b) {
    assert(a.d_ == b.d_);
    HeckeElement r = a;
    for (const auto& [w, c] : b.terms_) r.add(w, c);
    return r;
  }

  friend HeckeElement operator*(const LaurentPoly& s, const HeckeElement& a) {
    HeckeElement r(a.d_);
    if (s.is_zero()) return r;
    for (const auto& [w, c] : a.terms_) r.terms_[w] = s * c;
    return r;
  }

  /// Right multiplication by the generator T_i.
  HeckeElement times_generator(int i) const {
    HeckeElement r(d_);
    const LaurentPoly qmq = LaurentPoly::q_power(1) - LaurentPoly::q_power(-1);
    for (const auto& [w, c] : terms_) {
      Perm ws = w * Perm::transposition(d_, i);
      if (ws.length() > w.length()) {
        r.add(ws, c);
      } else {
        r.add(ws, c);
        r.add(w, qmq * c);
      }
    }
    return r;
  }

  friend HeckeElement operator*(const HeckeElement& a, const HeckeElement& b) {
    assert(a.d_ == b.d_);
    HeckeElement r(a.d_);
    for (const auto& [w, c] : b.terms_) {
      HeckeElement t = a;
      for (int i : reduced_word(w)) t = t.times_generator(i);
      for (const auto& [v, cv] : t.terms_) r.add(v, cv * c);
    }
    return r;
  }

  friend bool operator==(const HeckeElement& a, const HeckeElement& b) {
    return a.d_ == b.d_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const HeckeElement& a, const HeckeElement& b) { return !(a == b); }

private:
  int d_;
  std::map<Perm, LaurentPoly> terms_;
};

namespace detail {
inline void foreach_perm(int d, const std::function<void(const Perm&)>& f) {
  std::vector<int> v(d);
  std::iota(v.begin(), v.end(), 1);
  do {
    f(Perm(v));
  } while (std::next_permutation(v.begin(), v.end()));
}
} // namespace detail

/// x_d = sum_w q^{l(w)} T_w.
inline HeckeElement symmetrizer(int d) {
  HeckeElement e(d);
  detail::foreach_perm(d, [&](const Perm& w) {
    e.add(w, LaurentPoly::q_power(w.length()));
  });
  return e;
}

/// y_d = sum_w (-q^-1)^{l(w)} T_w.
inline HeckeElement antisymmetrizer(int d) {
  HeckeElement e(d);
  detail::foreach_perm(d, [&](const Perm& w) {
    long l = w.length();
    e.add(w, LaurentPoly::q_power(-l, (l % 2 == 0) ? 1 : -1));
  });
  return e;
}

} // namespace qpf
