#pragma once

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <gmpxx.h>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qpf {

/// Integer Laurent polynomial in q. Terms are kept sorted by exponent,
/// zero coefficients are never stored; the zero polynomial has no terms.
class LaurentPoly {
public:
  using Term = std::pair<long, mpz_class>; // (exponent, coefficient)

  LaurentPoly() = default;
  LaurentPoly(long c) { if (c != 0) terms_.emplace_back(0, c); }
  LaurentPoly(const mpz_class& c) { if (c != 0) terms_.emplace_back(0, c); }

  static LaurentPoly q_power(long e, mpz_class c = 1) {
    LaurentPoly p;
    if (c != 0) p.terms_.emplace_back(e, std::move(c));
    return p;
  }
  static LaurentPoly q() { return q_power(1); }

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const {
    return terms_.size() == 1 && terms_[0].first == 0 && terms_[0].second == 1;
  }
  /// Single term c*q^e?
  bool is_monomial() const { return terms_.size() == 1; }

  const std::vector<Term>& terms() const { return terms_; }
  size_t term_count() const { return terms_.size(); }

  long min_exp() const { assert(!terms_.empty()); return terms_.front().first; }
  long max_exp() const { assert(!terms_.empty()); return terms_.back().first; }

  mpz_class coeff(long e) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                               [](const Term& t, long x) { return t.first < x; });
    if (it != terms_.end() && it->first == e) return it->second;
    return 0;
  }

  mpz_class leading_coeff() const { assert(!terms_.empty()); return terms_.back().second; }

  void add_term(long e, const mpz_class& c) {
    if (c == 0) return;
    auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                               [](const Term& t, long x) { return t.first < x; });
    if (it != terms_.end() && it->first == e) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    } else {
      terms_.insert(it, {e, c});
    }
  }

  LaurentPoly operator-() const {
    LaurentPoly r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) { *this = o; return *this; }
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.cbegin();
    auto b = o.terms_.cbegin();
    while (a != terms_.cend() && b != o.terms_.cend()) {
      if (a->first < b->first) out.push_back(*a++);
      else if (b->first < a->first) out.push_back(*b++);
      else {
        mpz_class c = a->second + b->second;
        if (c != 0) out.emplace_back(a->first, std::move(c));
        ++a; ++b;
      }
    }
    out.insert(out.end(), a, terms_.cend());
    out.insert(out.end(), b, o.terms_.cend());
    terms_ = std::move(out);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) { return *this += -o; }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { a += b; return a; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { a -= b; return a; }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    if (a.is_zero() || b.is_zero()) return r;
    for (const auto& ta : a.terms_)
      for (const auto& tb : b.terms_)
        r.add_term(ta.first + tb.first, ta.second * tb.second);
    return r;
  }
  LaurentPoly& operator*=(const LaurentPoly& o) { *this = *this * o; return *this; }

  /// Multiply by q^k.
  LaurentPoly shifted(long k) const {
    LaurentPoly r = *this;
    for (auto& t : r.terms_) t.first += k;
    return r;
  }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }
  friend bool operator<(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ < b.terms_; }

  /// gcd of all coefficients, as a nonnegative integer (0 for the zero polynomial).
  mpz_class content() const {
    mpz_class g = 0;
    for (const auto& t : terms_) { mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.second.get_mpz_t()); }
    return g;
  }

  /// Substitute q = q0 (exact rational). q0 must be nonzero when negative
  /// exponents are present.
  mpq_class evaluate(const mpq_class& q0) const {
    if (!terms_.empty() && min_exp() < 0 && q0 == 0)
      throw std::domain_error("LaurentPoly::evaluate: q0 = 0 with negative exponents");
    mpq_class acc = 0;
    for (const auto& t : terms_) {
      mpq_class p = 1;
      long e = t.first;
      mpq_class base = e >= 0 ? q0 : mpq_class(q0.get_den(), q0.get_num());
      if (e < 0) base.canonicalize();
      for (long i = 0; i < std::labs(e); ++i) p *= base;
      acc += mpq_class(t.second) * p;
    }
    acc.canonicalize();
    return acc;
  }

  /// "q^-1 + 2*q^3" style rendering; canonical, parseable by parse().
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& t : terms_) {
      mpz_class c = t.second;
      bool neg = c < 0;
      if (first) { if (neg) s += "-"; first = false; }
      else s += neg ? " - " : " + ";
      mpz_class a = abs(c);
      if (t.first == 0) s += a.get_str();
      else {
        if (a != 1) { s += a.get_str(); s += "*"; }
        s += "q";
        if (t.first != 1) { s += "^"; s += std::to_string(t.first); }
      }
    }
    return s;
  }

  static LaurentPoly parse(const std::string& in);

private:
  std::vector<Term> terms_;
};

inline LaurentPoly LaurentPoly::parse(const std::string& in) {
  LaurentPoly out;
  size_t i = 0;
  auto skip_ws = [&] { while (i < in.size() && in[i] == ' ') ++i; };
  skip_ws();
  if (i >= in.size()) throw std::invalid_argument("LaurentPoly::parse: empty input");
  bool first = true;
  while (i < in.size()) {
    int sign = 1;
    skip_ws();
    if (!first || in[i] == '+' || in[i] == '-') {
      if (i >= in.size() || (in[i] != '+' && in[i] != '-'))
        throw std::invalid_argument("LaurentPoly::parse: expected +/- near '" + in.substr(i) + "'");
      sign = in[i] == '-' ? -1 : 1;
      ++i;
      skip_ws();
    }
    first = false;
    // coefficient digits (optional if the term is just q^k)
    std::string digits;
    while (i < in.size() && std::isdigit(static_cast<unsigned char>(in[i]))) digits += in[i++];
    mpz_class c = digits.empty() ? mpz_class(1) : mpz_class(digits);
    long e = 0;
    skip_ws();
    if (i < in.size() && (in[i] == '*' || in[i] == 'q')) {
      if (in[i] == '*') { ++i; skip_ws(); }
      if (i >= in.size() || in[i] != 'q')
        throw std::invalid_argument("LaurentPoly::parse: expected q");
      ++i;
      if (i < in.size() && in[i] == '^') {
        ++i;
        std::string es;
        if (i < in.size() && in[i] == '-') es += in[i++];
        while (i < in.size() && std::isdigit(static_cast<unsigned char>(in[i]))) es += in[i++];
        if (es.empty() || es == "-") throw std::invalid_argument("LaurentPoly::parse: bad exponent");
        e = std::stol(es);
      } else {
        e = 1;
      }
    } else if (digits.empty()) {
      throw std::invalid_argument("LaurentPoly::parse: bad term near '" + in.substr(i) + "'");
    }
    out.add_term(e, sign * c);
    skip_ws();
  }
  return out;
}

namespace detail {

/// Dense Z[q] coefficient vector, index = exponent, trailing zeros trimmed.
using PolyZ = std::vector<mpz_class>;

inline void trim(PolyZ& p) { while (!p.empty() && p.back() == 0) p.pop_back(); }

inline PolyZ to_dense(const LaurentPoly& p, long shift) {
  PolyZ d;
  for (const auto& t : p.terms()) {
    long e = t.first + shift;
    assert(e >= 0);
    if (static_cast<size_t>(e) >= d.size()) d.resize(e + 1, mpz_class(0));
    d[e] = t.second;
  }
  trim(d);
  return d;
}

inline LaurentPoly from_dense(const PolyZ& d, long shift = 0) {
  LaurentPoly p;
  for (size_t e = 0; e < d.size(); ++e)
    if (d[e] != 0) p.add_term(static_cast<long>(e) + shift, d[e]);
  return p;
}

inline mpz_class dense_content(const PolyZ& p) {
  mpz_class g = 0;
  for (const auto& c : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

inline void divexact_scalar(PolyZ& p, const mpz_class& s) {
  assert(s != 0);
  for (auto& c : p) {
    assert(mpz_divisible_p(c.get_mpz_t(), s.get_mpz_t()));
    mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), s.get_mpz_t());
  }
}

inline PolyZ primitive_part(PolyZ p) {
  mpz_class c = dense_content(p);
  if (c == 0) return p;
  divexact_scalar(p, c);
  if (!p.empty() && p.back() < 0) for (auto& x : p) x = -x;
  return p;
}

/// Pseudo-remainder of a by b over Z[q]. Requires b != 0.
inline PolyZ pseudo_rem(PolyZ a, const PolyZ& b) {
  assert(!b.empty());
  const mpz_class lb = b.back();
  const size_t db = b.size() - 1;
  trim(a);
  while (a.size() >= b.size() && !a.empty()) {
    const mpz_class la = a.back();
    const size_t da = a.size() - 1;
    for (auto& c : a) c *= lb;
    for (size_t k = 0; k <= db; ++k) a[da - db + k] -= la * b[k];
    trim(a);
  }
  return a;
}

inline PolyZ sign_normalized(PolyZ p) {
  trim(p);
  if (!p.empty() && p.back() < 0) for (auto& x : p) x = -x;
  return p;
}

/// Polynomial gcd over Z[q] (content included), primitive PRS.
inline PolyZ gcd_dense(PolyZ a, PolyZ b) {
  trim(a); trim(b);
  if (a.empty()) return sign_normalized(b);
  if (b.empty()) return sign_normalized(a);
  mpz_class ca = dense_content(a), cb = dense_content(b), cg;
  mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  a = primitive_part(std::move(a));
  b = primitive_part(std::move(b));
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    PolyZ r = pseudo_rem(a, b);
    a = std::move(b);
    b = primitive_part(std::move(r));
  }
  a = primitive_part(std::move(a));
  for (auto& c : a) c *= cg;
  return a;
}

/// Exact division over Z[q]; asserts divisibility.
inline PolyZ divexact_dense(PolyZ a, const PolyZ& b) {
  trim(a);
  assert(!b.empty());
  if (a.empty()) return a;
  assert(a.size() >= b.size());
  PolyZ qout(a.size() - b.size() + 1, mpz_class(0));
  const mpz_class lb = b.back();
  const size_t db = b.size() - 1;
  while (!a.empty() && a.size() >= b.size()) {
    const size_t da = a.size() - 1;
    mpz_class t;
    assert(mpz_divisible_p(a.back().get_mpz_t(), lb.get_mpz_t()));
    mpz_divexact(t.get_mpz_t(), a.back().get_mpz_t(), lb.get_mpz_t());
    qout[da - db] = t;
    for (size_t k = 0; k <= db; ++k) a[da - db + k] -= t * b[k];
    trim(a);
  }
  assert(a.empty()); // exact
  return qout;
}

} // namespace detail

/// gcd over Z[q] of the two Laurent polynomials after clearing q-powers;
/// result lives in Z[q] with nonzero constant term and positive leading coefficient.
inline LaurentPoly laurent_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  using namespace detail;
  if (a.is_zero() && b.is_zero()) return LaurentPoly(0);
  if (a.is_zero()) return from_dense(sign_normalized(to_dense(b, -b.min_exp())));
  if (b.is_zero()) return from_dense(sign_normalized(to_dense(a, -a.min_exp())));
  PolyZ da = to_dense(a, -a.min_exp());
  PolyZ db = to_dense(b, -b.min_exp());
  return from_dense(gcd_dense(std::move(da), std::move(db)));
}

/// Exact division a/b in Z[q, q^-1]; b must divide a.
inline LaurentPoly laurent_divexact(const LaurentPoly& a, const LaurentPoly& b) {
  using namespace detail;
  assert(!b.is_zero());
  if (a.is_zero()) return LaurentPoly();
  long sa = a.min_exp(), sb = b.min_exp();
  PolyZ q = divexact_dense(to_dense(a, -sa), to_dense(b, -sb));
  return from_dense(q, sa - sb);
}

} // namespace qpf
