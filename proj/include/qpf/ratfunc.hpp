#pragma once

#include "laurent.hpp"

namespace qpf {

/// Element of Q(q) as a reduced fraction of integer Laurent polynomials.
/// Canonical form: den lives in Z[q] with nonzero constant term and positive
/// leading coefficient; gcd over Q[q] (integer content included) of the
/// q-power-cleared numerator and den is 1. Equality is structural.
class RatFunc {
public:
  RatFunc() : num_(), den_(1) {}
  RatFunc(long c) : num_(c), den_(1) {}
  RatFunc(const mpz_class& c) : num_(c), den_(1) {}
  RatFunc(LaurentPoly n) : num_(std::move(n)), den_(1) {}
  RatFunc(LaurentPoly n, LaurentPoly d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
    reduce();
  }
  static RatFunc q_power(long e, mpz_class c = 1) { return RatFunc(LaurentPoly::q_power(e, std::move(c))); }
  static RatFunc q() { return q_power(1); }
  static RatFunc rational(const mpq_class& r) {
    return RatFunc(LaurentPoly(mpz_class(r.get_num())), LaurentPoly(mpz_class(r.get_den())));
  }

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }

  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }
  friend bool operator<(const RatFunc& a, const RatFunc& b) {
    if (a.num_ != b.num_) return a.num_ < b.num_;
    return a.den_ < b.den_;
  }

  RatFunc operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
  }

  friend RatFunc operator+(const RatFunc& x, const RatFunc& y) {
    if (x.is_zero()) return y;
    if (y.is_zero()) return x;
    RatFunc r;
    if (x.den_ == y.den_) {
      LaurentPoly n = x.num_ + y.num_;
      if (n.is_zero()) return RatFunc();
      LaurentPoly g = laurent_gcd(n, x.den_);
      r.num_ = g.is_one() ? std::move(n) : laurent_divexact(n, g);
      r.den_ = g.is_one() ? x.den_ : laurent_divexact(x.den_, g);
      return r;
    }
    LaurentPoly g0 = laurent_gcd(x.den_, y.den_);
    LaurentPoly bp = g0.is_one() ? x.den_ : laurent_divexact(x.den_, g0);
    LaurentPoly dp = g0.is_one() ? y.den_ : laurent_divexact(y.den_, g0);
    LaurentPoly n = x.num_ * dp + y.num_ * bp;
    if (n.is_zero()) return RatFunc();
    // gcd(n, bp*dp*g0) = gcd(n, g0) because bp, dp stay coprime to n
    LaurentPoly g1 = laurent_gcd(n, g0);
    r.num_ = g1.is_one() ? std::move(n) : laurent_divexact(n, g1);
    r.den_ = bp * dp * (g1.is_one() ? g0 : laurent_divexact(g0, g1));
    return r;
  }
  friend RatFunc operator-(const RatFunc& x, const RatFunc& y) { return x + (-y); }

  friend RatFunc operator*(const RatFunc& x, const RatFunc& y) {
    if (x.is_zero() || y.is_zero()) return RatFunc();
    LaurentPoly g1 = laurent_gcd(x.num_, y.den_);
    LaurentPoly g2 = laurent_gcd(y.num_, x.den_);
    RatFunc r;
    r.num_ = (g1.is_one() ? x.num_ : laurent_divexact(x.num_, g1)) *
             (g2.is_one() ? y.num_ : laurent_divexact(y.num_, g2));
    r.den_ = (g2.is_one() ? x.den_ : laurent_divexact(x.den_, g2)) *
             (g1.is_one() ? y.den_ : laurent_divexact(y.den_, g1));
    r.normalize_units();
    return r;
  }

  RatFunc inverse() const {
    if (is_zero()) throw std::domain_error("RatFunc: division by zero");
    RatFunc r;
    r.num_ = den_;
    r.den_ = num_;
    r.normalize_units();
    return r;
  }
  friend RatFunc operator/(const RatFunc& x, const RatFunc& y) { return x * y.inverse(); }

  RatFunc& operator+=(const RatFunc& o) { *this = *this + o; return *this; }
  RatFunc& operator-=(const RatFunc& o) { *this = *this - o; return *this; }
  RatFunc& operator*=(const RatFunc& o) { *this = *this * o; return *this; }
  RatFunc& operator/=(const RatFunc& o) { *this = *this / o; return *this; }

  /// Substitute q = q0; throws on a pole.
  mpq_class evaluate(const mpq_class& q0) const {
    if (q0 == 0) throw std::domain_error("RatFunc::evaluate: q0 must be nonzero");
    mpq_class d = den_.evaluate(q0);
    if (d == 0) throw std::domain_error("RatFunc::evaluate: pole at q0");
    mpq_class r = num_.evaluate(q0) / d;
    r.canonicalize();
    return r;
  }

  /// Rough size measure used for pivot selection.
  size_t complexity() const { return num_.term_count() + den_.term_count(); }

  std::string to_string() const {
    if (den_.is_one()) return num_.to_string();
    auto wrap = [](const LaurentPoly& p) {
      std::string s = p.to_string();
      if (p.term_count() > 1 || (p.term_count() == 1 && s.find('-') != std::string::npos))
        return "(" + s + ")";
      return s;
    };
    return wrap(num_) + "/" + wrap(den_);
  }

private:
  void normalize_units() {
    // den -> Z[q], constant term nonzero, positive leading coefficient
    if (num_.is_zero()) { den_ = LaurentPoly(1); return; }
    long s = den_.min_exp();
    if (s != 0) { den_ = den_.shifted(-s); num_ = num_.shifted(-s); }
    if (den_.leading_coeff() < 0) { den_ = -den_; num_ = -num_; }
  }

  void reduce() {
    if (num_.is_zero()) { den_ = LaurentPoly(1); return; }
    LaurentPoly g = laurent_gcd(num_, den_);
    if (!g.is_one()) {
      num_ = laurent_divexact(num_, g);
      den_ = laurent_divexact(den_, g);
    }
    normalize_units();
  }

  LaurentPoly num_;
  LaurentPoly den_;
};

inline RatFunc rf_q_minus_qinv() { // q - q^-1
  LaurentPoly p = LaurentPoly::q_power(1) - LaurentPoly::q_power(-1);
  return RatFunc(std::move(p));
}

} // namespace qpf
