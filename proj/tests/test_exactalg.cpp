#include <catch2/catch_amalgamated.hpp>

#include <qpf/matrix.hpp>

#include <random>

using namespace qpf;

namespace {

LaurentPoly lp(long c) { return LaurentPoly(c); }
LaurentPoly q_pow(long e, long c = 1) { return LaurentPoly::q_power(e, c); }

LaurentPoly random_laurent(std::mt19937_64& rng, bool nonzero = false) {
  LaurentPoly p;
  int terms = static_cast<int>(rng() % 4);
  for (int t = 0; t < terms; ++t) {
    long e = static_cast<long>(rng() % 7) - 3;
    long c = static_cast<long>(rng() % 11) - 5;
    p.add_term(e, c);
  }
  if (nonzero && p.is_zero()) p.add_term(0, 1 + static_cast<long>(rng() % 3));
  return p;
}

RatFunc random_ratfunc(std::mt19937_64& rng) {
  return RatFunc(random_laurent(rng), random_laurent(rng, true));
}

ExactMatrix random_matrix(std::mt19937_64& rng, long rows, long cols, int sparsity = 2) {
  ExactMatrix m(rows, cols);
  for (long r = 0; r < rows; ++r)
    for (long c = 0; c < cols; ++c)
      if (rng() % sparsity == 0) m.at(r, c) = random_ratfunc(rng);
  return m;
}

// The explicit 4x4 matrix of the standard operator on V_2 (x) V_2, written by
// hand from its three defining cases in the basis (11, 12, 21, 22).
ExactMatrix hand_R2() {
  ExactMatrix r(4, 4);
  r.at(0, 0) = RatFunc::q();
  r.at(2, 1) = RatFunc(1);
  r.at(1, 2) = RatFunc(1);
  r.at(2, 2) = rf_q_minus_qinv();
  r.at(3, 3) = RatFunc::q();
  return r;
}

} // namespace

TEST_CASE("laurent arithmetic and canonical form") {
  LaurentPoly a = q_pow(2) - q_pow(-1); // q^2 - q^-1
  CHECK(a.to_string() == "-q^-1 + q^2");
  CHECK(LaurentPoly::parse(a.to_string()) == a);
  CHECK((a - a).is_zero());
  CHECK((lp(0) * a).is_zero());
  CHECK(q_pow(1) * q_pow(-1) == lp(1));

  std::mt19937_64 rng(42);
  for (int t = 0; t < 200; ++t) {
    LaurentPoly x = random_laurent(rng), y = random_laurent(rng), z = random_laurent(rng);
    CHECK(x + y == y + x);
    CHECK(x * y == y * x);
    CHECK((x + y) + z == x + (y + z));
    CHECK((x + y) * z == x * z + y * z);
    CHECK(LaurentPoly::parse(x.to_string()) == x);
  }
}

TEST_CASE("laurent evaluate") {
  LaurentPoly a = q_pow(2) - q_pow(-1);
  CHECK(a.evaluate(1) == 0);
  LaurentPoly b = q_pow(1) - q_pow(-1);
  CHECK(b.evaluate(2) == mpq_class(3, 2));
}

TEST_CASE("ratfunc canonical form and field axioms") {
  RatFunc half(lp(1), lp(2));
  CHECK(half.num() == lp(1));
  CHECK(half.den() == lp(2));
  RatFunc same(lp(2), lp(4));
  CHECK(half == same);
  RatFunc r(q_pow(1) + lp(1), q_pow(2) * (q_pow(1) + lp(1))); // (q+1)/(q^2(q+1)) = q^-2
  CHECK(r == RatFunc::q_power(-2));
  RatFunc negden(lp(1), lp(-2));
  CHECK(negden == RatFunc(lp(-1), lp(2)));

  std::mt19937_64 rng(7);
  for (int t = 0; t < 150; ++t) {
    RatFunc x = random_ratfunc(rng), y = random_ratfunc(rng), z = random_ratfunc(rng);
    CHECK(x + y == y + x);
    CHECK(x * y == y * x);
    CHECK((x + y) * z == x * z + y * z);
    CHECK((x - x).is_zero());
    if (!x.is_zero()) {
      CHECK(x * x.inverse() == RatFunc(1));
      CHECK(x / x == RatFunc(1));
    }
  }
}

TEST_CASE("ratfunc pole handling") {
  RatFunc pole(lp(1), q_pow(1) - lp(1)); // 1/(q-1)
  CHECK_THROWS(pole.evaluate(1));
  CHECK(pole.evaluate(2) == 1);
  CHECK_THROWS(RatFunc::q().evaluate(0));
}

TEST_CASE("rref examples") {
  SECTION("identity") {
    RrefResult r = rref(ExactMatrix::identity(2));
    CHECK(r.r == ExactMatrix::identity(2));
    CHECK(r.pivots == std::vector<long>{0, 1});
  }
  SECTION("rank one with q entries") {
    ExactMatrix m(2, 2);
    m.at(0, 0) = RatFunc::q();
    m.at(0, 1) = RatFunc::q_power(2);
    m.at(1, 0) = RatFunc(1);
    m.at(1, 1) = RatFunc::q();
    RrefResult r = rref(m);
    ExactMatrix expect(2, 2);
    expect.at(0, 0) = RatFunc(1);
    expect.at(0, 1) = RatFunc::q();
    CHECK(r.r == expect);
    CHECK(r.pivots == std::vector<long>{0});
  }
  SECTION("zero matrix") {
    RrefResult r = rref(ExactMatrix(3, 3));
    CHECK(r.r.is_zero());
    CHECK(r.pivots.empty());
  }
  SECTION("idempotent on random matrices") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 20; ++t) {
      ExactMatrix m = random_matrix(rng, 4, 5);
      RrefResult r1 = rref(m);
      RrefResult r2 = rref(r1.r);
      CHECK(r1.r == r2.r);
      CHECK(r1.pivots == r2.pivots);
    }
  }
}

TEST_CASE("kernel examples") {
  CHECK(kernel(ExactMatrix::identity(3)).empty());
  SECTION("zero matrix gives the standard basis") {
    auto k = kernel(ExactMatrix(4, 4));
    REQUIRE(k.size() == 4);
    ExactMatrix b = matrix_from_columns(k, 4);
    CHECK(rank(b) == 4);
  }
  SECTION("R - q on the explicit 4x4") {
    ExactMatrix m = hand_R2() - RatFunc::q() * ExactMatrix::identity(4);
    auto k = kernel(m);
    REQUIRE(k.size() == 3);
    for (const auto& v : k) {
      auto mv = m.apply(v);
      for (const auto& x : mv) CHECK(x.is_zero());
    }
  }
}

TEST_CASE("rank plus nullity") {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 20; ++t) {
    long rows = 2 + rng() % 7, cols = 2 + rng() % 7; // up to 8x8
    ExactMatrix m = random_matrix(rng, rows, cols);
    auto k = kernel(m);
    CHECK(rank(m) + static_cast<long>(k.size()) == cols);
    for (const auto& v : k) {
      auto mv = m.apply(v);
      for (const auto& x : mv) CHECK(x.is_zero());
    }
  }
}

TEST_CASE("column space examples") {
  SECTION("identity") {
    auto b = column_space(ExactMatrix::identity(3));
    CHECK(b.size() == 3);
  }
  SECTION("rank one product") {
    ExactMatrix u(2, 1), v(1, 2);
    u.at(0, 0) = RatFunc(1);
    u.at(1, 0) = RatFunc::q();
    v.at(0, 0) = RatFunc(1);
    v.at(0, 1) = RatFunc::q();
    auto b = column_space(u * v);
    REQUIRE(b.size() == 1);
    CHECK(b[0][1] == RatFunc::q() * b[0][0]);
  }
  SECTION("zero") { CHECK(column_space(ExactMatrix(2, 2)).empty()); }
}

TEST_CASE("char poly examples") {
  SECTION("1x1") {
    ExactMatrix m(1, 1);
    m.at(0, 0) = RatFunc::q();
    auto c = char_poly(m);
    REQUIRE(c.size() == 2);
    CHECK(c[1] == RatFunc(1));
    CHECK(c[0] == -RatFunc::q());
  }
  SECTION("diag(a,b)") {
    ExactMatrix m(2, 2);
    RatFunc a = RatFunc::q_power(2), b = RatFunc(lp(1), q_pow(1) + lp(1));
    m.at(0, 0) = a;
    m.at(1, 1) = b;
    auto c = char_poly(m);
    CHECK(c[2] == RatFunc(1));
    CHECK(c[1] == -(a + b));
    CHECK(c[0] == a * b);
    CHECK(poly_eval(c, a).is_zero());
    CHECK(poly_eval(c, b).is_zero());
  }
  SECTION("explicit R matrix: (t-q)^3 (t+q^-1)") {
    auto c = char_poly(hand_R2());
    REQUIRE(c.size() == 5);
    CHECK(c[4] == RatFunc(1));
    CHECK(c[3] == RatFunc(q_pow(-1) - q_pow(1, 3)));
    CHECK(c[2] == RatFunc(q_pow(2, 3) - lp(3)));
    CHECK(c[1] == RatFunc(q_pow(1, 3) - q_pow(3)));
    CHECK(c[0] == RatFunc(q_pow(2, -1)));
    CHECK(poly_eval(c, RatFunc::q()).is_zero());
    CHECK(poly_eval(c, -RatFunc::q_power(-1)).is_zero());
  }
  SECTION("non-square throws") { CHECK_THROWS(char_poly(ExactMatrix(2, 3))); }
}

TEST_CASE("cayley-hamilton on random matrices") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 8; ++t) {
    long n = 2 + rng() % 4; // up to 5x5
    ExactMatrix m = random_matrix(rng, n, n, 3);
    auto c = char_poly(m);
    ExactMatrix acc(n, n);
    ExactMatrix power = ExactMatrix::identity(n);
    for (size_t k = 0; k < c.size(); ++k) {
      acc = acc + c[k] * power;
      if (k + 1 < c.size()) power = power * m;
    }
    CHECK(acc.is_zero());
  }
}

TEST_CASE("rank of products") {
  std::mt19937_64 rng(19);
  for (int t = 0; t < 15; ++t) {
    ExactMatrix a = random_matrix(rng, 3 + rng() % 2, 3 + rng() % 2);
    ExactMatrix b = random_matrix(rng, a.cols(), 3 + rng() % 2);
    long rab = rank(a * b);
    CHECK(rab <= std::min(rank(a), rank(b)));
  }
}

TEST_CASE("ratfunc fast paths agree with full reduction") {
  std::mt19937_64 rng(29);
  for (int t = 0; t < 120; ++t) {
    RatFunc x = random_ratfunc(rng), y = random_ratfunc(rng);
    // naive routes: assemble the raw fraction and let the constructor reduce
    RatFunc sum_naive(x.num() * y.den() + y.num() * x.den(), x.den() * y.den());
    CHECK(x + y == sum_naive);
    RatFunc prod_naive(x.num() * y.num(), x.den() * y.den());
    CHECK(x * y == prod_naive);
  }
}

TEST_CASE("block-split kernel agrees with plain elimination") {
  std::mt19937_64 rng(37);
  for (int t = 0; t < 12; ++t) {
    long rows = 3 + rng() % 4, cols = 3 + rng() % 4;
    ExactMatrix m = random_matrix(rng, rows, cols, 3);
    auto fast = kernel(m);
    // naive route straight from the reduced echelon form
    RrefResult rr = rref(m);
    std::vector<bool> is_pivot(cols, false);
    for (long p : rr.pivots) is_pivot[p] = true;
    std::vector<std::vector<RatFunc>> naive;
    for (long f = 0; f < cols; ++f) {
      if (is_pivot[f]) continue;
      std::vector<RatFunc> v(cols);
      v[f] = RatFunc(1);
      for (size_t pr = 0; pr < rr.pivots.size(); ++pr)
        if (!rr.r.at(static_cast<long>(pr), f).is_zero())
          v[rr.pivots[pr]] = -rr.r.at(static_cast<long>(pr), f);
      naive.push_back(std::move(v));
    }
    REQUIRE(fast.size() == naive.size());
    if (fast.empty()) continue;
    // same span: stacking both bases does not increase the rank
    ExactMatrix joint(cols, static_cast<long>(fast.size() + naive.size()));
    for (size_t c = 0; c < fast.size(); ++c)
      for (long r = 0; r < cols; ++r) joint.at(r, static_cast<long>(c)) = fast[c][r];
    for (size_t c = 0; c < naive.size(); ++c)
      for (long r = 0; r < cols; ++r)
        joint.at(r, static_cast<long>(fast.size() + c)) = naive[c][r];
    CHECK(rank(joint) == static_cast<long>(fast.size()));
  }
}

TEST_CASE("solve_unique") {
  std::mt19937_64 rng(23);
  ExactMatrix a = random_matrix(rng, 4, 3, 1);
  while (rank(a) < 3) a = random_matrix(rng, 4, 3, 1);
  ExactMatrix x = random_matrix(rng, 3, 2, 1);
  ExactMatrix sol = solve_unique(a, a * x);
  CHECK(sol == x);
}
