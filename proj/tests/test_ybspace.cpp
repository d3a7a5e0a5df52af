#include <catch2/catch_amalgamated.hpp>

#include <qpf/ybspace.hpp>

using namespace qpf;

TEST_CASE("yang-baxter validity") {
  SECTION("standard spaces") {
    for (int n = 2; n <= 3; ++n) CHECK(is_yang_baxter(standard_space(n)));
  }
  SECTION("identity operator") {
    YBSpace s;
    s.dim = 2;
    s.R = ExactMatrix::identity(4);
    CHECK(is_yang_baxter_matrix(s));
  }
  SECTION("perturbed standard operator fails") {
    YBSpace s = standard_space(2);
    s.R.at(1, 1) += RatFunc(1);
    s.block_d = 0;
    CHECK(!is_yang_baxter_matrix(s));
  }
}

TEST_CASE("tensor power spaces") {
  SECTION("d = 1 returns the space") {
    YBSpace s = standard_space(2);
    YBSpace t = tensor_power_space(s, 1);
    CHECK(t.dim == 2);
    CHECK(t.R == s.R);
  }
  SECTION("d = 2 over n = 2") {
    YBSpace t = tensor_power_space(standard_space(2), 2);
    CHECK(t.dim == 4);
    CHECK(t.R.rows() == 16);
    CHECK(is_yang_baxter_matrix(t));
    CHECK(is_yang_baxter_hecke(t));
  }
  SECTION("hecke route agrees with matrix route where both run") {
    for (auto [n, d] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {2, 3}}) {
      YBSpace t = tensor_power_space(standard_space(n), d);
      CHECK(is_yang_baxter_matrix(t));
      CHECK(is_yang_baxter_hecke(t));
    }
  }
  SECTION("power tower consistency") {
    YBSpace s2 = tensor_power_space(standard_space(2), 2);
    YBSpace s22 = tensor_power_space(s2, 2);
    YBSpace s4 = tensor_power_space(standard_space(2), 4);
    CHECK(s22.dim == s4.dim);
    CHECK(s22.R == s4.R);
  }
}

TEST_CASE("spectrum of the standard operator") {
  SpectrumReport rep = spectrum(standard_space(2), 2);
  REQUIRE(rep.entries.size() == 2);
  CHECK(rep.entries[0] == SpectrumEntry{-1, -1, 1});
  CHECK(rep.entries[1] == SpectrumEntry{+1, 1, 3});
  CHECK(rep.complete);
  CHECK(rep.dim == 4);
  for (int n = 3; n <= 4; ++n) {
    SpectrumReport r = spectrum(standard_space(n), 1);
    REQUIRE(r.entries.size() == 2);
    CHECK(r.entries[0].multiplicity == n * (n - 1) / 2);
    CHECK(r.entries[1].multiplicity == n * (n + 1) / 2);
    CHECK(r.complete);
  }
}

TEST_CASE("spectrum reports honest incompleteness") {
  SpectrumReport rep = spectrum(standard_space(2), 0); // only +-1 candidates
  CHECK(!rep.complete);
  CHECK(rep.entries.empty());
}

TEST_CASE("tensor square spectrum row") {
  YBSpace t = tensor_power_space(standard_space(2), 2);
  SpectrumReport rep = spectrum(t, default_max_exp(2));
  CHECK(rep.complete);
  CHECK(rep.dim == 16);
  CHECK(format_spectrum_row(rep) == "q^-2 -> 1, -1 -> 3, -q^2 -> 3, q^2 -> 4, q^4 -> 5");
}

TEST_CASE("eigenvalue strings") {
  CHECK(eigenvalue_string(1, 0) == "1");
  CHECK(eigenvalue_string(-1, 0) == "-1");
  CHECK(eigenvalue_string(1, 1) == "q");
  CHECK(eigenvalue_string(-1, -2) == "-q^-2");
  CHECK(eigenvalue_string(1, 4) == "q^4");
}
