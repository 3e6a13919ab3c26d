#include <doctest.h>

#include "support.hpp"
#include "tpnf/errors.hpp"
#include "tpnf/identities.hpp"
#include "tpnf/nullfiliform.hpp"
#include "tpnf/tp_structures.hpp"

using namespace tpnf;

namespace {

BilinearMap antisym(int n, std::initializer_list<Entry> upper) {
  BilinearMap b(n);
  for (const auto& e : upper) {
    b.add(e.i, e.j, e.k, e.c);
    b.add(e.j, e.i, e.k, -e.c);
  }
  return b;
}

}  // namespace

TEST_CASE("check_product") {
  for (int n = 1; n <= 8; ++n) {
    IdentityReport r = check_product(build_mu0(n));
    CHECK(r.commutative == true);
    CHECK(r.associative == true);
    CHECK(r.witnesses.empty());
    CHECK_FALSE(r.jacobi.has_value());
  }
  IdentityReport zero = check_product(BilinearMap(3));
  CHECK((zero.commutative == true && zero.associative == true));

  std::vector<Entry> entries{{1, 2, 1, 1}};
  IdentityReport r = check_product(make_bilinear_map(2, entries));
  CHECK(r.commutative == false);
  const Witness* w = r.witness(Identity::commutative);
  REQUIRE(w != nullptr);
  CHECK(w->triple == std::array<int, 3>{1, 2, 0});
  CHECK(w->residual == Vector{1, 0});
}

TEST_CASE("check_bracket") {
  testing::Rng rng(21);
  for (int n = 2; n <= 6; ++n) {
    IdentityReport r = check_bracket(build_tp_bracket(rng.alpha(n)));
    CHECK(r.antisymmetric == true);
    CHECK(r.jacobi == true);
  }
  IdentityReport zero = check_bracket(BilinearMap(4));
  CHECK((zero.antisymmetric == true && zero.jacobi == true));

  SUBCASE("non-antisymmetric bracket") {
    std::vector<Entry> entries{{1, 1, 2, 1}};
    IdentityReport r = check_bracket(make_bilinear_map(2, entries));
    CHECK(r.antisymmetric == false);
    CHECK(r.witness(Identity::antisymmetric)->residual == Vector{0, 2});
  }

  SUBCASE("intermediate bracket with alpha_1 != 0 fails Jacobi") {
    const int n = 5;
    Vector alpha{2, 1, -1, 3, 4};
    BilinearMap br = testing::intermediate_bracket(alpha);
    IdentityReport r = check_bracket(br);
    CHECK(r.antisymmetric == true);
    CHECK(r.jacobi == false);
    AlgebraPair pair{build_mu0(n), br};
    Vector res = residual(Identity::jacobi, pair, basis_vector(n, 1), basis_vector(n, 3),
                          basis_vector(n, n));
    // (n^2 - 3n) alpha_1^2 e_n with n = 5, alpha_1 = 2.
    CHECK(res == Scalar(10 * 4) * basis_vector(n, n));
  }
}

TEST_CASE("check_compat") {
  SUBCASE("TP brackets satisfy transposed Leibniz") {
    testing::Rng rng(8);
    for (int n = 2; n <= 6; ++n) {
      IdentityReport r = check_compat({build_mu0(n), build_tp_bracket(rng.alpha(n))});
      CHECK(r.transposed_leibniz == true);
    }
  }
  SUBCASE("zero bracket satisfies everything") {
    IdentityReport r = check_compat({build_mu0(4), BilinearMap(4)});
    CHECK((r.leibniz == true && r.transposed_leibniz == true && r.mixed_trivial == true));
  }
  SUBCASE("TP(0,1,0,0) on mu_0^5") {
    AlgebraPair pair{build_mu0(5), build_tp_bracket(AlphaParams::indicator(5, 3))};
    IdentityReport r = check_compat(pair);
    CHECK(r.leibniz == false);
    CHECK(r.mixed_trivial == false);
    CHECK(r.transposed_leibniz == true);
    // [e1, e1.e2] - [e1, e1].e2 - e1.[e1, e2] = 2 e4 - e4
    Vector e1 = basis_vector(5, 1), e2 = basis_vector(5, 2);
    CHECK(residual(Identity::leibniz, pair, e1, e1, e2) == basis_vector(5, 4));
    CHECK(residual(Identity::mixed_trivial, pair, e1, e1, e2) == basis_vector(5, 4));
  }
  SUBCASE("dimension mismatch") {
    CHECK_THROWS_AS(check_compat({build_mu0(3), BilinearMap(4)}), InputError);
  }
}

TEST_CASE("is_poisson / is_transposed_poisson") {
  SUBCASE("TP(1,0,0) on mu_0^4") {
    AlgebraPair pair{build_mu0(4), build_tp_bracket(AlphaParams::indicator(4, 2))};
    CHECK(is_transposed_poisson(pair));
    CHECK_FALSE(is_poisson(pair));
    Vector e1 = basis_vector(4, 1), e2 = basis_vector(4, 2);
    // [e1, e3] - e1.[e1, e2] = 2 e3 - e3
    CHECK(residual(Identity::leibniz, pair, e1, e1, e2) == basis_vector(4, 3));
  }
  SUBCASE("zero bracket") {
    for (int n = 1; n <= 5; ++n) {
      AlgebraPair pair{build_mu0(n), BilinearMap(n)};
      CHECK(is_poisson(pair));
      CHECK(is_transposed_poisson(pair));
    }
  }
  SUBCASE("[e1, e2] = e1 on mu_0^3") {
    AlgebraPair pair{build_mu0(3), antisym(3, {{1, 2, 1, 1}})};
    CHECK_FALSE(is_transposed_poisson(pair));
    // z = e1, x = e1, y = e2: 2 e1.[e1, e2] - [e1.e1, e2] - [e1, e1.e2] = 2 e2
    Vector e1 = basis_vector(3, 1), e2 = basis_vector(3, 2);
    CHECK(residual(Identity::transposed_leibniz, pair, e1, e2, e1) == Scalar(2) * e2);
  }
}

TEST_CASE("basis-triple checks agree with random-vector residuals") {
  testing::Rng rng(99);
  const Identity ids[] = {Identity::commutative, Identity::associative, Identity::antisymmetric,
                          Identity::jacobi,      Identity::leibniz,     Identity::transposed_leibniz,
                          Identity::mixed_trivial};
  for (int trial = 0; trial < 60; ++trial) {
    int n = rng.integer(2, 5);
    AlgebraPair pair{build_mu0(n), BilinearMap(n)};
    switch (trial % 4) {
      case 0: pair.bracket = build_tp_bracket(rng.alpha(n)); break;
      case 1: pair.bracket = rng.bilinear(n, 0.1); break;
      case 2: pair.dot = rng.bilinear(n, 0.1); break;
      default: break;
    }
    IdentityReport report = check_all(pair);
    for (Identity id : ids) {
      bool all_zero = true;
      for (int s = 0; s < 4; ++s) {
        if (!is_zero(residual(id, pair, rng.vector(n), rng.vector(n), rng.vector(n)))) all_zero = false;
      }
      // Generic vectors detect any nonzero multilinear residual with
      // probability one; zero residuals stay zero.
      CHECK(*report.flag(id) == all_zero);
      CHECK((report.witness(id) == nullptr) == *report.flag(id));
    }
  }
}

TEST_CASE("Poisson and transposed Poisson together iff mixed products vanish") {
  testing::Rng rng(4);
  for (int n = 2; n <= 6; ++n) {
    std::vector<BilinearMap> brackets{BilinearMap(n)};
    for (int t = 2; t <= n; ++t) brackets.push_back(build_tp_bracket(AlphaParams::indicator(n, t)));
    for (int k = 0; k < 5; ++k) brackets.push_back(build_tp_bracket(rng.alpha(n)));
    for (const auto& br : brackets) {
      IdentityReport r = check_all({build_mu0(n), br});
      bool both = is_poisson(r) && is_transposed_poisson(r);
      CHECK(both == *r.mixed_trivial);
      CHECK(both == br.is_zero());
    }
  }
}
