#include <doctest.h>

#include "support.hpp"
#include "tpnf/errors.hpp"
#include "tpnf/identities.hpp"
#include "tpnf/linalg.hpp"
#include "tpnf/nullfiliform.hpp"
#include "tpnf/tp_structures.hpp"

using namespace tpnf;

namespace {

Vector flatten(const BilinearMap& b) {
  const int n = b.dim();
  Vector v;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k) v.push_back(b.coeff(i, j, k));
  return v;
}

std::vector<Vector> flatten_all(const std::vector<BilinearMap>& maps) {
  std::vector<Vector> out;
  for (const auto& m : maps) out.push_back(flatten(m));
  return out;
}

std::vector<BilinearMap> tp_indicators(int n) {
  std::vector<BilinearMap> out;
  for (int t = 2; t <= n; ++t) out.push_back(build_tp_bracket(AlphaParams::indicator(n, t)));
  return out;
}

bool same_span(const std::vector<BilinearMap>& a, const std::vector<BilinearMap>& b) {
  auto fa = flatten_all(a), fb = flatten_all(b);
  auto both = fa;
  both.insert(both.end(), fb.begin(), fb.end());
  return rank(fa) == rank(both) && rank(fb) == rank(both);
}

}  // namespace

TEST_CASE("build_tp_bracket") {
  SUBCASE("n = 4 instantiation") {
    Scalar a2(3), a3(-1, 2), a4(5);
    BilinearMap br = build_tp_bracket(AlphaParams(4, Vector{a2, a3, a4}));
    CHECK(br.apply_basis(1, 2) == Vector{0, a2, a3, a4});
    CHECK(br.apply_basis(1, 3) == Vector{0, 0, 2 * a2, 2 * a3});
    CHECK(br.apply_basis(1, 4) == Vector{0, 0, 0, 3 * a2});
    CHECK(br.apply_basis(2, 3) == Vector{0, 0, 0, a2});
    CHECK(br.apply_basis(2, 4) == Vector{0, 0, 0, 0});
    CHECK(br.apply_basis(3, 2) == Vector{0, 0, 0, -a2});
  }
  SUBCASE("zero parameters") {
    for (int n = 2; n <= 6; ++n) CHECK(build_tp_bracket(AlphaParams::zero(n)).is_zero());
  }
  SUBCASE("n = 2") {
    BilinearMap br = build_tp_bracket(AlphaParams(2, Vector{1}));
    CHECK(br.entries() == std::vector<Entry>{{1, 2, 2, 1}, {2, 1, 2, -1}});
  }
  SUBCASE("nonzero alpha_1 is rejected") {
    CHECK_THROWS_AS(build_tp_bracket(AlphaParams(3, Vector{1, 0}, Scalar(1))), InputError);
    CHECK_NOTHROW(build_tp_bracket(AlphaParams(3, Vector{1, 0}, Scalar(0))));
  }
  SUBCASE("parameter validation") {
    CHECK_THROWS_AS(AlphaParams(1, Vector{}), InputError);
    CHECK_THROWS_AS(AlphaParams(4, Vector{1, 2}), InputError);
  }
}

TEST_CASE("TP brackets are transposed Poisson on mu_0^n") {
  testing::Rng rng(1234);
  for (int n = 2; n <= 8; ++n) {
    for (int trial = 0; trial < 10; ++trial) {
      AlgebraPair pair{build_mu0(n), build_tp_bracket(rng.alpha(n))};
      CHECK(is_transposed_poisson(pair));
    }
  }
}

TEST_CASE("extract_alphas") {
  SUBCASE("round trip") {
    AlphaParams p(4, Vector{1, 2, 3});
    AlphaParams back = extract_alphas(build_tp_bracket(p));
    CHECK(back == p);
    REQUIRE(back.alpha1().has_value());
    CHECK(*back.alpha1() == 0);
  }
  SUBCASE("zero bracket") { CHECK(extract_alphas(BilinearMap(5)) == AlphaParams::zero(5)); }
  SUBCASE("random round trips") {
    testing::Rng rng(6);
    for (int trial = 0; trial < 30; ++trial) {
      AlphaParams p = rng.alpha(rng.integer(2, 8));
      CHECK(extract_alphas(build_tp_bracket(p)) == p);
    }
  }
  SUBCASE("not in family") {
    BilinearMap br(4);
    br.add(2, 3, 2, 1);
    br.add(3, 2, 2, -1);
    try {
      extract_alphas(br);
      FAIL("expected NotInFamilyError");
    } catch (const NotInFamilyError& e) {
      CHECK(e.i() == 2);
      CHECK(e.j() == 3);
      CHECK(e.k() == 2);
      CHECK(e.actual() == "1");
      CHECK(e.expected() == "0");
    }
  }
  SUBCASE("alpha_1 component is reported as a mismatch") {
    BilinearMap br = testing::intermediate_bracket(Vector{1, 0, 0, 0});
    CHECK_THROWS_AS(extract_alphas(br), NotInFamilyError);
  }
}

TEST_CASE("solve_bracket_space") {
  SUBCASE("Poisson structures are trivial") {
    for (int n = 2; n <= 10; ++n) {
      SolutionSpace s = solve_bracket_space(n, BracketMode::poisson);
      CHECK(s.dimension() == 0);
      CHECK(s.residual_constraints.empty());
    }
  }
  SUBCASE("n = 2 transposed: spanned by [e1, e2] = e2") {
    SolutionSpace s = solve_bracket_space(2, BracketMode::transposed);
    REQUIRE(s.dimension() == 1);
    CHECK(s.basis[0].entries() == std::vector<Entry>{{1, 2, 2, 1}, {2, 1, 2, -1}});
  }
  SUBCASE("transposed spaces coincide with the TP family") {
    for (int n = 2; n <= 8; ++n) {
      SolutionSpace s = solve_bracket_space(n, BracketMode::transposed);
      CHECK(s.dimension() == n - 1);
      CHECK(same_span(s.basis, tp_indicators(n)));
      auto locus = jacobi_locus(s);
      REQUIRE(locus.has_value());
      CHECK(same_span(*locus, tp_indicators(n)));
      for (const auto& b : s.basis) CHECK(check_bracket(b).antisymmetric == true);
    }
  }
  SUBCASE("range guard") {
    CHECK_THROWS_AS(solve_bracket_space(1, BracketMode::transposed), InputError);
    CHECK_THROWS_AS(solve_bracket_space(11, BracketMode::poisson), InputError);
  }
  SUBCASE("generic over the product: zero product admits every bracket") {
    SolutionSpace s = solve_bracket_space(BilinearMap(3), BracketMode::transposed);
    CHECK(s.dimension() == 9);
    // All antisymmetric brackets on a 3-space; Jacobi is a genuine
    // quadratic restriction there.
    CHECK_FALSE(s.residual_constraints.empty());
  }
}

TEST_CASE("jacobi_locus removes the alpha_1 direction") {
  for (int n = 4; n <= 7; ++n) {
    Vector a1 = zero_vector(n);
    a1[0] = 1;
    SolutionSpace space;
    space.n = n;
    space.basis = tp_indicators(n);
    space.basis.push_back(testing::intermediate_bracket(a1));
    space.residual_constraints = jacobi_constraints(space.basis);
    CHECK_FALSE(space.residual_constraints.empty());
    auto locus = jacobi_locus(space);
    REQUIRE(locus.has_value());
    CHECK(locus->size() == static_cast<std::size_t>(n - 1));
    CHECK(same_span(*locus, tp_indicators(n)));
  }
}

TEST_CASE("jacobi_locus reports undecided constraint shapes") {
  // c1 * c2 = 0 is a union of two lines, not a subspace.
  BilinearMap x(3), y(3);
  SolutionSpace space;
  space.n = 3;
  space.basis = {x, y};
  Polynomial q;
  q.add_term({1, 2}, 1);
  space.residual_constraints = {q};
  CHECK_FALSE(jacobi_locus(space).has_value());
}
