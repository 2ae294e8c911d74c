#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <qfold/family.hpp>

#include <random>

using namespace qfold;

TEST_CASE("family coefficients") {
  CHECK(family_coeffs(3).A ==
        std::array<BigInt, 5>{-3778560, 10, -10, 8, -8});
  const CoefficientVector a2 = family_coeffs(2);
  CHECK(a2.A == std::array<BigInt, 5>{-65280, 5, -5, 3, -3});
  CHECK(a2.content() == 1);
  CHECK(family_coeffs(-3).A == family_coeffs(3).A);  // every entry is even in t

  CHECK_THROWS_AS(family_coeffs(0), std::domain_error);
  CHECK_THROWS_AS(family_coeffs(1), std::domain_error);
  CHECK_THROWS_AS(family_coeffs(-1), std::domain_error);
}

TEST_CASE("coefficient gcd pattern: 1 for even t, 2 for odd t") {
  for (long t = 2; t <= 200; ++t) {
    const BigInt g = family_coeffs(t).content();
    CHECK(g == (t % 2 == 0 ? 1 : 2));
    if (t % 2 == 1) CHECK(family_coeffs(t).reduced().content() == 1);
  }
}

TEST_CASE("eval_F") {
  const CoefficientVector fermat_like = make_coefficients({1, 1, 1, 1, -1});
  CHECK(eval_F(fermat_like, QuinticPoint{{27, 84, 110, 133, 144}}) == 0);

  CHECK(eval_F(family_coeffs(7), QuinticPoint{{0, 0, 0, 0, 0}}) == 0);
  CHECK(eval_F(family_coeffs(3), point_at(3, 2, 1)) == 0);
}

TEST_CASE("nontriviality audit") {
  const CoefficientVector lp = make_coefficients({1, 1, 1, 1, -1});
  const QuinticPoint lander_parkin{{27, 84, 110, 133, 144}};
  CHECK(is_nontrivial(lp, lander_parkin));
  const SubsumAudit audit = audit_point(lp, lander_parkin);
  CHECK(audit.vanishing_subsets.empty());
  CHECK(audit.coordinate_gcd == 1);

  // X0^5 + X1^5 = 0 is a vanishing proper sub-sum.
  const CoefficientVector ones = make_coefficients({1, 1, 1, 1, 1});
  CHECK(!is_nontrivial(ones, QuinticPoint{{1, -1, 2, -2, 0}}));

  // all-even coordinates: gcd >= 2
  const QuinticPoint doubled{{54, 168, 220, 266, 288}};
  CHECK(eval_F(lp, doubled) == 0);
  CHECK(!is_nontrivial(lp, doubled));
  CHECK(audit_point(lp, doubled).coordinate_gcd == 2);

  // non-root input is a precondition error naming the F value
  CHECK_THROWS_WITH_AS(is_nontrivial(ones, QuinticPoint{{1, 1, 1, 1, 1}}),
                       "point is not on the variety: F = 5", std::invalid_argument);
}

TEST_CASE("point_at") {
  const QuinticPoint p = point_at(3, 83, 23);
  CHECK(p.X[3] == -10);
  CHECK(p.X[0] == 1909);

  CHECK(point_at(5, 1, 0).X == std::array<BigInt, 5>{0, 5, 5, 5, 5});
  CHECK(point_at(5, 0, 0).X == std::array<BigInt, 5>{0, 0, 0, 0, 0});
  CHECK_THROWS_AS(point_at(1, 2, 3), std::domain_error);
}

TEST_CASE("point_at agrees with the polynomial forms") {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<long> small(-50, 50);
  const ParamCurve sym = ParamCurve::symbolic();
  for (int iter = 0; iter < 25; ++iter) {
    long t = small(rng);
    if (t >= -1 && t <= 1) t = 2;
    const long u = small(rng), v = small(rng);
    const QuinticPoint p = point_at(t, u, v);
    const ParamCurve fixed = ParamCurve::at(t);
    for (std::size_t i = 0; i < 5; ++i) {
      const Rational via_sym =
          sym.forms()[i].eval({Rational(t), Rational(u), Rational(v)});
      const Rational via_fixed = fixed.forms()[i].eval({Rational(u), Rational(v)});
      CHECK(via_sym == Rational(p.X[i]));
      CHECK(via_fixed == Rational(p.X[i]));
    }
  }
}

TEST_CASE("symbolic identity") {
  CHECK(verify_identity_symbolic());
  CHECK(identity_residual().is_zero());

  // numeric shadow
  CHECK(eval_F(family_coeffs(5), point_at(5, 7, 11)) == 0);

  // perturbing A1's t^2 slot is not expressible here, but perturbing any
  // form coefficient must break the identity
  for (std::size_t form = 0; form < 5; ++form)
    for (std::size_t slot = 0; slot < 3; ++slot)
      CHECK(!identity_residual_perturbed(form, slot, Rational(1)).is_zero());

  CHECK(!identity_residual_perturbed(1, 0, make_rational(1, 7)).is_zero());
  CHECK_THROWS_AS(identity_residual_perturbed(5, 0, Rational(1)), std::invalid_argument);
}

TEST_CASE("perturbing a family coefficient breaks the identity") {
  const ParamCurve curve = ParamCurve::symbolic();
  const auto& T = curve.table();
  const Poly t = Poly::var(T, "t");
  const Poly t2 = t * t;
  // A1 changed from t^2+1 to t^2+2; the sum must stop collapsing
  const std::array<Poly, 5> coeffs = {64 * t2 * (1 - pow(t, 8)), t2 + 2, -(t2 + 1),
                                      t2 - 1, -(t2 - 1)};
  Poly sum(T);
  for (std::size_t i = 0; i < 5; ++i) sum += coeffs[i] * pow(curve.forms()[i], 5);
  CHECK(!sum.is_zero());
  CHECK(sum == pow(curve.forms()[1], 5));  // exactly the extra s1^5
}

TEST_CASE("identity holds at random 64-bit parameters") {
  std::mt19937_64 rng(20260810);
  std::uniform_int_distribution<std::int64_t> any;
  for (int iter = 0; iter < 40; ++iter) {
    BigInt t = any(rng);
    if (t >= -1 && t <= 1) t = 2;
    const BigInt u = any(rng), v = any(rng);
    const QuinticPoint p = point_at(t, u, v);
    CHECK(eval_F(family_coeffs(t), p) == 0);
    // the two t-independent relations vanish on every curve point
    CHECK(4 * p.X[0] + p.X[1] - p.X[2] + p.X[3] - p.X[4] == 0);
    CHECK(p.X[1] * p.X[1] + p.X[2] * p.X[2] - p.X[3] * p.X[3] - p.X[4] * p.X[4] == 0);
  }
}

TEST_CASE("linear and quadratic relations") {
  CHECK(verify_LQ_symbolic());
  CHECK(linear_relation_residual().is_zero());
  CHECK(quadratic_relation_residual().is_zero());

  // L is a relation of the curve, not of the threefold: it does not vanish
  // on the Lander-Parkin point.
  CHECK(4 * 27 + 84 - 110 + 133 - 144 == 71);
}

TEST_CASE("generic expansion coefficients match up to fixed scalars") {
  const auto rows = verify_appendix();
  REQUIRE(rows.size() == 11);
  const long expected_scale[11] = {1, 5, 5, 10, 5, 1, 5, 10, 5, 5, 1};
  for (const auto& row : rows) {
    CAPTURE(row.j);
    CHECK(row.match);
    CHECK(row.scale == Rational(expected_scale[row.j]));
    CHECK(row.scale.get_den() == 1);
    CHECK(row.scale > 0);
  }
}

TEST_CASE("line substitution expands through the polynomial ring") {
  // A degree-one ansatz X_i = a_i u + b_i v composes cleanly; nothing is
  // asserted beyond the expansion being well-formed and of degree 5.
  auto T = VarTable::make({"u", "v", "a0", "b0", "a1", "b1"});
  const Poly u = Poly::var(T, "u"), v = Poly::var(T, "v");
  const Poly line0 = Poly::var(T, "a0") * u + Poly::var(T, "b0") * v;
  const Poly line1 = Poly::var(T, "a1") * u + Poly::var(T, "b1") * v;
  const Poly expansion = pow(line0, 5) + pow(line1, 5);
  CHECK(expansion.coeff({{"u", 5}, {"v", 0}}) ==
        Poly::var(T, "a0", 5) + Poly::var(T, "a1", 5));
  CHECK(expansion.total_degree() == 10);  // degree 5 in (u,v), 5 in the symbols
}
