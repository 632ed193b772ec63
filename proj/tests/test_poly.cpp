#include "doctest.h"
#include "planebundles/poly.hpp"

using namespace pb;

namespace {

const FieldCtx Q = FieldCtx::rationals();
const FieldCtx F7 = FieldCtx::prime(7);

HomPoly P(const std::string& s, int nvars = 3, const FieldCtx& ctx = Q) {
  return parse_poly(s, nvars, ctx);
}

HomPoly random_poly(const FieldCtx& ctx, int nvars, long long deg, Rng& rng) {
  HomPoly p = HomPoly::zero(ctx, nvars, deg);
  for (const Exp& m : monomials_of_degree(nvars, deg))
    p = p + HomPoly::monomial(ctx, nvars, m, Scalar::from_int(ctx, rng.int_in(-4, 4)));
  return p;
}

DenseMatrix random_matrix3(const FieldCtx& ctx, Rng& rng) {
  DenseMatrix g(ctx, 3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) g.at(i, j) = Scalar::from_int(ctx, rng.int_in(-3, 3));
  return g;
}

}  // namespace

TEST_CASE("graded piece dimensions match monomial enumeration") {
  for (long long d = 0; d <= 8; ++d) {
    CHECK(graded_dim(3, d) == (long long)monomials_of_degree(3, d).size());
    CHECK(graded_dim(3, d) == (d + 1) * (d + 2) / 2);
    CHECK(graded_dim(2, d) == (long long)monomials_of_degree(2, d).size());
    CHECK(graded_dim(2, d) == d + 1);
  }
  // index is consistent with the enumeration order
  auto ms = monomials_of_degree(3, 5);
  for (std::size_t i = 0; i < ms.size(); ++i) CHECK(monomial_index(3, 5, ms[i]) == i);
}

TEST_CASE("ring operations") {
  CHECK(P("x") * P("x") == P("x^2"));
  CHECK(P("x+y") * P("x-y") == P("x^2-y^2"));
  CHECK(P("x+y").pow(3) == P("x^3 + 3*x^2*y + 3*x*y^2 + y^3"));
  CHECK_THROWS_AS(P("x") + P("x^2"), PbError);
  CHECK((P("x") - P("x")).is_zero());
  CHECK((P("x") - P("x")).degree() == 1);  // zero keeps its degree tag
}

TEST_CASE("substitute_linear") {
  DenseMatrix g = DenseMatrix::from_ints(Q, 3, 3, {1, 1, 0, 0, 1, 0, 0, 0, 1});  // x -> x+y
  CHECK(substitute_linear(P("x"), g) == P("x+y"));
  CHECK(substitute_linear(P("z^4"), g) == P("z^4"));
  CHECK(substitute_linear(P("x^2"), DenseMatrix::identity(Q, 3)) == P("x^2"));

  // composition law: subst(subst(p,g),h) = subst(p, g*h)
  for (auto ctx : {Q, F7}) {
    Rng rng(11);
    for (int t = 0; t < 12; ++t) {
      HomPoly p = random_poly(ctx, 3, 1 + rng.below(3), rng);
      DenseMatrix g = random_matrix3(ctx, rng), h = random_matrix3(ctx, rng);
      CHECK(substitute_linear(substitute_linear(p, g), h) == substitute_linear(p, g * h));
    }
  }
}

TEST_CASE("restrict_to_line") {
  // line {y=0} through (1:0:0) and (0:0:1)
  DenseMatrix py = DenseMatrix::from_ints(Q, 3, 2, {1, 0, 0, 0, 0, 1});
  HomPoly ry = restrict_to_line(P("y"), py);
  CHECK(ry.is_zero());
  CHECK(ry.degree() == 1);
  CHECK(restrict_to_line(P("x^3"), py) == P("s^3", 2));

  // line {x=0} through (0:1:0) and (0:0:1)
  DenseMatrix px = DenseMatrix::from_ints(Q, 3, 2, {0, 0, 1, 0, 0, 1});
  CHECK(restrict_to_line(P("x^2 + y*z"), px) == P("s*t", 2));

  DenseMatrix degenerate = DenseMatrix::from_ints(Q, 3, 2, {1, 2, 0, 0, 0, 0});
  CHECK_THROWS_AS(restrict_to_line(P("x"), degenerate), PbError);

  // multiplicativity
  Rng rng(3);
  for (int t = 0; t < 10; ++t) {
    HomPoly p = random_poly(Q, 3, 1 + rng.below(2), rng);
    HomPoly q = random_poly(Q, 3, 1 + rng.below(2), rng);
    CHECK(restrict_to_line(p * q, px) == restrict_to_line(p, px) * restrict_to_line(q, px));
  }
}

TEST_CASE("graded multiplication matrices") {
  HomPoly one = HomPoly::constant(Q, 2, Scalar::one(Q));
  CHECK(graded_mult_matrix(one, 3) == DenseMatrix::identity(Q, 4));

  // f = s from degree 1: maps {s,t} into {s^2, st, t^2}
  DenseMatrix ms = graded_mult_matrix(P("s", 2), 1);
  CHECK(ms == DenseMatrix::from_ints(Q, 3, 2, {1, 0, 0, 1, 0, 0}));

  DenseMatrix mst = graded_mult_matrix(P("s*t", 2), 0);
  CHECK(mst == DenseMatrix::from_ints(Q, 3, 1, {0, 1, 0}));

  // action on coefficient vectors equals multiplication
  Rng rng(9);
  for (int t = 0; t < 10; ++t) {
    HomPoly f = random_poly(Q, 3, 1 + rng.below(2), rng);
    HomPoly g = random_poly(Q, 3, rng.below(3), rng);
    auto image = graded_mult_matrix(f, g.degree()).apply(g.coeff_vector());
    CHECK(HomPoly::from_coeff_vector(Q, 3, f.degree() + g.degree(), image) == f * g);
  }
}

TEST_CASE("binary gcd") {
  CHECK(gcd_binary(P("s^2*t", 2), P("s*t^3", 2)) == P("s*t", 2));
  CHECK(gcd_binary(P("s+t", 2), P("s-t", 2)) == P("1", 2));
  CHECK(gcd_binary(P("s^2-t^2", 2), P("s^2+2*s*t+t^2", 2)) == P("s+t", 2));
  CHECK(gcd_binary(HomPoly::zero(Q, 2, 3), P("2*s", 2)) == P("s", 2));
  CHECK_THROWS_AS(gcd_binary(HomPoly::zero(Q, 2, 1), HomPoly::zero(Q, 2, 2)), PbError);

  // gcd over F_7 with nontrivial scaling
  CHECK(gcd_binary(P("3*s^2+3*s*t", 2, F7), P("5*s*t+5*t^2", 2, F7)) == P("s+t", 2, F7));
}

TEST_CASE("parser basics and errors") {
  CHECK(P("x^2 + y*z") == P("y*z") + P("x^2"));
  CHECK(P("(x+y)^3") == P("x+y").pow(3));
  CHECK(P("-x + y") == P("y") - P("x"));
  CHECK(P("2*(x + y)") == P("x+y").scaled(Scalar::from_int(Q, 2)));
  CHECK(P("0").is_zero());

  CHECK_THROWS_WITH_AS(P("x + y^2"), doctest::Contains("degrees"), PbError);
  CHECK_THROWS_AS(P("x +"), PbError);
  CHECK_THROWS_AS(P("2x"), PbError);  // juxtaposition is not multiplication
  CHECK_THROWS_AS(P("s", 3), PbError);
  CHECK_THROWS_AS(P("x", 2), PbError);
  CHECK_THROWS_AS(P("x $ y"), PbError);

  try {
    P("x + y^2");
  } catch (const PbError& e) {
    CHECK(e.code() == Errc::inhomogeneous);
    CHECK(std::string(e.what()).find("1") != std::string::npos);
    CHECK(std::string(e.what()).find("2") != std::string::npos);
  }
}

TEST_CASE("print/parse round trip") {
  for (auto ctx : {Q, F7}) {
    Rng rng(21);
    for (int t = 0; t < 30; ++t) {
      int nv = rng.below(2) ? 2 : 3;
      HomPoly p = random_poly(ctx, nv, rng.below(4), rng);
      if (p.is_zero()) continue;  // zero loses its degree tag through text
      CAPTURE(p.str());
      CHECK(parse_poly(p.str(), nv, ctx) == p);
    }
  }
}
