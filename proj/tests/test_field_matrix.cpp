#include "doctest.h"
#include "planebundles/matrix.hpp"

using namespace pb;

namespace {

DenseMatrix random_int_matrix(const FieldCtx& ctx, std::size_t r, std::size_t c, Rng& rng,
                              long long bound = 9) {
  DenseMatrix m(ctx, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = Scalar::from_int(ctx, rng.int_in(-bound, bound));
  return m;
}

bool is_zero_vec(const std::vector<Scalar>& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

}  // namespace

TEST_CASE("field contexts and scalars") {
  FieldCtx q = FieldCtx::rationals();
  FieldCtx f7 = FieldCtx::prime(7);
  CHECK_THROWS_AS(FieldCtx::prime(4), PbError);
  CHECK_THROWS_AS(FieldCtx::prime(3), PbError);  // modulus must be >= 5

  Scalar half = Scalar::from_mpq(q, mpq_class(1, 2));
  CHECK((half + half).is_one());
  CHECK((half * Scalar::from_int(q, 2)).is_one());
  CHECK(half.inverse() == Scalar::from_int(q, 2));
  CHECK(Scalar::from_mpq(q, mpq_class(2, 4)) == half);  // canonical form

  Scalar a = Scalar::from_int(f7, 10);
  CHECK(a == Scalar::from_int(f7, 3));
  CHECK((a * a.inverse()).is_one());
  CHECK(Scalar::from_int(f7, -1) == Scalar::from_int(f7, 6));

  CHECK(parse_field("Q") == q);
  CHECK(parse_field("Fp:7") == f7);
  CHECK(parse_field("Fp 7") == f7);
  CHECK_THROWS_AS(parse_field("R"), PbError);
}

TEST_CASE("rank on the basic fixtures") {
  FieldCtx q = FieldCtx::rationals();
  CHECK(rank(DenseMatrix::identity(q, 3)) == 3);
  CHECK(rank(DenseMatrix(q, 2, 2)) == 0);
  CHECK(rank(DenseMatrix::from_ints(q, 2, 2, {1, 2, 2, 4})) == 1);
  CHECK(rank(DenseMatrix(q, 0, 5)) == 0);
  CHECK(rank(DenseMatrix(q, 5, 0)) == 0);
}

TEST_CASE("kernel basis fixtures") {
  FieldCtx q = FieldCtx::rationals();
  CHECK(kernel_basis(DenseMatrix::identity(q, 2)).empty());

  auto k1 = kernel_basis(DenseMatrix::from_ints(q, 1, 2, {1, -1}));
  REQUIRE(k1.size() == 1);
  CHECK(k1[0][0] == Scalar::from_int(q, 1));
  CHECK(k1[0][1] == Scalar::from_int(q, 1));

  auto k2 = kernel_basis(DenseMatrix::from_ints(q, 2, 2, {1, 2, 2, 4}));
  REQUIRE(k2.size() == 1);
  // proportional to (2, -1)
  CHECK(k2[0][0] * Scalar::from_int(q, -1) == k2[0][1] * Scalar::from_int(q, 2));

  // empty matrix: kernel is the standard basis of the column space
  auto k3 = kernel_basis(DenseMatrix(q, 0, 3));
  REQUIRE(k3.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) CHECK(k3[i][i].is_one());
}

TEST_CASE("solve fixtures") {
  FieldCtx q = FieldCtx::rationals();
  std::vector<Scalar> b{Scalar::from_int(q, 1), Scalar::from_int(q, 2)};
  auto s = solve(DenseMatrix::identity(q, 2), b);
  REQUIRE(s.has_value());
  CHECK(s->particular == b);
  CHECK(s->kernel.empty());

  std::vector<Scalar> zero1{Scalar::zero(q)};
  auto s2 = solve(DenseMatrix::from_ints(q, 1, 2, {1, -1}), zero1);
  REQUIRE(s2.has_value());
  CHECK(is_zero_vec(s2->particular));
  REQUIRE(s2->kernel.size() == 1);

  std::vector<Scalar> b3{Scalar::from_int(q, 1), Scalar::from_int(q, 3)};
  CHECK_FALSE(solve(DenseMatrix::from_ints(q, 2, 2, {1, 2, 2, 4}), b3).has_value());

  std::vector<Scalar> wrong{Scalar::zero(q)};
  CHECK_THROWS_AS(solve(DenseMatrix::identity(q, 2), wrong), PbError);
}

TEST_CASE("rank-nullity and exactness properties") {
  for (auto ctx : {FieldCtx::rationals(), FieldCtx::prime(101)}) {
    Rng rng(7);
    for (int trial = 0; trial < 25; ++trial) {
      std::size_t r = 1 + rng.below(6), c = 1 + rng.below(6);
      DenseMatrix m = random_int_matrix(ctx, r, c, rng);
      auto ker = kernel_basis(m);
      CHECK(rank(m) + ker.size() == c);
      for (const auto& v : ker) CHECK(is_zero_vec(m.apply(v)));

      std::vector<Scalar> x;
      for (std::size_t j = 0; j < c; ++j) x.push_back(Scalar::from_int(ctx, rng.int_in(-9, 9)));
      auto b = m.apply(x);
      auto s = solve(m, b);
      REQUIRE(s.has_value());
      CHECK(m.apply(s->particular) == b);
    }
  }
}

TEST_CASE("rank over Q agrees with rank over F_q on random integer matrices") {
  // 100 trials, entries in [-9, 9], q in {101, 10007}: frozen-seed agreement.
  for (std::uint64_t q : {101ULL, 10007ULL}) {
    FieldCtx fq = FieldCtx::prime(q);
    FieldCtx Q = FieldCtx::rationals();
    Rng rng(2024);
    int disagreements = 0;
    for (int trial = 0; trial < 100; ++trial) {
      std::size_t r = 2 + rng.below(5), c = 2 + rng.below(5);
      DenseMatrix mq(Q, r, c), mp(fq, r, c);
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) {
          long long v = rng.int_in(-9, 9);
          mq.at(i, j) = Scalar::from_int(Q, v);
          mp.at(i, j) = Scalar::from_int(fq, v);
        }
      if (rank(mq) != rank(mp)) ++disagreements;
    }
    CHECK(disagreements == 0);
  }
}

TEST_CASE("3x3 determinant and inverse") {
  FieldCtx q = FieldCtx::rationals();
  DenseMatrix g = DenseMatrix::from_ints(q, 3, 3, {1, 1, 0, 0, 1, 0, 0, 0, 1});
  CHECK(det3(g).is_one());
  CHECK(inverse3(g) * g == DenseMatrix::identity(q, 3));

  Rng rng(5);
  for (int t = 0; t < 10; ++t) {
    DenseMatrix m = random_int_matrix(q, 3, 3, rng, 5);
    if (det3(m).is_zero()) continue;
    CHECK(m * inverse3(m) == DenseMatrix::identity(q, 3));
  }
}
