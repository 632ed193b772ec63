#include <set>

#include "doctest.h"
#include "planebundles/plane.hpp"

using namespace pb;

namespace {
const FieldCtx Q = FieldCtx::rationals();
const FieldCtx F5 = FieldCtx::prime(5);

PointP2 pt(const std::string& s, const FieldCtx& ctx = Q) { return parse_point(s, ctx); }
LineP2 ln(const std::string& s, const FieldCtx& ctx = Q) { return parse_line(s, ctx); }
}  // namespace

TEST_CASE("literals, normalization and duality") {
  CHECK(pt("2:0:4") == pt("1:0:2"));
  CHECK(ln("[0,3,-3]") == ln("[0,1,-1]"));
  CHECK(pt("0:-2:4") == pt("0:1:-2"));
  CHECK_THROWS_AS(pt("0:0:0"), PbError);
  CHECK_THROWS_AS(pt("1:0"), PbError);
  CHECK_THROWS_AS(ln("1,0,0"), PbError);

  PointP2 p = pt("1:2:3");
  CHECK(dual_point(dual_line(p)) == p);
  CHECK(incident(pt("1:0:0"), ln("[0,0,1]")));
  CHECK_FALSE(incident(pt("0:0:1"), ln("[0,0,1]")));
}

TEST_CASE("line_through") {
  CHECK(line_through(pt("1:0:0"), pt("0:1:0")) == ln("[0,0,1]"));
  CHECK(line_through(pt("1:0:0"), pt("0:0:1")) == ln("[0,1,0]"));
  CHECK(line_through(pt("1:1:1"), pt("1:0:0")) == ln("[0,1,-1]"));
  CHECK_THROWS_AS(line_through(pt("1:1:1"), pt("2:2:2")), PbError);

  Rng rng(4);
  for (int t = 0; t < 20; ++t) {
    PointP2 a = random_point(F5, rng), b = random_point(F5, rng);
    if (a == b) continue;
    LineP2 l = line_through(a, b);
    CHECK(incident(a, l));
    CHECK(incident(b, l));
  }
}

TEST_CASE("parametrize picks the canonical points") {
  DenseMatrix mz = parametrize(ln("[0,0,1]"));
  CHECK(mz == DenseMatrix::from_ints(Q, 3, 2, {1, 0, 0, 1, 0, 0}));
  DenseMatrix mx = parametrize(ln("[1,0,0]"));
  CHECK(mx == DenseMatrix::from_ints(Q, 3, 2, {0, 0, 1, 0, 0, 1}));
  DenseMatrix ms = parametrize(ln("[1,1,1]"));
  CHECK(ms == DenseMatrix::from_ints(Q, 3, 2, {1, 0, -1, 1, 0, -1}));

  Rng rng(8);
  for (int t = 0; t < 25; ++t) {
    LineP2 l = random_line(F5, rng);
    DenseMatrix m = parametrize(l);
    CHECK(rank(m) == 2);
  }
}

TEST_CASE("pencil_through") {
  PointP2 p = pt("1:0:0", F5);
  auto pencil = pencil_through(p, F5);
  CHECK(pencil.size() == 6);  // q + 1
  std::set<std::string> seen;
  for (const auto& l : pencil) {
    CHECK(incident(p, l));
    seen.insert(l.str());
  }
  CHECK(seen.size() == 6);

  auto first = pencil_through(pt("1:0:0"), Q, 3);
  REQUIRE(first.size() == 3);
  CHECK(first[0] == ln("[0,1,0]"));
  CHECK(first[1] == ln("[0,0,1]"));
  CHECK(first[2] == ln("[0,1,-1]"));

  auto many = pencil_through(pt("1:2:3"), Q, 40);
  std::set<std::string> distinct;
  for (const auto& l : many) {
    CHECK(incident(pt("1:2:3"), l));
    distinct.insert(l.str());
  }
  CHECK(distinct.size() == 40);
}

TEST_CASE("enumerate_lines") {
  auto lines5 = enumerate_lines(F5);
  CHECK(lines5.size() == 31);
  auto lines7 = enumerate_lines(FieldCtx::prime(7));
  CHECK(lines7.size() == 57);
  CHECK_THROWS_AS(enumerate_lines(Q), PbError);

  std::set<std::string> seen;
  for (const auto& l : lines5) seen.insert(l.str());
  CHECK(seen.size() == 31);

  // any two distinct lines meet in exactly one point; each point lies on q+1
  for (std::size_t i = 0; i < lines5.size(); ++i)
    for (std::size_t j = i + 1; j < lines5.size(); ++j) {
      PointP2 x = line_intersection(lines5[i], lines5[j]);
      CHECK(incident(x, lines5[i]));
      CHECK(incident(x, lines5[j]));
    }
  PointP2 p = pt("1:3:2", F5);
  int through = 0;
  for (const auto& l : lines5)
    if (incident(p, l)) ++through;
  CHECK(through == 6);
}

TEST_CASE("random_line determinism and spread") {
  Rng a(42), b(42);
  CHECK(random_line(F5, a) == random_line(F5, b));

  FieldCtx f101 = FieldCtx::prime(101);
  Rng rng(0);
  std::set<std::string> distinct;
  for (int i = 0; i < 1000; ++i) distinct.insert(random_line(f101, rng).str());
  CHECK(distinct.size() >= 950);

  Rng rq(7);
  LineP2 l = random_line(Q, rq);
  int lead = 0;
  while (l.c[lead].is_zero()) ++lead;
  CHECK(l.c[lead].is_one());
}
