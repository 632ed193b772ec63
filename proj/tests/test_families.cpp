#include "doctest.h"
#include "planebundles/families.hpp"
#include "planebundles/group.hpp"
#include "planebundles/jumping.hpp"

using namespace pb;

namespace {
const FieldCtx Q = FieldCtx::rationals();
const FieldCtx F5 = FieldCtx::prime(5);
}  // namespace

TEST_CASE("family shapes") {
  Presentation en3 = build_family("en:3", Q);
  CHECK(en3.d0 == 3);
  CHECK(en3.d == std::array<long long, 3>{2, 2, 0});
  CHECK(en3.entries[0] == parse_poly("y", 3, Q));
  CHECK(en3.entries[2] == parse_poly("x^3", 3, Q));

  Presentation k = build_family("kaneyama:1,2,3", Q);
  CHECK(k.d0 == 0);
  CHECK(k.d == std::array<long long, 3>{-1, -2, -3});
  CHECK(k.entries[2] == parse_poly("z^3", 3, Q));

  Presentation nf = build_family("nf:2,4", Q);
  CHECK(nf.d0 == 5);
  CHECK(nf.d == std::array<long long, 3>{2, 4, 4});
  CHECK(nf.entries[0] == parse_poly("z^3", 3, Q));

  Presentation x61 = build_family("ex61:r=2,k=1,c1=0,f=z^6", Q);
  CHECK(x61.d0 == 5);
  CHECK(x61.d == std::array<long long, 3>{-1, 3, 3});
  CHECK(x61.entries[1] == parse_poly("x^2", 3, Q));

  Presentation x62 = build_family("ex62:r=1,f=z^3", Q);
  CHECK(x62.d0 == 4);
  CHECK(x62.d == std::array<long long, 3>{1, 2, 2});
}

TEST_CASE("family parameter validation") {
  CHECK_THROWS_AS(build_family("en:0", Q), PbError);
  CHECK_THROWS_AS(build_family("nf:2,1", Q), PbError);
  CHECK_THROWS_AS(build_family("kaneyama:0,1,1", Q), PbError);
  // f must have the right degree and avoid the distinguished point
  CHECK_THROWS_AS(build_family("ex62:r=1,f=z^2", Q), PbError);
  CHECK_THROWS_AS(build_family("ex62:r=1,f=x*z^2", Q), PbError);
  CHECK_THROWS_AS(build_family("ex61:r=1,k=0,c1=1,f=z^2", Q), PbError);
  try {
    build_family("ex62:r=1,f=x*z^2", Q);
  } catch (const PbError& e) {
    CHECK(std::string(e.what()).find("f(0:0:1)") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_family("unknown:1", Q), PbError);
  CHECK_THROWS_AS(parse_family("en3", Q), PbError);
}

TEST_CASE("E_1 is the uniform twisted tangent presentation") {
  Presentation e1 = build_family("en:1", F5);
  for (const auto& l : enumerate_lines(F5))
    CHECK(splitting_type(restrict_to(e1, l)) == SplittingType{1, 0});
}

TEST_CASE("nf(1,1) presents the same bundle as e_1 after degree alignment") {
  Presentation nf11 = build_family("nf:1,1", Q);
  Presentation e1m1 = twist(build_family("en:1", Q), -1);
  CHECK(nf11.d0 == e1m1.d0);
  IsoResult res = isomorphic(nf11, e1m1);
  CHECK(res.isomorphic());
}

TEST_CASE("e_n is the (1,1,n) member twisted back and permuted") {
  for (long long n = 1; n <= 4; ++n) {
    Presentation en = build_family("en:" + std::to_string(n), Q);
    Presentation k = twist(build_family("kaneyama:1,1," + std::to_string(n), Q), -n);
    // x -> z -> y -> x turns (x, y, z^n) into (y, z, x^n)
    DenseMatrix perm = DenseMatrix::from_ints(Q, 3, 3, {0, 1, 0, 0, 0, 1, 1, 0, 0});
    Presentation kp = pullback(k, GroupElement{perm, SubgroupTag::full()});
    CHECK(kp.d == en.d);
    CHECK(kp.entries[0] == en.entries[0]);
    CHECK(kp.entries[2] == en.entries[2]);
    CHECK(isomorphic(en, kp).isomorphic());
  }
}

TEST_CASE("ex62 chern data") {
  CHECK(chern(build_family("ex62:r=1,f=z^3", Q)) == ChernPair{-1, 4});
  CHECK(chern(build_family("ex62:r=2,f=z^5", Q)) == ChernPair{-1, 9});
  CHECK(stability_class(build_family("ex62:r=1,f=z^3", Q)) == Stability::stable);
}

TEST_CASE("catalog") {
  auto c1 = catalog(Q, 1);
  auto has = [](const std::vector<FamilySpec>& v, const std::string& s) {
    for (const auto& f : v)
      if (f.str() == s) return true;
    return false;
  };
  CHECK(has(c1, "ex62:r=1,f=z^3"));
  auto c2 = catalog(Q, 2);
  CHECK(has(c2, "kaneyama:1,1,2"));
  CHECK_THROWS_AS(catalog(Q, 0), PbError);

  // every entry builds and validates (build runs the certificate)
  for (const auto& spec : c2) {
    Presentation p = build(spec);
    CHECK(p.cert.quotient_hilbert.back() == 0);
  }
}

TEST_CASE("stability ladder across the family") {
  CHECK(stability_class(build_family("en:1", Q)) == Stability::stable);
  CHECK(stability_class(build_family("en:2", Q)) == Stability::properly_semistable);
  CHECK(stability_class(build_family("en:3", Q)) == Stability::unstable);
  CHECK(stability_class(build_family("en:6", Q)) == Stability::unstable);
}

TEST_CASE("user-supplied forms flow through the grammar") {
  Presentation p = build_family("ex62:r=1,f=z^3+x^2*z", F5);
  CHECK(p.entries[0].degree() == 3);
  JumpingReport rep = scan(p, ScanMode::exhaustive());
  CHECK(rep.cls.kind == Classification::Kind::pencil);
  CHECK(*rep.cls.base == parse_point("0:0:1", F5));
}
