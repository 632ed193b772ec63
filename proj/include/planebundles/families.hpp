#pragma once

#include "planebundles/presentation.hpp"

namespace pb {

/// Parameter block for the built-in bundle families.
///   kaneyama(a,b,c):    0 -> O --(x^a,y^b,z^c)--> O(a)+O(b)+O(c) -> E(a,b,c)
///   e_n(n):             0 -> O(-n) --(y,z,x^n)--> O(1-n)^2 + O -> E_n
///   nearly_free(a,b):   0 -> O(-b-1) --(z^{b-a+1},x,y)--> O(-a)+O(-b)^2
///   ex61(r,k,c1,f): entries (f, x^r, y^r); deg f = 2r+2k-c1, f(0,0,1) != 0
///   ex62(r,f):      entries (f, x^{r+1}, y^{r+1}); deg f = 2r+1, f(0,0,1) != 0
struct FamilySpec {
  enum class Variant { kaneyama, nearly_free, e_n, ex61, ex62 };
  Variant variant = Variant::e_n;
  FieldCtx field;
  long long a = 0, b = 0, c = 0;  // kaneyama / nearly_free exponents
  long long n = 0;                // e_n index
  long long r = 0, k = 0, c1 = 0; // ex61/62 parameters
  std::optional<HomPoly> f;       // ex61/62 leading form

  std::string str() const;  // the CLI literal, e.g. "en:3"
};

Presentation build(const FamilySpec& spec);

/// Deterministic test corpus: all family members with parameters up to the
/// bound, canonical f = z^(required degree).
std::vector<FamilySpec> catalog(const FieldCtx& field, long long bound);

/// CLI literals: "en:3", "kaneyama:1,2,3", "nf:2,4",
/// "ex61:r=2,k=1,c1=0,f=z^6", "ex62:r=1,f=z^3".
FamilySpec parse_family(const std::string& text, const FieldCtx& field);

/// Convenience: build straight from a literal.
Presentation build_family(const std::string& text, const FieldCtx& field);

}  // namespace pb
