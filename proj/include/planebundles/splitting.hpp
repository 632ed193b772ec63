#pragma once

#include "planebundles/presentation.hpp"

namespace pb {

/// Splitting of the restriction to a line: F|_l = O(a) (+) O(b), a >= b,
/// a + b = c1 of the source presentation.
struct SplittingType {
  long long a = 0, b = 0;
  long long gap() const { return a - b; }
  bool operator==(const SplittingType&) const = default;
};

/// A presentation pulled back to a line, in coordinates (s, t).
struct P1Presentation {
  FieldCtx ctx;
  long long d0 = 0;
  std::array<long long, 3> d{0, 0, 0};
  std::array<HomPoly, 3> entries;  // binary forms of degree d0 - d_i
  LineP2 line;
};

/// Restriction along parametrize(l); verifies local freeness on the line
/// (the entry gcd must be a nonzero constant).
P1Presentation restrict_to(const Presentation& p, const LineP2& l);

/// Primary algorithm: ascending syzygy-degree search. The first degree m with
/// a relation sum h_i g_i = 0 (deg h_i = m - deg g_i) gives b = m - d0 and
/// a = c1 - b; termination by m <= sum of the entry degrees is asserted.
SplittingType splitting_type(const P1Presentation& q);

/// Independent oracle: cohomology profile. h^0(F|_l(k)) is counted from the
/// restricted sequence (section counts plus the kernel of the connecting map
/// into H^1, realized by duality as a cokernel of multiplication on graded
/// pieces); a = -min{ k : h^0 > 0 }.
SplittingType splitting_type_h0(const P1Presentation& q);

/// Minimal-gap splitting over sampled lines (the gap is lower-semicontinuous,
/// so the minimum over a sample is exact once a generic line is hit). Over a
/// small prime field the scan is exhaustive instead.
SplittingType generic_splitting(const Presentation& p, unsigned trials, std::uint64_t seed);

/// (gap(l) - gap_generic) / 2; exact nonnegative integer.
long long jump_order(const Presentation& p, const LineP2& l, const SplittingType& generic);

}  // namespace pb
