#include "planebundles/splitting.hpp"

#include <algorithm>

namespace pb {

namespace {

/// Kernel dimension of (h_1,h_2,h_3) -> sum h_i g_i into the degree-m piece.
long long syzygy_kernel_dim(const P1Presentation& q, long long m) {
  long long cols = 0;
  for (const auto& g : q.entries) cols += graded_dim(2, m - g.degree());
  if (cols == 0) return 0;
  StackedMult sm = stacked_mult_matrix(q.entries, m);
  return cols - static_cast<long long>(rank(sm.m));
}

long long c1_of(const P1Presentation& q) { return q.d0 - (q.d[0] + q.d[1] + q.d[2]); }

}  // namespace

P1Presentation restrict_to(const Presentation& p, const LineP2& l) {
  DenseMatrix param = parametrize(l);
  P1Presentation q;
  q.ctx = p.ctx;
  q.d0 = p.d0;
  q.d = p.d;
  q.line = l;
  for (int i = 0; i < 3; ++i) q.entries[i] = restrict_to_line(p.entries[i], param);

  // local freeness along the line: gcd of the restricted entries is constant
  HomPoly g = HomPoly::zero(p.ctx, 2, 0);
  bool have = false;
  for (const auto& e : q.entries) {
    if (e.is_zero()) continue;
    g = have ? gcd_binary(g, e) : e;
    have = true;
  }
  if (!have || g.degree() > 0)
    fail(Errc::not_locally_free,
         "restriction to " + l.str() + " is not locally free (entry gcd is nonconstant)");
  return q;
}

SplittingType splitting_type(const P1Presentation& q) {
  long long wmin = q.entries[0].degree(), wsum = 0;
  for (const auto& g : q.entries) {
    wmin = std::min(wmin, g.degree());
    wsum += g.degree();
  }
  for (long long m = wmin; m <= wsum; ++m) {
    if (syzygy_kernel_dim(q, m) > 0) {
      long long b = m - q.d0;
      return {c1_of(q) - b, b};
    }
  }
  fail(Errc::internal, "syzygy search exceeded its degree bound; upstream invariant broken");
}

SplittingType splitting_type_h0(const P1Presentation& q) {
  auto h0_at = [&](long long k) -> long long {
    long long count = 0;
    for (long long di : q.d) count += line_h0(k - di);
    count -= line_h0(k - q.d0);
    long long D = q.d0 - k - 2;  // dual degree carrying H^1 of the subsheaf
    if (D >= 0) {
      long long h1 = D + 1;
      StackedMult sm = stacked_mult_matrix(q.entries, D);
      count += h1 - static_cast<long long>(rank(sm.m));
    }
    return count;
  };

  long long k = q.d0;
  check_internal(h0_at(k) > 0, "restricted bundle has no sections at the top twist");
  while (h0_at(k) > 0) --k;
  long long a = -(k + 1);
  return {a, c1_of(q) - a};
}

SplittingType generic_splitting(const Presentation& p, unsigned trials, std::uint64_t seed) {
  if (trials < 5) fail(Errc::precondition, "generic_splitting wants at least 5 trials");

  std::vector<LineP2> lines;
  if (p.ctx.is_prime_field()) {
    std::uint64_t q = p.ctx.modulus;
    if (q * q + q + 1 <= 4ULL * trials) {
      lines = enumerate_lines(p.ctx);
    }
  }
  if (lines.empty()) {
    Rng rng(seed);
    for (unsigned t = 0; t < trials; ++t) lines.push_back(random_line(p.ctx, rng));
  }

  std::optional<SplittingType> best;
  for (const auto& l : lines) {
    SplittingType s = splitting_type(restrict_to(p, l));
    if (!best || s.gap() < best->gap()) best = s;
  }
  return *best;
}

long long jump_order(const Presentation& p, const LineP2& l, const SplittingType& generic) {
  SplittingType s = splitting_type(restrict_to(p, l));
  long long diff = s.gap() - generic.gap();
  check_internal(diff % 2 == 0, "gap parity mismatch against the generic splitting");
  if (diff < 0)
    fail(Errc::precondition,
         "line splits below the supplied generic type; generic was not minimal");
  return diff / 2;
}

}  // namespace pb
