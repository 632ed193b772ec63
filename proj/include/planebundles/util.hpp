#pragma once

#include <cstdint>

namespace pb {

/// Deterministic splitmix64 generator. All randomness in the library flows
/// through explicit seeds so that every run is reproducible.
struct Rng {
  std::uint64_t s;

  explicit Rng(std::uint64_t seed) : s(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (s += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }

  long long int_in(long long lo, long long hi) {
    return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  /// Derive an independent deterministic stream.
  Rng fork(std::uint64_t salt) {
    Rng r(s ^ (salt * 0xd1342543de82ef95ULL + 0x2545f4914f6cdd1dULL));
    r.next();
    return r;
  }
};

inline long long floor_div(long long a, long long b) {
  long long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

/// h^0 of a line bundle of degree m on the plane.
inline long long plane_h0(long long m) { return m >= 0 ? (m + 1) * (m + 2) / 2 : 0; }

/// h^0 of a line bundle of degree m on a line.
inline long long line_h0(long long m) { return m >= 0 ? m + 1 : 0; }

}  // namespace pb
