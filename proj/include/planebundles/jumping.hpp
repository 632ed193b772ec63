#pragma once

#include "planebundles/splitting.hpp"

namespace pb {

struct ScanMode {
  enum class Kind { exhaustive, sampled };
  Kind kind = Kind::exhaustive;
  unsigned samples = 0;       // sampled mode
  std::uint64_t seed = 0;     // sampled mode

  static ScanMode exhaustive() { return {Kind::exhaustive, 0, 0}; }
  static ScanMode sampled(unsigned n, std::uint64_t seed) { return {Kind::sampled, n, seed}; }
};

struct JumpRecord {
  LineP2 line;
  SplittingType split;
  long long order = 0;
};

/// Shape of the jumping locus. A pencil is recognized only when every
/// scanned line through the base point jumps (exact over a prime field).
struct Classification {
  enum class Kind { uniform, pencil, pencil_nonconstant, finite_set, other };
  Kind kind = Kind::uniform;
  std::optional<PointP2> base;     // pencil / pencil_nonconstant
  std::optional<long long> order;  // pencil (constant order)
  std::string name() const;
};

struct JumpingReport {
  SplittingType generic;
  ScanMode mode;
  std::size_t lines_scanned = 0;
  std::vector<JumpRecord> jumps;  // canonical line order, only order >= 1
  Classification cls;
};

/// Whole-plane scan: exhaustive needs a prime field; sampled mode never
/// claims exhaustiveness. The generic type is the minimal gap in scope.
JumpingReport scan(const Presentation& p, const ScanMode& mode);

/// Base point and constant order when the locus is a full constant-order
/// pencil; nullopt otherwise.
std::optional<std::pair<PointP2, long long>> almost_uniform(const Presentation& p,
                                                            const ScanMode& mode);

enum class PencilStability { confirmed, vacuous, violation };
const char* pencil_stability_name(PencilStability v);

/// Property check: a normalized-c1-zero bundle whose locus is a constant
/// pencil must not be stable. The instance verdict is confirmed / vacuous /
/// violation.
PencilStability pencil_stability_check(const Presentation& p, const ScanMode& mode);

}  // namespace pb
