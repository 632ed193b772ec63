#pragma once

#include <array>
#include <optional>

#include "planebundles/plane.hpp"
#include "planebundles/poly.hpp"

namespace pb {

/// Hilbert function of the quotient by the entry ideal, computed up to the
/// degree that certifies the entries have no common zero.
struct ValidationCert {
  long long socle_bound = 0;                 // sum of entry degrees - 2
  std::vector<long long> quotient_hilbert;   // values at degrees 0..socle_bound+1
};

/// A rank-2 bundle presented by
///   0 -> O(-d0) --(f1,f2,f3)--> O(-d1) (+) O(-d2) (+) O(-d3) -> F -> 0
/// with deg f_i = d0 - d_i >= 1. Instances are only built through
/// make_presentation, which runs the local-freeness certificate.
struct Presentation {
  FieldCtx ctx;
  long long d0 = 0;
  std::array<long long, 3> d{0, 0, 0};
  std::array<HomPoly, 3> entries;
  ValidationCert cert;

  std::array<long long, 3> entry_degrees() const {
    return {d0 - d[0], d0 - d[1], d0 - d[2]};
  }
};

/// Checks the shape invariants and certifies local freeness; throws
/// Errc::not_locally_free (carrying the Hilbert deficiency) on failure.
Presentation make_presentation(const FieldCtx& ctx, long long d0, std::array<long long, 3> d,
                               std::array<HomPoly, 3> entries);

/// The certificate alone, for callers that want the Hilbert function.
ValidationCert validate(const FieldCtx& ctx, const std::array<HomPoly, 3>& entries);

struct ChernPair {
  long long c1 = 0, c2 = 0;
  bool operator==(const ChernPair&) const = default;
};

ChernPair chern(const Presentation& p);

/// Twist by O(m): all degrees shift by -m, entries unchanged; c1 grows by 2m.
Presentation twist(const Presentation& p, long long m);

/// dim H^0(F(k)), exact by the closed count on line-bundle cohomology.
long long h0(const Presentation& p, long long k);

/// Unique twist with c1 in {-1, 0}; returns it plus the twist used.
std::pair<Presentation, long long> normalize(const Presentation& p);

enum class Stability { stable, properly_semistable, unstable };
const char* stability_name(Stability s);

Stability stability_class(const Presentation& p);

/// Class in H^0(F(k)) given by three representatives g_i of degree k - d_i.
struct SectionVector {
  long long twist = 0;
  std::array<HomPoly, 3> reps;
};

/// Basis of H^0(F(k)) as monomial coset representatives.
std::vector<SectionVector> section_basis(const Presentation& p, long long k);

struct ZeroScheme {
  std::vector<HomPoly> generators;      // the three 2x2 minors
  std::optional<long long> colength;    // nullopt when not finite
};

ZeroScheme section_zero_scheme(const Presentation& p, const SectionVector& s);

/// Eventual constant Hilbert deficit of an ideal, or nullopt when the deficit
/// keeps growing (support of positive dimension). start_bound is the degree
/// from which stabilization is expected.
std::optional<long long> ideal_colength(std::span<const HomPoly> gens, long long start_bound);

struct DecomposabilityProbe {
  bool split_found = false;                  // yes(witness) vs no_evidence
  std::optional<SectionVector> witness;      // nowhere-vanishing section
};

/// Searches for a nowhere-vanishing section of F(-a_generic): the basis of
/// that twist plus 20 seeded random combinations. Absence of a witness is
/// reported as no_evidence, not as a proof of indecomposability.
DecomposabilityProbe is_decomposable(const Presentation& p, long long generic_a, std::uint64_t seed);

/// Bundle file format (line-oriented, '#' comments):
///   field: Q          — or —  field: Fp 7
///   sub: <d0>
///   quotients: <d1> <d2> <d3>
///   entries: <f1> | <f2> | <f3>
/// field_flag, when given, must agree with the file's field line.
Presentation parse_bundle_text(const std::string& text, const std::optional<FieldCtx>& field_flag);
Presentation load_bundle_file(const std::string& path, const std::optional<FieldCtx>& field_flag);

}  // namespace pb
