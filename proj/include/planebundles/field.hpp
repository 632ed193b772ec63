#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "planebundles/error.hpp"
#include "planebundles/util.hpp"

namespace pb {

enum class FieldKind { rationals, prime_field };

/// Descriptor of the active exact field: Q, or F_q for a prime q >= 5.
/// The lower bound keeps enough distinct slopes around for line sampling.
struct FieldCtx {
  FieldKind kind = FieldKind::rationals;
  std::uint64_t modulus = 0;

  static FieldCtx rationals() { return {}; }
  static FieldCtx prime(std::uint64_t q);

  bool is_prime_field() const { return kind == FieldKind::prime_field; }
  bool operator==(const FieldCtx&) const = default;
  std::string str() const;
};

/// "Q", "Fp:7" (CLI form) or "Fp 7" (bundle-file form).
FieldCtx parse_field(const std::string& text);

/// Exact field element. Rationals are kept canonical by GMP (lowest terms,
/// positive denominator); prime-field residues are kept reduced in [0, q).
class Scalar {
public:
  Scalar() = default;  // rational zero

  static Scalar zero(const FieldCtx& ctx) { return from_int(ctx, 0); }
  static Scalar one(const FieldCtx& ctx) { return from_int(ctx, 1); }
  static Scalar from_int(const FieldCtx& ctx, long long v);
  static Scalar from_mpq(const FieldCtx& ctx, mpq_class v);
  static Scalar from_residue(const FieldCtx& ctx, std::uint64_t r);
  /// Nonnegative decimal literal of any length, reduced into the field.
  static Scalar from_decimal(const FieldCtx& ctx, const std::string& digits);

  const FieldCtx& ctx() const { return ctx_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar inverse() const;

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  /// Total order used only for canonical sorting of reports.
  int cmp(const Scalar& o) const;

  const mpq_class& rat() const { return rat_; }
  std::uint64_t res() const { return res_; }

  std::string str() const;

  /// Uniform element; over Q an integer in [-bound, bound].
  static Scalar random(const FieldCtx& ctx, Rng& rng, long long bound = 9);

private:
  FieldCtx ctx_;
  mpq_class rat_;
  std::uint64_t res_ = 0;
};

}  // namespace pb
