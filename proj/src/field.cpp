#include "planebundles/field.hpp"

#include <sstream>

namespace pb {

namespace {

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t q) {
  long long t = 0, nt = 1;
  long long r = static_cast<long long>(q), nr = static_cast<long long>(a % q);
  while (nr != 0) {
    long long quot = r / nr;
    t = std::exchange(nt, t - quot * nt);
    r = std::exchange(nr, r - quot * nr);
  }
  if (r != 1) fail(Errc::invalid_argument, "element not invertible mod " + std::to_string(q));
  if (t < 0) t += static_cast<long long>(q);
  return static_cast<std::uint64_t>(t);
}

}  // namespace

FieldCtx FieldCtx::prime(std::uint64_t q) {
  if (q < 5) fail(Errc::invalid_argument, "prime field modulus must be >= 5, got " + std::to_string(q));
  if (q > 2147483647ULL) fail(Errc::invalid_argument, "prime field modulus too large");
  if (!is_prime_u64(q)) fail(Errc::invalid_argument, std::to_string(q) + " is not prime");
  return {FieldKind::prime_field, q};
}

std::string FieldCtx::str() const {
  if (kind == FieldKind::rationals) return "Q";
  return "Fp:" + std::to_string(modulus);
}

FieldCtx parse_field(const std::string& text) {
  std::string t;
  for (char c : text)
    if (!isspace(static_cast<unsigned char>(c)) || !t.empty()) t += c;
  while (!t.empty() && isspace(static_cast<unsigned char>(t.back()))) t.pop_back();
  if (t == "Q") return FieldCtx::rationals();
  if (t.rfind("Fp", 0) == 0) {
    std::string rest = t.substr(2);
    if (!rest.empty() && (rest[0] == ':' || rest[0] == ' ')) rest = rest.substr(1);
    while (!rest.empty() && rest.front() == ' ') rest.erase(rest.begin());
    try {
      size_t used = 0;
      unsigned long long q = std::stoull(rest, &used);
      if (used != rest.size()) throw std::invalid_argument("trailing");
      return FieldCtx::prime(q);
    } catch (const PbError&) {
      throw;
    } catch (const std::exception&) {
      fail(Errc::parse_error, "bad prime field spec: '" + text + "'");
    }
  }
  fail(Errc::parse_error, "unknown field '" + text + "' (expected Q or Fp:<prime>)");
}

Scalar Scalar::from_int(const FieldCtx& ctx, long long v) {
  Scalar s;
  s.ctx_ = ctx;
  if (ctx.is_prime_field()) {
    long long m = static_cast<long long>(ctx.modulus);
    long long r = v % m;
    if (r < 0) r += m;
    s.res_ = static_cast<std::uint64_t>(r);
  } else {
    s.rat_ = mpq_class(static_cast<long>(v));
  }
  return s;
}

Scalar Scalar::from_mpq(const FieldCtx& ctx, mpq_class v) {
  if (ctx.is_prime_field()) fail(Errc::invalid_argument, "rational literal over a prime field");
  Scalar s;
  s.ctx_ = ctx;
  v.canonicalize();
  s.rat_ = std::move(v);
  return s;
}

Scalar Scalar::from_residue(const FieldCtx& ctx, std::uint64_t r) {
  if (!ctx.is_prime_field()) fail(Errc::invalid_argument, "residue literal over Q");
  Scalar s;
  s.ctx_ = ctx;
  s.res_ = r % ctx.modulus;
  return s;
}

Scalar Scalar::from_decimal(const FieldCtx& ctx, const std::string& digits) {
  mpz_class z;
  if (mpz_set_str(z.get_mpz_t(), digits.c_str(), 10) != 0)
    fail(Errc::parse_error, "bad integer literal '" + digits + "'");
  Scalar s;
  s.ctx_ = ctx;
  if (ctx.is_prime_field()) {
    mpz_class r = z % static_cast<unsigned long>(ctx.modulus);
    if (r < 0) r += static_cast<unsigned long>(ctx.modulus);
    s.res_ = r.get_ui();
  } else {
    s.rat_ = mpq_class(z);
  }
  return s;
}

bool Scalar::is_zero() const {
  return ctx_.is_prime_field() ? res_ == 0 : rat_ == 0;
}

bool Scalar::is_one() const {
  return ctx_.is_prime_field() ? res_ == 1 : rat_ == 1;
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_internal(ctx_ == o.ctx_, "scalar ctx mismatch in +");
  Scalar s;
  s.ctx_ = ctx_;
  if (ctx_.is_prime_field())
    s.res_ = (res_ + o.res_) % ctx_.modulus;
  else
    s.rat_ = rat_ + o.rat_;
  return s;
}

Scalar Scalar::operator-(const Scalar& o) const {
  check_internal(ctx_ == o.ctx_, "scalar ctx mismatch in -");
  Scalar s;
  s.ctx_ = ctx_;
  if (ctx_.is_prime_field())
    s.res_ = (res_ + ctx_.modulus - o.res_) % ctx_.modulus;
  else
    s.rat_ = rat_ - o.rat_;
  return s;
}

Scalar Scalar::operator*(const Scalar& o) const {
  check_internal(ctx_ == o.ctx_, "scalar ctx mismatch in *");
  Scalar s;
  s.ctx_ = ctx_;
  if (ctx_.is_prime_field())
    s.res_ = (res_ * o.res_) % ctx_.modulus;
  else
    s.rat_ = rat_ * o.rat_;
  return s;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::operator-() const {
  Scalar s;
  s.ctx_ = ctx_;
  if (ctx_.is_prime_field())
    s.res_ = res_ == 0 ? 0 : ctx_.modulus - res_;
  else
    s.rat_ = -rat_;
  return s;
}

Scalar Scalar::inverse() const {
  if (is_zero()) fail(Errc::invalid_argument, "division by zero");
  Scalar s;
  s.ctx_ = ctx_;
  if (ctx_.is_prime_field())
    s.res_ = mod_inverse(res_, ctx_.modulus);
  else
    s.rat_ = 1 / rat_;
  return s;
}

bool Scalar::operator==(const Scalar& o) const {
  if (!(ctx_ == o.ctx_)) return false;
  return ctx_.is_prime_field() ? res_ == o.res_ : rat_ == o.rat_;
}

int Scalar::cmp(const Scalar& o) const {
  check_internal(ctx_ == o.ctx_, "scalar ctx mismatch in cmp");
  if (ctx_.is_prime_field()) return res_ < o.res_ ? -1 : (res_ > o.res_ ? 1 : 0);
  return ::cmp(rat_, o.rat_);
}

std::string Scalar::str() const {
  if (ctx_.is_prime_field()) return std::to_string(res_);
  return rat_.get_str();
}

Scalar Scalar::random(const FieldCtx& ctx, Rng& rng, long long bound) {
  if (ctx.is_prime_field()) return from_residue(ctx, rng.below(ctx.modulus));
  return from_int(ctx, rng.int_in(-bound, bound));
}

}  // namespace pb
