#include "planebundles/families.hpp"

#include <sstream>

namespace pb {

namespace {

HomPoly zpow(const FieldCtx& ctx, long long k) { return HomPoly::var_power(ctx, 3, 2, k); }

void require(bool cond, const std::string& condition) {
  if (!cond) fail(Errc::precondition, "family parameter violates: " + condition);
}

Scalar eval_at_001(const HomPoly& f) {
  std::array<Scalar, 3> p{Scalar::zero(f.ctx()), Scalar::zero(f.ctx()), Scalar::one(f.ctx())};
  return f.eval(p);
}

}  // namespace

std::string FamilySpec::str() const {
  std::ostringstream os;
  switch (variant) {
    case Variant::kaneyama: os << "kaneyama:" << a << "," << b << "," << c; break;
    case Variant::nearly_free: os << "nf:" << a << "," << b; break;
    case Variant::e_n: os << "en:" << n; break;
    case Variant::ex61:
      os << "ex61:r=" << r << ",k=" << k << ",c1=" << c1 << ",f=" << (f ? f->str() : "?");
      break;
    case Variant::ex62:
      os << "ex62:r=" << r << ",f=" << (f ? f->str() : "?");
      break;
  }
  return os.str();
}

Presentation build(const FamilySpec& spec) {
  const FieldCtx& F = spec.field;
  switch (spec.variant) {
    case FamilySpec::Variant::kaneyama: {
      require(spec.a >= 1 && spec.b >= 1 && spec.c >= 1, "kaneyama exponents must be positive");
      std::array<HomPoly, 3> e{HomPoly::var_power(F, 3, 0, spec.a),
                               HomPoly::var_power(F, 3, 1, spec.b), zpow(F, spec.c)};
      return make_presentation(F, 0, {-spec.a, -spec.b, -spec.c}, std::move(e));
    }
    case FamilySpec::Variant::e_n: {
      require(spec.n >= 1, "e_n index must be >= 1");
      std::array<HomPoly, 3> e{HomPoly::variable(F, 3, 1), HomPoly::variable(F, 3, 2),
                               HomPoly::var_power(F, 3, 0, spec.n)};
      return make_presentation(F, spec.n, {spec.n - 1, spec.n - 1, 0}, std::move(e));
    }
    case FamilySpec::Variant::nearly_free: {
      require(1 <= spec.a && spec.a <= spec.b, "nearly-free exponents want 1 <= a <= b");
      std::array<HomPoly, 3> e{zpow(F, spec.b - spec.a + 1), HomPoly::variable(F, 3, 0),
                               HomPoly::variable(F, 3, 1)};
      return make_presentation(F, spec.b + 1, {spec.a, spec.b, spec.b}, std::move(e));
    }
    case FamilySpec::Variant::ex61: {
      require(spec.r >= 1, "r >= 1");
      require(spec.k >= 0, "k >= 0");
      require(spec.c1 == 0 || spec.c1 == -1, "c1 in {-1, 0}");
      require(spec.f.has_value(), "a form f is required");
      long long want = 2 * spec.r + 2 * spec.k - spec.c1;
      require(spec.f->degree() == want, "deg f = 2r+2k-c1 = " + std::to_string(want));
      require(!eval_at_001(*spec.f).is_zero(), "f(0:0:1) != 0");
      long long d0 = 2 * spec.r + spec.k - spec.c1;
      long long dq = spec.r + spec.k - spec.c1;
      std::array<HomPoly, 3> e{*spec.f, HomPoly::var_power(F, 3, 0, spec.r),
                               HomPoly::var_power(F, 3, 1, spec.r)};
      return make_presentation(F, d0, {-spec.k, dq, dq}, std::move(e));
    }
    case FamilySpec::Variant::ex62: {
      require(spec.r >= 1, "r >= 1");
      require(spec.f.has_value(), "a form f is required");
      long long want = 2 * spec.r + 1;
      require(spec.f->degree() == want, "deg f = 2r+1 = " + std::to_string(want));
      require(!eval_at_001(*spec.f).is_zero(), "f(0:0:1) != 0");
      std::array<HomPoly, 3> e{*spec.f, HomPoly::var_power(F, 3, 0, spec.r + 1),
                               HomPoly::var_power(F, 3, 1, spec.r + 1)};
      return make_presentation(F, 2 * spec.r + 2, {1, spec.r + 1, spec.r + 1}, std::move(e));
    }
  }
  fail(Errc::internal, "unreachable family variant");
}

std::vector<FamilySpec> catalog(const FieldCtx& field, long long bound) {
  if (bound < 1) fail(Errc::precondition, "catalog bound must be >= 1");
  std::vector<FamilySpec> out;
  for (long long a = 1; a <= bound; ++a)
    for (long long b = a; b <= bound; ++b)
      for (long long c = b; c <= bound; ++c) {
        FamilySpec s;
        s.variant = FamilySpec::Variant::kaneyama;
        s.field = field;
        s.a = a;
        s.b = b;
        s.c = c;
        out.push_back(s);
      }
  for (long long n = 1; n <= bound; ++n) {
    FamilySpec s;
    s.variant = FamilySpec::Variant::e_n;
    s.field = field;
    s.n = n;
    out.push_back(s);
  }
  for (long long a = 1; a <= bound; ++a)
    for (long long b = a; b <= bound; ++b) {
      FamilySpec s;
      s.variant = FamilySpec::Variant::nearly_free;
      s.field = field;
      s.a = a;
      s.b = b;
      out.push_back(s);
    }
  for (long long r = 1; r <= bound; ++r)
    for (long long k = 0; k <= bound; ++k)
      for (long long c1 : {0LL, -1LL}) {
        FamilySpec s;
        s.variant = FamilySpec::Variant::ex61;
        s.field = field;
        s.r = r;
        s.k = k;
        s.c1 = c1;
        s.f = zpow(field, 2 * r + 2 * k - c1);
        out.push_back(s);
      }
  for (long long r = 1; r <= bound; ++r) {
    FamilySpec s;
    s.variant = FamilySpec::Variant::ex62;
    s.field = field;
    s.r = r;
    s.f = zpow(field, 2 * r + 1);
    out.push_back(s);
  }
  return out;
}

namespace {

std::vector<std::string> split_on(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

long long to_ll(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    long long v = std::stoll(s, &used);
    if (used != s.size()) throw std::invalid_argument("trailing");
    return v;
  } catch (const std::exception&) {
    fail(Errc::parse_error, "bad integer '" + s + "' in " + what);
  }
}

}  // namespace

FamilySpec parse_family(const std::string& text, const FieldCtx& field) {
  auto colon = text.find(':');
  if (colon == std::string::npos)
    fail(Errc::parse_error, "family literal wants name:params, got '" + text + "'");
  std::string name = text.substr(0, colon);
  std::string params = text.substr(colon + 1);
  FamilySpec s;
  s.field = field;
  if (name == "en") {
    s.variant = FamilySpec::Variant::e_n;
    s.n = to_ll(params, "en");
    return s;
  }
  if (name == "kaneyama") {
    auto v = split_on(params, ',');
    if (v.size() != 3) fail(Errc::parse_error, "kaneyama wants a,b,c");
    s.variant = FamilySpec::Variant::kaneyama;
    s.a = to_ll(v[0], "kaneyama");
    s.b = to_ll(v[1], "kaneyama");
    s.c = to_ll(v[2], "kaneyama");
    return s;
  }
  if (name == "nf") {
    auto v = split_on(params, ',');
    if (v.size() != 2) fail(Errc::parse_error, "nf wants a,b");
    s.variant = FamilySpec::Variant::nearly_free;
    s.a = to_ll(v[0], "nf");
    s.b = to_ll(v[1], "nf");
    return s;
  }
  if (name == "ex61" || name == "ex62") {
    s.variant = name == "ex61" ? FamilySpec::Variant::ex61 : FamilySpec::Variant::ex62;
    for (const std::string& kv : split_on(params, ',')) {
      auto eq = kv.find('=');
      if (eq == std::string::npos) fail(Errc::parse_error, "family parameter wants key=value, got '" + kv + "'");
      std::string key = kv.substr(0, eq), val = kv.substr(eq + 1);
      if (key == "r")
        s.r = to_ll(val, name);
      else if (key == "k")
        s.k = to_ll(val, name);
      else if (key == "c1")
        s.c1 = to_ll(val, name);
      else if (key == "f")
        s.f = parse_poly(val, 3, field);
      else
        fail(Errc::parse_error, "unknown family parameter '" + key + "'");
    }
    return s;
  }
  fail(Errc::parse_error, "unknown family '" + name + "'");
}

Presentation build_family(const std::string& text, const FieldCtx& field) {
  return build(parse_family(text, field));
}

}  // namespace pb
