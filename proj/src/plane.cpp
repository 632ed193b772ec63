#include "planebundles/plane.hpp"

#include <numeric>
#include <sstream>

namespace pb {

namespace {

std::array<Scalar, 3> normalize_triple(std::array<Scalar, 3> c, const char* what) {
  int lead = -1;
  for (int i = 0; i < 3; ++i)
    if (!c[i].is_zero()) {
      lead = i;
      break;
    }
  if (lead < 0) fail(Errc::degenerate_geometry, std::string(what) + " with all coordinates zero");
  Scalar inv = c[lead].inverse();
  for (int i = 0; i < 3; ++i) c[i] = c[i] * inv;
  return c;
}

int cmp_triple(const std::array<Scalar, 3>& a, const std::array<Scalar, 3>& b) {
  for (int i = 0; i < 3; ++i)
    if (int c = a[i].cmp(b[i]); c != 0) return c;
  return 0;
}

std::array<Scalar, 3> cross(const std::array<Scalar, 3>& a, const std::array<Scalar, 3>& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

std::vector<Scalar> parse_scalar_list(const std::string& text, const FieldCtx& ctx, char sep) {
  std::vector<Scalar> out;
  std::string cur;
  auto flush = [&]() {
    std::string t;
    for (char ch : cur)
      if (!isspace(static_cast<unsigned char>(ch))) t += ch;
    if (t.empty()) fail(Errc::parse_error, "empty coordinate in '" + text + "'");
    bool neg = t[0] == '-';
    if (neg) t = t.substr(1);
    if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos)
      fail(Errc::parse_error, "bad coordinate '" + cur + "' in '" + text + "'");
    Scalar s = Scalar::from_decimal(ctx, t);
    out.push_back(neg ? -s : s);
    cur.clear();
  };
  for (char ch : text) {
    if (ch == sep)
      flush();
    else
      cur += ch;
  }
  flush();
  return out;
}

}  // namespace

int PointP2::cmp(const PointP2& o) const { return cmp_triple(c, o.c); }
int LineP2::cmp(const LineP2& o) const { return cmp_triple(c, o.c); }

std::string PointP2::str() const {
  std::ostringstream os;
  os << c[0].str() << ":" << c[1].str() << ":" << c[2].str();
  return os.str();
}

std::string LineP2::str() const {
  std::ostringstream os;
  os << "[" << c[0].str() << "," << c[1].str() << "," << c[2].str() << "]";
  return os.str();
}

PointP2 make_point(std::array<Scalar, 3> coords) {
  return PointP2{normalize_triple(std::move(coords), "point")};
}

LineP2 make_line(std::array<Scalar, 3> coeffs) {
  return LineP2{normalize_triple(std::move(coeffs), "line")};
}

PointP2 parse_point(const std::string& text, const FieldCtx& ctx) {
  auto v = parse_scalar_list(text, ctx, ':');
  if (v.size() != 3) fail(Errc::parse_error, "point literal wants a:b:c, got '" + text + "'");
  return make_point({v[0], v[1], v[2]});
}

LineP2 parse_line(const std::string& text, const FieldCtx& ctx) {
  std::string t = text;
  while (!t.empty() && isspace(static_cast<unsigned char>(t.front()))) t.erase(t.begin());
  while (!t.empty() && isspace(static_cast<unsigned char>(t.back()))) t.pop_back();
  if (t.size() < 2 || t.front() != '[' || t.back() != ']')
    fail(Errc::parse_error, "line literal wants [a,b,c], got '" + text + "'");
  auto v = parse_scalar_list(t.substr(1, t.size() - 2), ctx, ',');
  if (v.size() != 3) fail(Errc::parse_error, "line literal wants three coefficients");
  return make_line({v[0], v[1], v[2]});
}

LineP2 dual_line(const PointP2& p) { return LineP2{p.c}; }
PointP2 dual_point(const LineP2& l) { return PointP2{l.c}; }

bool incident(const PointP2& p, const LineP2& l) {
  Scalar dot = l.c[0] * p.c[0] + l.c[1] * p.c[1] + l.c[2] * p.c[2];
  return dot.is_zero();
}

LineP2 line_through(const PointP2& p, const PointP2& q) {
  if (p == q) fail(Errc::degenerate_geometry, "line_through needs two distinct points");
  return make_line(cross(p.c, q.c));
}

PointP2 line_intersection(const LineP2& l, const LineP2& m) {
  if (l == m) fail(Errc::degenerate_geometry, "line_intersection needs two distinct lines");
  return make_point(cross(l.c, m.c));
}

DenseMatrix parametrize(const LineP2& l) {
  const FieldCtx& ctx = l.c[0].ctx();
  std::vector<PointP2> pts;
  for (int i = 0; i < 3 && pts.size() < 2; ++i) {
    std::array<Scalar, 3> cand{Scalar::zero(ctx), Scalar::zero(ctx), Scalar::zero(ctx)};
    if (l.c[i].is_zero()) {
      cand[i] = Scalar::one(ctx);
    } else {
      int j = -1;
      for (int off = 1; off < 3; ++off)
        if (!l.c[(i + off) % 3].is_zero()) {
          j = (i + off) % 3;
          break;
        }
      if (j < 0) continue;  // only candidate solutions use a second coordinate
      cand[i] = l.c[j];
      cand[j] = -l.c[i];
    }
    PointP2 p = make_point(cand);
    if (pts.empty() || !(pts[0] == p)) pts.push_back(p);
  }
  check_internal(pts.size() == 2, "parametrize found fewer than two points");
  DenseMatrix m(ctx, 3, 2);
  for (int i = 0; i < 3; ++i) {
    m.at(i, 0) = pts[0].c[i];
    m.at(i, 1) = pts[1].c[i];
  }
  for (int col = 0; col < 2; ++col) {
    Scalar dot = Scalar::zero(ctx);
    for (int i = 0; i < 3; ++i) dot = dot + l.c[i] * m.at(i, col);
    check_internal(dot.is_zero(), "parametrization point off the line");
  }
  return m;
}

HomPoly line_form(const LineP2& l) {
  const FieldCtx& ctx = l.c[0].ctx();
  HomPoly f = HomPoly::zero(ctx, 3, 1);
  for (int i = 0; i < 3; ++i) f = f + HomPoly::variable(ctx, 3, i).scaled(l.c[i]);
  return f;
}

std::vector<LineP2> pencil_through(const PointP2& p, const FieldCtx& ctx, std::size_t count) {
  // dual description: coefficients c with c . p = 0
  DenseMatrix row(ctx, 1, 3);
  for (int i = 0; i < 3; ++i) row.at(0, i) = p.c[i];
  auto ker = kernel_basis(row);
  check_internal(ker.size() == 2, "pencil wants a 2-dimensional dual kernel");
  auto mix = [&](const Scalar& a, const Scalar& b) {
    std::array<Scalar, 3> c;
    for (int i = 0; i < 3; ++i) c[i] = a * ker[0][i] + b * ker[1][i];
    return make_line(c);
  };

  std::vector<LineP2> out;
  if (ctx.is_prime_field()) {
    out.push_back(mix(Scalar::one(ctx), Scalar::zero(ctx)));
    out.push_back(mix(Scalar::zero(ctx), Scalar::one(ctx)));
    for (std::uint64_t m = 1; m < ctx.modulus; ++m)
      out.push_back(mix(Scalar::one(ctx), Scalar::from_residue(ctx, m)));
    return out;
  }

  if (count == 0) fail(Errc::precondition, "pencil over Q needs an explicit count");
  out.push_back(mix(Scalar::one(ctx), Scalar::zero(ctx)));
  if (out.size() < count) out.push_back(mix(Scalar::zero(ctx), Scalar::one(ctx)));
  // slopes by ascending height, negative before positive
  for (long long h = 1; (std::size_t)out.size() < count; ++h) {
    for (long long d = 1; d <= h && out.size() < count; ++d) {
      std::vector<long long> nums;
      if (d < h) {
        if (std::gcd(h, d) == 1) nums.push_back(h);
      } else {
        for (long long n = 1; n <= h; ++n)
          if (std::gcd(n, h) == 1) nums.push_back(n);
      }
      for (long long n : nums) {
        for (int sign : {-1, 1}) {
          if (out.size() >= count) break;
          out.push_back(mix(Scalar::one(ctx),
                            Scalar::from_mpq(ctx, mpq_class(static_cast<long>(sign * n),
                                                            static_cast<long>(d)))));
        }
      }
    }
  }
  out.resize(count);
  return out;
}

std::vector<LineP2> enumerate_lines(const FieldCtx& ctx) {
  if (!ctx.is_prime_field())
    fail(Errc::unsupported_field, "exhaustive line enumeration needs a prime field");
  const std::uint64_t q = ctx.modulus;
  std::vector<LineP2> out;
  out.reserve(q * q + q + 1);
  for (std::uint64_t b = 0; b < q; ++b)
    for (std::uint64_t c = 0; c < q; ++c)
      out.push_back(LineP2{{Scalar::one(ctx), Scalar::from_residue(ctx, b), Scalar::from_residue(ctx, c)}});
  for (std::uint64_t c = 0; c < q; ++c)
    out.push_back(LineP2{{Scalar::zero(ctx), Scalar::one(ctx), Scalar::from_residue(ctx, c)}});
  out.push_back(LineP2{{Scalar::zero(ctx), Scalar::zero(ctx), Scalar::one(ctx)}});
  return out;
}

namespace {

std::array<Scalar, 3> random_triple(const FieldCtx& ctx, Rng& rng) {
  const long long bound = 1000000;  // rational coefficients live in [-10^6, 10^6]
  while (true) {
    std::array<Scalar, 3> c;
    bool nonzero = false;
    for (int i = 0; i < 3; ++i) {
      c[i] = ctx.is_prime_field() ? Scalar::from_residue(ctx, rng.below(ctx.modulus))
                                  : Scalar::from_int(ctx, rng.int_in(-bound, bound));
      nonzero |= !c[i].is_zero();
    }
    if (nonzero) return c;
  }
}

}  // namespace

LineP2 random_line(const FieldCtx& ctx, Rng& rng) { return make_line(random_triple(ctx, rng)); }
PointP2 random_point(const FieldCtx& ctx, Rng& rng) { return make_point(random_triple(ctx, rng)); }

}  // namespace pb
