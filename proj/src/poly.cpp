#include "planebundles/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace pb {

std::vector<Exp> monomials_of_degree(int nvars, long long d) {
  std::vector<Exp> out;
  if (d < 0) return out;
  if (nvars == 2) {
    for (long long i = d; i >= 0; --i) out.push_back({{int(i), int(d - i), 0}});
  } else {
    for (long long i = d; i >= 0; --i)
      for (long long j = d - i; j >= 0; --j) out.push_back({{int(i), int(j), int(d - i - j)}});
  }
  return out;
}

long long graded_dim(int nvars, long long d) {
  if (d < 0) return 0;
  return nvars == 2 ? d + 1 : (d + 1) * (d + 2) / 2;
}

std::size_t monomial_index(int nvars, long long d, const Exp& m) {
  check_internal(m.total() == d, "monomial_index degree mismatch");
  if (nvars == 2) return static_cast<std::size_t>(d - m.e[0]);
  long long i = m.e[0], j = m.e[1];
  long long before = (d - i) * (d - i + 1) / 2;
  return static_cast<std::size_t>(before + (d - i - j));
}

HomPoly HomPoly::zero(const FieldCtx& ctx, int nvars, long long degree) {
  check_internal(nvars == 2 || nvars == 3, "nvars must be 2 or 3");
  HomPoly p;
  p.ctx_ = ctx;
  p.nvars_ = nvars;
  p.degree_ = degree;
  return p;
}

HomPoly HomPoly::constant(const FieldCtx& ctx, int nvars, const Scalar& c) {
  return monomial(ctx, nvars, Exp{}, c);
}

HomPoly HomPoly::monomial(const FieldCtx& ctx, int nvars, const Exp& m, const Scalar& c) {
  HomPoly p = zero(ctx, nvars, m.total());
  p.insert(m, c);
  return p;
}

HomPoly HomPoly::variable(const FieldCtx& ctx, int nvars, int which) {
  return var_power(ctx, nvars, which, 1);
}

HomPoly HomPoly::var_power(const FieldCtx& ctx, int nvars, int which, long long k) {
  check_internal(which >= 0 && which < nvars, "variable index out of range");
  Exp m;
  m.e[which] = static_cast<int>(k);
  return monomial(ctx, nvars, m, Scalar::one(ctx));
}

void HomPoly::insert(const Exp& m, const Scalar& c) {
  if (c.is_zero()) return;
  check_internal(m.total() == degree_, "monomial degree mismatch on insert");
  auto it = c_.find(m);
  if (it == c_.end()) {
    c_.emplace(m, c);
  } else {
    Scalar s = it->second + c;
    if (s.is_zero())
      c_.erase(it);
    else
      it->second = s;
  }
}

Scalar HomPoly::coeff(const Exp& m) const {
  auto it = c_.find(m);
  return it == c_.end() ? Scalar::zero(ctx_) : it->second;
}

HomPoly HomPoly::operator+(const HomPoly& o) const {
  if (!(ctx_ == o.ctx_) || nvars_ != o.nvars_ || degree_ != o.degree_)
    fail(Errc::degree_mismatch, "polynomial addition needs equal degree and arity");
  HomPoly r = *this;
  for (const auto& [m, c] : o.c_) r.insert(m, c);
  return r;
}

HomPoly HomPoly::operator-(const HomPoly& o) const { return *this + (-o); }

HomPoly HomPoly::operator-() const {
  HomPoly r = *this;
  for (auto& [m, c] : r.c_) c = -c;
  return r;
}

HomPoly HomPoly::scaled(const Scalar& s) const {
  HomPoly r = zero(ctx_, nvars_, degree_);
  if (s.is_zero()) return r;
  for (const auto& [m, c] : c_) r.insert(m, c * s);
  return r;
}

HomPoly HomPoly::operator*(const HomPoly& o) const {
  check_internal(ctx_ == o.ctx_ && nvars_ == o.nvars_, "polynomial product arity mismatch");
  HomPoly r = zero(ctx_, nvars_, degree_ + o.degree_);
  for (const auto& [m1, c1] : c_)
    for (const auto& [m2, c2] : o.c_) {
      Exp m{{m1.e[0] + m2.e[0], m1.e[1] + m2.e[1], m1.e[2] + m2.e[2]}};
      r.insert(m, c1 * c2);
    }
  return r;
}

HomPoly HomPoly::pow(long long k) const {
  check_internal(k >= 0, "negative power");
  HomPoly r = constant(ctx_, nvars_, Scalar::one(ctx_));
  for (long long i = 0; i < k; ++i) r = r * *this;
  return r;
}

bool HomPoly::operator==(const HomPoly& o) const {
  return ctx_ == o.ctx_ && nvars_ == o.nvars_ && degree_ == o.degree_ && c_ == o.c_;
}

Scalar HomPoly::eval(std::span<const Scalar> point) const {
  check_internal(point.size() == static_cast<std::size_t>(nvars_), "eval arity mismatch");
  Scalar acc = Scalar::zero(ctx_);
  for (const auto& [m, c] : c_) {
    Scalar t = c;
    for (int i = 0; i < nvars_; ++i)
      for (int k = 0; k < m.e[i]; ++k) t = t * point[i];
    acc = acc + t;
  }
  return acc;
}

std::vector<Scalar> HomPoly::coeff_vector() const {
  auto basis = monomials_of_degree(nvars_, degree_);
  std::vector<Scalar> v(basis.size(), Scalar::zero(ctx_));
  for (const auto& [m, c] : c_) v[monomial_index(nvars_, degree_, m)] = c;
  return v;
}

HomPoly HomPoly::from_coeff_vector(const FieldCtx& ctx, int nvars, long long degree,
                                   std::span<const Scalar> v) {
  auto basis = monomials_of_degree(nvars, degree);
  check_internal(v.size() == basis.size(), "coefficient vector length mismatch");
  HomPoly p = zero(ctx, nvars, degree);
  for (std::size_t i = 0; i < basis.size(); ++i) p.insert(basis[i], v[i]);
  return p;
}

std::string HomPoly::str() const {
  if (c_.empty()) return "0";
  static const char* names3[3] = {"x", "y", "z"};
  static const char* names2[3] = {"s", "t", "?"};
  const char** names = nvars_ == 2 ? names2 : names3;
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : c_) {
    std::string cs = c.str();
    bool neg = !cs.empty() && cs[0] == '-';
    if (first) {
      if (neg) os << "-";
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    if (neg) cs = cs.substr(1);
    bool is_const = m.total() == 0;
    if (is_const || cs != "1") {
      os << cs;
      if (!is_const) os << "*";
    }
    bool firstvar = true;
    for (int i = 0; i < nvars_; ++i) {
      if (m.e[i] == 0) continue;
      if (!firstvar) os << "*";
      firstvar = false;
      os << names[i];
      if (m.e[i] >= 2) os << "^" << m.e[i];
    }
  }
  return os.str();
}

HomPoly substitute_linear(const HomPoly& p, const DenseMatrix& g) {
  check_internal(p.nvars() == 3 && g.rows() == 3 && g.cols() == 3, "substitute_linear wants 3 vars");
  check_internal(g.ctx() == p.ctx(), "substitution ctx mismatch");
  std::array<HomPoly, 3> lin;
  for (int i = 0; i < 3; ++i) {
    lin[i] = HomPoly::zero(p.ctx(), 3, 1);
    for (int j = 0; j < 3; ++j)
      lin[i] = lin[i] + HomPoly::variable(p.ctx(), 3, j).scaled(g.at(i, j));
  }
  HomPoly r = HomPoly::zero(p.ctx(), 3, p.degree());
  for (const auto& [m, c] : p.terms()) {
    HomPoly t = HomPoly::constant(p.ctx(), 3, c);
    for (int i = 0; i < 3; ++i)
      if (m.e[i] > 0) t = t * lin[i].pow(m.e[i]);
    // a zero row of g can kill the term; keep degrees aligned by re-tagging
    if (t.is_zero())
      continue;
    r = r + t;
  }
  return r;
}

HomPoly restrict_to_line(const HomPoly& p, const DenseMatrix& param) {
  check_internal(p.nvars() == 3 && param.rows() == 3 && param.cols() == 2,
                 "restrict_to_line wants a 3x2 parametrization");
  if (rank(param) < 2) fail(Errc::degenerate_geometry, "degenerate line parametrization");
  std::array<HomPoly, 3> lin;
  for (int i = 0; i < 3; ++i) {
    lin[i] = HomPoly::variable(p.ctx(), 2, 0).scaled(param.at(i, 0)) +
             HomPoly::variable(p.ctx(), 2, 1).scaled(param.at(i, 1));
  }
  HomPoly r = HomPoly::zero(p.ctx(), 2, p.degree());
  for (const auto& [m, c] : p.terms()) {
    HomPoly t = HomPoly::constant(p.ctx(), 2, c);
    for (int i = 0; i < 3; ++i) {
      if (m.e[i] == 0) continue;
      t = t * lin[i].pow(m.e[i]);
    }
    if (t.is_zero()) continue;
    r = r + t;
  }
  return r;
}

DenseMatrix graded_mult_matrix(const HomPoly& f, long long from_degree) {
  check_internal(from_degree >= 0, "graded_mult_matrix wants from_degree >= 0");
  const long long to_degree = from_degree + f.degree();
  auto src = monomials_of_degree(f.nvars(), from_degree);
  DenseMatrix m(f.ctx(), static_cast<std::size_t>(graded_dim(f.nvars(), to_degree)), src.size());
  for (std::size_t col = 0; col < src.size(); ++col)
    for (const auto& [mf, c] : f.terms()) {
      Exp t{{mf.e[0] + src[col].e[0], mf.e[1] + src[col].e[1], mf.e[2] + src[col].e[2]}};
      std::size_t row = monomial_index(f.nvars(), to_degree, t);
      m.at(row, col) = m.at(row, col) + c;
    }
  return m;
}

StackedMult stacked_mult_matrix(std::span<const HomPoly> gens, long long target_degree) {
  check_internal(!gens.empty(), "stacked_mult_matrix wants generators");
  const FieldCtx& ctx = gens[0].ctx();
  const int nvars = gens[0].nvars();
  std::vector<std::size_t> offset{0};
  std::size_t total = 0;
  for (const auto& g : gens) {
    long long sd = target_degree - g.degree();
    total += static_cast<std::size_t>(graded_dim(nvars, sd));
    offset.push_back(total);
  }
  DenseMatrix m(ctx, static_cast<std::size_t>(graded_dim(nvars, target_degree)), total);
  for (std::size_t k = 0; k < gens.size(); ++k) {
    long long sd = target_degree - gens[k].degree();
    if (sd < 0 || gens[k].is_zero()) continue;  // absent or zero block
    DenseMatrix block = graded_mult_matrix(gens[k], sd);
    for (std::size_t i = 0; i < block.rows(); ++i)
      for (std::size_t j = 0; j < block.cols(); ++j) m.at(i, offset[k] + j) = block.at(i, j);
  }
  return {std::move(m), std::move(offset)};
}

namespace {

// Univariate dense helpers for the binary-form gcd.
using UPoly = std::vector<Scalar>;  // coefficient of s^i at index i

UPoly trim(UPoly p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
  return p;
}

UPoly urem(UPoly a, const UPoly& b) {
  while (a.size() >= b.size() && !a.empty()) {
    Scalar f = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = a[shift + i] - f * b[i];
    a = trim(std::move(a));
  }
  return a;
}

UPoly ugcd(UPoly a, UPoly b) {
  while (!b.empty()) {
    UPoly r = urem(std::move(a), b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Split p = s^es * t^et * core with core divisible by neither variable, and
// return the dehomogenization core(s, 1).
struct BinarySplit {
  int es = 0, et = 0;
  UPoly core;
};

BinarySplit split_binary(const HomPoly& p) {
  BinarySplit out;
  int es = p.degree(), et = p.degree();
  for (const auto& [m, c] : p.terms()) {
    es = std::min(es, m.e[0]);
    et = std::min(et, m.e[1]);
  }
  out.es = es;
  out.et = et;
  long long core_deg = p.degree() - es - et;
  out.core.assign(static_cast<std::size_t>(core_deg + 1), Scalar::zero(p.ctx()));
  for (const auto& [m, c] : p.terms()) out.core[static_cast<std::size_t>(m.e[0] - es)] = c;
  return out;
}

}  // namespace

HomPoly gcd_binary(const HomPoly& p, const HomPoly& q) {
  check_internal(p.nvars() == 2 && q.nvars() == 2, "gcd_binary wants binary forms");
  check_internal(p.ctx() == q.ctx(), "gcd ctx mismatch");
  if (p.is_zero() && q.is_zero()) fail(Errc::precondition, "gcd of two zero polynomials is undefined");
  const FieldCtx& ctx = p.ctx();
  auto monic = [&](const HomPoly& h) {
    // leading coefficient in s
    Scalar lead = h.terms().begin()->second;
    return h.scaled(lead.inverse());
  };
  if (p.is_zero()) return monic(q);
  if (q.is_zero()) return monic(p);

  BinarySplit sp = split_binary(p), sq = split_binary(q);
  UPoly g = ugcd(sp.core, sq.core);
  check_internal(!g.empty(), "nonzero forms with empty gcd");
  long long gd = static_cast<long long>(g.size()) - 1;
  int es = std::min(sp.es, sq.es), et = std::min(sp.et, sq.et);
  HomPoly out = HomPoly::zero(ctx, 2, gd + es + et);
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g[i].is_zero()) continue;
    Exp m{{static_cast<int>(i) + es, static_cast<int>(gd - i) + et, 0}};
    out = out + HomPoly::monomial(ctx, 2, m, g[i]);
  }
  return monic(out);
}

// ---------------------------------------------------------------------------
// Expression parser.
//
//   expr   := ['-'] term (('+' | '-') term)*
//   term   := factor ('*' factor)*
//   factor := atom ('^' NAT)?
//   atom   := INT | VAR | '(' expr ')'
//
// Parsed on an unrestricted sparse polynomial; homogeneity is checked last so
// the error can name the two offending degrees.
// ---------------------------------------------------------------------------
namespace {

struct Token {
  enum Kind { Int, Var, Plus, Minus, Star, Caret, LParen, RParen, End } kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> tokenize(const std::string& text, int nvars) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      out.push_back({Token::Int, text.substr(i, j - i), i});
      i = j;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::string allowed = nvars == 2 ? "st" : "xyz";
      if (allowed.find(c) == std::string::npos)
        fail(Errc::unknown_variable, "unknown variable '" + std::string(1, c) + "' at position " +
                                         std::to_string(i) + " (expected one of " + allowed + ")");
      out.push_back({Token::Var, std::string(1, c), i});
      ++i;
      continue;
    }
    Token::Kind k;
    switch (c) {
      case '+': k = Token::Plus; break;
      case '-': k = Token::Minus; break;
      case '*': k = Token::Star; break;
      case '^': k = Token::Caret; break;
      case '(': k = Token::LParen; break;
      case ')': k = Token::RParen; break;
      default:
        fail(Errc::parse_error,
             "unexpected character '" + std::string(1, c) + "' at position " + std::to_string(i));
    }
    out.push_back({k, std::string(1, c), i});
    ++i;
  }
  out.push_back({Token::End, "", text.size()});
  return out;
}

using Raw = std::map<Exp, Scalar, ExpLexDesc>;

void raw_insert(Raw& r, const Exp& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = r.find(m);
  if (it == r.end()) {
    r.emplace(m, c);
  } else {
    Scalar s = it->second + c;
    if (s.is_zero())
      r.erase(it);
    else
      it->second = s;
  }
}

Raw raw_add(const Raw& a, const Raw& b) {
  Raw r = a;
  for (const auto& [m, c] : b) raw_insert(r, m, c);
  return r;
}

Raw raw_neg(const Raw& a) {
  Raw r;
  for (const auto& [m, c] : a) r.emplace(m, -c);
  return r;
}

Raw raw_mul(const Raw& a, const Raw& b) {
  Raw r;
  for (const auto& [m1, c1] : a)
    for (const auto& [m2, c2] : b)
      raw_insert(r, Exp{{m1.e[0] + m2.e[0], m1.e[1] + m2.e[1], m1.e[2] + m2.e[2]}}, c1 * c2);
  return r;
}

class Parser {
public:
  Parser(std::vector<Token> toks, int nvars, const FieldCtx& ctx)
      : toks_(std::move(toks)), nvars_(nvars), ctx_(ctx) {}

  Raw parse_expr() {
    bool neg = false;
    if (peek().kind == Token::Minus) {
      ++i_;
      neg = true;
    }
    Raw acc = parse_term();
    if (neg) acc = raw_neg(acc);
    while (peek().kind == Token::Plus || peek().kind == Token::Minus) {
      bool minus = peek().kind == Token::Minus;
      ++i_;
      Raw t = parse_term();
      acc = raw_add(acc, minus ? raw_neg(t) : t);
    }
    return acc;
  }

  void expect_end() {
    if (peek().kind != Token::End)
      fail(Errc::parse_error, "unexpected token '" + peek().text + "' at position " +
                                  std::to_string(peek().pos));
  }

private:
  const Token& peek() const { return toks_[i_]; }

  Raw parse_term() {
    Raw acc = parse_factor();
    while (peek().kind == Token::Star) {
      ++i_;
      acc = raw_mul(acc, parse_factor());
    }
    return acc;
  }

  Raw parse_factor() {
    Raw base = parse_atom();
    if (peek().kind == Token::Caret) {
      ++i_;
      if (peek().kind != Token::Int)
        fail(Errc::parse_error,
             "expected exponent at position " + std::to_string(peek().pos));
      long long e = std::stoll(peek().text);
      ++i_;
      Raw acc;
      raw_insert(acc, Exp{}, Scalar::one(ctx_));
      for (long long k = 0; k < e; ++k) acc = raw_mul(acc, base);
      return acc;
    }
    return base;
  }

  Raw parse_atom() {
    const Token& t = peek();
    if (t.kind == Token::Int) {
      ++i_;
      Raw r;
      raw_insert(r, Exp{}, Scalar::from_decimal(ctx_, t.text));
      return r;
    }
    if (t.kind == Token::Var) {
      ++i_;
      static const std::string v3 = "xyz", v2 = "st";
      const std::string& names = nvars_ == 2 ? v2 : v3;
      Exp m;
      m.e[names.find(t.text[0])] = 1;
      Raw r;
      r.emplace(m, Scalar::one(ctx_));
      return r;
    }
    if (t.kind == Token::LParen) {
      ++i_;
      Raw r = parse_expr();
      if (peek().kind != Token::RParen)
        fail(Errc::parse_error, "expected ')' at position " + std::to_string(peek().pos));
      ++i_;
      return r;
    }
    fail(Errc::parse_error,
         "expected integer, variable or '(' at position " + std::to_string(t.pos));
  }

  std::vector<Token> toks_;
  std::size_t i_ = 0;
  int nvars_;
  FieldCtx ctx_;
};

}  // namespace

HomPoly parse_poly(const std::string& text, int nvars, const FieldCtx& ctx) {
  check_internal(nvars == 2 || nvars == 3, "parse_poly wants 2 or 3 variables");
  Parser p(tokenize(text, nvars), nvars, ctx);
  Raw raw = p.parse_expr();
  p.expect_end();
  if (raw.empty()) return HomPoly::zero(ctx, nvars, 0);
  long long deg = raw.begin()->first.total();
  for (const auto& [m, c] : raw)
    if (m.total() != deg)
      fail(Errc::inhomogeneous, "inhomogeneous polynomial: monomials of degrees " +
                                    std::to_string(deg) + " and " + std::to_string(m.total()));
  HomPoly out = HomPoly::zero(ctx, nvars, deg);
  for (const auto& [m, c] : raw) out = out + HomPoly::monomial(ctx, nvars, m, c);
  return out;
}

}  // namespace pb
