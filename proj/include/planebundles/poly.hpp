#pragma once

#include <array>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "planebundles/matrix.hpp"

namespace pb {

/// Exponent tuple; unused trailing slots stay zero (2-variable polynomials in
/// s, t use slots 0 and 1).
struct Exp {
  std::array<int, 3> e{0, 0, 0};
  long long total() const { return e[0] + e[1] + e[2]; }
  bool operator==(const Exp&) const = default;
};

/// Lexicographic order with x > y > z (s > t), largest monomial first. Fixed
/// globally; every matrix of a graded map uses this basis order.
struct ExpLexDesc {
  bool operator()(const Exp& a, const Exp& b) const {
    if (a.e[0] != b.e[0]) return a.e[0] > b.e[0];
    if (a.e[1] != b.e[1]) return a.e[1] > b.e[1];
    return a.e[2] > b.e[2];
  }
};

std::vector<Exp> monomials_of_degree(int nvars, long long d);
long long graded_dim(int nvars, long long d);  // 0 for d < 0
std::size_t monomial_index(int nvars, long long d, const Exp& m);

/// Homogeneous polynomial in 2 (s,t) or 3 (x,y,z) variables. The zero
/// polynomial keeps an explicit degree tag so graded maps stay well-typed.
class HomPoly {
public:
  HomPoly() = default;

  static HomPoly zero(const FieldCtx& ctx, int nvars, long long degree);
  static HomPoly constant(const FieldCtx& ctx, int nvars, const Scalar& c);
  static HomPoly monomial(const FieldCtx& ctx, int nvars, const Exp& m, const Scalar& c);
  static HomPoly variable(const FieldCtx& ctx, int nvars, int which);
  static HomPoly var_power(const FieldCtx& ctx, int nvars, int which, long long k);

  const FieldCtx& ctx() const { return ctx_; }
  int nvars() const { return nvars_; }
  long long degree() const { return degree_; }
  bool is_zero() const { return c_.empty(); }
  const std::map<Exp, Scalar, ExpLexDesc>& terms() const { return c_; }
  Scalar coeff(const Exp& m) const;

  HomPoly operator+(const HomPoly& o) const;
  HomPoly operator-(const HomPoly& o) const;
  HomPoly operator*(const HomPoly& o) const;
  HomPoly operator-() const;
  HomPoly scaled(const Scalar& c) const;
  HomPoly pow(long long k) const;
  bool operator==(const HomPoly& o) const;

  Scalar eval(std::span<const Scalar> point) const;

  /// Coefficient vector in the monomial basis of this degree.
  std::vector<Scalar> coeff_vector() const;
  static HomPoly from_coeff_vector(const FieldCtx& ctx, int nvars, long long degree,
                                   std::span<const Scalar> v);

  std::string str() const;

private:
  void insert(const Exp& m, const Scalar& c);

  FieldCtx ctx_;
  int nvars_ = 3;
  long long degree_ = 0;
  std::map<Exp, Scalar, ExpLexDesc> c_;
};

/// p composed with the linear substitution var_i -> sum_j g(i,j) var_j.
HomPoly substitute_linear(const HomPoly& p, const DenseMatrix& g);

/// Pull back along a line parametrization: var_i -> param(i,0) s + param(i,1) t.
/// param must be a rank-2 3x2 matrix.
HomPoly restrict_to_line(const HomPoly& p, const DenseMatrix& param);

/// Matrix of multiplication by f from the degree-from_degree graded piece to
/// degree from_degree + deg f (rows = target monomials, cols = source).
DenseMatrix graded_mult_matrix(const HomPoly& f, long long from_degree);

/// Stacked multiplication matrix of several generators into degree D:
/// columns are grouped per generator (degree D - deg g_i pieces, skipped when
/// negative). Returns the matrix plus the per-generator column offsets.
struct StackedMult {
  DenseMatrix m;
  std::vector<std::size_t> col_offset;  // size gens+1
};
StackedMult stacked_mult_matrix(std::span<const HomPoly> gens, long long target_degree);

/// GCD of two binary forms, monic in s where possible.
HomPoly gcd_binary(const HomPoly& p, const HomPoly& q);

/// Parse per the expression grammar (integers, + - * ^, parentheses;
/// juxtaposition is not multiplication). Rejects inhomogeneous input.
HomPoly parse_poly(const std::string& text, int nvars, const FieldCtx& ctx);

}  // namespace pb
