#pragma once

#include <array>
#include <string>
#include <vector>

#include "planebundles/matrix.hpp"
#include "planebundles/poly.hpp"

namespace pb {

/// Point of the projective plane, canonically normalized: the first nonzero
/// coordinate is 1, so equality of points is structural equality.
struct PointP2 {
  std::array<Scalar, 3> c;

  bool operator==(const PointP2& o) const { return c == o.c; }
  int cmp(const PointP2& o) const;
  std::string str() const;  // "1:0:0"
};

/// Line of the projective plane (coefficients of the linear form), normalized
/// the same way as points.
struct LineP2 {
  std::array<Scalar, 3> c;

  bool operator==(const LineP2& o) const { return c == o.c; }
  int cmp(const LineP2& o) const;
  std::string str() const;  // "[0,0,1]"
};

PointP2 make_point(std::array<Scalar, 3> coords);
LineP2 make_line(std::array<Scalar, 3> coeffs);
PointP2 parse_point(const std::string& text, const FieldCtx& ctx);
LineP2 parse_line(const std::string& text, const FieldCtx& ctx);

LineP2 dual_line(const PointP2& p);
PointP2 dual_point(const LineP2& l);

bool incident(const PointP2& p, const LineP2& l);

/// The unique line through two distinct points (cross product).
LineP2 line_through(const PointP2& p, const PointP2& q);

/// The intersection point of two distinct lines.
PointP2 line_intersection(const LineP2& l, const LineP2& m);

/// Canonical 3x2 parametrization of a line: columns are the first two
/// distinct points found in the deterministic candidate order e_i, then
/// c_j e_i - c_i e_j for the first following nonzero coefficient c_j.
DenseMatrix parametrize(const LineP2& l);

/// The linear form of l as a polynomial (used for evaluation).
HomPoly line_form(const LineP2& l);

/// Lines through p. Over F_q: all q+1 of them. Over Q: the first `count` of a
/// deterministic infinite stream ((1:0), (0:1), then slopes in spiral order).
std::vector<LineP2> pencil_through(const PointP2& p, const FieldCtx& ctx,
                                   std::size_t count = 0);

/// All q^2+q+1 lines of the plane over a prime field, in canonical order.
std::vector<LineP2> enumerate_lines(const FieldCtx& ctx);

LineP2 random_line(const FieldCtx& ctx, Rng& rng);
PointP2 random_point(const FieldCtx& ctx, Rng& rng);

}  // namespace pb
