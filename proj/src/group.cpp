#include "planebundles/group.hpp"

#include <algorithm>

namespace pb {

SubgroupTag SubgroupTag::B(PointP2 p, LineP2 l) {
  if (!incident(p, l)) fail(Errc::precondition, "Borel flag wants the point on the line");
  return {Kind::borel, std::move(p), std::move(l)};
}

std::string SubgroupTag::name() const {
  switch (kind) {
    case Kind::full: return "PGL3";
    case Kind::point_stab: return "Gp";
    case Kind::line_stab: return "GL";
    case Kind::borel: return "B";
    default: return "T";
  }
}

namespace {

PointP2 std_point(const FieldCtx& ctx) {
  return PointP2{{Scalar::one(ctx), Scalar::zero(ctx), Scalar::zero(ctx)}};
}

LineP2 std_line(const FieldCtx& ctx) {
  return LineP2{{Scalar::zero(ctx), Scalar::zero(ctx), Scalar::one(ctx)}};
}

PointP2 basis_point(const FieldCtx& ctx, int i) {
  std::array<Scalar, 3> c{Scalar::zero(ctx), Scalar::zero(ctx), Scalar::zero(ctx)};
  c[i] = Scalar::one(ctx);
  return PointP2{c};
}

DenseMatrix columns(const FieldCtx& ctx, const std::array<PointP2, 3>& pts) {
  DenseMatrix m(ctx, 3, 3);
  for (int j = 0; j < 3; ++j)
    for (int i = 0; i < 3; ++i) m.at(i, j) = pts[j].c[i];
  return m;
}

/// Change of basis carrying the standard objects to the tag's objects:
/// column 0 goes to the tag point, columns 0,1 span the tag line.
DenseMatrix frame_for(const SubgroupTag& tag, const FieldCtx& ctx) {
  switch (tag.kind) {
    case SubgroupTag::Kind::full:
    case SubgroupTag::Kind::torus:
      return DenseMatrix::identity(ctx, 3);
    case SubgroupTag::Kind::point_stab: {
      const PointP2& p = *tag.p;
      for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
          DenseMatrix u = columns(ctx, {p, basis_point(ctx, i), basis_point(ctx, j)});
          if (!det3(u).is_zero()) return u;
        }
      fail(Errc::internal, "point frame completion failed");
    }
    case SubgroupTag::Kind::line_stab: {
      const LineP2& l = *tag.L;
      DenseMatrix par = parametrize(l);
      PointP2 q1 = make_point({par.at(0, 0), par.at(1, 0), par.at(2, 0)});
      PointP2 q2 = make_point({par.at(0, 1), par.at(1, 1), par.at(2, 1)});
      for (int i = 0; i < 3; ++i) {
        PointP2 off = basis_point(ctx, i);
        if (!incident(off, l)) return columns(ctx, {q1, q2, off});
      }
      fail(Errc::internal, "line frame completion failed");
    }
    case SubgroupTag::Kind::borel: {
      const PointP2& p = *tag.p;
      const LineP2& l = *tag.L;
      DenseMatrix par = parametrize(l);
      PointP2 q1 = make_point({par.at(0, 0), par.at(1, 0), par.at(2, 0)});
      PointP2 q2 = make_point({par.at(0, 1), par.at(1, 1), par.at(2, 1)});
      PointP2 second = (q1 == p) ? q2 : q1;
      for (int i = 0; i < 3; ++i) {
        PointP2 off = basis_point(ctx, i);
        if (!incident(off, l)) return columns(ctx, {p, second, off});
      }
      fail(Errc::internal, "flag frame completion failed");
    }
  }
  fail(Errc::internal, "unreachable subgroup kind");
}

bool is_standard_frame(const SubgroupTag& tag, const FieldCtx& ctx) {
  switch (tag.kind) {
    case SubgroupTag::Kind::point_stab: return *tag.p == std_point(ctx);
    case SubgroupTag::Kind::line_stab: return *tag.L == std_line(ctx);
    case SubgroupTag::Kind::borel: return *tag.p == std_point(ctx) && *tag.L == std_line(ctx);
    default: return true;
  }
}

DenseMatrix conjugate_from_std(const SubgroupTag& tag, const FieldCtx& ctx, const DenseMatrix& g) {
  if (is_standard_frame(tag, ctx)) return g;
  DenseMatrix u = frame_for(tag, ctx);
  return u * g * inverse3(u);
}

DenseMatrix conjugate_to_std(const SubgroupTag& tag, const FieldCtx& ctx, const DenseMatrix& g) {
  if (is_standard_frame(tag, ctx)) return g;
  DenseMatrix u = frame_for(tag, ctx);
  return inverse3(u) * g * u;
}

}  // namespace

bool in_subgroup(const SubgroupTag& tag, const DenseMatrix& m) {
  if (det3(m).is_zero()) return false;
  const FieldCtx& ctx = m.ctx();
  DenseMatrix g = conjugate_to_std(tag, ctx, m);
  auto z = [&](int i, int j) { return g.at(i, j).is_zero(); };
  switch (tag.kind) {
    case SubgroupTag::Kind::full: return true;
    case SubgroupTag::Kind::point_stab: return z(1, 0) && z(2, 0);
    case SubgroupTag::Kind::line_stab: return z(2, 0) && z(2, 1);
    case SubgroupTag::Kind::borel: return z(1, 0) && z(2, 0) && z(2, 1);
    case SubgroupTag::Kind::torus: return z(0, 1) && z(0, 2) && z(1, 0) && z(1, 2) && z(2, 0) && z(2, 1);
  }
  return false;
}

GroupElement parse_group_element(const std::string& literal, const FieldCtx& ctx) {
  std::vector<long long> vals;
  std::string cur;
  auto flush = [&]() {
    std::string t;
    for (char ch : cur)
      if (!isspace(static_cast<unsigned char>(ch))) t += ch;
    try {
      std::size_t used = 0;
      vals.push_back(std::stoll(t, &used));
      if (used != t.size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      fail(Errc::parse_error, "bad entry '" + cur + "' in group element literal");
    }
    cur.clear();
  };
  for (char ch : literal) {
    if (ch == ',')
      flush();
    else
      cur += ch;
  }
  flush();
  if (vals.size() != 9)
    fail(Errc::parse_error, "group element literal wants nine comma-separated integers");
  DenseMatrix m(ctx, 3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m.at(i, j) = Scalar::from_int(ctx, vals[i * 3 + j]);
  if (det3(m).is_zero()) fail(Errc::precondition, "group element literal is not invertible");
  return GroupElement{std::move(m), SubgroupTag::full()};
}

GroupElement sample(const SubgroupTag& tag, const FieldCtx& ctx, Rng& rng) {
  if ((tag.kind == SubgroupTag::Kind::point_stab || tag.kind == SubgroupTag::Kind::borel) && !tag.p)
    fail(Errc::precondition, "subgroup tag wants a point");
  if ((tag.kind == SubgroupTag::Kind::line_stab || tag.kind == SubgroupTag::Kind::borel) && !tag.L)
    fail(Errc::precondition, "subgroup tag wants a line");
  auto rnd = [&]() { return Scalar::random(ctx, rng); };
  for (int attempt = 0; attempt < 1000; ++attempt) {
    DenseMatrix g = DenseMatrix::identity(ctx, 3);
    switch (tag.kind) {
      case SubgroupTag::Kind::full:
        for (int i = 0; i < 3; ++i)
          for (int j = 0; j < 3; ++j) g.at(i, j) = rnd();
        break;
      case SubgroupTag::Kind::point_stab:
        g.at(0, 1) = rnd();
        g.at(0, 2) = rnd();
        g.at(1, 1) = rnd();
        g.at(1, 2) = rnd();
        g.at(2, 1) = rnd();
        g.at(2, 2) = rnd();
        break;
      case SubgroupTag::Kind::line_stab:
        g.at(0, 0) = rnd();
        g.at(0, 1) = rnd();
        g.at(0, 2) = rnd();
        g.at(1, 0) = rnd();
        g.at(1, 1) = rnd();
        g.at(1, 2) = rnd();
        break;
      case SubgroupTag::Kind::borel:
        g.at(0, 0) = rnd();
        g.at(0, 1) = rnd();
        g.at(0, 2) = rnd();
        g.at(1, 1) = rnd();
        g.at(1, 2) = rnd();
        g.at(2, 2) = rnd();
        break;
      case SubgroupTag::Kind::torus:
        g.at(0, 0) = rnd();
        g.at(1, 1) = rnd();
        g.at(2, 2) = rnd();
        break;
    }
    if (det3(g).is_zero()) continue;
    return GroupElement{conjugate_from_std(tag, ctx, g), tag};
  }
  fail(Errc::internal, "subgroup sampling failed to find an invertible element");
}

PointP2 apply_to_point(const DenseMatrix& m, const PointP2& p) {
  std::vector<Scalar> v(p.c.begin(), p.c.end());
  auto w = m.apply(v);
  return make_point({w[0], w[1], w[2]});
}

LineP2 apply_to_line(const DenseMatrix& m, const LineP2& l) {
  DenseMatrix inv = inverse3(m);
  std::array<Scalar, 3> out;
  for (int j = 0; j < 3; ++j) {
    out[j] = Scalar::zero(m.ctx());
    for (int i = 0; i < 3; ++i) out[j] = out[j] + l.c[i] * inv.at(i, j);
  }
  return make_line(out);
}

namespace {

// Orbit matrices of the transitivity classes, in the standard frame: each maps
// the class's base object to the given object, inside the subgroup.
DenseMatrix orbit_point_stab_point(const FieldCtx& ctx, const PointP2& t) {
  // base (0:1:0); valid for every point other than (1:0:0)
  DenseMatrix g = DenseMatrix::identity(ctx, 3);
  g.at(0, 1) = t.c[0];
  g.at(1, 1) = t.c[1];
  g.at(2, 1) = t.c[2];
  if (!t.c[2].is_zero()) {
    g.at(1, 2) = Scalar::one(ctx);
    g.at(2, 2) = Scalar::zero(ctx);
  }
  check_internal(!det3(g).is_zero(), "orbit matrix degenerate");
  return g;
}

DenseMatrix orbit_point_stab_line(const FieldCtx& ctx, const LineP2& l, bool through) {
  DenseMatrix g = DenseMatrix::identity(ctx, 3);
  if (through) {
    // base {z=0}: solve l . g proportional to (0,0,1)
    g.at(1, 1) = l.c[2];
    g.at(2, 1) = -l.c[1];
    if (!l.c[1].is_zero()) {
      g.at(1, 2) = Scalar::one(ctx);
      g.at(2, 2) = Scalar::zero(ctx);
    }
  } else {
    // base {x=0}: a shear in the fixed-point directions
    g.at(0, 1) = -(l.c[1] / l.c[0]);
    g.at(0, 2) = -(l.c[2] / l.c[0]);
  }
  check_internal(!det3(g).is_zero(), "orbit matrix degenerate");
  return g;
}

DenseMatrix orbit_line_stab_point(const FieldCtx& ctx, const PointP2& t, bool off_line) {
  DenseMatrix g = DenseMatrix::identity(ctx, 3);
  if (off_line) {
    // base (0:0:1) -> any (a:b:c) with c != 0
    g.at(0, 2) = t.c[0];
    g.at(1, 2) = t.c[1];
    g.at(2, 2) = t.c[2];
  } else {
    // base (1:0:0) -> any (a:c:0)
    g.at(0, 0) = t.c[0];
    g.at(1, 0) = t.c[1];
    if (t.c[0].is_zero()) g.at(0, 1) = Scalar::one(ctx);
  }
  check_internal(!det3(g).is_zero(), "orbit matrix degenerate");
  return g;
}

DenseMatrix orbit_borel(const FieldCtx& ctx, const PlaneObject& obj) {
  DenseMatrix g = DenseMatrix::identity(ctx, 3);
  if (std::holds_alternative<PointP2>(obj)) {
    // base (0:1:0) -> (u:1:0) on the flag line
    const PointP2& t = std::get<PointP2>(obj);
    g.at(0, 1) = t.c[0] / t.c[1];
  } else {
    const LineP2& l = std::get<LineP2>(obj);
    if (!l.c[0].is_zero()) {
      // base {x=0} -> any line missing the flag point
      g.at(0, 1) = -(l.c[1] / l.c[0]);
      g.at(0, 2) = -(l.c[2] / l.c[0]);
    } else {
      // base {y=0} -> any other line through the flag point
      g.at(1, 2) = -(l.c[2] / l.c[1]);
    }
  }
  return g;
}

}  // namespace

GroupElement transitive_witness(const SubgroupTag& tag, const PlaneObject& source,
                                const PlaneObject& target) {
  if (source.index() != target.index())
    fail(Errc::no_witness, "source and target are different kinds of object");
  const FieldCtx& ctx = std::holds_alternative<PointP2>(source)
                            ? std::get<PointP2>(source).c[0].ctx()
                            : std::get<LineP2>(source).c[0].ctx();

  auto to_std = [&](const PlaneObject& o) -> PlaneObject {
    if (is_standard_frame(tag, ctx)) return o;
    DenseMatrix uinv = inverse3(frame_for(tag, ctx));
    if (std::holds_alternative<PointP2>(o)) return apply_to_point(uinv, std::get<PointP2>(o));
    return apply_to_line(uinv, std::get<LineP2>(o));
  };
  PlaneObject s = to_std(source), t = to_std(target);

  auto orbit = [&](const PlaneObject& o) -> DenseMatrix {
    switch (tag.kind) {
      case SubgroupTag::Kind::point_stab: {
        if (std::holds_alternative<PointP2>(o)) {
          const PointP2& p = std::get<PointP2>(o);
          if (p == std_point(ctx))
            fail(Errc::no_witness, "the stabilized point is fixed, not in a moving orbit");
          return orbit_point_stab_point(ctx, p);
        }
        const LineP2& l = std::get<LineP2>(o);
        return orbit_point_stab_line(ctx, l, incident(std_point(ctx), l));
      }
      case SubgroupTag::Kind::line_stab: {
        if (std::holds_alternative<PointP2>(o)) {
          const PointP2& p = std::get<PointP2>(o);
          return orbit_line_stab_point(ctx, p, !incident(p, std_line(ctx)));
        }
        const LineP2& l = std::get<LineP2>(o);
        if (l == std_line(ctx))
          fail(Errc::no_witness, "the stabilized line is fixed, not in a moving orbit");
        fail(Errc::no_witness, "line orbits of the line stabilizer are not transitive classes");
      }
      case SubgroupTag::Kind::borel: {
        if (std::holds_alternative<PointP2>(o)) {
          const PointP2& p = std::get<PointP2>(o);
          if (p == std_point(ctx)) fail(Errc::no_witness, "the flag point is fixed");
          if (!incident(p, std_line(ctx)))
            fail(Errc::no_witness, "points off the flag line are not a single orbit");
          return orbit_borel(ctx, p);
        }
        const LineP2& l = std::get<LineP2>(o);
        if (l == std_line(ctx)) fail(Errc::no_witness, "the flag line is fixed");
        return orbit_borel(ctx, l);
      }
      case SubgroupTag::Kind::full: {
        if (std::holds_alternative<PointP2>(o)) {
          const PointP2& p = std::get<PointP2>(o);
          // columns: the point plus a deterministic completion
          for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j) {
              DenseMatrix u = columns(ctx, {p, basis_point(ctx, i), basis_point(ctx, j)});
              if (!det3(u).is_zero()) return u;
            }
          fail(Errc::internal, "orbit completion failed");
        }
        const LineP2& l = std::get<LineP2>(o);
        DenseMatrix par = parametrize(l);
        PointP2 q1 = make_point({par.at(0, 0), par.at(1, 0), par.at(2, 0)});
        PointP2 q2 = make_point({par.at(0, 1), par.at(1, 1), par.at(2, 1)});
        for (int i = 0; i < 3; ++i) {
          PointP2 off = basis_point(ctx, i);
          if (!incident(off, l)) return columns(ctx, {off, q1, q2});
        }
        fail(Errc::internal, "orbit completion failed");
      }
      case SubgroupTag::Kind::torus:
        fail(Errc::no_witness, "the torus has no transitive orbit classes here");
    }
    fail(Errc::internal, "unreachable tag kind");
  };

  // class membership must agree before composing base->source and base->target
  auto class_id = [&](const PlaneObject& o) -> int {
    if (std::holds_alternative<PointP2>(o)) {
      const PointP2& p = std::get<PointP2>(o);
      switch (tag.kind) {
        case SubgroupTag::Kind::point_stab: return p == std_point(ctx) ? -1 : 0;
        case SubgroupTag::Kind::line_stab: return incident(p, std_line(ctx)) ? 1 : 2;
        case SubgroupTag::Kind::borel:
          return (p == std_point(ctx)) ? -1 : (incident(p, std_line(ctx)) ? 3 : -1);
        default: return 4;
      }
    }
    const LineP2& l = std::get<LineP2>(o);
    switch (tag.kind) {
      case SubgroupTag::Kind::point_stab: return incident(std_point(ctx), l) ? 5 : 6;
      case SubgroupTag::Kind::borel:
        if (l == std_line(ctx)) return -1;
        return incident(std_point(ctx), l) ? 7 : 8;
      default: return 9;
    }
  };
  if (class_id(s) != class_id(t) || class_id(s) < 0)
    fail(Errc::no_witness,
         "objects are not in a common transitivity class for " + tag.name());

  DenseMatrix w_std = orbit(t) * inverse3(orbit(s));
  GroupElement out{conjugate_from_std(tag, ctx, w_std), tag};
  check_internal(in_subgroup(tag, out.m), "transitive witness left its subgroup");
  return out;
}

GroupElement transitive_witness_pair(const SubgroupTag& tag, const std::pair<PointP2, PointP2>& src,
                                     const std::pair<PointP2, PointP2>& dst) {
  if (tag.kind != SubgroupTag::Kind::line_stab)
    fail(Errc::no_witness, "pair transitivity is a line-stabilizer property");
  const FieldCtx& ctx = src.first.c[0].ctx();

  auto orbit = [&](const std::pair<PointP2, PointP2>& pr) -> DenseMatrix {
    DenseMatrix uinv = inverse3(frame_for(tag, ctx));
    PointP2 a = is_standard_frame(tag, ctx) ? pr.first : apply_to_point(uinv, pr.first);
    PointP2 b = is_standard_frame(tag, ctx) ? pr.second : apply_to_point(uinv, pr.second);
    if (a == b) fail(Errc::no_witness, "pair must consist of distinct points");
    if (incident(a, std_line(ctx)) || incident(b, std_line(ctx)))
      fail(Errc::no_witness, "pair points must avoid the stabilized line");
    // normalize to the affine chart and map ((1:0:1),(0:1:1)) onto the pair
    DenseMatrix g = DenseMatrix::identity(ctx, 3);
    g.at(0, 0) = a.c[0] / a.c[2];
    g.at(1, 0) = a.c[1] / a.c[2];
    g.at(0, 1) = b.c[0] / b.c[2];
    g.at(1, 1) = b.c[1] / b.c[2];
    if (det3(g).is_zero()) fail(Errc::no_witness, "pair lies on a line through the chart origin");
    return g;
  };
  DenseMatrix w_std = orbit(dst) * inverse3(orbit(src));
  GroupElement out{conjugate_from_std(tag, ctx, w_std), tag};
  check_internal(in_subgroup(tag, out.m), "pair witness left its subgroup");
  return out;
}

Presentation pullback(const Presentation& p, const GroupElement& g) {
  if (det3(g.m).is_zero()) fail(Errc::precondition, "pullback wants an invertible element");
  std::array<HomPoly, 3> entries;
  for (int i = 0; i < 3; ++i) entries[i] = substitute_linear(p.entries[i], g.m);
  return make_presentation(p.ctx, p.d0, p.d, std::move(entries));
}

// ---------------------------------------------------------------------------
// Graded isomorphism solver.
// ---------------------------------------------------------------------------
namespace {

struct IsoSystem {
  // unknown layout: per present (i,j) block, the coefficients of N[i][j];
  // the final unknown is lambda
  std::array<std::array<long long, 3>, 3> deg;       // d2[j] - d1[i]
  std::array<std::array<std::size_t, 3>, 3> offset;  // block start, or npos
  std::size_t unknowns = 0;
  std::vector<std::vector<Scalar>> basis;            // kernel of the linear system
};

constexpr std::size_t npos = static_cast<std::size_t>(-1);

IsoSystem build_system(const Presentation& p1, const Presentation& p2) {
  IsoSystem sys;
  const FieldCtx& ctx = p1.ctx;
  std::size_t u = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      sys.deg[i][j] = p2.d[j] - p1.d[i];
      if (sys.deg[i][j] >= 0) {
        sys.offset[i][j] = u;
        u += static_cast<std::size_t>(graded_dim(3, sys.deg[i][j]));
      } else {
        sys.offset[i][j] = npos;
      }
    }
  sys.unknowns = u + 1;  // + lambda

  std::size_t rows = 0;
  std::array<std::size_t, 3> row_off;
  for (int i = 0; i < 3; ++i) {
    row_off[i] = rows;
    rows += static_cast<std::size_t>(graded_dim(3, p1.d0 - p1.d[i]));
  }

  DenseMatrix m(ctx, rows, sys.unknowns);
  for (int i = 0; i < 3; ++i) {
    long long target_deg = p1.d0 - p1.d[i];
    for (int j = 0; j < 3; ++j) {
      if (sys.offset[i][j] == npos) continue;
      DenseMatrix block = graded_mult_matrix(p2.entries[j], sys.deg[i][j]);
      check_internal(block.rows() == static_cast<std::size_t>(graded_dim(3, target_deg)),
                     "iso system block height");
      for (std::size_t r = 0; r < block.rows(); ++r)
        for (std::size_t c = 0; c < block.cols(); ++c)
          m.at(row_off[i] + r, sys.offset[i][j] + c) = block.at(r, c);
    }
    auto f1 = p1.entries[i].coeff_vector();
    for (std::size_t r = 0; r < f1.size(); ++r) m.at(row_off[i] + r, u) = -f1[r];
  }
  sys.basis = kernel_basis(m);
  return sys;
}

Scalar eval_parameter(const IsoSystem& sys, std::span<const Scalar> coeffs, std::size_t idx,
                      const FieldCtx& ctx) {
  Scalar v = Scalar::zero(ctx);
  for (std::size_t k = 0; k < coeffs.size(); ++k)
    if (!coeffs[k].is_zero()) v = v + coeffs[k] * sys.basis[k][idx];
  return v;
}

/// det N is constant by the degree pattern: only permutations along which
/// every block has degree zero contribute.
Scalar eval_det(const IsoSystem& sys, std::span<const Scalar> coeffs, const FieldCtx& ctx) {
  static const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  static const int signs[6] = {1, -1, -1, 1, 1, -1};
  Scalar det = Scalar::zero(ctx);
  for (int s = 0; s < 6; ++s) {
    bool ok = true;
    for (int i = 0; i < 3 && ok; ++i) ok = sys.deg[i][perms[s][i]] == 0;
    if (!ok) continue;
    Scalar term = Scalar::one(ctx);
    for (int i = 0; i < 3; ++i)
      term = term * eval_parameter(sys, coeffs, sys.offset[i][perms[s][i]], ctx);
    det = signs[s] > 0 ? det + term : det - term;
  }
  return det;
}

IsoWitness assemble_witness(const IsoSystem& sys, std::span<const Scalar> coeffs,
                            const Presentation& p1, const Presentation& p2, const Scalar& det) {
  IsoWitness w{.n = {}, .lambda = eval_parameter(sys, coeffs, sys.unknowns - 1, p1.ctx), .det = det};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      long long deg = std::max<long long>(sys.deg[i][j], 0);
      if (sys.offset[i][j] == npos) {
        w.n[i][j] = HomPoly::zero(p1.ctx, 3, deg);
        continue;
      }
      std::size_t dim = static_cast<std::size_t>(graded_dim(3, sys.deg[i][j]));
      std::vector<Scalar> v(dim, Scalar::zero(p1.ctx));
      for (std::size_t c = 0; c < dim; ++c)
        v[c] = eval_parameter(sys, coeffs, sys.offset[i][j] + c, p1.ctx);
      w.n[i][j] = HomPoly::from_coeff_vector(p1.ctx, 3, sys.deg[i][j], v);
    }
  // exact verification: N . entries2 = lambda . entries1 and det != 0
  check_internal(!w.det.is_zero(), "witness with zero determinant");
  check_internal(!w.lambda.is_zero(), "witness with zero lambda");
  for (int i = 0; i < 3; ++i) {
    HomPoly lhs = HomPoly::zero(p1.ctx, 3, p1.d0 - p1.d[i]);
    for (int j = 0; j < 3; ++j)
      if (!w.n[i][j].is_zero()) lhs = lhs + w.n[i][j] * p2.entries[j];
    check_internal(lhs == p1.entries[i].scaled(w.lambda), "witness fails the lifting identity");
  }
  return w;
}

}  // namespace

IsoResult isomorphic(const Presentation& p1, const Presentation& p2, std::uint64_t seed) {
  IsoResult out;
  if (!(p1.ctx == p2.ctx)) fail(Errc::precondition, "isomorphic wants one common field");
  auto s1 = p1.d, s2 = p2.d;
  std::sort(s1.begin(), s1.end());
  std::sort(s2.begin(), s2.end());
  if (p1.d0 != p2.d0 || s1 != s2) {
    out.certainty = Certainty::certified;  // degree profiles are isomorphism invariants here
    return out;
  }

  IsoSystem sys = build_system(p1, p2);
  const std::size_t r = sys.basis.size();
  if (r == 0) {
    out.certainty = Certainty::certified;
    return out;
  }

  const FieldCtx& ctx = p1.ctx;
  if (r <= 6) {
    // exact polynomial identity test: det has degree <= 3 in the parameters,
    // so vanishing on the full side-4 grid means vanishing identically
    std::vector<Scalar> c(r, Scalar::zero(ctx));
    std::size_t total = 1;
    for (std::size_t k = 0; k < r; ++k) total *= 4;
    for (std::size_t idx = 1; idx < total; ++idx) {
      std::size_t rem = idx;
      for (std::size_t k = 0; k < r; ++k) {
        c[k] = Scalar::from_int(ctx, static_cast<long long>(rem % 4));
        rem /= 4;
      }
      Scalar det = eval_det(sys, c, ctx);
      if (!det.is_zero()) {
        out.witness = assemble_witness(sys, c, p1, p2, det);
        out.certainty = Certainty::certified;
        return out;
      }
    }
    out.certainty = Certainty::certified;
    return out;
  }

  Rng rng(seed);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Scalar> c(r, Scalar::zero(ctx));
    for (std::size_t k = 0; k < r; ++k) c[k] = Scalar::random(ctx, rng, 20);
    Scalar det = eval_det(sys, c, ctx);
    if (!det.is_zero()) {
      out.witness = assemble_witness(sys, c, p1, p2, det);
      out.certainty = Certainty::certified;
      return out;
    }
  }
  out.certainty = Certainty::probabilistic;
  return out;
}

IsoResult invariant_under(const Presentation& p, const GroupElement& g, std::uint64_t seed) {
  return isomorphic(p, pullback(p, g), seed);
}

namespace {

std::vector<DenseMatrix> fixed_transvections(const FieldCtx& ctx) {
  // x -> x+y and its conjugates under the coordinate swaps y<->z and x<->z
  return {
      DenseMatrix::from_ints(ctx, 3, 3, {1, 1, 0, 0, 1, 0, 0, 0, 1}),
      DenseMatrix::from_ints(ctx, 3, 3, {1, 0, 1, 0, 1, 0, 0, 0, 1}),
      DenseMatrix::from_ints(ctx, 3, 3, {1, 0, 0, 0, 1, 0, 0, 1, 1}),
  };
}

}  // namespace

InvarianceVerdict invariance_report(const Presentation& p, const SubgroupTag& tag,
                                    unsigned n_samples, std::uint64_t seed) {
  if (n_samples < 10) fail(Errc::precondition, "invariance_report wants at least 10 samples");
  InvarianceVerdict v;
  v.invariant = true;

  for (const DenseMatrix& t : fixed_transvections(p.ctx)) {
    if (!in_subgroup(tag, t)) continue;
    GroupElement g{t, tag};
    IsoResult res = invariant_under(p, g, seed);
    ++v.elements_tested;
    if (!res.isomorphic() && v.invariant) {
      v.invariant = false;
      v.counterexample = g;
      v.counterexample_certainty = res.certainty;
    }
    v.transvection_results.emplace_back(std::move(g), std::move(res));
  }

  Rng rng(seed);
  for (unsigned i = 0; i < n_samples; ++i) {
    GroupElement g = sample(tag, p.ctx, rng);
    IsoResult res = invariant_under(p, g, seed + i + 1);
    ++v.elements_tested;
    if (!res.isomorphic()) {
      if (v.invariant) {
        v.invariant = false;
        v.counterexample = g;
        v.counterexample_certainty = res.certainty;
      }
    }
  }
  return v;
}

}  // namespace pb
