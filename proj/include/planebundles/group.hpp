#pragma once

#include <variant>

#include "planebundles/presentation.hpp"

namespace pb {

/// Subgroups of PGL(3): stabilizer of a point, of a line, of a full flag
/// (Borel), the diagonal torus, or the full group. The reference shapes live
/// at p = (1:0:0), L = {z=0}; other flags are handled by conjugation.
struct SubgroupTag {
  enum class Kind { full, point_stab, line_stab, borel, torus };
  Kind kind = Kind::full;
  std::optional<PointP2> p;  // point_stab, borel
  std::optional<LineP2> L;   // line_stab, borel

  static SubgroupTag full() { return {Kind::full, {}, {}}; }
  static SubgroupTag Gp(PointP2 p) { return {Kind::point_stab, std::move(p), {}}; }
  static SubgroupTag GL(LineP2 l) { return {Kind::line_stab, {}, std::move(l)}; }
  static SubgroupTag B(PointP2 p, LineP2 l);  // requires p on l
  static SubgroupTag T() { return {Kind::torus, {}, {}}; }

  std::string name() const;
};

/// Invertible 3x3 matrix tagged with the subgroup it was drawn from. The
/// matrix acts on coordinates by row substitution: var_i -> sum_j m(i,j) var_j,
/// equivalently it maps the point P to m P.
struct GroupElement {
  DenseMatrix m;
  SubgroupTag tag;
};

bool in_subgroup(const SubgroupTag& tag, const DenseMatrix& m);

/// Nine comma-separated integers, row-major; must be invertible.
GroupElement parse_group_element(const std::string& literal, const FieldCtx& ctx);

/// Seeded element matching the tag's matrix shape, nondegeneracy by rejection.
GroupElement sample(const SubgroupTag& tag, const FieldCtx& ctx, Rng& rng);

PointP2 apply_to_point(const DenseMatrix& m, const PointP2& p);
LineP2 apply_to_line(const DenseMatrix& m, const LineP2& l);

using PlaneObject = std::variant<PointP2, LineP2>;

/// Element of the subgroup mapping source to target, built from the explicit
/// explicit orbit matrices of each transitivity class; throws Errc::no_witness when
/// the two objects do not lie in a common orbit class for the tag.
GroupElement transitive_witness(const SubgroupTag& tag, const PlaneObject& source,
                                const PlaneObject& target);

/// For the line stabilizer: pairs of distinct points off the line.
GroupElement transitive_witness_pair(const SubgroupTag& tag, const std::pair<PointP2, PointP2>& src,
                                     const std::pair<PointP2, PointP2>& dst);

/// Entries composed with the substitution; degrees unchanged.
Presentation pullback(const Presentation& p, const GroupElement& g);

/// Lift of an isomorphism between two presentations: a matrix N of forms
/// (deg N[i][j] = d_j - d_i) with N . entries2 = lambda . entries1 and
/// constant nonzero determinant.
struct IsoWitness {
  std::array<std::array<HomPoly, 3>, 3> n;
  Scalar lambda;
  Scalar det;
};

enum class Certainty { certified, probabilistic };

struct IsoResult {
  std::optional<IsoWitness> witness;
  Certainty certainty = Certainty::certified;
  bool isomorphic() const { return witness.has_value(); }
};

/// Solves the linear system over the unknown coefficients of N and lambda,
/// then decides det != 0 on the solution space: exactly (grid of side 4) when
/// the space has dimension <= 6, by seeded random evaluation otherwise.
IsoResult isomorphic(const Presentation& p1, const Presentation& p2, std::uint64_t seed = 0);

IsoResult invariant_under(const Presentation& p, const GroupElement& g, std::uint64_t seed = 0);

struct InvarianceVerdict {
  bool invariant = false;  // sampled verdict; never a certification
  unsigned elements_tested = 0;
  std::optional<GroupElement> counterexample;
  Certainty counterexample_certainty = Certainty::certified;
  // outcome of each fixed transvection test that was shape-compatible
  std::vector<std::pair<GroupElement, IsoResult>> transvection_results;
};

/// n_samples seeded subgroup elements plus the fixed shear x -> x+y and its
/// shape-compatible conjugates.
InvarianceVerdict invariance_report(const Presentation& p, const SubgroupTag& tag,
                                    unsigned n_samples, std::uint64_t seed);

}  // namespace pb
