#include "planebundles/jumping.hpp"

#include <algorithm>
#include <set>

namespace pb {

std::string Classification::name() const {
  switch (kind) {
    case Kind::uniform: return "uniform";
    case Kind::pencil: return "pencil";
    case Kind::pencil_nonconstant: return "pencil_nonconstant";
    case Kind::finite_set: return "finite_set";
    default: return "other";
  }
}

const char* pencil_stability_name(PencilStability v) {
  switch (v) {
    case PencilStability::confirmed: return "confirmed";
    case PencilStability::vacuous: return "vacuous";
    default: return "VIOLATION";
  }
}

namespace {

// Precedence: uniform > pencil > pencil_nonconstant > finite_set > other.
Classification classify(const std::vector<JumpRecord>& jumps, const std::vector<LineP2>& scanned,
                        std::size_t pencil_size) {
  Classification cls;
  if (jumps.empty()) {
    cls.kind = Classification::Kind::uniform;
    return cls;
  }

  // candidate pencil base: common point of all jumping lines
  std::optional<PointP2> base;
  if (jumps.size() >= 2) {
    PointP2 cand = line_intersection(jumps[0].line, jumps[1].line);
    bool common = true;
    for (const auto& j : jumps)
      if (!incident(cand, j.line)) {
        common = false;
        break;
      }
    if (common) base = cand;
  }

  if (base) {
    // the converse must hold too: every scanned line through the base jumps
    std::set<std::string> jumping;
    for (const auto& j : jumps) jumping.insert(j.line.str());
    bool full = true;
    std::size_t through = 0;
    for (const auto& l : scanned)
      if (incident(*base, l)) {
        ++through;
        if (!jumping.count(l.str())) {
          full = false;
          break;
        }
      }
    if (full && through == jumps.size()) {
      bool constant = true;
      for (const auto& j : jumps) constant &= j.order == jumps[0].order;
      cls.kind = constant ? Classification::Kind::pencil
                          : Classification::Kind::pencil_nonconstant;
      cls.base = base;
      if (constant) cls.order = jumps[0].order;
      return cls;
    }
  }

  // fewer jumping lines than any pencil in scope could hold: a finite set
  cls.kind = jumps.size() < pencil_size ? Classification::Kind::finite_set
                                        : Classification::Kind::other;
  return cls;
}

}  // namespace

JumpingReport scan(const Presentation& p, const ScanMode& mode) {
  std::vector<LineP2> lines;
  if (mode.kind == ScanMode::Kind::exhaustive) {
    if (!p.ctx.is_prime_field())
      fail(Errc::unsupported_field, "exhaustive scans need a prime field; use sampled mode over Q");
    lines = enumerate_lines(p.ctx);
  } else {
    if (mode.samples == 0) fail(Errc::precondition, "sampled scan wants at least one line");
    Rng rng(mode.seed);
    std::set<std::string> seen;
    for (unsigned t = 0; t < mode.samples; ++t) {
      LineP2 l = random_line(p.ctx, rng);
      if (seen.insert(l.str()).second) lines.push_back(l);
    }
  }

  std::vector<std::pair<LineP2, SplittingType>> splittings;
  splittings.reserve(lines.size());
  std::optional<SplittingType> generic;
  for (const auto& l : lines) {
    SplittingType s = splitting_type(restrict_to(p, l));
    if (!generic || s.gap() < generic->gap()) generic = s;
    splittings.emplace_back(l, s);
  }

  JumpingReport rep;
  rep.generic = *generic;
  rep.mode = mode;
  rep.lines_scanned = lines.size();
  for (auto& [l, s] : splittings) {
    long long diff = s.gap() - generic->gap();
    check_internal(diff >= 0 && diff % 2 == 0, "gap parity against minimal gap");
    if (diff > 0) rep.jumps.push_back({l, s, diff / 2});
  }
  std::sort(rep.jumps.begin(), rep.jumps.end(),
            [](const JumpRecord& a, const JumpRecord& b) { return a.line.cmp(b.line) < 0; });
  std::size_t pencil_size =
      mode.kind == ScanMode::Kind::exhaustive ? static_cast<std::size_t>(p.ctx.modulus + 1) : 2;
  rep.cls = classify(rep.jumps, lines, pencil_size);
  return rep;
}

std::optional<std::pair<PointP2, long long>> almost_uniform(const Presentation& p,
                                                            const ScanMode& mode) {
  JumpingReport rep = scan(p, mode);
  if (rep.cls.kind == Classification::Kind::pencil)
    return std::make_pair(*rep.cls.base, *rep.cls.order);
  return std::nullopt;
}

PencilStability pencil_stability_check(const Presentation& p, const ScanMode& mode) {
  if (chern(normalize(p).first).c1 != 0) return PencilStability::vacuous;
  auto au = almost_uniform(p, mode);
  if (!au) return PencilStability::vacuous;
  return stability_class(p) == Stability::stable ? PencilStability::violation : PencilStability::confirmed;
}

}  // namespace pb
