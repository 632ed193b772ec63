#include "planebundles/reporting.hpp"

#include <sstream>

#include "json.hpp"

namespace pb::report {

using nlohmann::ordered_json;

namespace {

ordered_json bundle_json(const Presentation& p, const std::string& label) {
  ordered_json b;
  b["label"] = label;
  b["field"] = p.ctx.str();
  b["sub"] = p.d0;
  b["quotients"] = {p.d[0], p.d[1], p.d[2]};
  b["entries"] = {p.entries[0].str(), p.entries[1].str(), p.entries[2].str()};
  return b;
}

ordered_json header(const char* command, const Presentation& p, const std::string& label) {
  ordered_json j;
  j["schema"] = 1;
  j["command"] = command;
  j["bundle"] = bundle_json(p, label);
  return j;
}

std::string emit(const ordered_json& j) { return j.dump(2) + "\n"; }

ordered_json mode_json(const ScanMode& mode, const Presentation& p) {
  ordered_json m;
  if (mode.kind == ScanMode::Kind::exhaustive) {
    m["kind"] = "exhaustive";
    m["q"] = p.ctx.modulus;
  } else {
    m["kind"] = "sampled";
    m["n"] = mode.samples;
    m["seed"] = mode.seed;
  }
  return m;
}

ordered_json classification_json(const Classification& cls) {
  ordered_json c;
  c["kind"] = cls.name();
  if (cls.base) c["point"] = cls.base->str();
  if (cls.order) c["order"] = *cls.order;
  return c;
}

std::string group_literal(const DenseMatrix& m) {
  std::string out;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      if (!out.empty()) out += ",";
      out += m.at(i, j).str();
    }
  return out;
}

}  // namespace

bool is_valid_format(const std::string& format) { return format == "json" || format == "text"; }

std::string splitting(const Presentation& p, const std::string& label, const LineP2& line,
                      const std::string& format) {
  SplittingType s = splitting_type(restrict_to(p, line));
  if (format == "json") {
    ordered_json j = header("splitting", p, label);
    j["line"] = line.str();
    j["a"] = s.a;
    j["b"] = s.b;
    return emit(j);
  }
  std::ostringstream os;
  os << "splitting of " << label << " on " << line.str() << " over " << p.ctx.str() << ": ("
     << s.a << ", " << s.b << ")\n";
  return os.str();
}

std::string chern_report(const Presentation& p, const std::string& label,
                         const std::string& format) {
  ChernPair c = chern(p);
  auto [norm, m] = normalize(p);
  Stability st = stability_class(p);
  if (format == "json") {
    ordered_json j = header("chern", p, label);
    j["c1"] = c.c1;
    j["c2"] = c.c2;
    j["normalizing_twist"] = m;
    j["normalized_c1"] = chern(norm).c1;
    j["stability"] = stability_name(st);
    return emit(j);
  }
  std::ostringstream os;
  os << "bundle " << label << " over " << p.ctx.str() << "\n"
     << "  c1 = " << c.c1 << ", c2 = " << c.c2 << "\n"
     << "  normalized by twist " << m << " to c1 = " << chern(norm).c1 << "\n"
     << "  stability: " << stability_name(st) << "\n";
  return os.str();
}

std::string scan_report(const Presentation& p, const std::string& label, const ScanMode& mode,
                        const std::string& format) {
  JumpingReport rep = scan(p, mode);
  if (format == "json") {
    ordered_json j = header("scan", p, label);
    j["mode"] = mode_json(mode, p);
    j["lines_scanned"] = rep.lines_scanned;
    j["generic"] = {{"a", rep.generic.a}, {"b", rep.generic.b}};
    ordered_json jumps = ordered_json::array();
    for (const auto& r : rep.jumps) {
      ordered_json one;
      one["line"] = r.line.str();
      one["a"] = r.split.a;
      one["b"] = r.split.b;
      one["order"] = r.order;
      jumps.push_back(std::move(one));
    }
    j["jumps"] = std::move(jumps);
    j["classification"] = classification_json(rep.cls);
    return emit(j);
  }
  std::ostringstream os;
  os << "scan of " << label << " over " << p.ctx.str()
     << (mode.kind == ScanMode::Kind::exhaustive
             ? " (exhaustive)"
             : " (sampled, n=" + std::to_string(mode.samples) + ", seed=" +
                   std::to_string(mode.seed) + ")")
     << "\n";
  os << "  lines scanned: " << rep.lines_scanned << "\n";
  os << "  generic splitting: (" << rep.generic.a << ", " << rep.generic.b << ")\n";
  if (rep.jumps.empty()) {
    os << "  no jumping lines\n";
  } else {
    os << "  jumping lines (" << rep.jumps.size() << "):\n";
    for (const auto& r : rep.jumps)
      os << "    " << r.line.str() << "  (" << r.split.a << ", " << r.split.b << ")  order "
         << r.order << "\n";
  }
  os << "  classification: " << rep.cls.name();
  if (rep.cls.base) os << " at " << rep.cls.base->str();
  if (rep.cls.order) os << ", order " << *rep.cls.order;
  os << "\n";
  return os.str();
}

std::string sections_report(const Presentation& p, const std::string& label, long long twist,
                            const std::string& format) {
  long long n = h0(p, twist);
  std::vector<SectionVector> basis;
  if (n > 0) basis = section_basis(p, twist);
  if (format == "json") {
    ordered_json j = header("sections", p, label);
    j["twist"] = twist;
    j["h0"] = n;
    ordered_json arr = ordered_json::array();
    for (const auto& s : basis) {
      ordered_json one;
      one["reps"] = {s.reps[0].str(), s.reps[1].str(), s.reps[2].str()};
      ZeroScheme z = section_zero_scheme(p, s);
      ordered_json zj;
      ordered_json gens = ordered_json::array();
      for (const auto& g : z.generators) gens.push_back(g.str());
      zj["generators"] = std::move(gens);
      if (z.colength)
        zj["colength"] = *z.colength;
      else
        zj["colength"] = nullptr;
      one["zero_scheme"] = std::move(zj);
      arr.push_back(std::move(one));
    }
    j["basis"] = std::move(arr);
    return emit(j);
  }
  std::ostringstream os;
  os << "sections of " << label << " twisted by " << twist << ": h0 = " << n << "\n";
  for (const auto& s : basis) {
    ZeroScheme z = section_zero_scheme(p, s);
    os << "  (" << s.reps[0].str() << " | " << s.reps[1].str() << " | " << s.reps[2].str()
       << ")  zero scheme colength ";
    if (z.colength)
      os << *z.colength;
    else
      os << "not finite";
    os << "\n";
  }
  return os.str();
}

std::string invariance(const Presentation& p, const std::string& label, const SubgroupTag& tag,
                       unsigned samples, std::uint64_t seed, const std::string& format) {
  InvarianceVerdict v = invariance_report(p, tag, samples, seed);
  if (format == "json") {
    ordered_json j = header("invariance", p, label);
    j["group"] = tag.name();
    if (tag.p) j["p"] = tag.p->str();
    if (tag.L) j["L"] = tag.L->str();
    j["samples"] = samples;
    j["seed"] = seed;
    j["elements_tested"] = v.elements_tested;
    j["verdict"] = v.invariant ? "invariant" : "not_invariant";
    j["certainty"] = v.invariant
                         ? "sampled"
                         : (v.counterexample_certainty == Certainty::certified ? "certified"
                                                                               : "probabilistic");
    if (v.counterexample)
      j["counterexample"] = group_literal(v.counterexample->m);
    else
      j["counterexample"] = nullptr;
    ordered_json tv = ordered_json::array();
    for (const auto& [g, res] : v.transvection_results) {
      ordered_json one;
      one["element"] = group_literal(g.m);
      one["invariant"] = res.isomorphic();
      one["certainty"] = res.certainty == Certainty::certified ? "certified" : "probabilistic";
      tv.push_back(std::move(one));
    }
    j["transvections"] = std::move(tv);
    return emit(j);
  }
  std::ostringstream os;
  os << "invariance of " << label << " under " << tag.name();
  if (tag.p) os << " at p=" << tag.p->str();
  if (tag.L) os << " L=" << tag.L->str();
  os << " (" << v.elements_tested << " elements, seed " << seed << ")\n";
  if (v.invariant) {
    os << "  verdict: invariant (sampled; finite samples cannot certify invariance)\n";
  } else {
    os << "  verdict: not invariant\n  witness element: " << group_literal(v.counterexample->m)
       << "  ["
       << (v.counterexample_certainty == Certainty::certified ? "certified" : "probabilistic")
       << "]\n";
  }
  return os.str();
}

std::string invariance_element(const Presentation& p, const std::string& label,
                               const GroupElement& g, std::uint64_t seed,
                               const std::string& format) {
  IsoResult res = invariant_under(p, g, seed);
  if (format == "json") {
    ordered_json j = header("invariance", p, label);
    j["element"] = group_literal(g.m);
    j["verdict"] = res.isomorphic() ? "invariant" : "not_invariant";
    j["certainty"] = res.isomorphic()
                         ? "exact"
                         : (res.certainty == Certainty::certified ? "certified" : "probabilistic");
    if (res.witness) {
      ordered_json w;
      w["lambda"] = res.witness->lambda.str();
      w["det"] = res.witness->det.str();
      j["witness"] = std::move(w);
    } else {
      j["witness"] = nullptr;
    }
    return emit(j);
  }
  std::ostringstream os;
  os << "invariance of " << label << " under element " << group_literal(g.m) << ": "
     << (res.isomorphic() ? "yes (exact lift found)" : "no") << "\n";
  return os.str();
}

std::string isomorphic_report(const Presentation& a, const std::string& label_a,
                              const Presentation& b, const std::string& label_b,
                              std::uint64_t seed, const std::string& format) {
  IsoResult res = isomorphic(a, b, seed);
  if (format == "json") {
    ordered_json j;
    j["schema"] = 1;
    j["command"] = "isomorphic";
    j["bundle_a"] = bundle_json(a, label_a);
    j["bundle_b"] = bundle_json(b, label_b);
    j["isomorphic"] = res.isomorphic();
    j["certainty"] = res.certainty == Certainty::certified ? "certified" : "probabilistic";
    if (res.witness) {
      ordered_json w;
      w["lambda"] = res.witness->lambda.str();
      w["det"] = res.witness->det.str();
      ordered_json rows = ordered_json::array();
      for (int i = 0; i < 3; ++i)
        rows.push_back({res.witness->n[i][0].str(), res.witness->n[i][1].str(),
                        res.witness->n[i][2].str()});
      w["n"] = std::move(rows);
      j["witness"] = std::move(w);
    } else {
      j["witness"] = nullptr;
    }
    return emit(j);
  }
  std::ostringstream os;
  os << "isomorphism " << label_a << " ~ " << label_b << ": "
     << (res.isomorphic() ? "yes" : "no") << " ["
     << (res.certainty == Certainty::certified ? "certified" : "probabilistic") << "]\n";
  if (res.witness) {
    os << "  lambda = " << res.witness->lambda.str() << ", det = " << res.witness->det.str()
       << "\n";
    for (int i = 0; i < 3; ++i)
      os << "  [ " << res.witness->n[i][0].str() << " | " << res.witness->n[i][1].str() << " | "
         << res.witness->n[i][2].str() << " ]\n";
  }
  return os.str();
}

}  // namespace pb::report
