#include "planebundles.h"

#include <cstring>
#include <string>

#include "planebundles/verify.hpp"

struct pb_bundle {
  pb::Presentation p;
  std::string label;
};

namespace {

thread_local std::string g_last_error;

pb_status status_of(const pb::PbError& e) {
  switch (e.code()) {
    case pb::Errc::parse_error:
    case pb::Errc::inhomogeneous:
    case pb::Errc::unknown_variable:
      return PB_ERROR_PARSE;
    case pb::Errc::not_locally_free:
      return PB_ERROR_NOT_LOCALLY_FREE;
    case pb::Errc::unsupported_field:
      return PB_ERROR_UNSUPPORTED;
    case pb::Errc::precondition:
    case pb::Errc::degree_mismatch:
    case pb::Errc::degenerate_geometry:
    case pb::Errc::no_witness:
      return PB_ERROR_PRECONDITION;
    case pb::Errc::io_error:
      return PB_ERROR_IO;
    case pb::Errc::invalid_argument:
      return PB_ERROR_INVALID_ARGUMENT;
    default:
      return PB_ERROR_INTERNAL;
  }
}

template <typename Fn>
pb_status guarded(Fn&& fn) {
  try {
    fn();
    return PB_OK;
  } catch (const pb::PbError& e) {
    g_last_error = e.what();
    return status_of(e);
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return PB_ERROR_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::string require_format(const char* format) {
  std::string f = format ? format : "text";
  if (!pb::report::is_valid_format(f))
    pb::fail(pb::Errc::invalid_argument, "format must be json or text, got '" + f + "'");
  return f;
}

const pb_bundle& deref(const pb_bundle* b) {
  if (!b) pb::fail(pb::Errc::invalid_argument, "null bundle handle");
  return *b;
}

}  // namespace

extern "C" {

const char* pb_last_error(void) { return g_last_error.c_str(); }

void pb_string_free(char* s) { delete[] s; }

void pb_bundle_free(pb_bundle* b) { delete b; }

pb_status pb_bundle_from_family(const char* family, const char* field, pb_bundle** out) {
  return guarded([&] {
    if (!family || !out) pb::fail(pb::Errc::invalid_argument, "null argument");
    pb::FieldCtx ctx = pb::parse_field(field ? field : "Q");
    auto p = pb::build_family(family, ctx);
    *out = new pb_bundle{std::move(p), family};
  });
}

pb_status pb_bundle_from_file(const char* path, const char* field, pb_bundle** out) {
  return guarded([&] {
    if (!path || !out) pb::fail(pb::Errc::invalid_argument, "null argument");
    std::optional<pb::FieldCtx> flag;
    if (field) flag = pb::parse_field(field);
    auto p = pb::load_bundle_file(path, flag);
    *out = new pb_bundle{std::move(p), path};
  });
}

pb_status pb_bundle_chern(const pb_bundle* b, long long* c1, long long* c2) {
  return guarded([&] {
    pb::ChernPair c = pb::chern(deref(b).p);
    if (c1) *c1 = c.c1;
    if (c2) *c2 = c.c2;
  });
}

pb_status pb_splitting(const pb_bundle* b, const char* line, long long* a_out, long long* b_out) {
  return guarded([&] {
    const pb_bundle& h = deref(b);
    if (!line) pb::fail(pb::Errc::invalid_argument, "null line literal");
    pb::LineP2 l = pb::parse_line(line, h.p.ctx);
    pb::SplittingType s = pb::splitting_type(pb::restrict_to(h.p, l));
    if (a_out) *a_out = s.a;
    if (b_out) *b_out = s.b;
  });
}

pb_status pb_chern_report(const pb_bundle* b, const char* format, char** out) {
  return guarded([&] {
    const pb_bundle& h = deref(b);
    *out = dup_string(pb::report::chern_report(h.p, h.label, require_format(format)));
  });
}

pb_status pb_splitting_report(const pb_bundle* b, const char* line, const char* format,
                              char** out) {
  return guarded([&] {
    const pb_bundle& h = deref(b);
    if (!line) pb::fail(pb::Errc::invalid_argument, "null line literal");
    pb::LineP2 l = pb::parse_line(line, h.p.ctx);
    *out = dup_string(pb::report::splitting(h.p, h.label, l, require_format(format)));
  });
}

pb_status pb_scan_report(const pb_bundle* b, int exhaustive, unsigned long long samples,
                         unsigned long long seed, const char* format, char** out) {
  return guarded([&] {
    const pb_bundle& h = deref(b);
    pb::ScanMode mode = exhaustive ? pb::ScanMode::exhaustive()
                                   : pb::ScanMode::sampled(static_cast<unsigned>(samples), seed);
    *out = dup_string(pb::report::scan_report(h.p, h.label, mode, require_format(format)));
  });
}

pb_status pb_sections_report(const pb_bundle* b, long long twist, const char* format, char** out) {
  return guarded([&] {
    const pb_bundle& h = deref(b);
    *out = dup_string(pb::report::sections_report(h.p, h.label, twist, require_format(format)));
  });
}

pb_status pb_invariance_report(const pb_bundle* b, const char* group, const char* point,
                               const char* line, unsigned long long samples,
                               unsigned long long seed, const char* format, char** out) {
  return guarded([&] {
    const pb_bundle& h = deref(b);
    if (!group) pb::fail(pb::Errc::invalid_argument, "null group name");
    const pb::FieldCtx& ctx = h.p.ctx;
    pb::PointP2 p =
        point ? pb::parse_point(point, ctx) : pb::parse_point("1:0:0", ctx);
    pb::LineP2 l = line ? pb::parse_line(line, ctx) : pb::parse_line("[0,0,1]", ctx);
    std::string g = group;
    pb::SubgroupTag tag = pb::SubgroupTag::full();
    if (g == "Gp")
      tag = pb::SubgroupTag::Gp(p);
    else if (g == "GL")
      tag = pb::SubgroupTag::GL(l);
    else if (g == "B")
      tag = pb::SubgroupTag::B(p, l);
    else if (g == "T")
      tag = pb::SubgroupTag::T();
    else if (g != "PGL3")
      pb::fail(pb::Errc::invalid_argument, "unknown group '" + g + "' (Gp, GL, B, T, PGL3)");
    *out = dup_string(pb::report::invariance(h.p, h.label, tag, static_cast<unsigned>(samples),
                                             seed, require_format(format)));
  });
}

pb_status pb_invariance_element_report(const pb_bundle* b, const char* element,
                                       unsigned long long seed, const char* format, char** out) {
  return guarded([&] {
    const pb_bundle& h = deref(b);
    if (!element) pb::fail(pb::Errc::invalid_argument, "null element literal");
    pb::GroupElement g = pb::parse_group_element(element, h.p.ctx);
    *out = dup_string(
        pb::report::invariance_element(h.p, h.label, g, seed, require_format(format)));
  });
}

pb_status pb_isomorphic_report(const pb_bundle* a, const pb_bundle* b, unsigned long long seed,
                               const char* format, char** out) {
  return guarded([&] {
    const pb_bundle& ha = deref(a);
    const pb_bundle& hb = deref(b);
    *out = dup_string(pb::report::isomorphic_report(ha.p, ha.label, hb.p, hb.label, seed,
                                                    require_format(format)));
  });
}

pb_status pb_verify_paper(int quick, unsigned long long seed, const char* corrupt,
                          const char* format, char** out, int* all_passed) {
  return guarded([&] {
    pb::verify::Options opt;
    opt.quick = quick != 0;
    opt.seed = seed;
    if (corrupt) opt.corrupt = corrupt;
    auto results = pb::verify::run(opt);
    if (out) *out = dup_string(pb::verify::render(results, opt, require_format(format)));
    if (all_passed) *all_passed = pb::verify::all_passed(results) ? 1 : 0;
  });
}

}  // extern "C"
