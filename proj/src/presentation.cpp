#include "planebundles/presentation.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace pb {

namespace {

/// dim of the degree-D piece of the ideal generated by gens (3 variables).
long long ideal_dim(std::span<const HomPoly> gens, long long D) {
  std::vector<HomPoly> live;
  for (const auto& g : gens)
    if (!g.is_zero() && D - g.degree() >= 0) live.push_back(g);
  if (live.empty()) return 0;
  return static_cast<long long>(rank(stacked_mult_matrix(live, D).m));
}

long long quotient_dim(std::span<const HomPoly> gens, long long D) {
  return graded_dim(3, D) - ideal_dim(gens, D);
}

}  // namespace

ValidationCert validate(const FieldCtx&, const std::array<HomPoly, 3>& entries) {
  long long degsum = 0;
  for (const auto& f : entries) degsum += f.degree();
  ValidationCert cert;
  cert.socle_bound = degsum - 2;
  for (long long D = 0; D <= cert.socle_bound + 1; ++D)
    cert.quotient_hilbert.push_back(quotient_dim(entries, D));
  // A complete intersection of these degrees is zero in degrees past the
  // socle bound, while a common zero keeps every graded piece deficient.
  long long deficiency = cert.quotient_hilbert.back();
  if (deficiency != 0) {
    std::ostringstream os;
    os << "entries share a zero: quotient still has dimension " << deficiency << " in degree "
       << cert.socle_bound + 1;
    fail(Errc::not_locally_free, os.str());
  }
  return cert;
}

Presentation make_presentation(const FieldCtx& ctx, long long d0, std::array<long long, 3> d,
                               std::array<HomPoly, 3> entries) {
  for (int i = 0; i < 3; ++i) {
    if (entries[i].is_zero())
      fail(Errc::precondition, "presentation entry " + std::to_string(i + 1) + " is zero");
    if (!(entries[i].ctx() == ctx) || entries[i].nvars() != 3)
      fail(Errc::precondition, "presentation entries must be ternary forms over the given field");
    long long want = d0 - d[i];
    if (entries[i].degree() != want)
      fail(Errc::degree_mismatch, "entry " + std::to_string(i + 1) + " has degree " +
                                      std::to_string(entries[i].degree()) + ", expected " +
                                      std::to_string(want));
    if (want < 1)
      fail(Errc::precondition,
           "degree-0 entries are rejected: cancel the constant summand first");
  }
  Presentation p;
  p.ctx = ctx;
  p.d0 = d0;
  p.d = d;
  p.entries = std::move(entries);
  p.cert = validate(ctx, p.entries);
  return p;
}

ChernPair chern(const Presentation& p) {
  // c(F) = (1 - d1 h)(1 - d2 h)(1 - d3 h) / (1 - d0 h) truncated at h^2
  long long s1 = p.d[0] + p.d[1] + p.d[2];
  long long s2 = p.d[0] * p.d[1] + p.d[0] * p.d[2] + p.d[1] * p.d[2];
  ChernPair c;
  c.c1 = p.d0 - s1;
  c.c2 = s2 - s1 * p.d0 + p.d0 * p.d0;
  return c;
}

Presentation twist(const Presentation& p, long long m) {
  Presentation q = p;
  q.d0 -= m;
  for (auto& di : q.d) di -= m;
  return q;
}

long long h0(const Presentation& p, long long k) {
  long long total = 0;
  for (long long di : p.d) total += plane_h0(k - di);
  return total - plane_h0(k - p.d0);
}

std::pair<Presentation, long long> normalize(const Presentation& p) {
  long long c1 = chern(p).c1;
  long long m = -floor_div(c1 + 1, 2);
  Presentation q = twist(p, m);
  long long cn = chern(q).c1;
  check_internal(cn == 0 || cn == -1, "normalization out of range");
  return {std::move(q), m};
}

const char* stability_name(Stability s) {
  switch (s) {
    case Stability::stable: return "stable";
    case Stability::properly_semistable: return "properly_semistable";
    default: return "unstable";
  }
}

Stability stability_class(const Presentation& p) {
  auto [norm, m] = normalize(p);
  long long c1 = chern(norm).c1;
  if (h0(norm, 0) == 0) return Stability::stable;
  if (c1 == -1) return Stability::unstable;
  return h0(norm, -1) == 0 ? Stability::properly_semistable : Stability::unstable;
}

std::vector<SectionVector> section_basis(const Presentation& p, long long k) {
  long long expected = h0(p, k);
  if (expected <= 0) fail(Errc::precondition, "h0 vanishes at this twist, no section basis");

  // H^0(F(k)) = coker of h -> (h f1, h f2, h f3) on graded pieces; the
  // non-pivot coordinates of the image give monomial coset representatives.
  std::array<long long, 3> sd;
  std::size_t rows = 0;
  for (int i = 0; i < 3; ++i) {
    sd[i] = k - p.d[i];
    rows += static_cast<std::size_t>(graded_dim(3, sd[i]));
  }
  long long src = graded_dim(3, k - p.d0);
  DenseMatrix m(p.ctx, rows, static_cast<std::size_t>(src));
  if (src > 0) {
    std::size_t off = 0;
    for (int i = 0; i < 3; ++i) {
      if (sd[i] >= 0) {
        DenseMatrix block = graded_mult_matrix(p.entries[i], k - p.d0);
        for (std::size_t r = 0; r < block.rows(); ++r)
          for (std::size_t c = 0; c < block.cols(); ++c) m.at(off + r, c) = block.at(r, c);
      }
      off += static_cast<std::size_t>(graded_dim(3, sd[i]));
    }
  }

  std::vector<bool> in_image(rows, false);
  for (std::size_t piv : rref(m.transpose()).pivots) in_image[piv] = true;

  std::vector<SectionVector> basis;
  std::size_t off = 0;
  for (int i = 0; i < 3; ++i) {
    auto ms = monomials_of_degree(3, sd[i]);
    for (std::size_t j = 0; j < ms.size(); ++j) {
      if (!in_image[off + j]) {
        SectionVector s;
        s.twist = k;
        for (int t = 0; t < 3; ++t) s.reps[t] = HomPoly::zero(p.ctx, 3, k - p.d[t]);
        s.reps[i] = HomPoly::monomial(p.ctx, 3, ms[j], Scalar::one(p.ctx));
        basis.push_back(std::move(s));
      }
    }
    off += ms.size();
  }
  check_internal(static_cast<long long>(basis.size()) == expected,
                 "section basis size disagrees with h0");
  return basis;
}

std::optional<long long> ideal_colength(std::span<const HomPoly> gens, long long start_bound) {
  bool any = false;
  for (const auto& g : gens) any |= !g.is_zero();
  if (!any) return std::nullopt;  // the zero ideal cuts out everything

  long long D = std::max<long long>(start_bound, 0);
  long long prev = quotient_dim(gens, D);
  // Stabilization needs two consecutive equal deficits; growth past the
  // expected bound means positive-dimensional support.
  for (int step = 0; step < 16; ++step) {
    long long next = quotient_dim(gens, D + 1);
    if (next == prev) return prev;
    if (next > prev) return std::nullopt;
    prev = next;
    ++D;
  }
  fail(Errc::internal, "ideal colength failed to stabilize near its regularity bound");
}

ZeroScheme section_zero_scheme(const Presentation& p, const SectionVector& s) {
  bool all_zero = true;
  for (const auto& g : s.reps) all_zero &= g.is_zero();
  if (all_zero) fail(Errc::precondition, "zero section has no zero scheme");
  for (int i = 0; i < 3; ++i)
    check_internal(s.reps[i].degree() == s.twist - p.d[i], "section representative degree");

  ZeroScheme z;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      z.generators.push_back(p.entries[i] * s.reps[j] - p.entries[j] * s.reps[i]);

  std::vector<long long> degs;
  for (const auto& g : z.generators) degs.push_back(g.degree());
  std::sort(degs.begin(), degs.end());
  z.colength = ideal_colength(z.generators, degs[1] + degs[2]);
  return z;
}

DecomposabilityProbe is_decomposable(const Presentation& p, long long generic_a,
                                     std::uint64_t seed) {
  DecomposabilityProbe probe;
  long long k = -generic_a;
  if (h0(p, k) <= 0) return probe;

  // A nowhere-vanishing section of F(-a) splits off a line subbundle.
  auto basis = section_basis(p, k);
  auto vanishes_nowhere = [&](const SectionVector& s) {
    bool all_zero = true;
    for (const auto& g : s.reps) all_zero &= g.is_zero();
    if (all_zero) return false;
    auto z = section_zero_scheme(p, s);
    return z.colength.has_value() && *z.colength == 0;
  };

  for (const auto& s : basis) {
    if (vanishes_nowhere(s)) {
      probe.split_found = true;
      probe.witness = s;
      return probe;
    }
  }
  Rng rng(seed);
  for (int t = 0; t < 20; ++t) {
    SectionVector comb;
    comb.twist = k;
    for (int i = 0; i < 3; ++i) comb.reps[i] = HomPoly::zero(p.ctx, 3, k - p.d[i]);
    for (const auto& s : basis) {
      Scalar c = Scalar::random(p.ctx, rng, 5);
      for (int i = 0; i < 3; ++i) comb.reps[i] = comb.reps[i] + s.reps[i].scaled(c);
    }
    bool all_zero = true;
    for (const auto& g : comb.reps) all_zero &= g.is_zero();
    if (all_zero) continue;
    if (vanishes_nowhere(comb)) {
      probe.split_found = true;
      probe.witness = comb;
      return probe;
    }
  }
  return probe;
}

namespace {

std::string strip(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::vector<long long> parse_int_list(const std::string& s, const std::string& what) {
  std::vector<long long> out;
  std::istringstream is(s);
  std::string tok;
  while (is >> tok) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(tok, &used));
      if (used != tok.size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      fail(Errc::parse_error, "bad integer '" + tok + "' in " + what);
    }
  }
  return out;
}

}  // namespace

Presentation parse_bundle_text(const std::string& text, const std::optional<FieldCtx>& field_flag) {
  std::optional<FieldCtx> field;
  std::optional<long long> d0;
  std::optional<std::array<long long, 3>> d;
  std::optional<std::string> entries_line;

  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line = line.substr(0, hash);
    line = strip(line);
    if (line.empty()) continue;
    auto colon = line.find(':');
    if (colon == std::string::npos) fail(Errc::parse_error, "bundle file: expected 'key: value', got '" + line + "'");
    std::string key = strip(line.substr(0, colon));
    std::string val = strip(line.substr(colon + 1));
    if (key == "field") {
      field = parse_field(val);
    } else if (key == "sub") {
      auto v = parse_int_list(val, "sub");
      if (v.size() != 1) fail(Errc::parse_error, "bundle file: sub wants one integer");
      d0 = v[0];
    } else if (key == "quotients") {
      auto v = parse_int_list(val, "quotients");
      if (v.size() != 3) fail(Errc::parse_error, "bundle file: quotients wants three integers");
      d = {v[0], v[1], v[2]};
    } else if (key == "entries") {
      entries_line = val;
    } else {
      fail(Errc::parse_error, "bundle file: unknown key '" + key + "'");
    }
  }
  if (!field) fail(Errc::parse_error, "bundle file: missing field line");
  if (!d0 || !d) fail(Errc::parse_error, "bundle file: missing sub/quotients");
  if (!entries_line) fail(Errc::parse_error, "bundle file: missing entries");
  if (field_flag && !(*field_flag == *field))
    fail(Errc::invalid_argument, "field mismatch: file says " + field->str() + ", flag says " +
                                     field_flag->str());

  std::vector<std::string> parts;
  std::string cur;
  for (char c : *entries_line) {
    if (c == '|') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  if (parts.size() != 3) fail(Errc::parse_error, "bundle file: entries wants f1 | f2 | f3");
  std::array<HomPoly, 3> entries;
  for (int i = 0; i < 3; ++i) entries[i] = parse_poly(strip(parts[i]), 3, *field);
  return make_presentation(*field, *d0, *d, std::move(entries));
}

Presentation load_bundle_file(const std::string& path, const std::optional<FieldCtx>& field_flag) {
  std::FILE* f = std::fopen(path.c_str(), "rb");
  if (!f) fail(Errc::io_error, "cannot open bundle file '" + path + "'");
  std::string text;
  char buf[4096];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, f)) > 0) text.append(buf, n);
  std::fclose(f);
  return parse_bundle_text(text, field_flag);
}

}  // namespace pb
