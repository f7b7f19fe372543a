// Copyright 2026 The foldtree Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <CLI11.hpp>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>

#include "foldtree/aleksandrov.h"
#include "foldtree/canonical.h"
#include "foldtree/classify.h"
#include "foldtree/edge_to_edge.h"
#include "foldtree/enumerate.h"
#include "foldtree/error.h"
#include "foldtree/families.h"
#include "foldtree/io.h"
#include "foldtree/symmetry.h"
#include "foldtree/unfold.h"

namespace foldtree::cli {
namespace {

struct RunConfig {
  std::string shape;
  std::string in;
  std::string out;
  std::string catalog;
  std::string format;
  double epsilon = kDefaultEpsilon;
  std::uint64_t budget = 10'000'000;
  bool quotient = false;
  bool profile = false;
};

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::kBadInput, "cannot read " + path);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

void emit(const RunConfig& cfg, const std::string& text, std::ostream& out) {
  if (cfg.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(cfg.out, std::ios::binary);
  if (!f) throw Error(ErrorCode::kBadInput, "cannot write " + cfg.out);
  f << text;
}

bool is_polygon_error(ErrorCode c) {
  switch (c) {
    case ErrorCode::kNonSimple:
    case ErrorCode::kDegenerateEdge:
    case ErrorCode::kClockwiseInput:
    case ErrorCode::kAngleClosureViolation:
    case ErrorCode::kInexactPolygon:
      return true;
    default:
      return false;
  }
}

PolygonSpec load_polygon(const RunConfig& cfg) {
  if (!cfg.shape.empty() && !cfg.in.empty()) {
    throw Error(ErrorCode::kBadInput, "give either --shape or --in, not both");
  }
  if (!cfg.shape.empty()) return named_shape(cfg.shape);
  if (!cfg.in.empty()) return read_polygon_json(read_file(cfg.in), cfg.epsilon);
  throw Error(ErrorCode::kBadInput, "a polygon is required (--shape or --in)");
}

std::string histogram(const std::vector<GluingTree>& trees) {
  std::map<std::string, int> counts{{"|", 0}, {"Y", 0}, {"I", 0}, {"+", 0}, {"Other", 0}};
  int belts = 0;
  for (const GluingTree& t : trees) {
    ++counts[to_string(classify_shape(t))];
    belts += static_cast<int>(t.belts.size());
  }
  std::ostringstream s;
  s << "shapes |:" << counts["|"] << " Y:" << counts["Y"] << " I:" << counts["I"]
    << " +:" << counts["+"] << " Other:" << counts["Other"] << "\n";
  s << "belts " << belts << "\n";
  return s.str();
}

int cmd_enumerate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  PolygonSpec p = load_polygon(cfg);
  EnumerateOptions opts;
  opts.state_budget = cfg.budget;
  opts.epsilon = cfg.epsilon;
  EnumerationResult r = enumerate_gluings(p, opts);
  std::vector<GluingTree> trees = r.trees;
  if (cfg.quotient) trees = quotient_by_symmetry(r.trees, symmetry_group(p, cfg.epsilon), p);
  const std::string format = cfg.format.empty() ? "summary" : cfg.format;
  if (format == "catalog") {
    emit(cfg, write_catalog_json(trees, p), out);
  } else if (format == "dot") {
    std::string text;
    for (size_t i = 0; i < trees.size(); ++i) text += to_dot(trees[i], "gluing" + std::to_string(i + 1));
    emit(cfg, text, out);
  } else if (format != "summary") {
    throw Error(ErrorCode::kBadInput, "unknown format " + format);
  }
  if (format == "summary" || !cfg.out.empty()) {
    out << trees.size() << "\n" << histogram(trees);
    if (cfg.quotient) out << "gluings " << r.trees.size() << "\n";
  }
  if (cfg.profile) err << r.profile.to_string();
  if (!r.exhaustive) {
    err << "state budget exhausted; results are not exhaustive\n";
    return kTimeout;
  }
  return kOk;
}

int cmd_validate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.catalog.empty()) throw Error(ErrorCode::kBadInput, "--catalog is required");
  std::vector<CatalogEntry> entries = read_catalog_json(read_file(cfg.catalog));
  PolygonSpec p = load_polygon(cfg);
  if (entries.empty()) {
    err << "warning: catalog is empty\n";
    out << "0 entries, 0 failures\n";
    return kOk;
  }
  int failures = 0;
  for (size_t i = 0; i < entries.size(); ++i) {
    const CatalogEntry& e = entries[i];
    std::vector<std::string> problems;
    try {
      ValidityReport v = check_aleksandrov(e.tree, p, cfg.epsilon);
      if (!v.valid) problems.insert(problems.end(), v.problems.begin(), v.problems.end());
      ConformanceReport c = structural_check(e.tree, p);
      problems.insert(problems.end(), c.violations.begin(), c.violations.end());
      if (!e.key.empty() && canonical_form(e.tree).str() != e.key) {
        problems.push_back("stored key does not match the tree");
      }
    } catch (const Error& ex) {
      problems.push_back(ex.what());
    }
    if (!problems.empty()) {
      ++failures;
      out << "entry " << i + 1 << ": FAIL";
      for (const std::string& s : problems) out << "\n  " << s;
      out << "\n";
    }
  }
  out << entries.size() << " entries, " << failures << " failures\n";
  return failures == 0 ? kOk : kValidationFailure;
}

Frustum frustum_from(int k, const std::string& rb, const std::string& rt, const std::string& h) {
  Frustum f;
  f.k = k;
  f.r_bottom = parse_rational(rb);
  f.r_top = parse_rational(rt);
  f.height = parse_rational(h);
  validate_frustum(f);
  return f;
}

int cmd_perimeter_halve(const RunConfig& cfg, const std::string& x, std::ostream& out) {
  PolygonSpec p = load_polygon(cfg);
  HalvingResult r = perimeter_halving(p, parse_rational(x));
  emit(cfg, to_dot(r.tree, "halving"), out);
  out << (r.report.valid ? "valid" : "invalid") << " " << to_string(classify_shape(r.tree)) << "\n";
  for (const std::string& s : r.report.problems) out << "  " << s << "\n";
  return r.report.valid ? kOk : kValidationFailure;
}

int cmd_star(const RunConfig& cfg, int m, const std::string& top, const std::string& bottom,
             bool all, std::ostream& out) {
  if (all) {
    const int half = m / 2;
    if (m < 4 || m % 2 != 0) throw Error(ErrorCode::kBadParameter, "m must be even and >= 4");
    std::set<CanonicalKey> keys;
    std::vector<GluingTree> trees;
    for (int a = 0; a < (1 << half); ++a) {
      for (int b = 0; b < (1 << half); ++b) {
        std::vector<bool> tb(half);
        std::vector<bool> bb(half);
        for (int i = 0; i < half; ++i) {
          tb[i] = (a >> i) & 1;
          bb[i] = (b >> i) & 1;
        }
        StarFamilyResult r = star_contraction_family(m, tb, bb);
        if (r.valid && keys.insert(canonical_form(r.tree)).second) trees.push_back(r.tree);
      }
    }
    if (!cfg.out.empty()) emit(cfg, write_catalog_json(trees, m_star(m)), out);
    out << keys.size() << " distinct valid contraction gluings\n";
    return kOk;
  }
  StarFamilyResult r = star_contraction_family(m, parse_bits(top), parse_bits(bottom));
  if (!r.valid) {
    out << "Invalid: " << r.reason << "\n";
    return kValidationFailure;
  }
  emit(cfg, to_dot(r.tree, "star"), out);
  return kOk;
}

int cmd_edge_to_edge(const RunConfig& cfg, std::ostream& out) {
  PolygonSpec p = load_polygon(cfg);
  std::vector<GluingTree> trees = enumerate_edge_to_edge(p);
  if (cfg.format == "catalog") emit(cfg, write_catalog_json(trees, p), out);
  if (cfg.format == "dot") {
    std::string text;
    for (size_t i = 0; i < trees.size(); ++i) text += to_dot(trees[i], "gluing" + std::to_string(i + 1));
    emit(cfg, text, out);
  }
  if (cfg.format.empty() || cfg.format == "summary" || !cfg.out.empty()) {
    out << trees.size() << "\n" << histogram(trees);
  }
  return kOk;
}

int cmd_export_dot(const RunConfig& cfg, int index, std::ostream& out) {
  if (cfg.catalog.empty()) throw Error(ErrorCode::kBadInput, "--catalog is required");
  std::vector<CatalogEntry> entries = read_catalog_json(read_file(cfg.catalog));
  std::string text;
  for (size_t i = 0; i < entries.size(); ++i) {
    if (index > 0 && static_cast<int>(i) + 1 != index) continue;
    text += to_dot(entries[i].tree, "gluing" + std::to_string(i + 1));
  }
  if (index > static_cast<int>(entries.size())) throw Error(ErrorCode::kBadInput, "no such entry");
  emit(cfg, text, out);
  return kOk;
}

int cmd_unfold_cone(const RunConfig& cfg, const Frustum& f, const std::string& bits, bool all,
                    std::ostream& out) {
  if (all) {
    UnfoldingCensus c = distinct_unfoldings(f);
    out << c.simple << " simple, " << c.distinct << " distinct\n";
    out << c.total << " cut trees, " << c.total - c.simple << " non-simple\n";
    for (const std::string& b : c.non_simple) out << "  non-simple: " << b << "\n";
    return c.simple == c.total && c.distinct == c.total ? kOk : kValidationFailure;
  }
  if (bits.empty()) throw Error(ErrorCode::kBadInput, "give --bits or --all");
  CutTree t = volcano_cut_tree(f, bits);
  Development dev = develop(f, t);
  CutTreeReport report = validate_cut_tree(f, t);
  if (cfg.format == "summary") {
    out << "bits " << bit_string(t) << "\n"
        << "segments " << t.segments.size() << "\n"
        << "cut tree " << (report.ok() ? "valid" : "invalid") << "\n"
        << "unfolding " << (dev.simple ? "simple" : "non-simple") << "\n"
        << "boundary vertices " << dev.boundary.vertices.size() << "\n";
  } else {
    emit(cfg, to_svg(dev.boundary, f), out);
  }
  return dev.simple && report.ok() ? kOk : kValidationFailure;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fold polygons into convex polytopes and unfold a truncated cone"};
  app.require_subcommand(1);
  RunConfig cfg;
  auto polygon_flags = [&cfg](CLI::App* sub) {
    sub->add_option("--shape", cfg.shape,
                    "triangle|square|latin-cross|star:m|ngon:n|rect:a,b|u-octagon");
    sub->add_option("--in", cfg.in, "polygon JSON file");
    sub->add_option("--epsilon", cfg.epsilon, "tolerance for float-backed values")
        ->check(CLI::PositiveNumber);
  };

  auto* enumerate = app.add_subcommand("enumerate", "enumerate all gluings");
  polygon_flags(enumerate);
  enumerate->add_option("--out", cfg.out, "output file");
  enumerate->add_option("--format", cfg.format, "summary|catalog|dot");
  enumerate->add_option("--budget", cfg.budget, "search state budget")->check(CLI::PositiveNumber);
  enumerate->add_flag("--quotient-symmetry", cfg.quotient, "one gluing per symmetry orbit");
  enumerate->add_flag("--profile", cfg.profile, "print search counters");

  auto* validate = app.add_subcommand("validate", "re-check a stored catalog");
  polygon_flags(validate);
  validate->add_option("--catalog", cfg.catalog, "catalog JSON file")->required();

  int k = 0;
  std::string bits;
  bool all = false;
  std::string rb = "2", rt = "1", height = "1";
  auto* cone = app.add_subcommand("unfold-cone", "unfold the truncated cone");
  cone->add_option("--k", k, "rim polygon size")->required();
  cone->add_option("--bits", bits, "bitstring of length k-1");
  cone->add_flag("--all", all, "sweep all bitstrings");
  cone->add_option("--r-bottom", rb, "bottom radius");
  cone->add_option("--r-top", rt, "top radius");
  cone->add_option("--height", height, "height");
  cone->add_option("--out", cfg.out, "SVG output file");
  cone->add_option("--format", cfg.format, "svg|summary");

  std::string x = "0";
  auto* halve = app.add_subcommand("perimeter-halve", "perimeter halving gluing");
  polygon_flags(halve);
  halve->add_option("--x", x, "offset from v1 along the boundary");
  halve->add_option("--out", cfg.out, "DOT output file");

  int m = 0;
  std::string top, bottom;
  auto* star = app.add_subcommand("star-family", "contraction gluings of the m-star");
  star->add_option("--m", m, "even star size")->required();
  star->add_option("--top", top, "top chain bits");
  star->add_option("--bottom", bottom, "bottom chain bits");
  star->add_flag("--all", all, "count all valid contraction gluings");
  star->add_option("--out", cfg.out, "output file");

  auto* e2e = app.add_subcommand("edge-to-edge", "edge-to-edge gluings");
  polygon_flags(e2e);
  e2e->add_option("--out", cfg.out, "output file");
  e2e->add_option("--format", cfg.format, "summary|catalog|dot");

  int index = 0;
  auto* dot = app.add_subcommand("export-dot", "DOT text for catalog entries");
  dot->add_option("--catalog", cfg.catalog, "catalog JSON file")->required();
  dot->add_option("--index", index, "one-based entry, default all");
  dot->add_option("--out", cfg.out, "output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kBadInput;
  }

  try {
    if (*enumerate) return cmd_enumerate(cfg, out, err);
    if (*validate) return cmd_validate(cfg, out, err);
    if (*cone) return cmd_unfold_cone(cfg, frustum_from(k, rb, rt, height), bits, all, out);
    if (*halve) return cmd_perimeter_halve(cfg, x, out);
    if (*star) return cmd_star(cfg, m, top, bottom, all, out);
    if (*e2e) return cmd_edge_to_edge(cfg, out);
    if (*dot) return cmd_export_dot(cfg, index, out);
  } catch (const Error& e) {
    err << e.what() << "\n";
    if (*validate && e.code() != ErrorCode::kBadInput && !is_polygon_error(e.code())) {
      return kValidationFailure;
    }
    return is_polygon_error(e.code()) ? kInvalidPolygon : kBadInput;
  }
  return kBadInput;
}

}  // namespace foldtree::cli
