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

#include "foldtree/io.h"

#include <json.hpp>

#include "foldtree/canonical.h"
#include "foldtree/classify.h"
#include "foldtree/error.h"

namespace foldtree {
namespace {

using nlohmann::json;

Rational rational_field(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  throw Error(ErrorCode::kBadInput, "expected a rational given as a \"p/q\" string");
}

json affine_to_json(const AffineExpr& e) {
  json terms = json::object();
  for (const auto& [id, c] : e.terms()) terms["t" + std::to_string(id)] = to_string(c);
  return {{"const", to_string(e.constant())}, {"terms", terms}};
}

ParamId param_id(const std::string& name) {
  if (name.size() < 2 || name[0] != 't') throw Error(ErrorCode::kBadInput, "bad parameter " + name);
  try {
    return std::stoi(name.substr(1));
  } catch (const std::exception&) {
    throw Error(ErrorCode::kBadInput, "bad parameter " + name);
  }
}

AffineExpr affine_from_json(const json& j) {
  AffineExpr e(rational_field(j.at("const")));
  for (const auto& [name, coeff] : j.at("terms").items()) {
    e += AffineExpr::Param(param_id(name), rational_field(coeff));
  }
  return e;
}

std::string interval_text(const Interval& iv) {
  if (iv.empty) return "empty";
  std::string out = iv.lo_open ? "(" : "[";
  out += iv.lo ? to_string(*iv.lo) : "-inf";
  out += ", ";
  out += iv.hi ? to_string(*iv.hi) : "inf";
  return out + (iv.hi_open ? ")" : "]");
}

}  // namespace

PolygonSpec read_polygon_json(const std::string& text, double eps) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kBadInput, std::string("polygon file is not valid JSON: ") + e.what());
  }
  try {
    if (j.contains("coords")) {
      std::vector<Point2> pts;
      for (const json& pt : j.at("coords")) {
        if (!pt.is_array() || pt.size() != 2) throw Error(ErrorCode::kBadInput, "point must be [x, y]");
        pts.push_back({rational_field(pt[0]), rational_field(pt[1])});
      }
      return polygon_from_coordinates(pts, eps);
    }
    if (j.contains("boundary")) {
      std::vector<BoundaryItem> items;
      for (const json& item : j.at("boundary")) {
        items.push_back({Length(rational_field(item.at("len"))),
                         Angle::PiTimes(rational_field(item.at("angle_pi")))});
      }
      return polygon_from_boundary(items, eps);
    }
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kBadInput, std::string("malformed polygon file: ") + e.what());
  }
  throw Error(ErrorCode::kBadInput, "polygon file needs \"coords\" or \"boundary\"");
}

std::string write_polygon_json(const PolygonSpec& p) {
  json items = json::array();
  for (int i = 0; i < p.n(); ++i) {
    items.push_back({{"len", p.length(i).to_string()},
                     {"angle_pi", p.angle(i).pi_units().to_string()}});
  }
  return json{{"boundary", items}}.dump(2) + "\n";
}

PolygonSpec u_octagon() {
  const std::vector<Point2> pts = {{0, 0}, {7, 0}, {7, 5}, {5, 5},
                                   {5, 1}, {2, 1}, {2, 5}, {0, 5}};
  PolygonSpec p = polygon_from_coordinates(pts);
  p.set_name("u-octagon");
  return p;
}

PolygonSpec named_shape(const std::string& name) {
  auto number = [&](const std::string& text) {
    try {
      size_t used = 0;
      int v = std::stoi(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return v;
    } catch (const std::exception&) {
      throw Error(ErrorCode::kBadInput, "bad number in shape '" + name + "'");
    }
  };
  if (name == "triangle") return equilateral_triangle();
  if (name == "square") return unit_square();
  if (name == "latin-cross") return latin_cross();
  if (name == "u-octagon") return u_octagon();
  if (name.rfind("star:", 0) == 0) return m_star(number(name.substr(5)));
  if (name.rfind("ngon:", 0) == 0) return regular_ngon(number(name.substr(5)));
  if (name.rfind("rect:", 0) == 0) {
    std::string rest = name.substr(5);
    auto comma = rest.find(',');
    if (comma == std::string::npos) throw Error(ErrorCode::kBadInput, "rect needs a,b");
    return rectangle(parse_rational(rest.substr(0, comma)), parse_rational(rest.substr(comma + 1)));
  }
  throw Error(ErrorCode::kBadInput, "unknown shape '" + name + "'");
}

std::string write_catalog_json(const std::vector<GluingTree>& trees, const PolygonSpec& p) {
  (void)p;
  json out = json::array();
  for (const GluingTree& t : trees) {
    json entry;
    entry["key"] = canonical_form(t).str();
    entry["shape"] = to_string(classify_shape(t));
    entry["leaves"] = t.leaf_count();
    json belts = json::array();
    for (const RollingBelt& b : t.belts) {
      belts.push_back({{"edges", {t.nodes[b.leaf_a].points.front().element().to_string(),
                                  t.nodes[b.leaf_b].points.front().element().to_string()}},
                       {"path", b.path},
                       {"interval", interval_text(b.interval)}});
    }
    entry["belts"] = belts;
    json nodes = json::array();
    for (const GluingNode& node : t.nodes) {
      json labels = json::array();
      for (const ElementId& id : node.label()) labels.push_back(id.to_string());
      json points = json::array();
      for (const BoundaryPoint& pt : node.points) {
        points.push_back({{"kind", pt.is_vertex() ? "vertex" : "interior"},
                          {"index", pt.edge_index + 1},
                          {"offset", affine_to_json(pt.offset)}});
      }
      nodes.push_back({{"labels", labels},
                       {"angle_sum_pi", node.angle_sum.to_string()},
                       {"points", points}});
    }
    entry["nodes"] = nodes;
    json arcs = json::array();
    for (auto [a, b] : t.arcs) arcs.push_back({a, b});
    entry["arcs"] = arcs;
    json params = json::array();
    for (ParamId id : t.region.parameters()) params.push_back("t" + std::to_string(id));
    json constraints = json::array();
    for (const LinearConstraint& c : t.region.constraints()) {
      constraints.push_back({{"expr", affine_to_json(c.expr)}, {"strict", c.strict}});
    }
    json rep = json::object();
    if (!t.region.parameters().empty()) {
      for (const auto& [id, v] : t.region.representative()) rep["t" + std::to_string(id)] = to_string(v);
    }
    entry["region"] = {{"parameters", params}, {"constraints", constraints}, {"representative", rep}};
    out.push_back(entry);
  }
  return out.dump(2) + "\n";
}

std::vector<CatalogEntry> read_catalog_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kBadInput, std::string("catalog is not valid JSON: ") + e.what());
  }
  if (!j.is_array()) throw Error(ErrorCode::kBadInput, "catalog must be a JSON array");
  std::vector<CatalogEntry> entries;
  try {
    for (const json& e : j) {
      CatalogEntry entry;
      entry.key = e.value("key", "");
      entry.shape = e.value("shape", "");
      GluingTree& t = entry.tree;
      for (const json& node : e.at("nodes")) {
        GluingNode g;
        for (const json& pt : node.at("points")) {
          BoundaryPoint bp;
          std::string kind = pt.at("kind").get<std::string>();
          if (kind != "vertex" && kind != "interior") {
            throw Error(ErrorCode::kBadInput, "unknown point kind " + kind);
          }
          bp.kind = kind == "vertex" ? PointKind::kVertex : PointKind::kInterior;
          bp.edge_index = pt.at("index").get<int>() - 1;
          bp.offset = affine_from_json(pt.at("offset"));
          g.points.push_back(std::move(bp));
        }
        g.angle_sum = Scalar(rational_field(node.at("angle_sum_pi")));
        t.nodes.push_back(std::move(g));
      }
      for (const json& arc : e.at("arcs")) t.arcs.emplace_back(arc.at(0).get<int>(), arc.at(1).get<int>());
      const json& region = e.at("region");
      for (const json& name : region.at("parameters")) t.region.add_parameter(param_id(name.get<std::string>()));
      for (const json& c : region.at("constraints")) {
        t.region.add(affine_from_json(c.at("expr")), c.at("strict").get<bool>());
      }
      Assignment rep;
      for (const auto& [name, v] : region.at("representative").items()) rep[param_id(name)] = rational_field(v);
      if (!rep.empty()) t.region.pin_representative(rep);
      t.belts = find_rolling_belts(t);
      entries.push_back(std::move(entry));
    }
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kBadInput, std::string("malformed catalog entry: ") + e.what());
  }
  return entries;
}

}  // namespace foldtree
