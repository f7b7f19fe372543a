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

// Prints one PASS/FAIL line per acceptance criterion and exits nonzero when
// any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "foldtree/aleksandrov.h"
#include "foldtree/canonical.h"
#include "foldtree/classify.h"
#include "foldtree/edge_to_edge.h"
#include "foldtree/enumerate.h"
#include "foldtree/families.h"
#include "foldtree/io.h"
#include "foldtree/symmetry.h"
#include "foldtree/unfold.h"
#include "support/oracles.h"
#include "support/properties.h"

namespace ft = foldtree;
namespace fts = foldtree::testing;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Timed {
  ft::EnumerationResult result;
  double seconds = 0;
};

Timed timed_enumerate(const ft::PolygonSpec& p) {
  auto start = Clock::now();
  Timed t{ft::enumerate_gluings(p)};
  t.seconds = seconds_since(start);
  return t;
}

std::string secs(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2fs", s);
  return buf;
}

bool report(int id, bool pass, const std::string& detail) {
  std::cout << "criterion " << id << ": " << (pass ? "PASS" : "FAIL") << " | " << detail
            << std::endl;
  return pass;
}

std::map<std::string, int> shapes(const std::vector<ft::GluingTree>& trees) {
  std::map<std::string, int> out;
  for (const auto& t : trees) ++out[ft::to_string(ft::classify_shape(t))];
  return out;
}

std::string histogram(const std::map<std::string, int>& h) {
  std::string s;
  for (const auto& [k, v] : h) s += (s.empty() ? "" : " ") + k + ":" + std::to_string(v);
  return s;
}

int violations(const std::vector<ft::GluingTree>& trees, const ft::PolygonSpec& p) {
  int bad = 0;
  for (const auto& t : trees) {
    try {
      const auto v = ft::check_aleksandrov(t, p);
      const auto c = ft::structural_check(t, p);
      if (!v.valid || !c.item1 || !c.item2 || !c.item3 || !c.item4) ++bad;
    } catch (const std::exception&) {
      ++bad;
    }
  }
  return bad;
}

}  // namespace

int main() {
  int failed = 0;
  auto tally = [&failed](bool ok) { failed += ok ? 0 : 1; };

  const Timed tri = timed_enumerate(ft::equilateral_triangle());
  tally(report(1, tri.result.trees.size() == 19 && tri.seconds < 10,
               "triangle " + std::to_string(tri.result.trees.size()) + " gluings (want 19) in " +
                   secs(tri.seconds)));

  const ft::PolygonSpec square = ft::unit_square();
  const Timed sq = timed_enumerate(square);
  const auto orbits = ft::quotient_by_symmetry(sq.result.trees, ft::symmetry_group(square), square);
  tally(report(2, sq.result.trees.size() == 43 && orbits.size() == 10 && sq.seconds < 60,
               "square " + std::to_string(sq.result.trees.size()) + " gluings (want 43), " +
                   std::to_string(orbits.size()) + " orbits under D4 (want 10) in " +
                   secs(sq.seconds)));

  const ft::PolygonSpec cross = ft::latin_cross();
  const Timed cr = timed_enumerate(cross);
  tally(report(3, cr.result.trees.size() == 85 && cr.seconds < 900,
               "Latin cross " + std::to_string(cr.result.trees.size()) +
                   " gluings (want 85) in " + secs(cr.seconds)));

  {
    std::vector<std::pair<ft::PolygonSpec, std::vector<ft::GluingTree>>> catalogs = {
        {ft::equilateral_triangle(), tri.result.trees},
        {square, sq.result.trees},
        {cross, cr.result.trees}};
    for (const ft::PolygonSpec& p :
         {ft::regular_ngon(5), ft::regular_ngon(6), ft::regular_ngon(7), ft::regular_ngon(8),
          ft::rectangle(2, 1), ft::m_star(4), ft::m_star(6)}) {
      catalogs.emplace_back(p, ft::enumerate_gluings(p).trees);
    }
    for (const ft::PolygonSpec& p : {square, ft::rectangle(2, 1), ft::regular_ngon(6)}) {
      catalogs.emplace_back(p, ft::enumerate_edge_to_edge(p));
    }
    int trees = 0;
    int bad = 0;
    for (const auto& [p, ts] : catalogs) {
      trees += static_cast<int>(ts.size());
      bad += violations(ts, p);
    }
    tally(report(4, bad == 0,
                 std::to_string(bad) + " violations across " + std::to_string(trees) +
                     " trees in " + std::to_string(catalogs.size()) + " catalogs"));
  }

  {
    bool ok = true;
    std::string detail;
    for (int n : {3, 4, 5, 6, 7, 8}) {
      const auto h = shapes(ft::enumerate_gluings(ft::regular_ngon(n)).trees);
      for (const auto& [shape, count] : h) {
        const bool allowed = shape == "|" || shape == "Y" ||
                             (n == 4 && (shape == "I" || shape == "+"));
        if (!allowed && count > 0) ok = false;
      }
      detail += (detail.empty() ? "" : "; ") + ("n=" + std::to_string(n) + " ") + histogram(h);
    }
    tally(report(5, ok, detail));
  }

  {
    const auto r = fts::perimeter_halving_valid(100, 10);
    tally(report(6, r.ok() && r.cases == 1000,
                 std::to_string(r.cases - r.failures) + "/" + std::to_string(r.cases) +
                     " valid" + (r.failures ? ", first failure " + r.first_failure : "")));
  }

  {
    bool ok = true;
    std::string detail;
    std::set<std::string> m4_keys;
    for (int m : {4, 6, 8}) {
      const int half = m / 2;
      std::set<std::string> keys;
      for (int a = 0; a < (1 << half); ++a) {
        for (int b = 0; b < (1 << half); ++b) {
          std::vector<bool> top(half), bottom(half);
          for (int i = 0; i < half; ++i) {
            top[i] = (a >> i) & 1;
            bottom[i] = (b >> i) & 1;
          }
          const auto r = ft::star_contraction_family(m, top, bottom);
          if (r.valid) keys.insert(ft::canonical_form(r.tree).str());
        }
      }
      const int want = 1 << (half - 1);
      if (static_cast<int>(keys.size()) < want) ok = false;
      detail += "m=" + std::to_string(m) + " " + std::to_string(keys.size()) + " (>= " +
                std::to_string(want) + "); ";
      if (m == 4) m4_keys = keys;
    }
    const auto all4 = fts::key_set(ft::enumerate_gluings(ft::m_star(4)).trees);
    int missing = 0;
    for (const auto& k : m4_keys) missing += all4.count(k) ? 0 : 1;
    if (missing) ok = false;
    detail += "m=4 contraction gluings missing from enumeration: " + std::to_string(missing);
    tally(report(7, ok, detail));
  }

  {
    bool ok = true;
    std::string detail;
    for (const ft::PolygonSpec& p : {square, ft::rectangle(2, 1), ft::regular_ngon(3),
                                     ft::regular_ngon(4), ft::regular_ngon(5),
                                     ft::regular_ngon(6)}) {
      const auto dp = ft::enumerate_edge_to_edge(p);
      const auto brute = fts::brute_force_edge_to_edge(p);
      const auto dp_keys = fts::key_set(dp);
      const auto general = fts::key_set(ft::enumerate_gluings(p).trees);
      bool subset = std::includes(general.begin(), general.end(), dp_keys.begin(), dp_keys.end());
      bool same = dp_keys == brute.keys && ft::count_edge_to_edge(p) == brute.matchings &&
                  dp.size() == brute.matchings;
      if (!subset || !same) ok = false;
      detail += p.name() + " " + std::to_string(dp.size()) + "/" +
                std::to_string(brute.matchings) + (subset ? "" : " not-subset") + "; ";
    }
    tally(report(8, ok, detail + "(dp/brute force)"));
  }

  {
    const ft::PolygonSpec u = ft::u_octagon();
    const auto r = ft::enumerate_gluings(u);
    tally(report(9, r.exhaustive && r.trees.empty(),
                 "U-octagon: " + std::to_string(r.trees.size()) + " gluings, exhaustive=" +
                     (r.exhaustive ? "yes" : "no")));
  }

  {
    bool ok = true;
    std::string detail;
    for (int k : {8, 3, 4, 5, 6}) {
      ft::Frustum f;
      f.k = k;
      auto start = Clock::now();
      const auto census = ft::distinct_unfoldings(f);
      int valid = 0;
      for (int b = 0; b < (1 << (k - 1)); ++b) {
        std::vector<bool> bits(k - 1);
        for (int i = 0; i < k - 1; ++i) bits[i] = (b >> i) & 1;
        if (ft::validate_cut_tree(f, ft::volcano_cut_tree(f, bits)).ok()) ++valid;
      }
      const double s = seconds_since(start);
      const int want = 1 << (k - 1);
      if (census.total != want || census.simple != want || census.distinct != want ||
          valid != want || (k == 8 && s >= 30)) {
        ok = false;
      }
      detail += "k=" + std::to_string(k) + " " + std::to_string(census.total) + " trees " +
                std::to_string(valid) + " valid " + std::to_string(census.simple) + " simple " +
                std::to_string(census.distinct) + " distinct";
      if (k == 8) detail += " in " + secs(s);
      detail += "; ";
    }
    tally(report(10, ok, detail));
  }

  {
    bool ok = true;
    int count = 0;
    std::map<std::string, int> h;
    for (ft::Rational t = 0; t <= 3; t += ft::Rational(1, 4), ++count) {
      try {
        const auto tree = ft::fold_rectangle_family(2, 1, t);
        const auto v = ft::check_aleksandrov(tree, ft::rectangle(2, 1));
        const std::string s = ft::to_string(ft::classify_shape(tree));
        ++h[s];
        if (!v.valid || (s != "I" && s != "+" && s != "|")) ok = false;
      } catch (const std::exception&) {
        ok = false;
      }
    }
    tally(report(11, ok, std::to_string(count) + " positions, shapes " + histogram(h)));
  }

  {
    bool ok = true;
    std::string detail;
    for (const auto& r :
         {fts::development_isometry(1000), fts::boundary_twice_cut(1000),
          fts::relabel_congruence(1000), fts::seed_independence(1000)}) {
      if (!r.ok() || r.cases < 1000) ok = false;
      detail += r.name + " " + std::to_string(r.failures) + "/" + std::to_string(r.cases) +
                " failed" + (r.failures ? " (" + r.first_failure + ")" : "") + "; ";
    }
    tally(report(12, ok, detail));
  }

  std::cout << (12 - failed) << "/12 criteria pass" << std::endl;
  return failed == 0 ? 0 : 1;
}
