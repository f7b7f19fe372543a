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

#include "foldtree/enumerate.h"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <mutex>
#include <sstream>
#include <thread>

#include "foldtree/error.h"

namespace foldtree {
namespace {

// Points live on the unrolled boundary: k is an unrolled vertex index and
// pos an absolute position, so an arc never wraps around.
struct SPoint {
  int k = 0;
  bool vertex = true;
  AffineExpr pos;
};

struct PendingArc {
  SPoint a;
  SPoint b;
  int node = 0;
};

struct ZipState {
  ParamRegion region;
  std::vector<std::vector<SPoint>> nodes;
  std::vector<std::pair<int, int>> arcs;
  std::vector<PendingArc> pending;
  PendingArc current;
  int next_param = 0;
};

void substitute(ZipState& s, ParamId id, const AffineExpr& value) {
  s.region.substitute(id, value);
  auto fix = [&](SPoint& pt) {
    if (!pt.vertex) pt.pos = pt.pos.substitute(id, value);
  };
  for (auto& node : s.nodes)
    for (SPoint& pt : node) fix(pt);
  for (PendingArc& arc : s.pending) {
    fix(arc.a);
    fix(arc.b);
  }
  fix(s.current.a);
  fix(s.current.b);
}

class Search {
 public:
  Search(const PolygonSpec& p, const EnumerateOptions& opts,
         std::atomic<std::uint64_t>& states, std::atomic<bool>& aborted)
      : p_(p), opts_(opts), n_(p.n()), states_(states), aborted_(aborted) {
    for (int k = 0; k <= 2 * n_ + 1; ++k) vpos_.push_back(p.vertex_position(k));
    max_degree_ = opts.max_node_degree > 0 ? opts.max_node_degree : n_;
  }

  void run(const SeedChoice& seed) {
    ZipState st;
    const Rational L = p_.exact_perimeter();
    if (const auto* v = std::get_if<VertexSeed>(&seed)) {
      SPoint a{v->vertex, true, AffineExpr(vpos(v->vertex))};
      SPoint b{v->vertex + n_, true, AffineExpr(vpos(v->vertex + n_))};
      st.nodes.push_back({a});
      st.pending.push_back({a, b, 0});
    } else {
      const int e = std::get<FoldSeed>(seed).edge;
      ParamId t = st.next_param++;
      st.region.add_parameter(t);
      AffineExpr tp = AffineExpr::Param(t);
      st.region.add(tp - AffineExpr(vpos(e)), true);
      st.region.add(AffineExpr(vpos(e + 1)) - tp, true);
      SPoint a{e, false, tp};
      SPoint b{e + n_, false, tp + AffineExpr(L)};
      st.nodes.push_back({a});
      st.pending.push_back({a, b, 0});
    }
    step(std::move(st));
  }

  std::map<CanonicalKey, GluingTree>& results() { return results_; }
  const SearchProfile& profile() const { return profile_; }

 private:
  const Rational& vpos(int k) const { return vpos_[k]; }
  Scalar angle(const SPoint& pt) const {
    return pt.vertex ? p_.angle(pt.k).pi_units() : Scalar(1);
  }
  AffineExpr position(const SPoint& pt) const {
    return pt.vertex ? AffineExpr(vpos(pt.k)) : pt.pos;
  }

  // Calls f once for every feasible sign of d, on a state where that sign holds.
  template <class F>
  void branch_sign(const ZipState& st, const AffineExpr& d, F&& f) {
    if (d.is_constant()) {
      const Rational& c = d.constant();
      ZipState copy = st;
      f(copy, c > 0 ? 1 : (c < 0 ? -1 : 0));
      return;
    }
    for (int sign : {-1, 0, 1}) {
      ZipState s = st;
      if (sign == 0) {
        auto [var, coeff] = d.terms().front();
        AffineExpr rest = d.substitute(var, AffineExpr(0));
        substitute(s, var, rest * (Rational(-1) / coeff));
      } else {
        s.region.add(d * Rational(sign), true);
      }
      if (!s.region.feasible()) {
        ++profile_.infeasible_branches;
        continue;
      }
      f(s, sign);
    }
  }

  void step(ZipState st) {
    if (aborted_.load(std::memory_order_relaxed)) return;
    ++profile_.states;
    if (states_.fetch_add(1, std::memory_order_relaxed) + 1 > opts_.state_budget) {
      aborted_ = true;
      return;
    }
    if (opts_.verify_regions && !st.region.feasible()) ++profile_.infeasible_descendants;
    if (st.pending.empty()) {
      finish(st);
      return;
    }
    st.current = std::move(st.pending.back());
    st.pending.pop_back();
    const int ka = st.current.a.k + 1;
    const int kb = st.current.b.vertex ? st.current.b.k - 1 : st.current.b.k;
    auto da = [&](const ZipState& s) {
      return AffineExpr(vpos(ka)) - position(s.current.a);
    };
    auto db = [&](const ZipState& s) {
      return position(s.current.b) - AffineExpr(vpos(kb));
    };
    auto half = [&](const ZipState& s) {
      return (position(s.current.b) - position(s.current.a)) * Rational(1, 2);
    };
    branch_sign(st, da(st) - half(st), [&](ZipState& s1, int c1) {
      branch_sign(s1, db(s1) - half(s1), [&](ZipState& s2, int c2) {
        if (c1 > 0 && c2 > 0) {
          AffineExpr mid = (position(s2.current.a) + position(s2.current.b)) * Rational(1, 2);
          add_leaf(s2, SPoint{s2.current.a.k, false, mid});
        } else if (c1 == 0 && c2 == 0) {
          add_leaf(s2, SPoint{ka, true, AffineExpr(vpos(ka))});
        } else if (c1 >= 0 && c2 >= 0) {
          ++profile_.infeasible_branches;
        } else {
          branch_sign(s2, da(s2) - db(s2), [&](ZipState& s3, int c3) {
            const PendingArc cur = s3.current;
            if (c3 < 0) {
              SPoint p{ka, true, AffineExpr(vpos(ka))};
              SPoint q{kb, false, position(cur.b) - da(s3)};
              event(s3, p, q, cur.node);
            } else if (c3 > 0) {
              SPoint p{cur.a.k, false, position(cur.a) + db(s3)};
              SPoint q{kb, true, AffineExpr(vpos(kb))};
              event(s3, p, q, cur.node);
            } else {
              event(s3, SPoint{ka, true, AffineExpr(vpos(ka))},
                    SPoint{kb, true, AffineExpr(vpos(kb))}, cur.node);
            }
          });
        }
      });
    });
  }

  void add_leaf(ZipState& s, SPoint pt) {
    int id = static_cast<int>(s.nodes.size());
    s.nodes.push_back({std::move(pt)});
    s.arcs.emplace_back(s.current.node, id);
    step(std::move(s));
  }

  // Attaches node points in order and pushes the sub-arcs between them.
  void open_node(const ZipState& base, int parent, std::vector<SPoint> pts) {
    ZipState s = base;
    int id = static_cast<int>(s.nodes.size());
    s.arcs.emplace_back(parent, id);
    for (size_t i = 0; i + 1 < pts.size(); ++i) s.pending.push_back({pts[i], pts[i + 1], id});
    s.nodes.push_back(std::move(pts));
    step(std::move(s));
  }

  static int vertex_count(const SPoint& p, const SPoint& q) {
    return (p.vertex ? 1 : 0) + (q.vertex ? 1 : 0);
  }

  void event(ZipState& st, const SPoint& p, const SPoint& q, int parent) {
    const double eps = opts_.epsilon;
    Scalar budget = Scalar(2) - angle(p) - angle(q);
    if (compare(budget, Scalar(0), eps) < 0) {
      ++profile_.angle_pruned;
      return;
    }
    const int nonvertex = (p.vertex ? 0 : 1) + (q.vertex ? 0 : 1);
    const int lo = p.k + 1;
    const int hi = q.vertex ? q.k - 1 : q.k;

    open_node(st, parent, {p, q});

    std::vector<int> chosen;
    auto vertex_point = [&](int k) { return SPoint{k, true, AffineExpr(vpos(k))}; };
    auto build = [&](const std::vector<int>& verts, const SPoint* extra) {
      std::vector<SPoint> pts{p};
      bool placed = extra == nullptr;
      for (int k : verts) {
        if (!placed && k > extra->k) {
          pts.push_back(*extra);
          placed = true;
        }
        pts.push_back(vertex_point(k));
      }
      if (!placed) pts.push_back(*extra);
      pts.push_back(q);
      return pts;
    };
    std::function<void(int, Scalar)> subsets = [&](int from, Scalar left) {
      if (!chosen.empty()) {
        if (static_cast<int>(chosen.size()) + vertex_count(p, q) > max_degree_) {
          ++profile_.degree_pruned;
        } else {
          open_node(st, parent, build(chosen, nullptr));
        }
      }
      for (int k = std::max(from, lo); k <= hi; ++k) {
        Scalar a = p_.angle(k).pi_units();
        if (compare(a, left, eps) > 0) continue;
        chosen.push_back(k);
        subsets(k + 1, left - a);
        chosen.pop_back();
      }
    };
    subsets(lo, budget);

    if (nonvertex != 0 || compare(budget, Scalar(1), eps) < 0) return;
    if (st.region.dimension() + 1 > opts_.max_parameters) {
      ++profile_.parameter_pruned;
      return;
    }
    for (int edge = p.k; edge < q.k; ++edge) {
      ZipState with = st;
      ParamId t = with.next_param++;
      with.region.add_parameter(t);
      AffineExpr tp = AffineExpr::Param(t);
      with.region.add(tp - AffineExpr(vpos(edge)), true);
      with.region.add(AffineExpr(vpos(edge + 1)) - tp, true);
      SPoint free{edge, false, tp};
      std::function<void(int, Scalar)> with_free = [&](int from, Scalar left) {
        if (static_cast<int>(chosen.size()) + vertex_count(p, q) > max_degree_) {
          ++profile_.degree_pruned;
        } else {
          open_node(with, parent, build(chosen, &free));
        }
        for (int k = std::max(from, lo); k <= hi; ++k) {
          Scalar a = p_.angle(k).pi_units();
          if (compare(a, left, eps) > 0) continue;
          chosen.push_back(k);
          with_free(k + 1, left - a);
          chosen.pop_back();
        }
      };
      with_free(lo, budget - Scalar(1));
    }
  }

  void finish(const ZipState& st) {
    ++profile_.completions;
    GluingTree tree;
    for (const auto& spts : st.nodes) {
      std::vector<BoundaryPoint> pts;
      for (const SPoint& sp : spts) {
        int edge = p_.wrap(sp.k);
        if (sp.vertex) {
          pts.push_back(BoundaryPoint::Vertex(edge));
        } else {
          pts.push_back(BoundaryPoint::Interior(edge, sp.pos - AffineExpr(vpos(sp.k))));
        }
      }
      tree.nodes.push_back(make_node(std::move(pts), p_));
    }
    tree.arcs = st.arcs;
    CanonicalKey key = canonical_form(tree);
    if (results_.count(key)) {
      ++profile_.duplicates;
      return;
    }
    std::vector<ParamId> used;
    for (const GluingNode& node : tree.nodes)
      for (const BoundaryPoint& pt : node.points)
        for (const auto& term : pt.offset.terms()) used.push_back(term.first);
    tree.region = st.region;
    tree.region.prune_parameters(used);
    results_.emplace(std::move(key), std::move(tree));
  }

  const PolygonSpec& p_;
  const EnumerateOptions& opts_;
  const int n_;
  int max_degree_ = 0;
  std::vector<Rational> vpos_;
  std::atomic<std::uint64_t>& states_;
  std::atomic<bool>& aborted_;
  std::map<CanonicalKey, GluingTree> results_;
  SearchProfile profile_;
};

void accumulate(SearchProfile& into, const SearchProfile& from) {
  into.states += from.states;
  into.completions += from.completions;
  into.duplicates += from.duplicates;
  into.infeasible_branches += from.infeasible_branches;
  into.angle_pruned += from.angle_pruned;
  into.parameter_pruned += from.parameter_pruned;
  into.degree_pruned += from.degree_pruned;
  into.infeasible_descendants += from.infeasible_descendants;
}

}  // namespace

std::vector<SeedChoice> all_seeds(const PolygonSpec& p) {
  std::vector<SeedChoice> seeds;
  for (int v = 0; v < p.n(); ++v) seeds.emplace_back(VertexSeed{v});
  for (int e = 0; e < p.n(); ++e) seeds.emplace_back(FoldSeed{e});
  return seeds;
}

int resolve_thread_count(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("FOLDTREE_THREADS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 1;
}

std::string SearchProfile::to_string() const {
  std::ostringstream out;
  out << "states " << states << "\n"
      << "completions " << completions << "\n"
      << "duplicates " << duplicates << "\n"
      << "infeasible_branches " << infeasible_branches << "\n"
      << "angle_pruned " << angle_pruned << "\n"
      << "parameter_pruned " << parameter_pruned << "\n"
      << "degree_pruned " << degree_pruned << "\n";
  return out.str();
}

EnumerationResult enumerate_gluings(const PolygonSpec& p, const EnumerateOptions& opts) {
  if (!p.lengths_exact()) {
    throw Error(ErrorCode::kInexactPolygon,
                "enumeration needs exact edge lengths; use a boundary description");
  }
  const std::vector<SeedChoice> seeds = opts.seeds ? *opts.seeds : all_seeds(p);
  for (const SeedChoice& s : seeds) {
    int idx = std::visit([](const auto& c) {
      if constexpr (std::is_same_v<std::decay_t<decltype(c)>, VertexSeed>) return c.vertex;
      else return c.edge;
    }, s);
    if (idx < 0 || idx >= p.n()) throw Error(ErrorCode::kBadParameter, "seed out of range");
  }

  std::atomic<std::uint64_t> states{0};
  std::atomic<bool> aborted{false};
  std::vector<std::map<CanonicalKey, GluingTree>> per_seed(seeds.size());
  std::vector<SearchProfile> profiles(seeds.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i = next++; i < seeds.size(); i = next++) {
      Search search(p, opts, states, aborted);
      search.run(seeds[i]);
      per_seed[i] = std::move(search.results());
      profiles[i] = search.profile();
    }
  };
  const int threads = std::min<int>(resolve_thread_count(opts.threads),
                                    static_cast<int>(std::max<size_t>(seeds.size(), 1)));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }

  EnumerationResult result;
  std::map<CanonicalKey, GluingTree> merged;
  for (size_t i = 0; i < seeds.size(); ++i) {
    accumulate(result.profile, profiles[i]);
    for (auto& [key, tree] : per_seed[i]) {
      if (!merged.emplace(key, tree).second) ++result.profile.duplicates;
    }
  }
  for (auto& [key, tree] : merged) {
    tree.belts = find_rolling_belts(tree);
    result.keys.push_back(key);
    result.trees.push_back(std::move(tree));
  }
  result.exhaustive = !aborted.load();
  return result;
}

}  // namespace foldtree
