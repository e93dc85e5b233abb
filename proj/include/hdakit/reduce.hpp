#ifndef HDAKIT_REDUCE_HPP
#define HDAKIT_REDUCE_HPP

#include <algorithm>
#include <cstddef>
#include <deque>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "hdakit/error.hpp"
#include "hdakit/hda.hpp"
#include "hdakit/homology.hpp"
#include "hdakit/languages.hpp"
#include "hdakit/precubical.hpp"

namespace hdakit {

/// Site kinds in driver priority order.
enum class SiteKind { elementary, vertex_star, front_face, back_face, merge };

inline std::string site_kind_name(SiteKind k) {
  switch (k) {
    case SiteKind::elementary: return "elementary";
    case SiteKind::vertex_star: return "vertex-star";
    case SiteKind::front_face: return "front-face";
    case SiteKind::back_face: return "back-face";
    case SiteKind::merge: return "merge";
  }
  return "";
}

inline SiteKind site_kind_from_name(const std::string& s) {
  for (auto k : {SiteKind::elementary, SiteKind::vertex_star, SiteKind::front_face, SiteKind::back_face, SiteKind::merge})
    if (site_kind_name(k) == s) return k;
  throw ArgumentError("unknown site kind '" + s + "'");
}

/// A reduction site, addressed by cube names so that it survives re-indexing.
/// `k`, `i` select the face d^k_i of `cube`; `corner` selects the vertex
/// x♯(corner); `chain` lists the edges of a merge.
struct CollapseSite {
  SiteKind kind = SiteKind::elementary;
  std::string cube;
  int k = 0;
  int i = 0;
  std::vector<int> corner;
  std::vector<std::string> chain;

  auto key() const { return std::tie(kind, cube, k, i, corner, chain); }
  bool operator<(const CollapseSite& o) const { return key() < o.key(); }
  bool operator==(const CollapseSite& o) const { return key() == o.key(); }

  std::string describe() const {
    switch (kind) {
      case SiteKind::elementary:
      case SiteKind::front_face:
      case SiteKind::back_face:
        return site_kind_name(kind) + " d^" + std::to_string(k) + "_" + std::to_string(i) + " " + cube;
      case SiteKind::vertex_star: {
        std::string c;
        for (int b : corner) c += std::to_string(b);
        return "vertex-star " + cube + "#(" + c + ")";
      }
      case SiteKind::merge: {
        std::string c;
        for (std::size_t j = 0; j < chain.size(); ++j) c += (j ? " " : "") + chain[j];
        return "merge " + c;
      }
    }
    return "";
  }
};

enum class HypothesisStatus { not_needed, verified_exact, verified_bounded, counterexample, unknown };

inline std::string status_name(HypothesisStatus s) {
  switch (s) {
    case HypothesisStatus::not_needed: return "not-needed";
    case HypothesisStatus::verified_exact: return "verified-exact";
    case HypothesisStatus::verified_bounded: return "verified-up-to-N";
    case HypothesisStatus::counterexample: return "counterexample";
    case HypothesisStatus::unknown: return "unknown";
  }
  return "";
}

inline HypothesisStatus status_from_name(const std::string& s) {
  for (auto x : {HypothesisStatus::not_needed, HypothesisStatus::verified_exact, HypothesisStatus::verified_bounded,
                 HypothesisStatus::counterexample, HypothesisStatus::unknown})
    if (status_name(x) == s) return x;
  throw ArgumentError("unknown hypothesis status '" + s + "'");
}

struct ReducePolicy {
  bool strict = false;              // apply only exactly verified path hypotheses
  std::size_t bound = 8;            // path length bound for cyclic hypothesis checks
  std::size_t path_budget = 200000; // enumeration budget before reporting "unknown"
  bool audit = false;               // soundness audit after every step
  std::size_t audit_bound = 8;
  bool full_weak_regularity = false;
};

struct StepResult {
  Hda result;
  HypothesisStatus status = HypothesisStatus::not_needed;
  std::string witness_edge;  // edge y used by a back-face collapse
  std::string detail;        // counterexample path, if any
};

/// star(d^k_i x) = {x, d^k_i x}.
inline bool is_free_face(const PrecubicalSet& p, CubeId x, int k, int i) {
  CubeId f = p.face(x, k, i);
  auto s = star(p, f);
  return s.size() == 2 && std::find(s.begin(), s.end(), x) != s.end();
}

namespace detail {

inline CubeId site_cube(const Hda& a, const CollapseSite& s) {
  auto id = a.cubes.find(s.cube);
  if (!id) throw Refusal("cube", "no cube named '" + s.cube + "'");
  return *id;
}

inline void require_free_regular(const Hda& a, CubeId x, int k, int i) {
  const auto& p = a.cubes;
  if (i < 1 || i > p.dim(x)) throw Refusal("face-index", "no face d^" + std::to_string(k) + "_" + std::to_string(i));
  if (!is_regular(p, x)) throw Refusal("regular", "'" + p.name(x) + "' is not regular");
  if (!is_free_face(p, x, k, i))
    throw Refusal("free-face", "d^" + std::to_string(k) + "_" + std::to_string(i) + " '" + p.name(x) + "' is not free");
}

inline bool is_initial_or_final(const Hda& a, CubeId v) { return v == a.initial || a.is_final(v); }

/// Vertices reachable from s and co-reachable to t, using edges not in `banned`.
inline std::vector<bool> corridor(const PrecubicalSet& p, CubeId s, CubeId t, CubeId banned) {
  std::vector<bool> fwd(p.size(), false), bwd(p.size(), false);
  std::deque<CubeId> todo{s};
  fwd[s] = true;
  while (!todo.empty()) {
    CubeId v = todo.front();
    todo.pop_front();
    for (CubeId e : p.out_edges(v))
      if (e != banned && !fwd[p.target(e)]) {
        fwd[p.target(e)] = true;
        todo.push_back(p.target(e));
      }
  }
  todo = {t};
  bwd[t] = true;
  while (!todo.empty()) {
    CubeId v = todo.front();
    todo.pop_front();
    for (CubeId e : p.in_edges(v))
      if (e != banned && !bwd[p.source(e)]) {
        bwd[p.source(e)] = true;
        todo.push_back(p.source(e));
      }
  }
  for (std::size_t v = 0; v < p.size(); ++v) fwd[v] = fwd[v] && bwd[v];
  return fwd;
}

inline bool has_cycle(const PrecubicalSet& p, const std::vector<bool>& inside, CubeId banned) {
  std::vector<int> color(p.size(), 0);
  auto rec = [&](auto&& self, CubeId v) -> bool {
    color[v] = 1;
    for (CubeId e : p.out_edges(v)) {
      if (e == banned) continue;
      CubeId w = p.target(e);
      if (!inside[w]) continue;
      if (color[w] == 1) return true;
      if (color[w] == 0 && self(self, w)) return true;
    }
    color[v] = 2;
    return false;
  };
  for (CubeId v : p.vertices())
    if (inside[v] && color[v] == 0 && rec(rec, v)) return true;
  return false;
}

/// Every path ω avoiding `removed` from a vertex of `starts` to `target` must
/// be dihomotopic in A to ν·f with ν avoiding `removed`.
inline HypothesisStatus check_back_hypothesis(const Hda& a, const std::vector<CubeId>& starts, CubeId target,
                                              CubeId f, CubeId removed, const ReducePolicy& policy,
                                              std::string* counterexample) {
  const auto& p = a.cubes;
  SwapIndex swaps(p);
  bool bounded = false;
  std::size_t visited = 0;
  for (CubeId s : starts) {
    auto inside = corridor(p, s, target, removed);
    if (!inside[s]) continue;
    bool cyclic = has_cycle(p, inside, removed);
    bounded = bounded || cyclic;
    std::size_t limit = cyclic ? policy.bound : p.size();
    std::set<Path> done;
    Path cur{s, {}};
    bool failed = false, out_of_budget = false;
    // The hypothesis only depends on the dihomotopy class, so a verified
    // class is recorded as a whole.
    auto accepts = [&](const Path& w) {
      auto cls = dihomotopy_class(swaps, w);
      bool ok = false;
      for (const auto& u : cls) {
        bool avoids = std::find(u.edges.begin(), u.edges.end(), removed) == u.edges.end();
        if (avoids && !u.edges.empty() && u.edges.back() == f) ok = true;
      }
      if (ok)
        for (const auto& u : cls)
          if (std::find(u.edges.begin(), u.edges.end(), removed) == u.edges.end()) done.insert(u);
      return ok;
    };
    auto rec = [&](auto&& self, CubeId at) -> void {
      if (failed || out_of_budget) return;
      if (++visited > policy.path_budget) {
        out_of_budget = true;
        return;
      }
      if (at == target && !done.count(cur)) {
        if (!accepts(cur)) {
          failed = true;
          if (counterexample) *counterexample = format_path(p, cur);
          return;
        }
      }
      if (cur.edges.size() == limit) return;
      for (CubeId e : sorted_by_name(p, p.out_edges(at))) {
        if (e == removed || !inside[p.target(e)]) continue;
        cur.edges.push_back(e);
        self(self, p.target(e));
        cur.edges.pop_back();
        if (failed || out_of_budget) return;
      }
    };
    rec(rec, s);
    if (failed) return HypothesisStatus::counterexample;
    if (out_of_budget) return HypothesisStatus::unknown;
  }
  return bounded ? HypothesisStatus::verified_bounded : HypothesisStatus::verified_exact;
}

}  // namespace detail

/// Elementary collapse of a free face of a regular cube of dimension ≥ 3.
inline Hda collapse_elementary_high(const Hda& a, CubeId x, int k, int i) {
  if (a.cubes.dim(x) < 3) throw Refusal("dimension", "elementary collapse needs a cube of dimension at least 3");
  detail::require_free_regular(a, x, k, i);
  return remove_star(a, a.cubes.face(x, k, i));
}

/// Collapse of the free front face d^0_i x of a regular square. The end vertex
/// t of that face must be neither initial nor final, some other edge must end
/// in t, and d^1_{3-i} x must be the only edge leaving t.
inline Hda collapse_front_2(const Hda& a, CubeId x, int i) {
  const auto& p = a.cubes;
  if (p.dim(x) != 2) throw Refusal("dimension", "front-face collapse needs a square");
  detail::require_free_regular(a, x, 0, i);
  CubeId f = p.face(x, 0, i);
  CubeId t = p.target(f);
  if (detail::is_initial_or_final(a, t)) throw Refusal("end-not-initial-or-final", "'" + p.name(t) + "' is initial or final");
  const auto& in = p.in_edges(t);
  if (std::none_of(in.begin(), in.end(), [&](CubeId y) { return y != f; }))
    throw Refusal("other-edge-ends", "no other edge ends in '" + p.name(t) + "'");
  CubeId keep = p.face(x, 1, 3 - i);
  const auto& out = p.out_edges(t);
  if (std::any_of(out.begin(), out.end(), [&](CubeId y) { return y != keep; }))
    throw Refusal("single-exit", "another edge leaves '" + p.name(t) + "'");
  return remove_star(a, f);
}

/// Collapse of the free back face d^1_i x of a regular square. Needs an edge
/// y ≠ d^1_i x leaving the start t of that face, and every remaining path from
/// I, from the end of x or from the end of y into t must be dihomotopic to a
/// remaining path followed by the front face d^0_{3-i} x. The first y that
/// verifies is used; exactness depends on the acyclicity of the remainder.
inline StepResult collapse_back_2(const Hda& a, CubeId x, int i, const ReducePolicy& policy = {}) {
  const auto& p = a.cubes;
  if (p.dim(x) != 2) throw Refusal("dimension", "back-face collapse needs a square");
  detail::require_free_regular(a, x, 1, i);
  CubeId b = p.face(x, 1, i);
  CubeId t = p.source(b);
  CubeId f = p.face(x, 0, 3 - i);
  std::vector<CubeId> ys;
  for (CubeId y : sorted_by_name(p, p.out_edges(t)))
    if (y != b) ys.push_back(y);
  if (ys.empty()) throw Refusal("witness-edge", "no other edge leaves '" + p.name(t) + "'");
  StepResult best;
  best.status = HypothesisStatus::counterexample;
  auto rank = [](HypothesisStatus s) {
    switch (s) {
      case HypothesisStatus::verified_exact: return 3;
      case HypothesisStatus::verified_bounded: return 2;
      case HypothesisStatus::unknown: return 1;
      default: return 0;
    }
  };
  for (CubeId y : ys) {
    std::vector<CubeId> starts{a.initial, p.target(b), p.target(y)};
    std::sort(starts.begin(), starts.end());
    starts.erase(std::unique(starts.begin(), starts.end()), starts.end());
    std::string ce;
    auto st = detail::check_back_hypothesis(a, starts, t, f, b, policy, &ce);
    if (best.witness_edge.empty() || rank(st) > rank(best.status)) {
      best.status = st;
      best.witness_edge = p.name(y);
      best.detail = ce;
    }
    if (st == HypothesisStatus::verified_exact) break;
  }
  if (best.status == HypothesisStatus::counterexample)
    throw Refusal("path-hypothesis", "path " + best.detail + " has no dihomotopic variant through the front face");
  if (best.status == HypothesisStatus::unknown) throw Refusal("path-hypothesis", "enumeration budget exhausted");
  if (best.status == HypothesisStatus::verified_bounded && policy.strict)
    throw Refusal("strict", "hypothesis verified only up to length " + std::to_string(policy.bound));
  best.result = remove_star(a, b);
  return best;
}

/// Removes star(v) for v = x♯(corner), a corner of a regular cube that is
/// neither its origin nor its end, when v is not initial or final and
/// star(v) lies inside the image of x.
inline Hda collapse_vertex_star(const Hda& a, CubeId x, const std::vector<int>& corner) {
  const auto& p = a.cubes;
  int n = p.dim(x);
  if (n < 2) throw Refusal("dimension", "vertex-star collapse needs a cube of dimension at least 2");
  if (static_cast<int>(corner.size()) != n) throw Refusal("corner", "corner has the wrong length");
  bool zeros = std::all_of(corner.begin(), corner.end(), [](int c) { return c == 0; });
  bool ones = std::all_of(corner.begin(), corner.end(), [](int c) { return c == 1; });
  if (zeros || ones) throw Refusal("mixed-corner", "corner must mix 0 and 1");
  if (!is_regular(p, x)) throw Refusal("regular", "'" + p.name(x) + "' is not regular");
  Address addr;
  for (int c : corner) addr.push_back(c ? Coord::one : Coord::zero);
  CubeId v = face_at(p, x, addr);
  if (detail::is_initial_or_final(a, v)) throw Refusal("not-initial-or-final", "'" + p.name(v) + "' is initial or final");
  auto image = closure(p, x);
  for (CubeId y : star(p, v))
    if (!std::binary_search(image.begin(), image.end(), y))
      throw Refusal("star-inside", "star of '" + p.name(v) + "' leaves '" + p.name(x) + "'");
  return remove_star(a, v);
}

namespace detail {

/// A vertex that can sit inside a merged chain.
inline bool chain_interior(const Hda& a, CubeId v) {
  const auto& p = a.cubes;
  if (is_initial_or_final(a, v)) return false;
  if (p.in_edges(v).size() != 1 || p.out_edges(v).size() != 1) return false;
  if (p.in_edges(v)[0] == p.out_edges(v)[0]) return false;
  for (CubeId y : star(p, v))
    if (p.dim(y) >= 2) return false;
  return true;
}

}  // namespace detail

/// Replaces a chain e_1 ⋯ e_k (k ≥ 2) through interior vertices by one edge
/// labeled with the concatenated word. Interior vertices have exactly one
/// incoming and one outgoing edge, lie in no square and are neither initial
/// nor final. Weak regularity is checked on the affected cubes, or on every
/// cube of both HDAs with `full_check`.
inline Hda merge_edge_chain(const Hda& a, const std::vector<std::string>& chain, bool full_check = false) {
  const auto& p = a.cubes;
  if (chain.size() < 2) throw Refusal("chain-length", "a chain needs at least two edges");
  std::vector<CubeId> es;
  for (const auto& n : chain) {
    auto e = p.find(n);
    if (!e || p.dim(*e) != 1) throw Refusal("chain-edge", "'" + n + "' is not an edge");
    es.push_back(*e);
  }
  std::vector<bool> keep(p.size(), true);
  Word label;
  for (std::size_t j = 0; j < es.size(); ++j) {
    if (!keep[es[j]]) throw Refusal("chain-edge", "edge '" + chain[j] + "' repeats");
    keep[es[j]] = false;
    label.insert(label.end(), a.label(es[j]).begin(), a.label(es[j]).end());
    if (j + 1 == es.size()) break;
    CubeId v = p.target(es[j]);
    if (p.source(es[j + 1]) != v) throw Refusal("consecutive", "'" + chain[j] + "' and '" + chain[j + 1] + "' do not meet");
    if (!detail::chain_interior(a, v)) throw Refusal("interior-vertex", "'" + p.name(v) + "' cannot be merged away");
    keep[v] = false;
  }
  for (CubeId e : es)
    if (!is_weakly_regular(p, e)) throw Refusal("weakly-regular", "'" + p.name(e) + "' is not weakly regular");
  if (full_check)
    for (CubeId y = 0; y < p.size(); ++y)
      if (!is_weakly_regular(p, y)) throw Refusal("weakly-regular", "'" + p.name(y) + "' is not weakly regular");
  CubeId from = p.source(es.front()), to = p.target(es.back());
  std::vector<CubeId> map;
  Hda out = restrict_hda(a, keep, &map);
  std::string name;
  for (std::size_t j = 0; j < chain.size(); ++j) name += (j ? "+" : "") + chain[j];
  while (out.cubes.find(name)) name += "'";
  CubeId merged = out.add_edge(name, map[from], map[to], label);
  if (!is_weakly_regular(out.cubes, merged)) throw Refusal("weakly-regular", "merged edge is not weakly regular");
  if (full_check)
    for (CubeId y = 0; y < out.cubes.size(); ++y)
      if (!is_weakly_regular(out.cubes, y)) throw Refusal("weakly-regular", "'" + out.cubes.name(y) + "' is not weakly regular");
  return out;
}

enum class SiteMode { free_faces, applicable };

/// Reduction sites in priority order (kind, then cube name). In
/// `free_faces` mode every free face of a regular cube of dimension ≥ 2 is
/// listed; in `applicable` mode only sites whose local preconditions hold.
/// Path hypotheses of back-face sites are checked when the site is applied.
inline std::vector<CollapseSite> find_sites(const Hda& a, SiteMode mode = SiteMode::applicable) {
  const auto& p = a.cubes;
  std::vector<CollapseSite> out;
  for (int n = 2; n <= p.max_dim(); ++n)
    for (CubeId x : p.cubes_of_dim(n)) {
      if (!is_regular(p, x)) continue;
      for (int k = 0; k < 2; ++k)
        for (int i = 1; i <= n; ++i) {
          if (!is_free_face(p, x, k, i)) continue;
          SiteKind kind = n >= 3 ? SiteKind::elementary : k == 0 ? SiteKind::front_face : SiteKind::back_face;
          CollapseSite s{kind, p.name(x), k, i, {}, {}};
          if (mode == SiteMode::applicable && kind == SiteKind::front_face) {
            try {
              (void)collapse_front_2(a, x, i);
            } catch (const Refusal&) {
              continue;
            }
          }
          if (mode == SiteMode::applicable && kind == SiteKind::back_face) {
            CubeId b = p.face(x, 1, i);
            const auto& outs = p.out_edges(p.source(b));
            if (std::none_of(outs.begin(), outs.end(), [&](CubeId y) { return y != b; })) continue;
          }
          out.push_back(std::move(s));
        }
      if (mode != SiteMode::applicable) continue;
      auto image = closure(p, x);
      for (std::size_t bits = 1; bits + 1 < (std::size_t{1} << n); ++bits) {
        std::vector<int> corner;
        Address addr;
        for (int j = 0; j < n; ++j) {
          corner.push_back(static_cast<int>((bits >> j) & 1U));
          addr.push_back(corner.back() ? Coord::one : Coord::zero);
        }
        CubeId v = face_at(p, x, addr);
        if (detail::is_initial_or_final(a, v)) continue;
        auto st = star(p, v);
        if (std::all_of(st.begin(), st.end(), [&](CubeId y) { return std::binary_search(image.begin(), image.end(), y); }))
          out.push_back({SiteKind::vertex_star, p.name(x), 0, 0, corner, {}});
      }
    }
  if (mode == SiteMode::applicable) {
    for (CubeId e : p.edges()) {
      CubeId u = p.source(e);
      if (detail::chain_interior(a, u) || !detail::chain_interior(a, p.target(e))) continue;
      CollapseSite s{SiteKind::merge, p.name(e), 0, 0, {}, {p.name(e)}};
      CubeId at = p.target(e);
      while (detail::chain_interior(a, at)) {
        CubeId next = p.out_edges(at)[0];
        s.chain.push_back(p.name(next));
        at = p.target(next);
      }
      out.push_back(std::move(s));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Applies one site; throws Refusal when a precondition fails.
inline StepResult apply_site(const Hda& a, const CollapseSite& s, const ReducePolicy& policy = {}) {
  StepResult r;
  if (s.kind == SiteKind::merge) {
    r.result = merge_edge_chain(a, s.chain, policy.full_weak_regularity);
    return r;
  }
  CubeId x = detail::site_cube(a, s);
  switch (s.kind) {
    case SiteKind::elementary: r.result = collapse_elementary_high(a, x, s.k, s.i); break;
    case SiteKind::front_face: r.result = collapse_front_2(a, x, s.i); break;
    case SiteKind::back_face: return collapse_back_2(a, x, s.i, policy);
    case SiteKind::vertex_star: r.result = collapse_vertex_star(a, x, s.corner); break;
    case SiteKind::merge: break;
  }
  return r;
}

inline std::string theorem_name(SiteKind k) {
  switch (k) {
    case SiteKind::elementary: return "elementary collapse";
    case SiteKind::vertex_star: return "vertex-star collapse";
    case SiteKind::front_face: return "front-face collapse";
    case SiteKind::back_face: return "back-face collapse";
    case SiteKind::merge: return "edge-chain merge";
  }
  return "";
}

struct LogStep {
  CollapseSite site;
  std::string theorem;
  HypothesisStatus status = HypothesisStatus::not_needed;
  std::string witness_edge;
  std::vector<std::size_t> before;
  std::vector<std::size_t> after;
};

struct ReductionLog {
  std::size_t bound = 0;
  bool strict = false;
  std::vector<LogStep> steps;
};

struct AuditFailure : Error {
  using Error::Error;
};

/// Checks that a step preserved HL, the bounded trace languages and the
/// accessibility flags. Throws AuditFailure otherwise.
inline void audit_step(const Hda& before, const Hda& after, std::size_t bound, const std::string& what) {
  auto fail = [&](const std::string& m) { throw AuditFailure("audit failed after " + what + ": " + m); };
  if (!hl_eq(homology_language<Gf2>(before), homology_language<Gf2>(after))) fail("HL over GF(2) changed");
  if (!hl_eq(homology_language<Rationals>(before), homology_language<Rationals>(after))) fail("HL over Q changed");
  if (tl_up_to(before, bound).traces != tl_up_to(after, bound).traces) fail("bounded TL changed");
  if (pi_up_to(before, bound).traces != pi_up_to(after, bound).traces) fail("bounded pi changed");
  if (is_accessible(before) != is_accessible(after)) fail("accessibility changed");
  if (is_coaccessible(before) != is_coaccessible(after)) fail("coaccessibility changed");
}

struct Reduction {
  Hda result;
  ReductionLog log;
};

/// Applies the first applicable site in priority order until none remains.
inline Reduction reduce_fixpoint(const Hda& a, const ReducePolicy& policy = {}) {
  Reduction out{a, {policy.bound, policy.strict, {}}};
  for (;;) {
    bool applied = false;
    for (const auto& s : find_sites(out.result, SiteMode::applicable)) {
      StepResult r;
      try {
        r = apply_site(out.result, s, policy);
      } catch (const Refusal&) {
        continue;
      }
      if (policy.audit) audit_step(out.result, r.result, policy.audit_bound, s.describe());
      out.log.steps.push_back({s, theorem_name(s.kind), r.status, r.witness_edge, out.result.cubes.counts(),
                               r.result.cubes.counts()});
      out.result = std::move(r.result);
      applied = true;
      break;
    }
    if (!applied) return out;
  }
}

/// Re-applies the logged sites in order. Bounded hypotheses recorded in the
/// log are accepted again at the logged bound.
inline Hda replay(const Hda& a, const ReductionLog& log, const ReducePolicy& base = {}) {
  ReducePolicy policy = base;
  policy.bound = log.bound;
  policy.strict = log.strict;
  Hda cur = a;
  for (const auto& step : log.steps) cur = apply_site(cur, step.site, policy).result;
  return cur;
}

}  // namespace hdakit

#endif  // HDAKIT_REDUCE_HPP
