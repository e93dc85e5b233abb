#ifndef HDAKIT_HDA_HPP
#define HDAKIT_HDA_HPP

#include <algorithm>
#include <cstddef>
#include <deque>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "hdakit/error.hpp"
#include "hdakit/precubical.hpp"
#include "hdakit/trace.hpp"

namespace hdakit {

/// Higher dimensional automaton: a precubical set with an initial vertex,
/// final vertices and a labeling of edges by words.
struct Hda {
  PrecubicalSet cubes;
  CubeId initial = npos;
  std::vector<CubeId> finals;  // sorted, unique
  AlphabetPtr alphabet;
  std::vector<Word> labels;    // indexed by CubeId; meaningful for edges only

  const Word& label(CubeId e) const { return labels.at(e); }
  bool is_final(CubeId v) const { return std::binary_search(finals.begin(), finals.end(), v); }

  CubeId add_vertex(std::string name) {
    labels.emplace_back();
    return cubes.add_vertex(std::move(name));
  }

  CubeId add_edge(std::string name, CubeId from, CubeId to, Word label) {
    labels.push_back(std::move(label));
    return cubes.add_edge(std::move(name), from, to);
  }

  CubeId add_edge(std::string name, CubeId from, CubeId to, const std::vector<std::string>& label) {
    return add_edge(std::move(name), from, to, alphabet->word(label));
  }

  CubeId add_cube(std::string name, std::vector<CubeId> front, std::vector<CubeId> back) {
    labels.emplace_back();
    return cubes.add_cube(std::move(name), std::move(front), std::move(back));
  }

  /// Square with d^0_1 = f1, d^0_2 = f2, d^1_1 = b1, d^1_2 = b2.
  CubeId add_square(std::string name, CubeId f1, CubeId f2, CubeId b1, CubeId b2) {
    return add_cube(std::move(name), {f1, f2}, {b1, b2});
  }

  void set_finals(std::vector<CubeId> f) {
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
    finals = std::move(f);
  }

  void add_final(CubeId v) {
    finals.push_back(v);
    set_finals(std::move(finals));
  }
};

/// Labeling defects, conditions (1) and (2), and the precubical identities.
inline ValidationReport validate_hda(const Hda& a) {
  ValidationReport report = validate(a.cubes);
  const auto& p = a.cubes;
  if (!a.alphabet) {
    report.add("missing alphabet");
    return report;
  }
  const auto& sig = *a.alphabet;
  if (a.initial == npos || a.initial >= p.size() || p.dim(a.initial) != 0)
    report.add("initial state is not a vertex");
  for (CubeId f : a.finals)
    if (f >= p.size() || p.dim(f) != 0) report.add("final state is not a vertex");
  if (a.labels.size() != p.size()) {
    report.add("label table does not match the cube count");
    return report;
  }
  for (CubeId e : p.edges())
    for (Letter l : a.labels[e])
      if (l >= sig.size()) report.add("edge '" + p.name(e) + "': label letter outside the alphabet");
  if (!report.ok()) return report;
  for (CubeId x : p.cubes_of_dim(2)) {
    for (int i = 1; i <= 2; ++i)
      if (a.label(p.face(x, 0, i)) != a.label(p.face(x, 1, i)))
        report.add("square '" + p.name(x) + "': opposite edges in direction " + std::to_string(3 - i) +
                   " carry different labels");
    const Word& l1 = a.label(p.face(x, 0, 1));
    const Word& l2 = a.label(p.face(x, 0, 2));
    for (Letter s : l1)
      for (Letter t : l2)
        if (sig.dependent(s, t))
          report.add("square '" + p.name(x) + "': dependent letters '" + sig.name(s) + "' and '" + sig.name(t) +
                     "' label the two directions");
  }
  return report;
}

inline Word extended_label(const Hda& a, const Path& w) {
  Word out;
  for (CubeId e : w.edges) out.insert(out.end(), a.label(e).begin(), a.label(e).end());
  return out;
}

inline Trace path_trace(const Hda& a, const Path& w) { return trace_of(a.alphabet, extended_label(a, w)); }

namespace detail {

/// Product labels for a sub-complex of P_A ⊗ P_B selected by `want`.
inline Hda product_hda(const Hda& a, const Hda& b, const AlphabetSum& sum,
                       const std::function<bool(CubeId, CubeId)>& want, std::vector<CubeId> finals_a_side,
                       std::vector<CubeId> finals_b_side, bool cartesian_finals) {
  const auto& p = a.cubes;
  const auto& q = b.cubes;
  Hda out;
  out.alphabet = sum.alphabet;
  std::map<std::pair<CubeId, CubeId>, CubeId> ids;
  int top = std::max(p.max_dim(), 0) + std::max(q.max_dim(), 0);
  for (int n = 0; n <= top; ++n)
    for (int d = n; d >= 0; --d)
      for (CubeId x : p.cubes_of_dim(d))
        for (CubeId y : q.cubes_of_dim(n - d)) {
          if (!want(x, y)) continue;
          std::vector<CubeId> f, bk;
          for (int i = 1; i <= n; ++i) {
            if (i <= d) {
              f.push_back(ids.at({p.face(x, 0, i), y}));
              bk.push_back(ids.at({p.face(x, 1, i), y}));
            } else {
              f.push_back(ids.at({x, q.face(y, 0, i - d)}));
              bk.push_back(ids.at({x, q.face(y, 1, i - d)}));
            }
          }
          CubeId id = out.add_cube("(" + p.name(x) + "," + q.name(y) + ")", std::move(f), std::move(bk));
          if (n == 1) out.labels[id] = d == 1 ? sum.left.apply(a.label(x)) : sum.right.apply(b.label(y));
          ids[{x, y}] = id;
        }
  out.initial = ids.at({a.initial, b.initial});
  std::vector<CubeId> fin;
  if (cartesian_finals) {
    for (CubeId x : finals_a_side)
      for (CubeId y : finals_b_side) fin.push_back(ids.at({x, y}));
  } else {
    for (CubeId x : finals_a_side) fin.push_back(ids.at({x, b.initial}));
    for (CubeId y : finals_b_side) fin.push_back(ids.at({a.initial, y}));
  }
  out.set_finals(std::move(fin));
  return out;
}

}  // namespace detail

/// Parallel composition A ⊗ B over the tensor alphabet.
inline Hda tensor_hda(const Hda& a, const Hda& b) {
  return detail::product_hda(
      a, b, tensor_alphabet(a.alphabet, b.alphabet), [](CubeId, CubeId) { return true; }, a.finals, b.finals, true);
}

/// Choice A + B: the wedge P_A⊗{I_B} ∪ {I_A}⊗P_B over the coproduct alphabet.
inline Hda coprod_hda(const Hda& a, const Hda& b) {
  CubeId ia = a.initial, ib = b.initial;
  return detail::product_hda(
      a, b, coprod_alphabet(a.alphabet, b.alphabet), [&](CubeId x, CubeId y) { return y == ib || x == ia; },
      a.finals, b.finals, false);
}

/// Vertices reachable from the initial state along edges.
inline std::vector<bool> reachable_set(const Hda& a) {
  std::vector<bool> seen(a.cubes.size(), false);
  std::deque<CubeId> todo{a.initial};
  seen[a.initial] = true;
  while (!todo.empty()) {
    CubeId v = todo.front();
    todo.pop_front();
    for (CubeId e : a.cubes.out_edges(v)) {
      CubeId w = a.cubes.target(e);
      if (!seen[w]) {
        seen[w] = true;
        todo.push_back(w);
      }
    }
  }
  return seen;
}

/// Vertices from which some final state is reachable.
inline std::vector<bool> coreachable_set(const Hda& a) {
  std::vector<bool> seen(a.cubes.size(), false);
  std::deque<CubeId> todo;
  for (CubeId f : a.finals) {
    seen[f] = true;
    todo.push_back(f);
  }
  while (!todo.empty()) {
    CubeId v = todo.front();
    todo.pop_front();
    for (CubeId e : a.cubes.in_edges(v)) {
      CubeId w = a.cubes.source(e);
      if (!seen[w]) {
        seen[w] = true;
        todo.push_back(w);
      }
    }
  }
  return seen;
}

inline bool all_vertices(const Hda& a, const std::vector<bool>& mark) {
  return std::all_of(a.cubes.vertices().begin(), a.cubes.vertices().end(), [&](CubeId v) { return mark[v]; });
}

inline bool is_accessible(const Hda& a) { return all_vertices(a, reachable_set(a)); }
inline bool is_coaccessible(const Hda& a) { return all_vertices(a, coreachable_set(a)); }

/// Sub-HDA on the cubes with keep[x]; alphabet kept, finals filtered.
inline Hda restrict_hda(const Hda& a, const std::vector<bool>& keep, std::vector<CubeId>* old_to_new = nullptr) {
  if (!keep.at(a.initial)) throw ArgumentError("restriction removes the initial state");
  std::vector<CubeId> map;
  Hda out;
  out.cubes = a.cubes.restrict(keep, &map);
  out.alphabet = a.alphabet;
  out.labels.assign(out.cubes.size(), {});
  for (CubeId x = 0; x < a.cubes.size(); ++x)
    if (map[x] != npos) out.labels[map[x]] = a.labels[x];
  out.initial = map[a.initial];
  std::vector<CubeId> fin;
  for (CubeId f : a.finals)
    if (map[f] != npos) fin.push_back(map[f]);
  out.set_finals(std::move(fin));
  if (old_to_new) *old_to_new = std::move(map);
  return out;
}

inline Hda remove_star(const Hda& a, CubeId x) {
  std::vector<bool> keep(a.cubes.size(), true);
  for (CubeId y : star(a.cubes, x)) keep[y] = false;
  return restrict_hda(a, keep);
}

/// Cubes all of whose vertices are reachable. The alphabet is unchanged.
inline Hda accessible_part(const Hda& a) {
  auto reach = reachable_set(a);
  std::vector<bool> keep(a.cubes.size(), true);
  for (int n = 0; n <= a.cubes.max_dim(); ++n)
    for (CubeId x : a.cubes.cubes_of_dim(n)) {
      if (n == 0) {
        keep[x] = reach[x];
        continue;
      }
      keep[x] = keep[a.cubes.face(x, 0, 1)] && keep[a.cubes.face(x, 1, 1)];
      for (int i = 2; i <= n && keep[x]; ++i) keep[x] = keep[a.cubes.face(x, 0, i)] && keep[a.cubes.face(x, 1, i)];
    }
  return restrict_hda(a, keep);
}

/// Candidate morphism: a cube map plus a letter map.
struct HdaMorphism {
  std::vector<CubeId> cube_map;
  AlphabetMorphism letters;
};

/// Checks dimension, faces, initial/final states, the alphabet morphism
/// condition and label compatibility λ_B(f x) = σ*(λ_A(x)).
inline ValidationReport check_morphism(const Hda& a, const Hda& b, const HdaMorphism& m) {
  ValidationReport r;
  const auto& p = a.cubes;
  const auto& q = b.cubes;
  if (m.cube_map.size() != p.size()) {
    r.add("cube map has the wrong size");
    return r;
  }
  if (!same_alphabet(m.letters.source, a.alphabet) || !same_alphabet(m.letters.target, b.alphabet))
    r.add("letter map is not between the two alphabets");
  else if (!m.letters.valid())
    r.add("letter map violates (σ×σ)⁻¹(D') ⊆ D");
  for (CubeId x = 0; x < p.size(); ++x) {
    CubeId fx = m.cube_map[x];
    if (fx >= q.size()) {
      r.add("cube '" + p.name(x) + "' has no image");
      continue;
    }
    if (q.dim(fx) != p.dim(x)) {
      r.add("cube '" + p.name(x) + "' changes dimension");
      continue;
    }
    for (int i = 1; i <= p.dim(x); ++i)
      for (int k = 0; k < 2; ++k)
        if (m.cube_map[p.face(x, k, i)] != q.face(fx, k, i))
          r.add("cube '" + p.name(x) + "': face d^" + std::to_string(k) + "_" + std::to_string(i) + " not preserved");
    if (p.dim(x) == 1 && r.ok() && b.label(fx) != m.letters.apply(a.label(x)))
      r.add("edge '" + p.name(x) + "': label not preserved");
  }
  if (a.initial < m.cube_map.size() && m.cube_map[a.initial] != b.initial) r.add("initial state not preserved");
  for (CubeId f : a.finals)
    if (m.cube_map[f] >= q.size() || !b.is_final(m.cube_map[f])) r.add("final state '" + p.name(f) + "' not mapped to a final state");
  return r;
}

/// Isomorphism search (backtracking, dimension by dimension) under a fixed
/// letter map. Returns the cube map, or nothing if none exists within budget.
inline std::optional<std::vector<CubeId>> find_isomorphism(const Hda& a, const Hda& b, const AlphabetMorphism& sigma,
                                                           std::size_t budget = 2'000'000) {
  const auto& p = a.cubes;
  const auto& q = b.cubes;
  if (p.counts() != q.counts() || a.finals.size() != b.finals.size()) return std::nullopt;
  std::vector<CubeId> order;
  for (int n = 0; n <= p.max_dim(); ++n)
    for (CubeId x : p.cubes_of_dim(n)) order.push_back(x);
  auto signature = [](const Hda& h, CubeId x) {
    const auto& c = h.cubes;
    std::vector<std::size_t> s{static_cast<std::size_t>(c.dim(x)), c.cofaces(x).size()};
    if (c.dim(x) == 0) {
      s.push_back(c.out_edges(x).size());
      s.push_back(c.in_edges(x).size());
      s.push_back(h.is_final(x));
      s.push_back(x == h.initial);
    }
    return s;
  };
  std::vector<CubeId> fwd(p.size(), npos), bwd(q.size(), npos);
  std::size_t steps = 0;
  bool exhausted = false;
  auto rec = [&](auto&& self, std::size_t pos) -> bool {
    if (pos == order.size()) return true;
    if (++steps > budget) {
      exhausted = true;
      return false;
    }
    CubeId x = order[pos];
    auto sx = signature(a, x);
    for (CubeId y : q.cubes_of_dim(p.dim(x))) {
      if (bwd[y] != npos || signature(b, y) != sx) continue;
      bool ok = true;
      for (int i = 1; i <= p.dim(x) && ok; ++i)
        for (int k = 0; k < 2 && ok; ++k) ok = fwd[p.face(x, k, i)] == q.face(y, k, i);
      if (ok && p.dim(x) == 1) ok = b.label(y) == sigma.apply(a.label(x));
      if (!ok) continue;
      fwd[x] = y;
      bwd[y] = x;
      if (self(self, pos + 1)) return true;
      fwd[x] = npos;
      bwd[y] = npos;
      if (exhausted) return false;
    }
    return false;
  };
  if (!rec(rec, 0)) return std::nullopt;
  return fwd;
}

/// Isomorphic as labeled HDAs over equal alphabets.
inline bool isomorphic(const Hda& a, const Hda& b) {
  if (!same_alphabet(a.alphabet, b.alphabet)) return false;
  AlphabetMorphism id{a.alphabet, b.alphabet, {}};
  for (Letter l = 0; l < a.alphabet->size(); ++l) id.map.push_back(l);
  return find_isomorphism(a, b, id).has_value();
}

/// Letter pairs that occur on the two directions of some square are
/// independent; every other pair is dependent.
inline ConcurrentAlphabet canonical_dependence(const Hda& a) {
  const auto& sig = *a.alphabet;
  std::set<std::pair<Letter, Letter>> indep;
  for (CubeId x : a.cubes.cubes_of_dim(2))
    for (Letter s : a.label(a.cubes.face(x, 0, 1)))
      for (Letter t : a.label(a.cubes.face(x, 0, 2)))
        if (s != t) {
          indep.insert({s, t});
          indep.insert({t, s});
        }
  std::vector<std::pair<std::string, std::string>> dep;
  for (Letter s = 0; s < sig.size(); ++s)
    for (Letter t = s; t < sig.size(); ++t)
      if (!indep.count({s, t})) dep.emplace_back(sig.name(s), sig.name(t));
  return ConcurrentAlphabet(sig.letters(), dep);
}

}  // namespace hdakit

#endif  // HDAKIT_HDA_HPP
