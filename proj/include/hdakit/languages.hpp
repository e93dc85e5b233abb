#ifndef HDAKIT_LANGUAGES_HPP
#define HDAKIT_LANGUAGES_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hdakit/error.hpp"
#include "hdakit/hda.hpp"
#include "hdakit/homology.hpp"
#include "hdakit/trace.hpp"

namespace hdakit {

/// Deterministic monitor for a regular set of bad prefixes. Bad states are
/// absorbing and the transition function is total.
struct SafetyMonitor {
  std::vector<std::string> states;
  std::size_t initial = 0;
  std::vector<bool> bad;
  AlphabetPtr alphabet;
  std::vector<std::vector<std::size_t>> next;  // next[state][letter]

  ValidationReport validate() const {
    ValidationReport r;
    if (!alphabet) r.add("monitor has no alphabet");
    if (initial >= states.size()) r.add("initial monitor state out of range");
    if (bad.size() != states.size() || next.size() != states.size()) {
      r.add("monitor tables do not match the state count");
      return r;
    }
    for (std::size_t s = 0; s < states.size(); ++s) {
      if (alphabet && next[s].size() != alphabet->size()) {
        r.add("state '" + states[s] + "': transition function is not total");
        continue;
      }
      for (std::size_t l = 0; l < next[s].size(); ++l) {
        if (next[s][l] >= states.size()) r.add("state '" + states[s] + "': transition target out of range");
        else if (bad[s] && !bad[next[s][l]]) r.add("bad state '" + states[s] + "' is not absorbing");
      }
    }
    return r;
  }
};

namespace detail {

/// Per-letter match counters against a fixed trace v. A letter c either
/// advances its counter, which is allowed when c is the next letter of every
/// projection π_{c,b}(v) with b dependent on c, or is an extra occurrence,
/// which is allowed only once every such projection is complete. Together
/// these test π_{a,b}(v) ⪯ π_{a,b}(u) for all dependent pairs, i.e. v ⪯ u.
class PrefixMatcher {
 public:
  explicit PrefixMatcher(const Trace& v) : sig_(v.alphabet().get()), count_(v.parikh()) {
    std::size_t n = sig_->size();
    radix_.assign(n, 1);
    for (std::size_t a = 1; a < n; ++a) radix_[a] = radix_[a - 1] * (count_[a - 1] + 1);
    full_ = 0;
    for (std::size_t a = 0; a < n; ++a) full_ += radix_[a] * count_[a];
    Word w = v.representative();
    proj_.assign(n * n, {});
    for (Letter a = 0; a < n; ++a)
      for (Letter b = 0; b < n; ++b)
        if (a != b && sig_->dependent(a, b))
          for (Letter c : w)
            if (c == a || c == b) proj_[a * n + b].push_back(c);
  }

  std::uint64_t start() const { return 0; }
  std::uint64_t full() const { return full_; }

  std::size_t matched(std::uint64_t code, Letter a) const { return (code / radix_[a]) % (count_[a] + 1); }

  /// Next code after reading c, or nothing if the branch dies.
  std::optional<std::uint64_t> step(std::uint64_t code, Letter c, bool allow_extra) const {
    std::size_t n = sig_->size();
    std::size_t mc = matched(code, c);
    if (mc == count_[c]) {
      if (!allow_extra) return std::nullopt;
      for (Letter b = 0; b < n; ++b)
        if (sig_->dependent(c, b) && matched(code, b) != count_[b]) return std::nullopt;
      return code;
    }
    for (Letter b = 0; b < n; ++b)
      if (b != c && sig_->dependent(c, b) && proj_[c * n + b][mc + matched(code, b)] != c) return std::nullopt;
    return code + radix_[c];
  }

 private:
  const ConcurrentAlphabet* sig_;
  std::vector<std::size_t> count_;
  std::vector<std::uint64_t> radix_;
  std::uint64_t full_ = 0;
  std::vector<Word> proj_;
};

struct PairHash {
  std::size_t operator()(const std::pair<CubeId, std::uint64_t>& p) const {
    return std::hash<std::uint64_t>()(p.second * 1000003ULL + p.first);
  }
};

/// BFS over (vertex, matcher code). With `exact`, extra letters are refused
/// and acceptance requires being back at `goal` at an edge boundary.
inline std::optional<Path> match_search(const Hda& a, const Trace& v, bool exact, CubeId goal) {
  if (!same_alphabet(a.alphabet, v.alphabet())) throw AlphabetMismatch("trace alphabet differs from the HDA alphabet");
  PrefixMatcher m(v);
  using State = std::pair<CubeId, std::uint64_t>;
  std::unordered_map<State, std::pair<State, CubeId>, PairHash> parent;
  auto rebuild = [&](State s, CubeId last_edge) {
    Path w{a.initial, {}};
    if (last_edge != npos) w.edges.push_back(last_edge);
    while (s != State{a.initial, m.start()}) {
      auto [prev, e] = parent.at(s);
      w.edges.push_back(e);
      s = prev;
    }
    std::reverse(w.edges.begin(), w.edges.end());
    return w;
  };
  State s0{a.initial, m.start()};
  auto accept = [&](const State& s) { return s.second == m.full() && (!exact || s.first == goal); };
  if (accept(s0)) return Path{a.initial, {}};
  std::deque<State> todo{s0};
  parent.emplace(s0, std::make_pair(s0, npos));
  while (!todo.empty()) {
    State s = todo.front();
    todo.pop_front();
    for (CubeId e : a.cubes.out_edges(s.first)) {
      std::optional<std::uint64_t> code = s.second;
      for (Letter c : a.label(e)) {
        code = m.step(*code, c, !exact);
        if (!code) break;
        if (!exact && *code == m.full()) return rebuild(s, e);
      }
      if (!code) continue;
      State t{a.cubes.target(e), *code};
      if (parent.count(t)) continue;
      parent.emplace(t, std::make_pair(s, e));
      if (accept(t)) return rebuild(t, npos);
      todo.push_back(t);
    }
  }
  return std::nullopt;
}

}  // namespace detail

/// Membership in the trace language: some path from I has a label with v as
/// a prefix. Returns such a path.
inline std::optional<Path> tl_witness(const Hda& a, const Trace& v) {
  return detail::match_search(a, v, false, npos);
}

inline bool tl_contains(const Hda& a, const Trace& v) { return tl_witness(a, v).has_value(); }

/// Membership in π(A): some loop at I is labeled by exactly u.
inline std::optional<Path> pi_witness(const Hda& a, const Trace& u) {
  return detail::match_search(a, u, true, a.initial);
}

inline bool pi_contains(const Hda& a, const Trace& u) { return pi_witness(a, u).has_value(); }

/// Traces of length at most `bound`; `exact` means the whole language is
/// shorter than the bound, so the set is the complete language.
struct BoundedTraces {
  TraceSet traces;
  std::size_t bound = 0;
  bool exact = false;
};

/// Trace language up to length N. The language is prefix-closed, so level
/// n+1 consists of the extensions v·a of level-n traces that still belong to it.
inline BoundedTraces tl_up_to(const Hda& a, std::size_t bound) {
  BoundedTraces out;
  out.bound = bound;
  std::vector<Trace> level{unit_trace(a.alphabet)};
  out.traces.insert(level.front());
  for (std::size_t n = 0;; ++n) {
    TraceSet candidates;
    for (const auto& v : level)
      for (Letter c = 0; c < a.alphabet->size(); ++c) candidates.insert(append(v, Word{c}));
    std::vector<Trace> next;
    for (const auto& v : candidates)
      if (tl_contains(a, v)) {
        next.push_back(v);
        if (n == bound) break;
      }
    if (next.empty()) {
      out.exact = true;
      return out;
    }
    if (n == bound) return out;
    out.traces.insert(next.begin(), next.end());
    level = std::move(next);
  }
}

/// π(A) up to length N by BFS over (vertex, trace) pairs; exact when no pair
/// was cut off by the bound.
inline BoundedTraces pi_up_to(const Hda& a, std::size_t bound) {
  BoundedTraces out;
  out.bound = bound;
  out.exact = true;
  std::set<std::pair<CubeId, Trace>> seen;
  std::deque<std::pair<CubeId, Trace>> todo;
  auto push = [&](CubeId v, Trace t) {
    if (t.length() > bound) {
      out.exact = false;
      return;
    }
    if (seen.emplace(v, t).second) todo.emplace_back(v, std::move(t));
  };
  push(a.initial, unit_trace(a.alphabet));
  while (!todo.empty()) {
    auto [v, t] = todo.front();
    todo.pop_front();
    if (v == a.initial) out.traces.insert(t);
    for (CubeId e : a.cubes.out_edges(v)) push(a.cubes.target(e), append(t, a.label(e)));
  }
  return out;
}

struct SafetyResult {
  bool holds = true;
  std::optional<Path> counterexample;  // shortest in number of edges
};

/// Product BFS of the HDA's path labels with the monitor. A violation is a
/// path whose label word drives the monitor into a bad state.
inline SafetyResult satisfies_safety(const Hda& a, const SafetyMonitor& mon) {
  auto report = mon.validate();
  if (!report.ok()) throw ArgumentError("invalid monitor: " + report.issues.front());
  if (mon.alphabet->letters() != a.alphabet->letters())
    throw AlphabetMismatch("monitor alphabet differs from the HDA alphabet");
  using State = std::pair<CubeId, std::size_t>;
  std::map<State, std::pair<State, CubeId>> parent;
  State s0{a.initial, mon.initial};
  if (mon.bad[mon.initial]) return {false, Path{a.initial, {}}};
  auto rebuild = [&](State s, CubeId last) {
    Path w{a.initial, {last}};
    while (s != s0) {
      auto [prev, e] = parent.at(s);
      w.edges.push_back(e);
      s = prev;
    }
    std::reverse(w.edges.begin(), w.edges.end());
    return w;
  };
  parent.emplace(s0, std::make_pair(s0, npos));
  std::deque<State> todo{s0};
  while (!todo.empty()) {
    State s = todo.front();
    todo.pop_front();
    for (CubeId e : sorted_by_name(a.cubes, a.cubes.out_edges(s.first))) {
      std::size_t q = s.second;
      bool violated = false;
      for (Letter c : a.label(e)) {
        q = mon.next[q][mon.alphabet->at(a.alphabet->name(c))];
        if (mon.bad[q]) {
          violated = true;
          break;
        }
      }
      if (violated) return {false, rebuild(s, e)};
      State t{a.cubes.target(e), q};
      if (parent.emplace(t, std::make_pair(s, e)).second) todo.push_back(t);
    }
  }
  return {true, std::nullopt};
}

enum class Outcome { refuted, holds_up_to_bound, holds_exactly };

inline std::string outcome_name(Outcome o) {
  switch (o) {
    case Outcome::refuted: return "RefutedWithWitness";
    case Outcome::holds_up_to_bound: return "HoldsUpToBound";
    case Outcome::holds_exactly: return "HoldsExactly";
  }
  return "";
}

/// Bounded inclusion check of one trace language in another.
struct InclusionCheck {
  bool holds = true;
  bool exact = false;
  std::optional<Trace> counterexample;
};

/// Result of checking A ⊑ B, with one entry per condition.
struct Verdict {
  Outcome outcome = Outcome::holds_exactly;
  std::size_t bound = 0;
  bool isomorphic = false;
  bool accessibility_ok = true;
  std::string accessibility_detail;
  bool alphabet_equal = true;
  InclusionCheck pi;
  InclusionCheck tl;
  bool hl_holds = true;
  std::optional<std::string> hl_counterexample;
  std::string field;
};

/// A ⊑ B: accessibility and coaccessibility transfer exactly, alphabets are
/// equal, π(A) ⊆ π(B) and TL(A) ⊆ TL(B) up to length N, and HL(A) ⊆ HL(B).
template <class F = Gf2>
Verdict weak_implements(const Hda& a, const Hda& b, std::size_t bound) {
  Verdict v;
  v.bound = bound;
  v.field = std::string(F::name);
  if (isomorphic(a, b)) {
    v.isomorphic = true;
    v.pi.exact = v.tl.exact = true;
    return v;
  }
  bool ba = is_accessible(b), bc = is_coaccessible(b);
  bool aa = is_accessible(a), ac = is_coaccessible(a);
  if (ba && !aa) v.accessibility_detail = "B is accessible but A is not";
  else if (bc && !ac) v.accessibility_detail = "B is coaccessible but A is not";
  v.accessibility_ok = v.accessibility_detail.empty();
  v.alphabet_equal = same_alphabet(a.alphabet, b.alphabet);
  if (v.alphabet_equal) {
    auto check = [&](const BoundedTraces& mine, auto&& member) {
      InclusionCheck c;
      c.exact = mine.exact;
      for (const auto& t : mine.traces)
        if (!member(t)) {
          c.holds = false;
          c.counterexample = t;
          break;
        }
      return c;
    };
    v.pi = check(pi_up_to(a, bound), [&](const Trace& t) { return pi_contains(b, t); });
    v.tl = check(tl_up_to(a, bound), [&](const Trace& t) { return tl_contains(b, t); });
    auto ce = hl_counterexample(homology_language<F>(a), homology_language<F>(b));
    v.hl_holds = !ce.has_value();
    if (ce) v.hl_counterexample = ce->format(*a.alphabet);
  } else {
    v.pi.holds = v.tl.holds = v.hl_holds = false;
  }
  if (!v.accessibility_ok || !v.alphabet_equal || !v.pi.holds || !v.tl.holds || !v.hl_holds)
    v.outcome = Outcome::refuted;
  else if (v.pi.exact && v.tl.exact)
    v.outcome = Outcome::holds_exactly;
  else
    v.outcome = Outcome::holds_up_to_bound;
  return v;
}

/// Weak equivalence: both directions.
template <class F = Gf2>
std::pair<Verdict, Verdict> weak_equiv(const Hda& a, const Hda& b, std::size_t bound) {
  return {weak_implements<F>(a, b, bound), weak_implements<F>(b, a, bound)};
}

/// The weaker of two outcomes.
inline Outcome combine(Outcome x, Outcome y) { return std::min(x, y); }

}  // namespace hdakit

#endif  // HDAKIT_LANGUAGES_HPP
