#ifndef HDAKIT_TESTS_ORACLES_HPP
#define HDAKIT_TESTS_ORACLES_HPP

// Brute-force reference implementations and random generators for tests.
// Oracles work on plain words and explicit path enumeration only.

#include <algorithm>
#include <deque>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "hdakit/hdakit.hpp"

namespace oracle {

using namespace hdakit;

/// The ≡-class of w: closure under swapping adjacent independent letters.
inline std::set<Word> word_class(const ConcurrentAlphabet& sig, const Word& w) {
  std::set<Word> seen{w};
  std::deque<Word> todo{w};
  while (!todo.empty()) {
    Word cur = todo.front();
    todo.pop_front();
    for (std::size_t j = 0; j + 1 < cur.size(); ++j)
      if (cur[j] != cur[j + 1] && sig.independent(cur[j], cur[j + 1])) {
        Word next = cur;
        std::swap(next[j], next[j + 1]);
        if (seen.insert(next).second) todo.push_back(std::move(next));
      }
  }
  return seen;
}

/// Every word over the first `letters` letters of length at most n.
inline std::vector<Word> all_words(std::size_t letters, std::size_t n) {
  std::vector<Word> out{{}};
  std::vector<Word> level{{}};
  for (std::size_t len = 1; len <= n; ++len) {
    std::vector<Word> next;
    for (const auto& w : level)
      for (Letter a = 0; a < letters; ++a) {
        Word x = w;
        x.push_back(a);
        next.push_back(x);
      }
    out.insert(out.end(), next.begin(), next.end());
    level = std::move(next);
  }
  return out;
}

/// Word prefixes of all members of the class of w; closed under ≡.
inline std::set<Word> prefix_closure(const ConcurrentAlphabet& sig, const Word& w) {
  std::set<Word> out;
  for (const auto& u : word_class(sig, w))
    for (std::size_t k = 0; k <= u.size(); ++k) out.insert(Word(u.begin(), u.begin() + static_cast<long>(k)));
  return out;
}

/// v ⪯ u by enumeration of the class of u.
inline bool is_prefix(const ConcurrentAlphabet& sig, const Word& v, const Word& u) {
  return prefix_closure(sig, u).count(v) > 0;
}

inline bool equivalent(const ConcurrentAlphabet& sig, const Word& a, const Word& b) {
  return a.size() == b.size() && word_class(sig, a).count(b) > 0;
}

inline Word path_label(const Hda& a, const Path& w) {
  Word out;
  for (CubeId e : w.edges) out.insert(out.end(), a.label(e).begin(), a.label(e).end());
  return out;
}

/// Paths from I of at most `max_len` edges, by plain depth-first search.
inline std::vector<Path> paths_from_initial(const Hda& a, std::size_t max_len) {
  std::vector<Path> out;
  Path cur{a.initial, {}};
  auto rec = [&](auto&& self, CubeId at) -> void {
    out.push_back(cur);
    if (cur.edges.size() == max_len) return;
    for (CubeId e : a.cubes.edges())
      if (a.cubes.face(e, 0, 1) == at) {
        cur.edges.push_back(e);
        self(self, a.cubes.face(e, 1, 1));
        cur.edges.pop_back();
      }
  };
  rec(rec, a.initial);
  return out;
}

/// Words that are prefixes of labels of paths of at most `max_len` edges.
inline std::set<Word> tl_words(const Hda& a, std::size_t max_len) {
  std::set<Word> out;
  std::set<Word> labels;
  for (const auto& w : paths_from_initial(a, max_len)) labels.insert(path_label(a, w));
  for (const auto& l : labels) {
    auto p = prefix_closure(*a.alphabet, l);
    out.insert(p.begin(), p.end());
  }
  return out;
}

/// Words equivalent to labels of loops at I with at most `max_len` edges.
inline std::set<Word> pi_words(const Hda& a, std::size_t max_len) {
  std::set<Word> out;
  for (const auto& w : paths_from_initial(a, max_len)) {
    CubeId end = w.edges.empty() ? w.start : a.cubes.face(w.edges.back(), 1, 1);
    if (end != a.initial) continue;
    auto c = word_class(*a.alphabet, path_label(a, w));
    out.insert(c.begin(), c.end());
  }
  return out;
}

/// All distinct traces over the alphabet of length at most n.
inline std::vector<Trace> all_traces(const AlphabetPtr& sig, std::size_t n) {
  std::set<Trace> s;
  for (const auto& w : all_words(sig->size(), n)) s.insert(trace_of(sig, w));
  return {s.begin(), s.end()};
}

/// Four dependence shapes over n letters: free, commutative, a path a-b-c-…,
/// and two dependent blocks that commute with each other.
inline std::vector<AlphabetPtr> dependence_shapes(std::size_t n) {
  std::vector<std::string> letters;
  for (std::size_t j = 0; j < n; ++j) letters.push_back(std::string(1, static_cast<char>('a' + j)));
  std::vector<std::pair<std::string, std::string>> path, blocks;
  for (std::size_t j = 0; j + 1 < n; ++j) path.emplace_back(letters[j], letters[j + 1]);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y)
      if ((2 * x < n) == (2 * y < n)) blocks.emplace_back(letters[x], letters[y]);
  return {make_alphabet(ConcurrentAlphabet::free(letters)), make_alphabet(ConcurrentAlphabet::commutative(letters)),
          make_alphabet(ConcurrentAlphabet(letters, path)), make_alphabet(ConcurrentAlphabet(letters, blocks))};
}

struct RandomHdaParams {
  std::size_t max_vertices = 4;
  std::size_t max_edges = 6;
  std::size_t letters = 3;
  std::size_t max_cubes = 20;
  bool acyclic = false;
  double square_seed_rate = 0.5;
  AlphabetPtr alphabet = nullptr;  // random when null
};

inline std::string letter_name(std::size_t j) { return std::string(1, static_cast<char>('a' + j)); }

inline AlphabetPtr random_alphabet(std::mt19937& rng, std::size_t n) {
  std::vector<std::string> letters;
  for (std::size_t j = 0; j < n; ++j) letters.push_back(letter_name(j));
  std::vector<std::pair<std::string, std::string>> indep;
  std::bernoulli_distribution coin(0.5);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (coin(rng)) indep.emplace_back(letters[a], letters[b]);
  return make_alphabet(ConcurrentAlphabet::with_independence(letters, indep));
}

/// Random valid HDA: random labeled graph, explicitly seeded squares over
/// independent letter pairs, plus squares found among existing edges.
inline Hda random_hda(std::mt19937& rng, const RandomHdaParams& prm) {
  auto pick = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };
  std::bernoulli_distribution coin(0.5);
  Hda a;
  a.alphabet = prm.alphabet ? prm.alphabet : random_alphabet(rng, std::max<std::size_t>(prm.letters, 1));
  const auto& sig = *a.alphabet;
  std::size_t nv = 1 + pick(prm.max_vertices);
  std::vector<CubeId> vs;
  for (std::size_t j = 0; j < nv; ++j) vs.push_back(a.add_vertex("v" + std::to_string(j)));
  std::size_t ne = 1 + pick(prm.max_edges);
  std::size_t ecount = 0;
  auto edge = [&](CubeId s, CubeId t, Letter l) { return a.add_edge("e" + std::to_string(ecount++), s, t, Word{l}); };
  for (std::size_t j = 0; j < ne && a.cubes.size() < prm.max_cubes; ++j) {
    std::size_t s = pick(nv), t = pick(nv);
    if (prm.acyclic) {
      if (nv < 2) break;
      if (s == t) continue;
      if (s > t) std::swap(s, t);
    }
    edge(vs[s], vs[t], static_cast<Letter>(pick(sig.size())));
  }
  std::vector<std::pair<Letter, Letter>> indep;
  for (Letter x = 0; x < sig.size(); ++x)
    for (Letter y = 0; y < sig.size(); ++y)
      if (x != y && sig.independent(x, y)) indep.emplace_back(x, y);
  std::size_t scount = 0;
  if (!indep.empty() && std::bernoulli_distribution(prm.square_seed_rate)(rng) && a.cubes.size() + 9 <= prm.max_cubes) {
    auto [x, y] = indep[pick(indep.size())];
    CubeId u = vs[pick(vs.size())];
    CubeId v = a.add_vertex("v" + std::to_string(nv++));
    CubeId w = a.add_vertex("v" + std::to_string(nv++));
    CubeId z = a.add_vertex("v" + std::to_string(nv++));
    CubeId ex = edge(u, v, x), ey = edge(u, w, y), fx = edge(w, z, x), fy = edge(v, z, y);
    a.add_square("s" + std::to_string(scount++), ey, ex, fy, fx);
  }
  // Squares among existing edges: d^0_2 = ex (u→v), d^0_1 = ey (u→w), d^1_2 = fx (w→z), d^1_1 = fy (v→z).
  std::vector<CubeId> es = a.cubes.edges();
  std::set<std::vector<CubeId>> used;
  for (CubeId s : a.cubes.cubes_of_dim(2))
    used.insert({a.cubes.face(s, 0, 1), a.cubes.face(s, 0, 2), a.cubes.face(s, 1, 1), a.cubes.face(s, 1, 2)});
  for (CubeId ex : es)
    for (CubeId ey : es)
      for (CubeId fx : es)
        for (CubeId fy : es) {
          if (a.cubes.size() >= prm.max_cubes) break;
          const auto& p = a.cubes;
          if (p.source(ex) != p.source(ey) || p.source(fx) != p.target(ey) || p.source(fy) != p.target(ex) ||
              p.target(fx) != p.target(fy))
            continue;
          if (a.label(ex) != a.label(fx) || a.label(ey) != a.label(fy)) continue;
          bool ok = true;
          for (Letter s : a.label(ex))
            for (Letter t : a.label(ey)) ok = ok && sig.independent(s, t);
          if (!ok || used.count({ey, ex, fy, fx}) || !coin(rng)) continue;
          used.insert({ey, ex, fy, fx});
          a.add_square("s" + std::to_string(scount++), ey, ex, fy, fx);
        }
  a.initial = vs[0];
  std::vector<CubeId> fin;
  for (CubeId v : a.cubes.vertices())
    if (coin(rng)) fin.push_back(v);
  a.set_finals(fin);
  return a;
}

/// Products u·v over two finite sets, kept when the length is at most n.
inline TraceSet products(const TraceSet& us, const TraceSet& vs, std::size_t n) {
  TraceSet out;
  for (const auto& u : us)
    for (const auto& v : vs)
      if (u.length() + v.length() <= n) out.insert(mul(u, v));
  return out;
}

inline TraceSet mapped(const TraceSet& ts, const AlphabetMorphism& sigma) {
  TraceSet out;
  for (const auto& t : ts) out.insert(apply_morphism(sigma, t));
  return out;
}

/// Submonoid generated by `gens`, restricted to length at most n.
inline TraceSet generated(const TraceSet& gens, const AlphabetPtr& sig, std::size_t n) {
  TraceSet out{unit_trace(sig)};
  TraceSet frontier = out;
  while (!frontier.empty()) {
    TraceSet next;
    for (const auto& t : products(frontier, gens, n))
      if (out.insert(t).second) next.insert(t);
    frontier = std::move(next);
  }
  return out;
}

/// Formula side of the four monoid identities, each up to length n.
struct MonoidFormulas {
  TraceSet tl_tensor, pi_tensor, tl_coprod, pi_coprod;
};

inline MonoidFormulas monoid_formulas(const Hda& a, const Hda& b, std::size_t n) {
  MonoidFormulas f;
  auto ta = tensor_alphabet(a.alphabet, b.alphabet);
  auto ca = coprod_alphabet(a.alphabet, b.alphabet);
  auto tla = tl_up_to(a, n).traces, tlb = tl_up_to(b, n).traces;
  auto pia = pi_up_to(a, n).traces, pib = pi_up_to(b, n).traces;
  f.tl_tensor = products(mapped(tla, ta.left), mapped(tlb, ta.right), n);
  f.pi_tensor = products(mapped(pia, ta.left), mapped(pib, ta.right), n);
  TraceSet gens = mapped(pia, ca.left);
  auto gb = mapped(pib, ca.right);
  gens.insert(gb.begin(), gb.end());
  gens.erase(unit_trace(ca.alphabet));
  f.pi_coprod = generated(gens, ca.alphabet, n);
  f.tl_coprod = products(f.pi_coprod, mapped(tla, ca.left), n);
  auto right = products(f.pi_coprod, mapped(tlb, ca.right), n);
  f.tl_coprod.insert(right.begin(), right.end());
  return f;
}

/// v0 → v1 → ⋯ → vk with each edge labeled by one of `letters`; k = 0 gives a
/// single loop instead when `loop` is set.
inline Hda chain_hda(std::mt19937& rng, std::size_t k, const std::vector<std::string>& letters, bool loop = false) {
  Hda a;
  a.alphabet = make_alphabet(ConcurrentAlphabet::free(letters));
  std::vector<CubeId> vs{a.add_vertex("v0")};
  a.initial = vs[0];
  if (loop) {
    a.add_edge("l", vs[0], vs[0], Word{static_cast<Letter>(rng() % letters.size())});
    a.set_finals({vs[0]});
    return a;
  }
  for (std::size_t j = 1; j <= k; ++j) {
    vs.push_back(a.add_vertex("v" + std::to_string(j)));
    a.add_edge("e" + std::to_string(j), vs[j - 1], vs[j], Word{static_cast<Letter>(rng() % letters.size())});
  }
  std::vector<CubeId> fin{vs.back()};
  if (rng() % 2) fin.push_back(vs.front());
  a.set_finals(fin);
  return a;
}

/// Randomized HDAs built from grids (tensor products of chains), sometimes
/// with a choice branch attached; they typically admit reductions.
inline Hda reducible_hda(std::mt19937& rng) {
  auto len = [&] { return 1 + rng() % 3; };
  Hda g = tensor_hda(chain_hda(rng, len(), {"a", "b"}), chain_hda(rng, len(), {"c", "d"}));
  switch (rng() % 4) {
    case 0: g = tensor_hda(g, chain_hda(rng, 1 + rng() % 2, {"e"})); break;
    case 1: g = coprod_hda(g, chain_hda(rng, 0, {"f"}, true)); break;
    case 2: g = coprod_hda(g, chain_hda(rng, len(), {"f", "g"})); break;
    default: break;
  }
  return g;
}

}  // namespace oracle

#endif  // HDAKIT_TESTS_ORACLES_HPP
