// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <unordered_set>

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace hdakit;

namespace {

struct Check {
  std::ostringstream why;
  bool ok = true;

  void expect(bool cond, const std::string& what) {
    if (!cond && ok) why << what;
    ok = ok && cond;
  }
};

using Clock = std::chrono::steady_clock;

int failures = 0;

void criterion(int id, const std::string& title, double limit_s, const std::function<void(Check&)>& body) {
  Check c;
  auto t0 = Clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.expect(false, std::string("exception: ") + e.what());
  }
  double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  if (limit_s > 0) c.expect(secs < limit_s, "took " + std::to_string(secs) + " s");
  std::printf("%s %2d %s (%.2f s)%s%s\n", c.ok ? "PASS" : "FAIL", id, title.c_str(), secs, c.ok ? "" : ": ",
              c.ok ? "" : c.why.str().c_str());
  std::fflush(stdout);
  failures += !c.ok;
}

std::vector<std::size_t> trimmed(std::vector<std::size_t> v) {
  while (v.size() > 1 && v.back() == 0) v.pop_back();
  return v;
}

std::vector<std::size_t> convolve(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  std::vector<std::size_t> c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return trimmed(c);
}

template <class F>
bool hl_laws(const Hda& a, const Hda& b) {
  auto ta = tensor_alphabet(a.alphabet, b.alphabet);
  auto ca = coprod_alphabet(a.alphabet, b.alphabet);
  auto ha = homology_language<F>(a), hb = homology_language<F>(b);
  return hl_eq(homology_language<F>(tensor_hda(a, b)), hl_wedge(hl_image(ha, ta.left), hl_image(hb, ta.right))) &&
         hl_eq(homology_language<F>(coprod_hda(a, b)), hl_sum(hl_image(ha, ca.left), hl_image(hb, ca.right)));
}

std::size_t longest_path(const Hda& a) {
  std::size_t best = 0;
  for (const auto& w : oracle::paths_from_initial(a, 9)) best = std::max(best, w.length());
  return best;
}

struct WordHash {
  std::size_t operator()(const Word& w) const {
    std::size_t h = w.size();
    for (Letter c : w) h = h * 31 + c + 1;
    return h;
  }
};

/// Λ(S) ⊆ HL: every monomial over the letters of S lies in HL.
template <class F>
bool exterior_contained(const HomologyLanguage<F>& hl, const ConcurrentAlphabet& sig, const std::vector<std::string>& s) {
  for (std::size_t bits = 0; bits < (std::size_t{1} << s.size()); ++bits) {
    Monomial m;
    for (std::size_t j = 0; j < s.size(); ++j)
      if (bits >> j & 1U) m.push_back(sig.at(s[j]));
    std::sort(m.begin(), m.end());
    if (!hl.contains(Exterior<F>::monomial(m))) return false;
  }
  return true;
}

}  // namespace

int main() {
  criterion(1, "toy Betti numbers and homology language over GF(2) and Q", 1.0, [](Check& c) {
    auto t = fixture::load("toy.json");
    std::vector<std::size_t> b{1, 3, 1};
    std::vector<std::string> hl{"1", "a1", "a2", "a3", "a1^a2"};
    c.expect(betti<Gf2>(t.cubes) == b, "betti over GF(2)");
    c.expect(betti<Rationals>(t.cubes) == b, "betti over Q");
    c.expect(homology_language<Gf2>(t).format_lines() == hl, "HL over GF(2)");
    c.expect(homology_language<Rationals>(t).format_lines() == hl, "HL over Q");
  });

  criterion(2, "toy labels l(I) = 1, l(x_i) = a_i, l(y) = a1^a2", 0, [](Check& c) {
    auto t = fixture::load("toy.json");
    const auto& sig = *t.alphabet;
    for (const char* field : {"gf2", "q"}) {
      auto run = [&]<class F>(F) {
        using E = Exterior<F>;
        c.expect(label_form<F>(t, t.initial) == E::unit(), std::string("l(I) over ") + field);
        for (int j = 1; j <= 3; ++j) {
          std::string x = "x" + std::to_string(j), l = "a" + std::to_string(j);
          c.expect(label_form<F>(t, t.cubes.at(x)) == E::letter(sig.at(l)), "l(" + x + ")");
        }
        auto y = wedge(E::letter(sig.at("a1")), E::letter(sig.at("a2")));
        c.expect(label_form<F>(t, t.cubes.at("y")) == y, "l(y)");
        c.expect(y.format(sig) == "a1^a2", "l(y) format");
      };
      std::string(field) == "gf2" ? run(Gf2{}) : run(Rationals{});
    }
  });

  criterion(3, "HL and Betti identities on 100 random pairs", 30.0, [](Check& c) {
    std::mt19937 rng(2024);
    oracle::RandomHdaParams prm;
    prm.letters = 4;
    prm.max_cubes = 20;
    for (int t = 0; t < 100 && c.ok; ++t) {
      prm.letters = 1 + rng() % 4;
      auto a = oracle::random_hda(rng, prm);
      prm.letters = 1 + rng() % 4;
      auto b = oracle::random_hda(rng, prm);
      std::string at = " (pair " + std::to_string(t) + ")";
      c.expect(a.cubes.size() <= 20 && b.cubes.size() <= 20, "generator exceeded 20 cubes" + at);
      auto ab = tensor_hda(a, b), ac = coprod_hda(a, b);
      c.expect(validate_hda(ab).ok() && validate(ab.cubes).ok(), "tensor output invalid" + at);
      c.expect(validate_hda(ac).ok() && validate(ac.cubes).ok(), "coproduct output invalid" + at);
      c.expect(hl_laws<Gf2>(a, b), "HL laws over GF(2)" + at);
      c.expect(hl_laws<Rationals>(a, b), "HL laws over Q" + at);
      c.expect(trimmed(betti<Gf2>(ab.cubes)) == convolve(trimmed(betti<Gf2>(a.cubes)), trimmed(betti<Gf2>(b.cubes))),
               "Betti convolution" + at);
    }
  });

  criterion(4, "bounded monoid formulas at N = 6 for tensor and coproduct", 60.0, [](Check& c) {
    std::mt19937 rng(77);
    oracle::RandomHdaParams prm;
    for (int t = 0; t < 40 && c.ok; ++t) {
      prm.letters = 1 + rng() % 3;
      prm.max_cubes = 12;
      auto a = oracle::random_hda(rng, prm);
      prm.letters = 1 + rng() % 3;
      auto b = oracle::random_hda(rng, prm);
      auto f = oracle::monoid_formulas(a, b, 6);
      auto ab = tensor_hda(a, b), ac = coprod_hda(a, b);
      std::string at = " (pair " + std::to_string(t) + ")";
      c.expect(tl_up_to(ab, 6).traces == f.tl_tensor, "TL of tensor" + at);
      c.expect(pi_up_to(ab, 6).traces == f.pi_tensor, "pi of tensor" + at);
      c.expect(tl_up_to(ac, 6).traces == f.tl_coprod, "TL of coproduct" + at);
      c.expect(pi_up_to(ac, 6).traces == f.pi_coprod, "pi of coproduct" + at);
    }
  });

  criterion(5, "is_prefix and tl_contains agree with brute-force oracles", 0, [](Check& c) {
    for (std::size_t n : {3u, 4u})
      for (const auto& sig : oracle::dependence_shapes(n)) {
        auto traces = oracle::all_traces(sig, 6);
        for (const auto& u : traces) {
          std::unordered_set<Word, WordHash> pre;
          for (const auto& w : oracle::prefix_closure(*sig, u.representative())) pre.insert(w);
          for (const auto& v : traces) {
            if (v.length() > u.length()) break;
            if (is_prefix(v, u) != (pre.count(v.representative()) > 0)) {
              c.expect(false, "is_prefix(" + v.format() + ", " + u.format() + ")");
              return;
            }
          }
        }
        std::mt19937 rng(500 + n);
        oracle::RandomHdaParams prm;
        prm.alphabet = sig;
        prm.max_vertices = 5;
        prm.max_edges = 7;
        for (int t = 0; t < 12; ++t) {
          prm.acyclic = t % 2 == 0;
          auto a = oracle::random_hda(rng, prm);
          bool complete = prm.acyclic && longest_path(a) <= 8;
          std::unordered_set<Word, WordHash> words;
          for (const auto& w : oracle::tl_words(a, 8)) words.insert(w);
          std::map<Word, std::unordered_set<Word, WordHash>> closures;
          for (const auto& v : traces) {
            auto wit = tl_witness(a, v);
            bool in = words.count(v.representative()) > 0;
            if (in && !wit) c.expect(false, "tl_contains misses " + v.format());
            if (complete && wit && !in) c.expect(false, "tl_contains invents " + v.format());
            if (wit) {
              Word label = oracle::path_label(a, *wit);
              auto it = closures.find(label);
              if (it == closures.end()) {
                auto pc = oracle::prefix_closure(*sig, label);
                it = closures.emplace(label, std::unordered_set<Word, WordHash>(pc.begin(), pc.end())).first;
              }
              if (!it->second.count(v.representative())) c.expect(false, "bad witness for " + v.format());
            }
            if (!c.ok) return;
          }
        }
      }
  });

  criterion(6, "dihomotopy: cube(3) has one class of maximal paths; labels are constant on classes", 0, [](Check& c) {
    auto p = cube(3);
    CubeId o = p.at(address_name({Coord::zero, Coord::zero, Coord::zero}));
    std::vector<Path> maximal;
    for (const auto& w : enumerate_paths(p, o, 4))
      if (w.length() == 3) maximal.push_back(w);
    c.expect(maximal.size() == 6, "cube(3) has " + std::to_string(maximal.size()) + " maximal paths");
    auto cls = dihomotopy_class(p, maximal.front());
    c.expect(cls == std::set<Path>(maximal.begin(), maximal.end()), "maximal paths are not one class");
    std::mt19937 rng(66);
    for (int t = 0; t < 60 && c.ok; ++t) {
      auto a = oracle::random_hda(rng, {});
      SwapIndex swaps(a.cubes);
      std::set<Path> done;
      for (const auto& w : enumerate_paths(a.cubes, a.initial, 6)) {
        if (done.count(w)) continue;
        auto cls = dihomotopy_class(swaps, w);
        auto labels = oracle::word_class(*a.alphabet, oracle::path_label(a, w));
        for (const auto& v : cls) {
          c.expect(labels.count(oracle::path_label(a, v)) > 0, "class with non-congruent labels");
          done.insert(v);
        }
      }
    }
  });

  criterion(7, "Peterson: reduction, weak equivalence at bound 12, safety", 30.0, [](Check& c) {
    auto p = fixture::load("peterson.json");
    auto q = fixture::load("peterson_reduced.json");
    auto r = reduce_fixpoint(p);
    c.expect(isomorphic(r.result, q), "reduction is not isomorphic to the reduced fixture");
    auto [ab, ba] = weak_equiv<Gf2>(p, q, 12);
    for (const auto* v : {&ab, &ba}) {
      c.expect(v->outcome == Outcome::holds_up_to_bound && v->bound == 12, "outcome " + outcome_name(v->outcome));
      c.expect(v->accessibility_ok && v->hl_holds && v->alphabet_equal, "exact parts fail");
      c.expect(!v->pi.exact || !v->tl.exact, "bounded parts reported exact");
    }
    auto [abq, baq] = weak_equiv<Rationals>(p, q, 12);
    c.expect(abq.hl_holds && baq.hl_holds, "HL inclusion over Q");
    auto mutex = fixture::monitor("mutex.json");
    c.expect(satisfies_safety(p, mutex).holds, "mutex on Peterson");
    c.expect(satisfies_safety(q, mutex).holds, "mutex on reduced Peterson");
    Hda bad;
    bad.alphabet = p.alphabet;
    auto u = bad.add_vertex("u"), v = bad.add_vertex("v"), w = bad.add_vertex("w");
    bad.add_edge("enter0", u, v, std::vector<std::string>{"crit0"});
    bad.add_edge("enter1", v, w, std::vector<std::string>{"crit1"});
    bad.initial = u;
    bad.set_finals({w});
    auto s = satisfies_safety(bad, mutex);
    c.expect(!s.holds && s.counterexample && format_path(bad.cubes, *s.counterexample) == "enter0 enter1",
             "crit0 crit1 violation not caught");
  });

  criterion(8, "collapse soundness audit on fixtures and 50 random reducible HDAs", 0, [](Check& c) {
    ReducePolicy policy;
    policy.audit = true;
    policy.audit_bound = 8;
    std::size_t steps = 0;
    for (const char* f : {"toy.json", "ecollapse.json", "peterson.json", "peterson_reduced.json"}) {
      auto r = reduce_fixpoint(fixture::load(f), policy);
      steps += r.log.steps.size();
    }
    std::mt19937 rng(88);
    for (int t = 0; t < 50; ++t) {
      auto a = oracle::reducible_hda(rng);
      auto r = reduce_fixpoint(a, policy);
      steps += r.log.steps.size();
      c.expect(validate_hda(r.result).ok(), "reduced HDA invalid");
    }
    c.expect(steps >= 50, "only " + std::to_string(steps) + " steps audited");
  });

  criterion(9, "loop versus its finite unfoldings", 0, [](Check& c) {
    auto sig = make_alphabet(ConcurrentAlphabet::free({"a"}));
    using E = Exterior<Gf2>;
    auto loop = fixture::loop("a", sig);
    auto hl = homology_language<Gf2>(loop);
    c.expect(hl.degree(1).dim() == 1 && hl.degree(1).contains(E::letter(0)), "HL(loop) degree 1 is not span{a}");
    for (std::size_t k = 1; k <= 5; ++k) {
      auto chain = fixture::chain(k, "a", sig);
      c.expect(homology_language<Gf2>(chain).degree(1).dim() == 0, "HL(chain) degree 1 nonzero");
      auto [lc, cl] = weak_equiv<Gf2>(loop, chain, 8);
      c.expect(combine(lc.outcome, cl.outcome) == Outcome::refuted, "weq did not refute");
      c.expect(!lc.hl_holds && lc.hl_counterexample == std::optional<std::string>("a"), "no HL witness");
    }
  });

  criterion(10, "independence test on the toy homology language", 0, [](Check& c) {
    auto t = fixture::load("toy.json");
    const auto& sig = *t.alphabet;
    auto g = homology_language<Gf2>(t);
    auto q = homology_language<Rationals>(t);
    c.expect(!exterior_contained(g, sig, {"a1", "a3"}) && !exterior_contained(q, sig, {"a1", "a3"}), "L({a1,a3})");
    c.expect(!exterior_contained(g, sig, {"a2", "a3"}) && !exterior_contained(q, sig, {"a2", "a3"}), "L({a2,a3})");
    c.expect(exterior_contained(g, sig, {"a1", "a2"}) && exterior_contained(q, sig, {"a1", "a2"}), "L({a1,a2})");
  });

  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
