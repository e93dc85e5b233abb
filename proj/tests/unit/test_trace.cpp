#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace hdakit;

TEST(Trace, AlphabetClosure) {
  ConcurrentAlphabet sig({"b", "a", "c"}, {{"a", "b"}});
  EXPECT_EQ(sig.letters(), (std::vector<std::string>{"a", "b", "c"}));
  EXPECT_TRUE(sig.dependent(sig.at("b"), sig.at("a")));
  EXPECT_TRUE(sig.dependent(sig.at("c"), sig.at("c")));
  EXPECT_TRUE(sig.independent(sig.at("a"), sig.at("c")));
  EXPECT_THROW(ConcurrentAlphabet({"a", "a"}, {}), ArgumentError);
  EXPECT_THROW(sig.at("z"), ArgumentError);
  EXPECT_THROW(ConcurrentAlphabet::with_independence({"a"}, {{"a", "a"}}), ArgumentError);
}

TEST(Trace, FoataFormat) {
  auto sig = make_alphabet(ConcurrentAlphabet::with_independence({"a", "b", "c"}, {{"a", "b"}}));
  EXPECT_EQ(trace_of(sig, std::vector<std::string>{"b", "a", "c", "a"}).format(), "[a b][c][a]");
  EXPECT_EQ(unit_trace(sig).format(), "1");
}

TEST(Trace, NormalFormIsClassInvariant) {
  for (std::size_t n : {3u, 4u})
    for (const auto& sig : oracle::dependence_shapes(n)) {
      std::map<Trace, Word> seen;
      for (const auto& w : oracle::all_words(n, n == 3 ? 5 : 4)) {
        Trace t = trace_of(sig, w);
        EXPECT_EQ(t.length(), w.size());
        EXPECT_TRUE(oracle::equivalent(*sig, t.representative(), w));
        auto [it, fresh] = seen.emplace(t, w);
        if (!fresh) {
          EXPECT_TRUE(oracle::equivalent(*sig, it->second, w));
        }
        for (const auto& u : oracle::word_class(*sig, w)) EXPECT_EQ(trace_of(sig, u), t);
      }
    }
}

TEST(Trace, PrefixAgreesWithOracle) {
  for (const auto& sig : oracle::dependence_shapes(3)) {
    auto ts = oracle::all_traces(sig, 4);
    for (const auto& u : ts)
      for (const auto& v : ts)
        ASSERT_EQ(is_prefix(v, u), oracle::is_prefix(*sig, v.representative(), u.representative()))
            << v.format() << " / " << u.format();
  }
}

TEST(Trace, MultiplicationIsAssociative) {
  auto sig = oracle::dependence_shapes(4)[2];
  auto ts = oracle::all_traces(sig, 2);
  for (const auto& x : ts)
    for (const auto& y : ts) {
      EXPECT_TRUE(is_prefix(x, mul(x, y)));
      for (const auto& z : ts) EXPECT_EQ(mul(mul(x, y), z), mul(x, mul(y, z)));
    }
}

TEST(Trace, Morphisms) {
  auto a = make_alphabet(ConcurrentAlphabet::commutative({"x", "y"}));
  auto b = make_alphabet(ConcurrentAlphabet::free({"p", "q"}));
  auto to_free = AlphabetMorphism::by_name(b, a, [](const std::string& s) { return s == "p" ? "x" : "y"; });
  EXPECT_TRUE(to_free.valid());
  auto bad = AlphabetMorphism::by_name(a, b, [](const std::string& s) { return s == "x" ? "p" : "q"; });
  EXPECT_FALSE(bad.valid());
  EXPECT_THROW(apply_morphism(bad, trace_of(a, std::vector<std::string>{"x"})), ArgumentError);
  auto t = apply_morphism(to_free, trace_of(b, std::vector<std::string>{"q", "p"}));
  EXPECT_EQ(t, trace_of(a, std::vector<std::string>{"x", "y"}));
}

TEST(Trace, SumAlphabets) {
  auto a = make_alphabet(ConcurrentAlphabet::free({"x"}));
  auto b = make_alphabet(ConcurrentAlphabet::free({"y"}));
  auto t = tensor_alphabet(a, b);
  auto c = coprod_alphabet(a, b);
  EXPECT_TRUE(t.alphabet->independent(t.alphabet->at("L:x"), t.alphabet->at("R:y")));
  EXPECT_TRUE(c.alphabet->dependent(c.alphabet->at("L:x"), c.alphabet->at("R:y")));
  EXPECT_TRUE(t.left.valid() && t.right.valid() && c.left.valid() && c.right.valid());
}

TEST(Trace, MixingAlphabetsThrows) {
  auto a = make_alphabet(ConcurrentAlphabet::free({"x"}));
  auto b = make_alphabet(ConcurrentAlphabet::free({"y"}));
  EXPECT_THROW(mul(unit_trace(a), unit_trace(b)), AlphabetMismatch);
  EXPECT_THROW(is_prefix(unit_trace(a), unit_trace(b)), AlphabetMismatch);
}
