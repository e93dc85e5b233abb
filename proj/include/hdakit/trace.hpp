#ifndef HDAKIT_TRACE_HPP
#define HDAKIT_TRACE_HPP

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hdakit/error.hpp"

namespace hdakit {

using Letter = std::uint32_t;
using Word = std::vector<Letter>;

/// Alphabet with a reflexive, symmetric dependence relation. Letters are kept
/// in lexicographic order of their names, so Letter order is name order.
class ConcurrentAlphabet {
 public:
  ConcurrentAlphabet() = default;

  /// Dependence pairs are closed under symmetry; reflexive pairs are implied.
  ConcurrentAlphabet(std::vector<std::string> letters,
                     const std::vector<std::pair<std::string, std::string>>& dependence)
      : letters_(std::move(letters)) {
    std::sort(letters_.begin(), letters_.end());
    if (std::adjacent_find(letters_.begin(), letters_.end()) != letters_.end())
      throw ArgumentError("duplicate letter in alphabet");
    dep_.assign(letters_.size() * letters_.size(), 0);
    for (Letter a = 0; a < size(); ++a) set(a, a);
    for (const auto& [a, b] : dependence) set(at(a), at(b));
  }

  /// Every pair dependent: the free monoid.
  static ConcurrentAlphabet free(std::vector<std::string> letters) {
    ConcurrentAlphabet out(std::move(letters), {});
    std::fill(out.dep_.begin(), out.dep_.end(), 1);
    return out;
  }

  /// Only the reflexive pairs dependent: the free commutative monoid.
  static ConcurrentAlphabet commutative(std::vector<std::string> letters) {
    return ConcurrentAlphabet(std::move(letters), {});
  }

  /// All pairs dependent except the listed ones (closed under symmetry).
  static ConcurrentAlphabet with_independence(std::vector<std::string> letters,
                                              const std::vector<std::pair<std::string, std::string>>& independent) {
    ConcurrentAlphabet out = free(std::move(letters));
    for (const auto& [a, b] : independent) {
      Letter x = out.at(a), y = out.at(b);
      if (x == y) throw ArgumentError("a letter cannot be independent of itself");
      out.dep_[x * out.size() + y] = out.dep_[y * out.size() + x] = 0;
    }
    return out;
  }

  std::size_t size() const { return letters_.size(); }
  const std::vector<std::string>& letters() const { return letters_; }
  const std::string& name(Letter a) const { return letters_.at(a); }

  std::optional<Letter> find(std::string_view name) const {
    auto it = std::lower_bound(letters_.begin(), letters_.end(), name);
    if (it == letters_.end() || *it != name) return std::nullopt;
    return static_cast<Letter>(it - letters_.begin());
  }

  Letter at(std::string_view name) const {
    auto a = find(name);
    if (!a) throw ArgumentError("unknown letter '" + std::string(name) + "'");
    return *a;
  }

  bool dependent(Letter a, Letter b) const { return dep_[a * size() + b] != 0; }
  bool independent(Letter a, Letter b) const { return !dependent(a, b); }

  /// Unordered dependent pairs (a <= b), reflexive ones included.
  std::vector<std::pair<Letter, Letter>> dependent_pairs() const {
    std::vector<std::pair<Letter, Letter>> out;
    for (Letter a = 0; a < size(); ++a)
      for (Letter b = a; b < size(); ++b)
        if (dependent(a, b)) out.emplace_back(a, b);
    return out;
  }

  Word word(const std::vector<std::string>& names) const {
    Word w;
    for (const auto& n : names) w.push_back(at(n));
    return w;
  }

  std::string format(const Word& w, std::string_view sep = " ") const {
    std::string s;
    for (std::size_t j = 0; j < w.size(); ++j) s += (j ? std::string(sep) : std::string()) + name(w[j]);
    return s;
  }

  bool operator==(const ConcurrentAlphabet&) const = default;

 private:
  void set(Letter a, Letter b) { dep_[a * size() + b] = dep_[b * size() + a] = 1; }

  std::vector<std::string> letters_;
  std::vector<std::uint8_t> dep_;
};

using AlphabetPtr = std::shared_ptr<const ConcurrentAlphabet>;

inline AlphabetPtr make_alphabet(ConcurrentAlphabet a) {
  return std::make_shared<const ConcurrentAlphabet>(std::move(a));
}

inline bool same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b) {
  return a == b || (a && b && *a == *b);
}

/// Element of the trace monoid, stored as its Foata normal form: a sequence of
/// steps of pairwise independent letters, each step sorted.
class Trace {
 public:
  Trace() = default;
  explicit Trace(AlphabetPtr alphabet) : alphabet_(std::move(alphabet)) {}

  const AlphabetPtr& alphabet() const { return alphabet_; }
  const std::vector<std::vector<Letter>>& steps() const { return steps_; }
  std::size_t length() const { return length_; }
  bool empty() const { return length_ == 0; }

  Word representative() const {
    Word w;
    for (const auto& s : steps_) w.insert(w.end(), s.begin(), s.end());
    return w;
  }

  /// Number of occurrences of each letter.
  std::vector<std::size_t> parikh() const {
    std::vector<std::size_t> c(alphabet_ ? alphabet_->size() : 0, 0);
    for (const auto& s : steps_)
      for (Letter a : s) ++c[a];
    return c;
  }

  /// Shorter traces first, then lexicographic on normal forms.
  std::strong_ordering operator<=>(const Trace& o) const {
    if (auto c = length_ <=> o.length_; c != 0) return c;
    return steps_ <=> o.steps_;
  }
  bool operator==(const Trace& o) const { return length_ == o.length_ && steps_ == o.steps_; }

  /// "1" for the unit, otherwise steps such as "[a b][c]".
  std::string format() const {
    if (empty()) return "1";
    std::string s;
    for (const auto& step : steps_) {
      s += "[";
      for (std::size_t j = 0; j < step.size(); ++j) s += (j ? " " : "") + alphabet_->name(step[j]);
      s += "]";
    }
    return s;
  }

 private:
  friend Trace trace_of(const AlphabetPtr&, const Word&);

  AlphabetPtr alphabet_;
  std::vector<std::vector<Letter>> steps_;
  std::size_t length_ = 0;
};

using TraceSet = std::set<Trace>;

/// Foata normal form of the class of w. A letter goes to the step after the
/// last step holding a letter it depends on.
inline Trace trace_of(const AlphabetPtr& alphabet, const Word& w) {
  if (!alphabet) throw ArgumentError("trace without alphabet");
  const auto& sig = *alphabet;
  Trace t(alphabet);
  std::vector<long> level(sig.size(), -1);
  for (Letter c : w) {
    if (c >= sig.size()) throw ArgumentError("letter outside alphabet");
    long lv = 0;
    for (Letter b = 0; b < sig.size(); ++b)
      if (sig.dependent(c, b)) lv = std::max(lv, level[b] + 1);
    if (static_cast<std::size_t>(lv) >= t.steps_.size()) t.steps_.resize(static_cast<std::size_t>(lv) + 1);
    t.steps_[static_cast<std::size_t>(lv)].push_back(c);
    level[c] = lv;
  }
  for (auto& s : t.steps_) std::sort(s.begin(), s.end());
  t.length_ = w.size();
  return t;
}

inline Trace unit_trace(const AlphabetPtr& alphabet) { return trace_of(alphabet, {}); }

inline Trace trace_of(const AlphabetPtr& alphabet, const std::vector<std::string>& names) {
  return trace_of(alphabet, alphabet->word(names));
}

inline void require_same(const Trace& u, const Trace& v) {
  if (!same_alphabet(u.alphabet(), v.alphabet())) throw AlphabetMismatch("traces over different alphabets");
}

inline Trace mul(const Trace& u, const Trace& v) {
  require_same(u, v);
  Word w = u.representative();
  Word x = v.representative();
  w.insert(w.end(), x.begin(), x.end());
  return trace_of(u.alphabet(), w);
}

inline Trace append(const Trace& u, const Word& w) {
  Word r = u.representative();
  r.insert(r.end(), w.begin(), w.end());
  return trace_of(u.alphabet(), r);
}

/// v ⪯ u: some representative of u starts with a representative of v.
/// Left-cancels the first letter of v from u until v is exhausted.
inline bool is_prefix(const Trace& v, const Trace& u) {
  require_same(u, v);
  if (v.length() > u.length()) return false;
  const auto& sig = *u.alphabet();
  Word rest = u.representative();
  for (Letter a : v.representative()) {
    auto it = std::find(rest.begin(), rest.end(), a);
    if (it == rest.end()) return false;
    if (std::any_of(rest.begin(), it, [&](Letter b) { return sig.dependent(a, b); })) return false;
    rest.erase(it);
  }
  return true;
}

/// Letter map between alphabets; a monoid morphism when (σ×σ)⁻¹(D') ⊆ D.
struct AlphabetMorphism {
  AlphabetPtr source;
  AlphabetPtr target;
  std::vector<Letter> map;

  bool valid() const {
    if (!source || !target || map.size() != source->size()) return false;
    for (Letter m : map)
      if (m >= target->size()) return false;
    for (Letter a = 0; a < source->size(); ++a)
      for (Letter b = 0; b < source->size(); ++b)
        if (target->dependent(map[a], map[b]) && !source->dependent(a, b)) return false;
    return true;
  }

  Word apply(const Word& w) const {
    Word out;
    out.reserve(w.size());
    for (Letter a : w) out.push_back(map.at(a));
    return out;
  }

  /// Map by letter name through `rename`, which must land in the target.
  template <class F>
  static AlphabetMorphism by_name(AlphabetPtr source, AlphabetPtr target, F&& rename) {
    AlphabetMorphism m{source, target, {}};
    for (Letter a = 0; a < source->size(); ++a) m.map.push_back(target->at(rename(source->name(a))));
    return m;
  }
};

inline Trace apply_morphism(const AlphabetMorphism& sigma, const Trace& t) {
  if (!sigma.valid()) throw ArgumentError("letter map is not a morphism of concurrent alphabets");
  if (!same_alphabet(sigma.source, t.alphabet())) throw AlphabetMismatch("trace is not over the morphism source");
  return trace_of(sigma.target, sigma.apply(t.representative()));
}

/// Result of a tensor or coproduct of alphabets: the combined alphabet plus
/// the two tagged embeddings ("L:" and "R:").
struct AlphabetSum {
  AlphabetPtr alphabet;
  AlphabetMorphism left;
  AlphabetMorphism right;
};

inline std::string left_tag(const std::string& a) { return "L:" + a; }
inline std::string right_tag(const std::string& a) { return "R:" + a; }

namespace detail {
inline AlphabetSum sum_alphabet(const AlphabetPtr& a, const AlphabetPtr& b, bool cross_dependent) {
  std::vector<std::string> letters;
  for (const auto& x : a->letters()) letters.push_back(left_tag(x));
  for (const auto& y : b->letters()) letters.push_back(right_tag(y));
  std::vector<std::pair<std::string, std::string>> dep;
  for (auto [x, y] : a->dependent_pairs()) dep.emplace_back(left_tag(a->name(x)), left_tag(a->name(y)));
  for (auto [x, y] : b->dependent_pairs()) dep.emplace_back(right_tag(b->name(x)), right_tag(b->name(y)));
  if (cross_dependent)
    for (const auto& x : a->letters())
      for (const auto& y : b->letters()) dep.emplace_back(left_tag(x), right_tag(y));
  AlphabetPtr sum = make_alphabet(ConcurrentAlphabet(std::move(letters), dep));
  return {sum, AlphabetMorphism::by_name(a, sum, left_tag), AlphabetMorphism::by_name(b, sum, right_tag)};
}
}  // namespace detail

/// Disjoint union with D⊗ = D₁ ∪ D₂: letters of different sides commute.
inline AlphabetSum tensor_alphabet(const AlphabetPtr& a, const AlphabetPtr& b) {
  return detail::sum_alphabet(a, b, false);
}

/// Disjoint union with D₁ ∪ D₂ ∪ Σ₁×Σ₂ ∪ Σ₂×Σ₁: no cross commutation.
inline AlphabetSum coprod_alphabet(const AlphabetPtr& a, const AlphabetPtr& b) {
  return detail::sum_alphabet(a, b, true);
}

}  // namespace hdakit

#endif  // HDAKIT_TRACE_HPP
