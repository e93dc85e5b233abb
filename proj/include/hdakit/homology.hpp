#ifndef HDAKIT_HOMOLOGY_HPP
#define HDAKIT_HOMOLOGY_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hdakit/algebra.hpp"
#include "hdakit/error.hpp"
#include "hdakit/hda.hpp"
#include "hdakit/precubical.hpp"

namespace hdakit {

/// Cubical chain complex C_n = F[P_n] with d x = Σ_i (-1)^i (d^0_i x - d^1_i x).
/// basis[n] lists the n-cubes in column order; boundary[n] maps C_n to C_{n-1}
/// (boundary[0] is the zero map with no rows).
template <class F>
struct ChainComplex {
  std::vector<std::vector<CubeId>> basis;
  std::vector<Matrix<F>> boundary;

  int top() const { return static_cast<int>(basis.size()) - 1; }
  std::size_t dim(int n) const {
    return n < 0 || n > top() ? 0 : basis[static_cast<std::size_t>(n)].size();
  }
};

template <class F>
ChainComplex<F> chain_complex(const PrecubicalSet& p) {
  ChainComplex<F> cc;
  int top = std::max(p.max_dim(), 0);
  std::vector<std::size_t> column(p.size(), 0);
  for (int n = 0; n <= top; ++n) {
    cc.basis.push_back(p.cubes_of_dim(n));
    for (std::size_t j = 0; j < cc.basis.back().size(); ++j) column[cc.basis.back()[j]] = j;
  }
  cc.boundary.emplace_back(0, cc.dim(0));
  for (int n = 1; n <= top; ++n) {
    Matrix<F> d(cc.dim(n - 1), cc.dim(n));
    for (std::size_t j = 0; j < cc.dim(n); ++j) {
      CubeId x = cc.basis[static_cast<std::size_t>(n)][j];
      for (int i = 1; i <= n; ++i) {
        auto sign = F::from_int(i % 2 ? -1 : 1);
        d.add_to(column[p.face(x, 0, i)], j, sign);
        d.add_to(column[p.face(x, 1, i)], j, F::neg(sign));
      }
    }
    cc.boundary.push_back(std::move(d));
  }
  return cc;
}

/// d_{n-1} ∘ d_n = 0 for every n.
template <class F>
bool is_complex(const ChainComplex<F>& cc) {
  for (int n = 2; n <= cc.top(); ++n) {
    const auto& a = cc.boundary[static_cast<std::size_t>(n - 1)];
    const auto& b = cc.boundary[static_cast<std::size_t>(n)];
    for (std::size_t r = 0; r < a.rows(); ++r)
      for (std::size_t c = 0; c < b.cols(); ++c) {
        auto s = F::zero();
        for (std::size_t k = 0; k < a.cols(); ++k) s = F::add(s, F::mul(a.get(r, k), b.get(k, c)));
        if (!F::is_zero(s)) return false;
      }
  }
  return true;
}

/// β_n = dim C_n - rank d_n - rank d_{n+1}, for n = 0..max dimension.
template <class F>
std::vector<std::size_t> betti(const PrecubicalSet& p) {
  auto cc = chain_complex<F>(p);
  std::vector<std::size_t> ranks(static_cast<std::size_t>(cc.top()) + 2, 0);
  for (int n = 1; n <= cc.top(); ++n) ranks[static_cast<std::size_t>(n)] = rank(cc.boundary[static_cast<std::size_t>(n)]);
  std::vector<std::size_t> out;
  if (p.size() == 0) return out;
  for (int n = 0; n <= cc.top(); ++n)
    out.push_back(cc.dim(n) - ranks[static_cast<std::size_t>(n)] - ranks[static_cast<std::size_t>(n) + 1]);
  return out;
}

/// e_i x = d^0_1 ⋯ d^0_{i-1} d^0_{i+1} ⋯ d^0_n x, the edge of x in direction i
/// leaving its origin (1-based i). For an edge, e_1 x = x.
inline CubeId starting_edge(const PrecubicalSet& p, CubeId x, int i) {
  int n = p.dim(x);
  if (i < 1 || i > n) throw ArgumentError("starting edge index out of range");
  Address a(static_cast<std::size_t>(n), Coord::zero);
  a[static_cast<std::size_t>(i - 1)] = Coord::full;
  return face_at(p, x, a);
}

/// 𝔩(x) = λ(e_1 x) ∧ ⋯ ∧ λ(e_n x), where a word stands for the sum of its
/// letters; vertices map to 1.
template <class F>
Exterior<F> label_form(const Hda& a, CubeId x) {
  auto e = Exterior<F>::unit();
  for (int i = 1; i <= a.cubes.dim(x); ++i)
    e = wedge(e, Exterior<F>::sum_of_letters(a.label(starting_edge(a.cubes, x, i))));
  return e;
}

/// The image of H_n(P_A) under the labeling chain map 𝔩, degree by degree.
///
/// Opposite faces d^0_i x and d^1_i x have the same starting-edge labels, so
/// 𝔩 vanishes on every boundary d x. Hence 𝔩 factors through homology and
/// its image on H_n equals 𝔩(ker d_n), which is what is computed.
template <class F>
class HomologyLanguage {
 public:
  using E = Exterior<F>;

  HomologyLanguage() = default;
  explicit HomologyLanguage(AlphabetPtr alphabet) : alphabet_(std::move(alphabet)) {}

  const AlphabetPtr& alphabet() const { return alphabet_; }
  int top() const { return static_cast<int>(degrees_.size()) - 1; }

  const EchelonSpace<F>& degree(int n) const {
    static const EchelonSpace<F> empty;
    return n < 0 || n > top() ? empty : degrees_[static_cast<std::size_t>(n)];
  }

  /// Adds a homogeneous element to the span.
  void insert(const E& v) {
    if (v.is_zero()) return;
    std::size_t n = v.leading().size();
    for (const auto& [m, c] : v.terms())
      if (m.size() != n) throw ArgumentError("element is not homogeneous");
    if (degrees_.size() <= n) degrees_.resize(n + 1);
    degrees_[n].insert(v);
  }

  /// Adds an arbitrary element by its homogeneous parts.
  void insert_parts(const E& v) {
    std::vector<E> parts;
    for (const auto& [m, c] : v.terms()) {
      if (parts.size() <= m.size()) parts.resize(m.size() + 1);
      parts[m.size()].add_term(m, c);
    }
    for (const auto& part : parts) insert(part);
  }

  bool contains(const E& v) const {
    std::vector<E> parts;
    for (const auto& [m, c] : v.terms()) {
      if (parts.size() <= m.size()) parts.resize(m.size() + 1);
      parts[m.size()].add_term(m, c);
    }
    for (std::size_t n = 0; n < parts.size(); ++n)
      if (!parts[n].is_zero() && !degree(static_cast<int>(n)).contains(parts[n])) return false;
    return true;
  }

  /// All basis elements, degree by degree.
  std::vector<E> basis() const {
    std::vector<E> out;
    for (const auto& d : degrees_) out.insert(out.end(), d.basis().begin(), d.basis().end());
    return out;
  }

  std::vector<std::string> format_lines() const {
    std::vector<std::string> out;
    for (const auto& e : basis()) out.push_back(e.format(*alphabet_));
    return out;
  }

  bool operator==(const HomologyLanguage& o) const {
    if (!same_alphabet(alphabet_, o.alphabet_)) return false;
    int t = std::max(top(), o.top());
    for (int n = 0; n <= t; ++n)
      if (!(degree(n) == o.degree(n))) return false;
    return true;
  }

 private:
  AlphabetPtr alphabet_;
  std::vector<EchelonSpace<F>> degrees_;
};

template <class F>
HomologyLanguage<F> homology_language(const Hda& a) {
  auto cc = chain_complex<F>(a.cubes);
  HomologyLanguage<F> hl(a.alphabet);
  for (int n = 0; n <= cc.top(); ++n) {
    const auto& cubes = cc.basis[static_cast<std::size_t>(n)];
    if (cubes.empty()) continue;
    std::vector<Exterior<F>> forms;
    for (CubeId x : cubes) forms.push_back(label_form<F>(a, x));
    for (const auto& z : kernel_basis(cc.boundary[static_cast<std::size_t>(n)])) {
      Exterior<F> image;
      for (std::size_t j = 0; j < z.size(); ++j)
        if (!F::is_zero(z[j])) image += forms[j].scaled(z[j]);
      hl.insert(image);
    }
  }
  return hl;
}

template <class F>
void require_same(const HomologyLanguage<F>& a, const HomologyLanguage<F>& b) {
  if (!same_alphabet(a.alphabet(), b.alphabet())) throw AlphabetMismatch("homology languages over different alphabets");
}

/// First basis element of a that is not in b, if any.
template <class F>
std::optional<Exterior<F>> hl_counterexample(const HomologyLanguage<F>& a, const HomologyLanguage<F>& b) {
  require_same(a, b);
  for (const auto& e : a.basis())
    if (!b.contains(e)) return e;
  return std::nullopt;
}

template <class F>
bool hl_leq(const HomologyLanguage<F>& a, const HomologyLanguage<F>& b) {
  return !hl_counterexample(a, b).has_value();
}

template <class F>
bool hl_eq(const HomologyLanguage<F>& a, const HomologyLanguage<F>& b) {
  require_same(a, b);
  return a == b;
}

/// Span of all products x ∧ y.
template <class F>
HomologyLanguage<F> hl_wedge(const HomologyLanguage<F>& a, const HomologyLanguage<F>& b) {
  require_same(a, b);
  HomologyLanguage<F> out(a.alphabet());
  auto bb = b.basis();
  for (const auto& x : a.basis())
    for (const auto& y : bb) out.insert(wedge(x, y));
  return out;
}

template <class F>
HomologyLanguage<F> hl_sum(const HomologyLanguage<F>& a, const HomologyLanguage<F>& b) {
  require_same(a, b);
  HomologyLanguage<F> out = a;
  for (const auto& y : b.basis()) out.insert(y);
  return out;
}

/// Image under the exterior-algebra map induced by a letter map.
template <class F>
HomologyLanguage<F> hl_image(const HomologyLanguage<F>& a, const AlphabetMorphism& sigma) {
  if (!same_alphabet(sigma.source, a.alphabet())) throw AlphabetMismatch("letter map source differs");
  HomologyLanguage<F> out(sigma.target);
  for (const auto& e : a.basis()) out.insert_parts(e.mapped(sigma));
  return out;
}

}  // namespace hdakit

#endif  // HDAKIT_HOMOLOGY_HPP
