#ifndef HDAKIT_ALGEBRA_HPP
#define HDAKIT_ALGEBRA_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hdakit/error.hpp"
#include "hdakit/trace.hpp"

namespace hdakit {

/// The field with two elements.
struct Gf2 {
  using value_type = std::uint8_t;
  static constexpr std::string_view name = "gf2";
  static value_type zero() { return 0; }
  static value_type one() { return 1; }
  static value_type from_int(long long v) { return static_cast<value_type>(v & 1); }
  static value_type add(value_type a, value_type b) { return a ^ b; }
  static value_type sub(value_type a, value_type b) { return a ^ b; }
  static value_type mul(value_type a, value_type b) { return a & b; }
  static value_type neg(value_type a) { return a; }
  static value_type inv(value_type a) {
    if (!a) throw ArgumentError("division by zero");
    return a;
  }
  static bool is_zero(value_type a) { return a == 0; }
  static std::string to_string(value_type a) { return a ? "1" : "0"; }
};

/// Exact rationals.
struct Rationals {
  using value_type = boost::multiprecision::cpp_rational;
  static constexpr std::string_view name = "q";
  static value_type zero() { return 0; }
  static value_type one() { return 1; }
  static value_type from_int(long long v) { return v; }
  static value_type add(const value_type& a, const value_type& b) { return a + b; }
  static value_type sub(const value_type& a, const value_type& b) { return a - b; }
  static value_type mul(const value_type& a, const value_type& b) { return a * b; }
  static value_type neg(const value_type& a) { return -a; }
  static value_type inv(const value_type& a) {
    if (a == 0) throw ArgumentError("division by zero");
    return 1 / a;
  }
  static bool is_zero(const value_type& a) { return a == 0; }
  static std::string to_string(const value_type& a) { return a.str(); }
};

/// Dense row-major matrix over F.
template <class F>
class Matrix {
 public:
  using T = typename F::value_type;

  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, F::zero()) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T get(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, T v) { data_[r * cols_ + c] = std::move(v); }
  void add_to(std::size_t r, std::size_t c, const T& v) { data_[r * cols_ + c] = F::add(data_[r * cols_ + c], v); }
  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap(data_[a * cols_ + c], data_[b * cols_ + c]);
  }
  void scale_row(std::size_t r, const T& s) {
    for (std::size_t c = 0; c < cols_; ++c) data_[r * cols_ + c] = F::mul(data_[r * cols_ + c], s);
  }
  /// row[target] -= s * row[source]
  void sub_row(std::size_t target, std::size_t source, const T& s) {
    for (std::size_t c = 0; c < cols_; ++c)
      if (!F::is_zero(data_[source * cols_ + c]))
        data_[target * cols_ + c] = F::sub(data_[target * cols_ + c], F::mul(s, data_[source * cols_ + c]));
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<T> data_;
};

/// GF(2) matrices keep each row as a packed bitset.
template <>
class Matrix<Gf2> {
 public:
  using T = Gf2::value_type;

  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), words_((cols + 63) / 64), data_(rows * words_, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T get(std::size_t r, std::size_t c) const { return (data_[r * words_ + c / 64] >> (c % 64)) & 1U; }
  void set(std::size_t r, std::size_t c, T v) {
    auto& w = data_[r * words_ + c / 64];
    std::uint64_t bit = std::uint64_t{1} << (c % 64);
    w = (v & 1) ? (w | bit) : (w & ~bit);
  }
  void add_to(std::size_t r, std::size_t c, const T& v) {
    if (v & 1) data_[r * words_ + c / 64] ^= std::uint64_t{1} << (c % 64);
  }
  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t w = 0; w < words_; ++w) std::swap(data_[a * words_ + w], data_[b * words_ + w]);
  }
  void scale_row(std::size_t r, const T& s) {
    if (!(s & 1))
      for (std::size_t w = 0; w < words_; ++w) data_[r * words_ + w] = 0;
  }
  void sub_row(std::size_t target, std::size_t source, const T& s) {
    if (!(s & 1)) return;
    for (std::size_t w = 0; w < words_; ++w) data_[target * words_ + w] ^= data_[source * words_ + w];
  }

 private:
  std::size_t rows_ = 0, cols_ = 0, words_ = 0;
  std::vector<std::uint64_t> data_;
};

/// In-place reduced row echelon form; returns the pivot columns.
template <class F>
std::vector<std::size_t> rref(Matrix<F>& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && F::is_zero(m.get(p, c))) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(r, p);
    m.scale_row(r, F::inv(m.get(r, c)));
    for (std::size_t s = 0; s < m.rows(); ++s)
      if (s != r && !F::is_zero(m.get(s, c))) m.sub_row(s, r, m.get(s, c));
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class F>
std::size_t rank(Matrix<F> m) {
  return rref(m).size();
}

/// Basis of {v : M v = 0}, one vector per free column.
template <class F>
std::vector<std::vector<typename F::value_type>> kernel_basis(Matrix<F> m) {
  auto pivots = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<typename F::value_type>> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<typename F::value_type> v(m.cols(), F::zero());
    v[f] = F::one();
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = F::neg(m.get(r, f));
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Sorted list of distinct letters, i.e. a basis element of the exterior algebra.
using Monomial = std::vector<Letter>;

/// Element of the exterior algebra Λ(Σ) over F. Monomials are sorted letter
/// lists compared lexicographically (letter order is name order).
template <class F>
class Exterior {
 public:
  using T = typename F::value_type;
  using Terms = std::map<Monomial, T>;

  Exterior() = default;

  static Exterior unit() {
    Exterior e;
    e.terms_[{}] = F::one();
    return e;
  }

  static Exterior letter(Letter a) {
    Exterior e;
    e.terms_[{a}] = F::one();
    return e;
  }

  static Exterior monomial(Monomial m, T c = F::one()) {
    Exterior e;
    if (!F::is_zero(c)) e.terms_[std::move(m)] = std::move(c);
    return e;
  }

  /// Σ over positions of the letters of w (repeated letters add up).
  static Exterior sum_of_letters(const Word& w) {
    Exterior e;
    for (Letter a : w) e.add_term({a}, F::one());
    return e;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Smallest monomial with nonzero coefficient.
  const Monomial& leading() const { return terms_.begin()->first; }
  const T& leading_coefficient() const { return terms_.begin()->second; }

  T coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? F::zero() : it->second;
  }

  void add_term(const Monomial& m, const T& c) {
    if (F::is_zero(c)) return;
    auto [it, fresh] = terms_.emplace(m, c);
    if (fresh) return;
    it->second = F::add(it->second, c);
    if (F::is_zero(it->second)) terms_.erase(it);
  }

  Exterior& operator+=(const Exterior& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Exterior& operator-=(const Exterior& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, F::neg(c));
    return *this;
  }
  friend Exterior operator+(Exterior a, const Exterior& b) { return a += b; }
  friend Exterior operator-(Exterior a, const Exterior& b) { return a -= b; }

  Exterior scaled(const T& s) const {
    Exterior e;
    if (F::is_zero(s)) return e;
    for (const auto& [m, c] : terms_) e.add_term(m, F::mul(c, s));
    return e;
  }

  /// Product of basis monomials: zero on a repeated letter, otherwise the
  /// sorted union with the sign of the sorting permutation.
  static std::pair<Monomial, int> wedge_monomials(const Monomial& a, const Monomial& b) {
    Monomial out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0, inversions = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && a[i] < b[j])) {
        out.push_back(a[i++]);
      } else if (i == a.size() || b[j] < a[i]) {
        inversions += a.size() - i;
        out.push_back(b[j++]);
      } else {
        return {{}, 0};
      }
    }
    return {std::move(out), inversions % 2 ? -1 : 1};
  }

  friend Exterior wedge(const Exterior& x, const Exterior& y) {
    Exterior e;
    for (const auto& [ma, ca] : x.terms_)
      for (const auto& [mb, cb] : y.terms_) {
        auto [m, sign] = wedge_monomials(ma, mb);
        if (sign == 0) continue;
        T c = F::mul(ca, cb);
        e.add_term(m, sign > 0 ? c : F::neg(c));
      }
    return e;
  }

  /// Image under the algebra map induced by a letter map.
  Exterior mapped(const AlphabetMorphism& sigma) const {
    Exterior e;
    for (const auto& [m, c] : terms_) {
      Exterior t = unit().scaled(c);
      for (Letter a : m) t = wedge(t, letter(sigma.map.at(a)));
      e += t;
    }
    return e;
  }

  bool operator==(const Exterior& o) const { return terms_ == o.terms_; }

  std::string format(const ConcurrentAlphabet& sig) const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      std::string mono;
      if (m.empty()) mono = "1";
      for (std::size_t j = 0; j < m.size(); ++j) mono += (j ? "^" : "") + sig.name(m[j]);
      T absval = c;
      bool negative = false;
      if constexpr (!std::is_same_v<F, Gf2>) {
        negative = c < 0;
        if (negative) absval = -c;
      }
      if (!first) s += negative ? " - " : " + ";
      else if (negative) s += "-";
      first = false;
      if (absval == F::one()) {
        s += mono;
      } else {
        s += F::to_string(absval) + "*" + mono;
      }
    }
    return s;
  }

 private:
  Terms terms_;
};

/// Degree-homogeneous subspace with a fully reduced echelon basis: every
/// basis element has leading coefficient 1 and no other element has a term
/// on its leading monomial. Basis elements are ordered by leading monomial.
template <class F>
class EchelonSpace {
 public:
  using E = Exterior<F>;

  const std::vector<E>& basis() const { return basis_; }
  std::size_t dim() const { return basis_.size(); }

  /// Remainder of v after elimination against the basis.
  E reduce(E v) const {
    for (const auto& b : basis_) {
      auto c = v.coefficient(b.leading());
      if (!F::is_zero(c)) v -= b.scaled(c);
    }
    return v;
  }

  bool contains(const E& v) const { return reduce(v).is_zero(); }

  /// Adds v to the span; returns false if it was already contained.
  bool insert(E v) {
    v = reduce(std::move(v));
    if (v.is_zero()) return false;
    v = v.scaled(F::inv(v.leading_coefficient()));
    for (auto& b : basis_) {
      auto c = b.coefficient(v.leading());
      if (!F::is_zero(c)) b -= v.scaled(c);
    }
    auto pos = std::lower_bound(basis_.begin(), basis_.end(), v,
                                [](const E& a, const E& b) { return a.leading() < b.leading(); });
    basis_.insert(pos, std::move(v));
    return true;
  }

  bool operator==(const EchelonSpace& o) const { return basis_ == o.basis_; }

 private:
  std::vector<E> basis_;
};

}  // namespace hdakit

#endif  // HDAKIT_ALGEBRA_HPP
