#ifndef HDAKIT_PRECUBICAL_HPP
#define HDAKIT_PRECUBICAL_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hdakit/error.hpp"

namespace hdakit {

using CubeId = std::size_t;
inline constexpr CubeId npos = static_cast<CubeId>(-1);

struct Cube {
  std::string name;
  int dim = 0;
  std::vector<CubeId> front;  // d^0_i at position i-1
  std::vector<CubeId> back;   // d^1_i at position i-1
};

/// Finite precubical set. Cubes are addressed by dense indices and carry
/// stable string names. Faces may be npos while a document is being loaded;
/// validate() reports such dangling faces.
class PrecubicalSet {
 public:
  CubeId add_cube(std::string name, int dim) {
    if (dim < 0) throw ArgumentError("negative dimension for '" + name + "'");
    if (index_.count(name)) throw ArgumentError("duplicate cube name '" + name + "'");
    CubeId id = cubes_.size();
    index_.emplace(name, id);
    Cube c;
    c.name = std::move(name);
    c.dim = dim;
    c.front.assign(static_cast<std::size_t>(dim), npos);
    c.back.assign(static_cast<std::size_t>(dim), npos);
    cubes_.push_back(std::move(c));
    cofaces_.emplace_back();
    out_.emplace_back();
    in_.emplace_back();
    if (by_dim_.size() <= static_cast<std::size_t>(dim)) by_dim_.resize(static_cast<std::size_t>(dim) + 1);
    by_dim_[static_cast<std::size_t>(dim)].push_back(id);
    return id;
  }

  CubeId add_vertex(std::string name) { return add_cube(std::move(name), 0); }

  CubeId add_cube(std::string name, std::vector<CubeId> front, std::vector<CubeId> back) {
    if (front.size() != back.size()) throw ArgumentError("front/back arity differ for '" + name + "'");
    CubeId id = add_cube(std::move(name), static_cast<int>(front.size()));
    set_faces(id, std::move(front), std::move(back));
    return id;
  }

  CubeId add_edge(std::string name, CubeId from, CubeId to) {
    return add_cube(std::move(name), std::vector<CubeId>{from}, std::vector<CubeId>{to});
  }

  void set_faces(CubeId x, std::vector<CubeId> front, std::vector<CubeId> back) {
    Cube& c = cubes_.at(x);
    if (front.size() != static_cast<std::size_t>(c.dim) || back.size() != static_cast<std::size_t>(c.dim))
      throw ArgumentError("wrong number of faces for '" + c.name + "'");
    unlink(x);
    c.front = std::move(front);
    c.back = std::move(back);
    link(x);
  }

  std::size_t size() const { return cubes_.size(); }
  const Cube& cube(CubeId x) const { return cubes_.at(x); }
  int dim(CubeId x) const { return cubes_.at(x).dim; }
  const std::string& name(CubeId x) const { return cubes_.at(x).name; }

  std::optional<CubeId> find(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  CubeId at(std::string_view name) const {
    auto id = find(name);
    if (!id) throw UnknownCube(std::string(name));
    return *id;
  }

  /// d^k_i x with 1-based i.
  CubeId face(CubeId x, int k, int i) const {
    const Cube& c = cubes_.at(x);
    if (i < 1 || i > c.dim) throw ArgumentError("face index out of range for '" + c.name + "'");
    return k == 0 ? c.front[static_cast<std::size_t>(i - 1)] : c.back[static_cast<std::size_t>(i - 1)];
  }

  CubeId source(CubeId e) const { return face(e, 0, 1); }
  CubeId target(CubeId e) const { return face(e, 1, 1); }

  const std::vector<CubeId>& cubes_of_dim(int n) const {
    static const std::vector<CubeId> empty;
    if (n < 0 || static_cast<std::size_t>(n) >= by_dim_.size()) return empty;
    return by_dim_[static_cast<std::size_t>(n)];
  }

  const std::vector<CubeId>& vertices() const { return cubes_of_dim(0); }
  const std::vector<CubeId>& edges() const { return cubes_of_dim(1); }

  int max_dim() const {
    for (int n = static_cast<int>(by_dim_.size()) - 1; n >= 0; --n)
      if (!by_dim_[static_cast<std::size_t>(n)].empty()) return n;
    return -1;
  }

  /// Number of cubes per dimension, 0..max_dim.
  std::vector<std::size_t> counts() const {
    std::vector<std::size_t> out;
    for (int n = 0; n <= max_dim(); ++n) out.push_back(cubes_of_dim(n).size());
    return out;
  }

  /// Cubes having x as a direct face (each listed once).
  const std::vector<CubeId>& cofaces(CubeId x) const { return cofaces_.at(x); }
  const std::vector<CubeId>& out_edges(CubeId v) const { return out_.at(v); }
  const std::vector<CubeId>& in_edges(CubeId v) const { return in_.at(v); }

  /// Sub-precubical set of the cubes with keep[x] true, in the original order.
  /// `old_to_new` receives npos for dropped cubes.
  PrecubicalSet restrict(const std::vector<bool>& keep, std::vector<CubeId>* old_to_new = nullptr) const {
    PrecubicalSet out;
    std::vector<CubeId> map(size(), npos);
    for (CubeId x = 0; x < size(); ++x)
      if (keep.at(x)) map[x] = out.add_cube(cubes_[x].name, cubes_[x].dim);
    for (CubeId x = 0; x < size(); ++x) {
      if (!keep[x]) continue;
      std::vector<CubeId> f, b;
      for (int i = 0; i < cubes_[x].dim; ++i) {
        CubeId fi = cubes_[x].front[static_cast<std::size_t>(i)];
        CubeId bi = cubes_[x].back[static_cast<std::size_t>(i)];
        if (fi == npos || bi == npos || map[fi] == npos || map[bi] == npos)
          throw ArgumentError("restriction is not closed under faces at '" + cubes_[x].name + "'");
        f.push_back(map[fi]);
        b.push_back(map[bi]);
      }
      if (!f.empty()) out.set_faces(map[x], std::move(f), std::move(b));
    }
    if (old_to_new) *old_to_new = std::move(map);
    return out;
  }

 private:
  void link(CubeId x) {
    const Cube& c = cubes_[x];
    auto add_unique = [](std::vector<CubeId>& v, CubeId y) {
      if (std::find(v.begin(), v.end(), y) == v.end()) v.push_back(y);
    };
    for (CubeId f : c.front)
      if (f != npos && f < cubes_.size()) add_unique(cofaces_[f], x);
    for (CubeId f : c.back)
      if (f != npos && f < cubes_.size()) add_unique(cofaces_[f], x);
    if (c.dim == 1) {
      if (c.front[0] != npos && c.front[0] < cubes_.size()) out_[c.front[0]].push_back(x);
      if (c.back[0] != npos && c.back[0] < cubes_.size()) in_[c.back[0]].push_back(x);
    }
  }

  void unlink(CubeId x) {
    const Cube& c = cubes_[x];
    auto erase = [x](std::vector<CubeId>& v) { v.erase(std::remove(v.begin(), v.end(), x), v.end()); };
    for (CubeId f : c.front)
      if (f != npos && f < cubes_.size()) erase(cofaces_[f]);
    for (CubeId f : c.back)
      if (f != npos && f < cubes_.size()) erase(cofaces_[f]);
    if (c.dim == 1) {
      if (c.front[0] != npos && c.front[0] < cubes_.size()) erase(out_[c.front[0]]);
      if (c.back[0] != npos && c.back[0] < cubes_.size()) erase(in_[c.back[0]]);
    }
  }

  std::vector<Cube> cubes_;
  std::unordered_map<std::string, CubeId> index_;
  std::vector<std::vector<CubeId>> by_dim_;
  std::vector<std::vector<CubeId>> cofaces_;
  std::vector<std::vector<CubeId>> out_;
  std::vector<std::vector<CubeId>> in_;
};

/// Dangling faces, wrong face dimensions and violated identities
/// d^k_i d^l_j x = d^l_{j-1} d^k_i x for i < j.
inline ValidationReport validate(const PrecubicalSet& p) {
  ValidationReport report;
  for (CubeId x = 0; x < p.size(); ++x) {
    const Cube& c = p.cube(x);
    bool sound = true;
    for (int k = 0; k < 2; ++k) {
      const auto& faces = k == 0 ? c.front : c.back;
      for (std::size_t i = 0; i < faces.size(); ++i) {
        if (faces[i] == npos || faces[i] >= p.size()) {
          report.add("cube '" + c.name + "': dangling face d^" + std::to_string(k) + "_" + std::to_string(i + 1));
          sound = false;
        } else if (p.dim(faces[i]) != c.dim - 1) {
          report.add("cube '" + c.name + "': face d^" + std::to_string(k) + "_" + std::to_string(i + 1) + " = '" +
                     p.name(faces[i]) + "' has dimension " + std::to_string(p.dim(faces[i])));
          sound = false;
        }
      }
    }
    if (!sound || c.dim < 2) continue;
    for (int i = 1; i <= c.dim; ++i)
      for (int j = i + 1; j <= c.dim; ++j)
        for (int k = 0; k < 2; ++k)
          for (int l = 0; l < 2; ++l) {
            CubeId a = p.face(x, l, j), b = p.face(x, k, i);
            if (a == npos || b == npos || p.dim(a) != c.dim - 1 || p.dim(b) != c.dim - 1) continue;
            const Cube& ca = p.cube(a);
            const Cube& cb = p.cube(b);
            CubeId lhs = k == 0 ? ca.front[static_cast<std::size_t>(i - 1)] : ca.back[static_cast<std::size_t>(i - 1)];
            CubeId rhs = l == 0 ? cb.front[static_cast<std::size_t>(j - 2)] : cb.back[static_cast<std::size_t>(j - 2)];
            if (lhs != rhs)
              report.add("cube '" + c.name + "': d^" + std::to_string(k) + "_" + std::to_string(i) + " d^" +
                         std::to_string(l) + "_" + std::to_string(j) + " != d^" + std::to_string(l) + "_" +
                         std::to_string(j - 1) + " d^" + std::to_string(k) + "_" + std::to_string(i));
          }
  }
  return report;
}

/// Tensor product. The cube (x, y) is named "(x,y)".
inline PrecubicalSet tensor(const PrecubicalSet& p, const PrecubicalSet& q) {
  PrecubicalSet out;
  std::map<std::pair<CubeId, CubeId>, CubeId> ids;
  auto pair_name = [&](CubeId x, CubeId y) { return "(" + p.name(x) + "," + q.name(y) + ")"; };
  int top = std::max(p.max_dim(), 0) + std::max(q.max_dim(), 0);
  for (int n = 0; n <= top; ++n)
    for (int a = 0; a <= n; ++a)
      for (CubeId x : p.cubes_of_dim(a))
        for (CubeId y : q.cubes_of_dim(n - a)) {
          std::vector<CubeId> f, b;
          for (int i = 1; i <= n; ++i) {
            if (i <= a) {
              f.push_back(ids.at({p.face(x, 0, i), y}));
              b.push_back(ids.at({p.face(x, 1, i), y}));
            } else {
              f.push_back(ids.at({x, q.face(y, 0, i - a)}));
              b.push_back(ids.at({x, q.face(y, 1, i - a)}));
            }
          }
          ids[{x, y}] = out.add_cube(pair_name(x, y), std::move(f), std::move(b));
        }
  return out;
}

/// The interval [k, l]: vertices "k".."l", edges "[j-1,j]".
inline PrecubicalSet interval(long k, long l) {
  if (k > l) throw ArgumentError("interval requires k <= l");
  PrecubicalSet out;
  std::vector<CubeId> v;
  for (long j = k; j <= l; ++j) v.push_back(out.add_vertex(std::to_string(j)));
  for (long j = k + 1; j <= l; ++j)
    out.add_edge("[" + std::to_string(j - 1) + "," + std::to_string(j) + "]", v[static_cast<std::size_t>(j - 1 - k)],
                 v[static_cast<std::size_t>(j - k)]);
  return out;
}

enum class Coord : std::uint8_t { zero = 0, one = 1, full = 2 };
using Address = std::vector<Coord>;

/// d^k_i on addresses: replaces the i-th full coordinate (1-based) by k.
inline Address face_address(Address a, int k, int i) {
  int seen = 0;
  for (auto& c : a)
    if (c == Coord::full && ++seen == i) {
      c = k == 0 ? Coord::zero : Coord::one;
      return a;
    }
  throw ArgumentError("face index out of range for address");
}

inline int address_dim(const Address& a) {
  return static_cast<int>(std::count(a.begin(), a.end(), Coord::full));
}

inline std::string address_name(const Address& a) {
  auto coord = [](Coord c) { return c == Coord::zero ? std::string("0") : c == Coord::one ? "1" : "[0,1]"; };
  if (a.empty()) return "()";
  if (a.size() == 1) return coord(a[0]);
  std::string s = "(";
  for (std::size_t j = 0; j < a.size(); ++j) s += (j ? "," : "") + coord(a[j]);
  return s + ")";
}

inline std::size_t address_code(const Address& a) {
  std::size_t code = 0;
  for (auto it = a.rbegin(); it != a.rend(); ++it) code = code * 3 + static_cast<std::size_t>(*it);
  return code;
}

inline Address address_of_code(std::size_t code, int n) {
  Address a(static_cast<std::size_t>(n));
  for (auto& c : a) {
    c = static_cast<Coord>(code % 3);
    code /= 3;
  }
  return a;
}

/// All 3^n addresses in code order, i.e. by address_code.
inline std::vector<Address> addresses(int n) {
  std::size_t total = 1;
  for (int j = 0; j < n; ++j) total *= 3;
  std::vector<Address> out;
  out.reserve(total);
  for (std::size_t c = 0; c < total; ++c) out.push_back(address_of_code(c, n));
  return out;
}

/// cube(n): the n-fold tensor power of [0,1], cubes named by their addresses.
inline PrecubicalSet cube(int n) {
  if (n < 0) throw ArgumentError("cube dimension must be non-negative");
  PrecubicalSet out;
  if (n == 0) {
    out.add_vertex("0");
    return out;
  }
  auto all = addresses(n);
  std::stable_sort(all.begin(), all.end(), [](const Address& a, const Address& b) {
    int da = address_dim(a), db = address_dim(b);
    if (da != db) return da < db;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  });
  std::unordered_map<std::size_t, CubeId> ids;
  for (const auto& a : all) {
    int d = address_dim(a);
    std::vector<CubeId> f, b;
    for (int i = 1; i <= d; ++i) {
      f.push_back(ids.at(address_code(face_address(a, 0, i))));
      b.push_back(ids.at(address_code(face_address(a, 1, i))));
    }
    ids[address_code(a)] = out.add_cube(address_name(a), std::move(f), std::move(b));
  }
  return out;
}

/// The cube x♯(a) for one address a of length dim(x).
inline CubeId face_at(const PrecubicalSet& p, CubeId x, const Address& a) {
  if (static_cast<int>(a.size()) != p.dim(x)) throw ArgumentError("address length differs from cube dimension");
  // Apply faces from the highest fixed coordinate downwards so lower indices stay put.
  CubeId y = x;
  for (int j = static_cast<int>(a.size()) - 1; j >= 0; --j)
    if (a[static_cast<std::size_t>(j)] != Coord::full) y = p.face(y, a[static_cast<std::size_t>(j)] == Coord::one, j + 1);
  return y;
}

inline constexpr int default_address_cap = 12;

/// x♯ tabulated over all 3^n addresses, indexed by address_code.
inline std::vector<CubeId> address_map(const PrecubicalSet& p, CubeId x, int cap = default_address_cap) {
  int n = p.dim(x);
  if (n > cap) throw ArgumentError("cube '" + p.name(x) + "' exceeds the address-map dimension cap");
  std::size_t total = 1;
  for (int j = 0; j < n; ++j) total *= 3;
  std::vector<CubeId> image(total, npos);
  image[total - 1] = x;
  // Descending codes visit an address after the one with its lowest fixed coordinate freed.
  for (std::size_t code = total - 1; code-- > 0;) {
    Address a = address_of_code(code, n);
    std::size_t j = 0;
    while (a[j] == Coord::full) ++j;
    Address parent = a;
    parent[j] = Coord::full;
    image[code] = p.face(image[address_code(parent)], a[j] == Coord::one, static_cast<int>(j) + 1);
  }
  return image;
}

inline bool is_regular(const PrecubicalSet& p, CubeId x, int cap = default_address_cap) {
  auto image = address_map(p, x, cap);
  std::sort(image.begin(), image.end());
  return std::adjacent_find(image.begin(), image.end()) == image.end();
}

/// x♯ injective on {0,[0,1]}^n and on {1,[0,1]}^n separately.
inline bool is_weakly_regular(const PrecubicalSet& p, CubeId x, int cap = default_address_cap) {
  auto image = address_map(p, x, cap);
  int n = p.dim(x);
  for (Coord fixed : {Coord::zero, Coord::one}) {
    std::vector<CubeId> part;
    for (std::size_t code = 0; code < image.size(); ++code) {
      Address a = address_of_code(code, n);
      if (std::all_of(a.begin(), a.end(), [&](Coord c) { return c == fixed || c == Coord::full; }))
        part.push_back(image[code]);
    }
    std::sort(part.begin(), part.end());
    if (std::adjacent_find(part.begin(), part.end()) != part.end()) return false;
  }
  return true;
}

/// The set of iterated faces of x, i.e. the image of x♯, sorted.
inline std::vector<CubeId> closure(const PrecubicalSet& p, CubeId x) {
  std::set<CubeId> seen{x};
  std::deque<CubeId> todo{x};
  while (!todo.empty()) {
    CubeId y = todo.front();
    todo.pop_front();
    for (const auto* faces : {&p.cube(y).front, &p.cube(y).back})
      for (CubeId f : *faces)
        if (seen.insert(f).second) todo.push_back(f);
  }
  return {seen.begin(), seen.end()};
}

/// star(x): every cube having x as an iterated face, x included, sorted.
inline std::vector<CubeId> star(const PrecubicalSet& p, CubeId x) {
  std::set<CubeId> seen{x};
  std::deque<CubeId> todo{x};
  while (!todo.empty()) {
    CubeId y = todo.front();
    todo.pop_front();
    for (CubeId z : p.cofaces(y))
      if (seen.insert(z).second) todo.push_back(z);
  }
  return {seen.begin(), seen.end()};
}

/// P \ star(x), which is again a precubical set.
inline PrecubicalSet remove_star(const PrecubicalSet& p, CubeId x, std::vector<CubeId>* old_to_new = nullptr) {
  std::vector<bool> keep(p.size(), true);
  for (CubeId y : star(p, x)) keep[y] = false;
  return p.restrict(keep, old_to_new);
}

/// Sequence of edges; a path of length 0 is a single vertex.
struct Path {
  CubeId start = npos;
  std::vector<CubeId> edges;

  std::size_t length() const { return edges.size(); }
  auto operator<=>(const Path&) const = default;
};

inline CubeId path_end(const PrecubicalSet& p, const Path& w) {
  return w.edges.empty() ? w.start : p.target(w.edges.back());
}

inline bool is_path(const PrecubicalSet& p, const Path& w) {
  if (w.start >= p.size() || p.dim(w.start) != 0) return false;
  CubeId at = w.start;
  for (CubeId e : w.edges) {
    if (e >= p.size() || p.dim(e) != 1 || p.source(e) != at) return false;
    at = p.target(e);
  }
  return true;
}

inline Path concat(const PrecubicalSet& p, const Path& w, const Path& v) {
  if (path_end(p, w) != v.start) throw ArgumentError("paths are not composable");
  Path out = w;
  out.edges.insert(out.edges.end(), v.edges.begin(), v.edges.end());
  return out;
}

inline std::string format_path(const PrecubicalSet& p, const Path& w) {
  if (w.edges.empty()) return p.name(w.start);
  std::string s;
  for (std::size_t j = 0; j < w.edges.size(); ++j) s += (j ? " " : "") + p.name(w.edges[j]);
  return s;
}

inline std::vector<CubeId> sorted_by_name(const PrecubicalSet& p, std::vector<CubeId> ids) {
  std::sort(ids.begin(), ids.end(), [&](CubeId a, CubeId b) { return p.name(a) < p.name(b); });
  return ids;
}

/// Every path from `from` of length at most max_len, in lexicographic order of
/// edge names (a path precedes its extensions).
inline std::vector<Path> enumerate_paths(const PrecubicalSet& p, CubeId from, std::size_t max_len) {
  std::vector<Path> out;
  std::vector<std::vector<CubeId>> sorted_out(p.size());
  for (CubeId v : p.vertices()) sorted_out[v] = sorted_by_name(p, p.out_edges(v));
  Path cur{from, {}};
  auto rec = [&](auto&& self, CubeId at) -> void {
    out.push_back(cur);
    if (cur.edges.size() == max_len) return;
    for (CubeId e : sorted_out[at]) {
      cur.edges.push_back(e);
      self(self, p.target(e));
      cur.edges.pop_back();
    }
  };
  rec(rec, from);
  return out;
}

/// Elementary dihomotopy moves: (d^0_1 z, d^1_2 z) <-> (d^0_2 z, d^1_1 z) for 2-cubes z.
class SwapIndex {
 public:
  explicit SwapIndex(const PrecubicalSet& p) {
    for (CubeId z : p.cubes_of_dim(2)) {
      std::pair<CubeId, CubeId> u{p.face(z, 0, 1), p.face(z, 1, 2)};
      std::pair<CubeId, CubeId> v{p.face(z, 0, 2), p.face(z, 1, 1)};
      moves_[u].push_back(v);
      moves_[v].push_back(u);
    }
  }

  const std::vector<std::pair<CubeId, CubeId>>& moves(CubeId a, CubeId b) const {
    static const std::vector<std::pair<CubeId, CubeId>> none;
    auto it = moves_.find({a, b});
    return it == moves_.end() ? none : it->second;
  }

 private:
  std::map<std::pair<CubeId, CubeId>, std::vector<std::pair<CubeId, CubeId>>> moves_;
};

inline std::set<Path> dihomotopy_class(const SwapIndex& swaps, const Path& w) {
  std::set<Path> seen{w};
  std::deque<Path> todo{w};
  while (!todo.empty()) {
    Path cur = todo.front();
    todo.pop_front();
    for (std::size_t j = 0; j + 1 < cur.edges.size(); ++j)
      for (const auto& [a, b] : swaps.moves(cur.edges[j], cur.edges[j + 1])) {
        Path next = cur;
        next.edges[j] = a;
        next.edges[j + 1] = b;
        if (seen.insert(next).second) todo.push_back(std::move(next));
      }
  }
  return seen;
}

/// The dihomotopy class of w: closure under elementary moves. Lengths are preserved.
inline std::set<Path> dihomotopy_class(const PrecubicalSet& p, const Path& w) {
  return dihomotopy_class(SwapIndex(p), w);
}

inline bool dihomotopic(const PrecubicalSet& p, const Path& w, const Path& v) {
  if (w.start != v.start || w.length() != v.length() || path_end(p, w) != path_end(p, v)) return false;
  return dihomotopy_class(p, w).count(v) > 0;
}

}  // namespace hdakit

#endif  // HDAKIT_PRECUBICAL_HPP
