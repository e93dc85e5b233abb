#ifndef HDAKIT_TESTS_FIXTURES_HPP
#define HDAKIT_TESTS_FIXTURES_HPP

#include <string>

#include "hdakit/hdakit.hpp"
#include "hdakit/io.hpp"

namespace fixture {

inline std::string path(const std::string& name) { return std::string(HDAKIT_FIXTURES) + "/" + name; }

inline hdakit::Hda load(const std::string& name) { return hdakit::io::load_hda(path(name)); }

inline hdakit::SafetyMonitor monitor(const std::string& name) {
  return hdakit::io::load_monitor(path("monitors/" + name));
}

/// A single vertex with one loop labeled by `letter`, initial and final.
inline hdakit::Hda loop(const std::string& letter, const hdakit::AlphabetPtr& sig) {
  hdakit::Hda a;
  a.alphabet = sig;
  auto v = a.add_vertex("v");
  a.add_edge("l", v, v, std::vector<std::string>{letter});
  a.initial = v;
  a.set_finals({v});
  return a;
}

/// v0 → v1 → ⋯ → vk, all edges labeled `letter`, every vertex final.
inline hdakit::Hda chain(std::size_t k, const std::string& letter, const hdakit::AlphabetPtr& sig) {
  hdakit::Hda a;
  a.alphabet = sig;
  std::vector<hdakit::CubeId> vs{a.add_vertex("v0")};
  for (std::size_t j = 1; j <= k; ++j) {
    vs.push_back(a.add_vertex("v" + std::to_string(j)));
    a.add_edge("e" + std::to_string(j), vs[j - 1], vs[j], std::vector<std::string>{letter});
  }
  a.initial = vs[0];
  a.set_finals(vs);
  return a;
}

}  // namespace fixture

#endif  // HDAKIT_TESTS_FIXTURES_HPP
