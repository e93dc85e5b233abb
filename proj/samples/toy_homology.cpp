// Builds the one-state toy automaton in memory and prints its Betti numbers
// and homology language.

#include <iostream>

#include "hdakit/hdakit.hpp"

int main() {
  using namespace hdakit;
  Hda a;
  a.alphabet = make_alphabet(ConcurrentAlphabet::with_independence({"a1", "a2", "a3"}, {{"a1", "a2"}}));
  CubeId s = a.add_vertex("I");
  CubeId x1 = a.add_edge("x1", s, s, {"a1"});
  CubeId x2 = a.add_edge("x2", s, s, {"a2"});
  a.add_edge("x3", s, s, {"a3"});
  a.add_square("y", x2, x1, x2, x1);
  a.initial = s;
  a.set_finals({s});

  for (auto b : betti<Gf2>(a.cubes)) std::cout << b << " ";
  std::cout << "\n";
  for (const auto& line : homology_language<Gf2>(a).format_lines()) std::cout << line << "\n";
}
