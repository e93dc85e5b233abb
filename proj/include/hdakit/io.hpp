#ifndef HDAKIT_IO_HPP
#define HDAKIT_IO_HPP

#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "hdakit/error.hpp"
#include "hdakit/hda.hpp"
#include "hdakit/languages.hpp"
#include "hdakit/reduce.hpp"

namespace hdakit::io {

using Json = nlohmann::ordered_json;

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError(path, "cannot open file");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out << text;
}

/// Parses JSON text; syntax errors carry "source:line:column".
inline Json parse_json(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t j = 0; j + 1 < e.byte && j < text.size(); ++j) {
      if (text[j] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw DataError(source + ":" + std::to_string(line) + ":" + std::to_string(col), "malformed JSON");
  }
}

namespace detail {

inline const Json& field(const Json& j, const std::string& key, const std::string& at) {
  if (!j.is_object()) throw DataError(at, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw DataError(at + "/" + key, "missing field");
  return *it;
}

inline std::string string_at(const Json& j, const std::string& at) {
  if (!j.is_string()) throw DataError(at, "expected a string");
  return j.get<std::string>();
}

inline const Json& array_at(const Json& j, const std::string& at) {
  if (!j.is_array()) throw DataError(at, "expected an array");
  return j;
}

inline std::vector<std::string> strings_at(const Json& j, const std::string& at) {
  std::vector<std::string> out;
  std::size_t n = 0;
  for (const auto& e : array_at(j, at)) out.push_back(string_at(e, at + "/" + std::to_string(n++)));
  return out;
}

inline AlphabetPtr alphabet_from(const Json& j, const std::string& at) {
  auto letters = strings_at(field(j, "letters", at), at + "/letters");
  std::vector<std::pair<std::string, std::string>> dep;
  const auto& d = array_at(field(j, "dependence", at), at + "/dependence");
  for (std::size_t n = 0; n < d.size(); ++n) {
    auto pair = strings_at(d[n], at + "/dependence/" + std::to_string(n));
    if (pair.size() != 2) throw DataError(at + "/dependence/" + std::to_string(n), "expected a pair");
    dep.emplace_back(pair[0], pair[1]);
  }
  try {
    return make_alphabet(ConcurrentAlphabet(letters, dep));
  } catch (const ArgumentError& e) {
    throw DataError(at, e.what());
  }
}

inline Json alphabet_to(const ConcurrentAlphabet& sig) {
  Json deps = Json::array();
  for (auto [a, b] : sig.dependent_pairs()) deps.push_back(Json::array({sig.name(a), sig.name(b)}));
  return Json{{"letters", sig.letters()}, {"dependence", deps}};
}

}  // namespace detail

/// HdaDocument: alphabet, cubes with 1-based face lists, edge labels,
/// initial and final vertices. Dangling faces load as npos and show up in
/// validate_hda; structural problems throw DataError with a JSON pointer.
inline Hda hda_from_json(const Json& j) {
  Hda a;
  a.alphabet = detail::alphabet_from(detail::field(j, "alphabet", ""), "/alphabet");
  const auto& cubes = detail::array_at(detail::field(j, "cubes", ""), "/cubes");
  struct Raw {
    std::vector<std::string> front, back;
  };
  std::vector<Raw> raw;
  for (std::size_t n = 0; n < cubes.size(); ++n) {
    std::string at = "/cubes/" + std::to_string(n);
    std::string id = detail::string_at(detail::field(cubes[n], "id", at), at + "/id");
    const auto& dj = detail::field(cubes[n], "dim", at);
    if (!dj.is_number_integer() || dj.get<long>() < 0) throw DataError(at + "/dim", "expected a non-negative integer");
    int dim = dj.get<int>();
    Raw r;
    if (dim > 0) {
      r.front = detail::strings_at(detail::field(cubes[n], "front", at), at + "/front");
      r.back = detail::strings_at(detail::field(cubes[n], "back", at), at + "/back");
      if (static_cast<int>(r.front.size()) != dim || static_cast<int>(r.back.size()) != dim)
        throw DataError(at, "face lists must have length dim");
    }
    if (a.cubes.find(id)) throw DataError(at + "/id", "duplicate cube id '" + id + "'");
    a.cubes.add_cube(id, dim);
    raw.push_back(std::move(r));
  }
  for (CubeId x = 0; x < raw.size(); ++x) {
    if (raw[x].front.empty()) continue;
    std::vector<CubeId> f, b;
    for (const auto& n : raw[x].front) f.push_back(a.cubes.find(n).value_or(npos));
    for (const auto& n : raw[x].back) b.push_back(a.cubes.find(n).value_or(npos));
    a.cubes.set_faces(x, std::move(f), std::move(b));
  }
  a.labels.assign(a.cubes.size(), {});
  const auto& labels = detail::field(j, "labels", "");
  if (!labels.is_object()) throw DataError("/labels", "expected an object");
  for (const auto& [edge, word] : labels.items()) {
    std::string at = "/labels/" + edge;
    auto e = a.cubes.find(edge);
    if (!e) throw DataError(at, "label for unknown cube");
    if (a.cubes.dim(*e) != 1) throw DataError(at, "label on a cube that is not an edge");
    for (const auto& letter : detail::strings_at(word, at)) {
      auto l = a.alphabet->find(letter);
      if (!l) throw DataError(at, "letter '" + letter + "' not in the alphabet");
      a.labels[*e].push_back(*l);
    }
  }
  for (CubeId e : a.cubes.edges())
    if (!labels.contains(a.cubes.name(e))) throw DataError("/labels", "edge '" + a.cubes.name(e) + "' has no label");
  auto init = detail::string_at(detail::field(j, "initial", ""), "/initial");
  auto iv = a.cubes.find(init);
  if (!iv) throw DataError("/initial", "unknown cube '" + init + "'");
  a.initial = *iv;
  std::vector<CubeId> fin;
  for (const auto& f : detail::strings_at(detail::field(j, "finals", ""), "/finals")) {
    auto fv = a.cubes.find(f);
    if (!fv) throw DataError("/finals", "unknown cube '" + f + "'");
    fin.push_back(*fv);
  }
  a.set_finals(std::move(fin));
  return a;
}

inline Json hda_to_json(const Hda& a) {
  const auto& p = a.cubes;
  Json cubes = Json::array();
  for (CubeId x = 0; x < p.size(); ++x) {
    Json c{{"id", p.name(x)}, {"dim", p.dim(x)}};
    if (p.dim(x) > 0) {
      Json f = Json::array(), b = Json::array();
      for (int i = 1; i <= p.dim(x); ++i) {
        f.push_back(p.name(p.face(x, 0, i)));
        b.push_back(p.name(p.face(x, 1, i)));
      }
      c["front"] = f;
      c["back"] = b;
    }
    cubes.push_back(c);
  }
  Json labels = Json::object();
  for (CubeId e : p.edges()) {
    Json w = Json::array();
    for (Letter l : a.label(e)) w.push_back(a.alphabet->name(l));
    labels[p.name(e)] = w;
  }
  Json finals = Json::array();
  for (CubeId f : sorted_by_name(p, a.finals)) finals.push_back(p.name(f));
  return Json{{"alphabet", detail::alphabet_to(*a.alphabet)},
              {"cubes", cubes},
              {"labels", labels},
              {"initial", p.name(a.initial)},
              {"finals", finals}};
}

inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

inline Hda parse_hda(const std::string& text, const std::string& source = "<input>") {
  return hda_from_json(parse_json(text, source));
}

inline Hda load_hda(const std::string& path) { return parse_hda(read_file(path), path); }

inline void save_hda(const Hda& a, const std::string& path) { write_file(path, dump(hda_to_json(a))); }

/// MonitorDocument: letters, states, initial, bad states and a total
/// transition list of {state, letter, next}.
inline SafetyMonitor monitor_from_json(const Json& j) {
  SafetyMonitor m;
  auto letters = detail::strings_at(detail::field(j, "letters", ""), "/letters");
  m.alphabet = make_alphabet(ConcurrentAlphabet::free(letters));
  m.states = detail::strings_at(detail::field(j, "states", ""), "/states");
  auto index = [&](const std::string& s, const std::string& at) {
    auto it = std::find(m.states.begin(), m.states.end(), s);
    if (it == m.states.end()) throw DataError(at, "unknown state '" + s + "'");
    return static_cast<std::size_t>(it - m.states.begin());
  };
  m.initial = index(detail::string_at(detail::field(j, "initial", ""), "/initial"), "/initial");
  m.bad.assign(m.states.size(), false);
  for (const auto& s : detail::strings_at(detail::field(j, "bad", ""), "/bad")) m.bad[index(s, "/bad")] = true;
  const std::size_t unset = static_cast<std::size_t>(-1);
  m.next.assign(m.states.size(), std::vector<std::size_t>(m.alphabet->size(), unset));
  const auto& ts = detail::array_at(detail::field(j, "transitions", ""), "/transitions");
  for (std::size_t n = 0; n < ts.size(); ++n) {
    std::string at = "/transitions/" + std::to_string(n);
    auto s = index(detail::string_at(detail::field(ts[n], "state", at), at + "/state"), at + "/state");
    auto l = m.alphabet->find(detail::string_at(detail::field(ts[n], "letter", at), at + "/letter"));
    if (!l) throw DataError(at + "/letter", "letter not in the monitor alphabet");
    auto t = index(detail::string_at(detail::field(ts[n], "next", at), at + "/next"), at + "/next");
    if (m.next[s][*l] != unset && m.next[s][*l] != t) throw DataError(at, "nondeterministic transition");
    m.next[s][*l] = t;
  }
  for (std::size_t s = 0; s < m.states.size(); ++s)
    for (std::size_t l = 0; l < m.alphabet->size(); ++l)
      if (m.next[s][l] == unset)
        throw DataError("/transitions", "no transition from '" + m.states[s] + "' on '" + m.alphabet->name(static_cast<Letter>(l)) + "'");
  auto r = m.validate();
  if (!r.ok()) throw DataError("/", r.issues.front());
  return m;
}

inline Json monitor_to_json(const SafetyMonitor& m) {
  Json bad = Json::array(), ts = Json::array();
  for (std::size_t s = 0; s < m.states.size(); ++s) {
    if (m.bad[s]) bad.push_back(m.states[s]);
    for (Letter l = 0; l < m.alphabet->size(); ++l)
      ts.push_back(Json{{"state", m.states[s]}, {"letter", m.alphabet->name(l)}, {"next", m.states[m.next[s][l]]}});
  }
  return Json{{"letters", m.alphabet->letters()},
              {"states", m.states},
              {"initial", m.states[m.initial]},
              {"bad", bad},
              {"transitions", ts}};
}

inline SafetyMonitor load_monitor(const std::string& path) {
  return monitor_from_json(parse_json(read_file(path), path));
}

inline Json site_to_json(const CollapseSite& s) {
  Json j{{"kind", site_kind_name(s.kind)}};
  if (s.kind == SiteKind::merge) {
    j["chain"] = s.chain;
  } else {
    j["cube"] = s.cube;
    if (s.kind == SiteKind::vertex_star) {
      j["corner"] = s.corner;
    } else {
      j["k"] = s.k;
      j["i"] = s.i;
    }
  }
  return j;
}

inline CollapseSite site_from_json(const Json& j, const std::string& at) {
  CollapseSite s;
  try {
    s.kind = site_kind_from_name(detail::string_at(detail::field(j, "kind", at), at + "/kind"));
    if (s.kind == SiteKind::merge) {
      s.chain = detail::strings_at(detail::field(j, "chain", at), at + "/chain");
      s.cube = s.chain.empty() ? "" : s.chain.front();
    } else {
      s.cube = detail::string_at(detail::field(j, "cube", at), at + "/cube");
      if (s.kind == SiteKind::vertex_star) {
        s.corner = detail::field(j, "corner", at).get<std::vector<int>>();
      } else {
        s.k = detail::field(j, "k", at).get<int>();
        s.i = detail::field(j, "i", at).get<int>();
      }
    }
  } catch (const Json::exception& e) {
    throw DataError(at, e.what());
  } catch (const ArgumentError& e) {
    throw DataError(at, e.what());
  }
  return s;
}

inline Json log_to_json(const ReductionLog& log) {
  Json steps = Json::array();
  for (const auto& st : log.steps) {
    Json j{{"site", site_to_json(st.site)}, {"theorem", st.theorem}, {"hypothesis", status_name(st.status)}};
    if (!st.witness_edge.empty()) j["witness_edge"] = st.witness_edge;
    j["before"] = st.before;
    j["after"] = st.after;
    steps.push_back(j);
  }
  return Json{{"bound", log.bound}, {"strict", log.strict}, {"steps", steps}};
}

inline ReductionLog log_from_json(const Json& j) {
  ReductionLog log;
  try {
    log.bound = detail::field(j, "bound", "").get<std::size_t>();
    log.strict = detail::field(j, "strict", "").get<bool>();
    const auto& steps = detail::array_at(detail::field(j, "steps", ""), "/steps");
    for (std::size_t n = 0; n < steps.size(); ++n) {
      std::string at = "/steps/" + std::to_string(n);
      LogStep st;
      st.site = site_from_json(detail::field(steps[n], "site", at), at + "/site");
      st.theorem = detail::string_at(detail::field(steps[n], "theorem", at), at + "/theorem");
      st.status = status_from_name(detail::string_at(detail::field(steps[n], "hypothesis", at), at + "/hypothesis"));
      if (steps[n].contains("witness_edge")) st.witness_edge = steps[n]["witness_edge"].get<std::string>();
      st.before = detail::field(steps[n], "before", at).get<std::vector<std::size_t>>();
      st.after = detail::field(steps[n], "after", at).get<std::vector<std::size_t>>();
      log.steps.push_back(std::move(st));
    }
  } catch (const Json::exception& e) {
    throw DataError("/", e.what());
  }
  return log;
}

inline Json trace_json(const std::optional<Trace>& t) { return t ? Json(t->format()) : Json(nullptr); }

inline Json verdict_to_json(const Verdict& v) {
  auto inclusion = [](const InclusionCheck& c) {
    return Json{{"holds", c.holds}, {"exact", c.exact}, {"counterexample", trace_json(c.counterexample)}};
  };
  return Json{{"outcome", outcome_name(v.outcome)},
              {"bound", v.bound},
              {"isomorphic", v.isomorphic},
              {"accessibility", Json{{"holds", v.accessibility_ok}, {"detail", v.accessibility_detail}}},
              {"alphabet_equal", v.alphabet_equal},
              {"pi", inclusion(v.pi)},
              {"tl", inclusion(v.tl)},
              {"hl",
               Json{{"holds", v.hl_holds},
                    {"field", v.field},
                    {"counterexample", v.hl_counterexample ? Json(*v.hl_counterexample) : Json(nullptr)}}}};
}

}  // namespace hdakit::io

#endif  // HDAKIT_IO_HPP
