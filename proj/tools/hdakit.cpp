// Command line front end for the hdakit library.

#include <cstdlib>
#include <functional>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "hdakit/hdakit.hpp"
#include "hdakit/io.hpp"

namespace {

using namespace hdakit;

constexpr int exit_ok = 0;
constexpr int exit_refuted = 1;
constexpr int exit_bounded = 2;
constexpr int exit_usage = 64;
constexpr int exit_data = 65;

void emit(const std::string& out, const std::string& text) {
  if (out.empty() || out == "-") std::cout << text;
  else io::write_file(out, text);
}

Hda load_valid(const std::string& path) {
  Hda a = io::load_hda(path);
  auto r = validate_hda(a);
  if (!r.ok()) throw DataError(path, r.issues.front());
  return a;
}

int outcome_code(Outcome o) {
  switch (o) {
    case Outcome::refuted: return exit_refuted;
    case Outcome::holds_up_to_bound: return exit_bounded;
    case Outcome::holds_exactly: return exit_ok;
  }
  return exit_ok;
}

template <class F>
void print_betti(const Hda& a) {
  auto b = betti<F>(a.cubes);
  for (std::size_t n = 0; n < b.size(); ++n) std::cout << (n ? " " : "") << b[n];
  std::cout << "\n";
}

template <class F>
void print_hl(const Hda& a) {
  for (const auto& line : homology_language<F>(a).format_lines()) std::cout << line << "\n";
}

void print_traces(const BoundedTraces& t) {
  for (const auto& v : t.traces) std::cout << v.format() << "\n";
  std::cerr << (t.exact ? "complete language" : "bounded at length " + std::to_string(t.bound)) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Higher dimensional automata toolkit"};
  app.require_subcommand(1);
  std::string file, other, out, log_path, field = "gf2", monitor;
  std::size_t max_len = 6, bound = 8;
  bool strict = false, audit = false;
  int result = exit_ok;
  auto add_field = [&](CLI::App* c) {
    c->add_option("--field", field, "Coefficient field")->check(CLI::IsMember({"gf2", "q"}));
  };

  auto* validate_cmd = app.add_subcommand("validate", "Check an HDA document");
  validate_cmd->add_option("file", file)->required();
  validate_cmd->callback([&] {
    Hda a = io::load_hda(file);
    auto r = validate_hda(a);
    for (const auto& issue : r.issues) std::cout << issue << "\n";
    if (r.ok()) std::cout << "valid\n";
    result = r.ok() ? exit_ok : exit_data;
  });

  auto* info_cmd = app.add_subcommand("info", "Summarize an HDA");
  info_cmd->add_option("file", file)->required();
  info_cmd->callback([&] {
    Hda a = load_valid(file);
    auto counts = a.cubes.counts();
    std::cout << "cubes per dimension:";
    for (auto c : counts) std::cout << " " << c;
    std::size_t regular = 0;
    for (CubeId x = 0; x < a.cubes.size(); ++x) regular += is_regular(a.cubes, x);
    std::cout << "\nletters: " << a.alphabet->size() << "\ninitial: " << a.cubes.name(a.initial)
              << "\nfinals: " << a.finals.size() << "\nregular cubes: " << regular << "/" << a.cubes.size()
              << "\naccessible: " << (is_accessible(a) ? "yes" : "no")
              << "\ncoaccessible: " << (is_coaccessible(a) ? "yes" : "no") << "\n";
  });

  auto* betti_cmd = app.add_subcommand("betti", "Betti numbers of the underlying precubical set");
  betti_cmd->add_option("file", file)->required();
  add_field(betti_cmd);
  betti_cmd->callback([&] {
    Hda a = load_valid(file);
    field == "q" ? print_betti<Rationals>(a) : print_betti<Gf2>(a);
  });

  auto* hl_cmd = app.add_subcommand("hl", "Homology language basis, degree by degree");
  hl_cmd->add_option("file", file)->required();
  add_field(hl_cmd);
  hl_cmd->callback([&] {
    Hda a = load_valid(file);
    field == "q" ? print_hl<Rationals>(a) : print_hl<Gf2>(a);
  });

  auto* tl_cmd = app.add_subcommand("tl", "Trace language up to a length");
  tl_cmd->add_option("file", file)->required();
  tl_cmd->add_option("--max-len", max_len);
  tl_cmd->callback([&] { print_traces(tl_up_to(load_valid(file), max_len)); });

  auto* pi_cmd = app.add_subcommand("pi", "Traces of loops at the initial state up to a length");
  pi_cmd->add_option("file", file)->required();
  pi_cmd->add_option("--max-len", max_len);
  pi_cmd->callback([&] { print_traces(pi_up_to(load_valid(file), max_len)); });

  auto* safety_cmd = app.add_subcommand("safety", "Check a safety property given by a monitor");
  safety_cmd->add_option("file", file)->required();
  safety_cmd->add_option("--monitor", monitor)->required();
  safety_cmd->callback([&] {
    Hda a = load_valid(file);
    auto r = satisfies_safety(a, io::load_monitor(monitor));
    if (r.holds) {
      std::cout << "holds\n";
    } else {
      std::cout << "violated: " << format_path(a.cubes, *r.counterexample) << "\n";
      result = exit_refuted;
    }
  });

  auto binary = [&](const char* name, const char* help, std::function<Hda(const Hda&, const Hda&)> op) {
    auto* c = app.add_subcommand(name, help);
    c->add_option("a", file)->required();
    c->add_option("b", other)->required();
    c->add_option("-o,--output", out);
    c->callback([&, op] { emit(out, io::dump(io::hda_to_json(op(load_valid(file), load_valid(other))))); });
  };
  binary("tensor", "Parallel composition", [](const Hda& a, const Hda& b) { return tensor_hda(a, b); });
  binary("coprod", "Choice", [](const Hda& a, const Hda& b) { return coprod_hda(a, b); });

  auto* acc_cmd = app.add_subcommand("accessible-part", "Restrict to the reachable part");
  acc_cmd->add_option("file", file)->required();
  acc_cmd->add_option("-o,--output", out);
  acc_cmd->callback([&] { emit(out, io::dump(io::hda_to_json(accessible_part(load_valid(file))))); });

  auto* reduce_cmd = app.add_subcommand("reduce", "Apply collapses and merges until none applies");
  reduce_cmd->add_option("file", file)->required();
  reduce_cmd->add_option("-o,--output", out);
  reduce_cmd->add_option("--log", log_path, "Write the replayable reduction log");
  reduce_cmd->add_option("--bound", bound, "Path length bound for cyclic hypothesis checks");
  reduce_cmd->add_flag("--strict", strict, "Apply only exactly verified hypotheses");
  reduce_cmd->add_flag("--audit", audit, "Check language preservation after every step");
  reduce_cmd->callback([&] {
    ReducePolicy policy;
    policy.strict = strict;
    policy.bound = bound;
    policy.audit = audit;
    auto r = reduce_fixpoint(load_valid(file), policy);
    emit(out, io::dump(io::hda_to_json(r.result)));
    if (!log_path.empty()) io::write_file(log_path, io::dump(io::log_to_json(r.log)));
    std::cerr << r.log.steps.size() << " steps\n";
  });

  auto* replay_cmd = app.add_subcommand("replay", "Re-apply a reduction log");
  replay_cmd->add_option("file", file)->required();
  replay_cmd->add_option("--log", log_path)->required();
  replay_cmd->add_option("-o,--output", out);
  replay_cmd->callback([&] {
    auto log = io::log_from_json(io::parse_json(io::read_file(log_path), log_path));
    emit(out, io::dump(io::hda_to_json(replay(load_valid(file), log))));
  });

  auto* weq_cmd = app.add_subcommand("weq", "Weak equivalence of two HDAs");
  weq_cmd->add_option("a", file)->required();
  weq_cmd->add_option("b", other)->required();
  weq_cmd->add_option("--bound", bound);
  add_field(weq_cmd);
  weq_cmd->callback([&] {
    Hda a = load_valid(file), b = load_valid(other);
    auto [ab, ba] = field == "q" ? weak_equiv<Rationals>(a, b, bound) : weak_equiv<Gf2>(a, b, bound);
    Outcome overall = combine(ab.outcome, ba.outcome);
    io::Json j{{"outcome", outcome_name(overall)},
               {"a_implements_b", io::verdict_to_json(ab)},
               {"b_implements_a", io::verdict_to_json(ba)}};
    std::cout << j.dump(2) << "\n";
    result = outcome_code(overall);
  });

  auto* format_cmd = app.add_subcommand("format", "Rewrite a valid document in canonical form");
  format_cmd->add_option("file", file)->required();
  format_cmd->add_option("-o,--output", out);
  format_cmd->callback([&] { emit(out, io::dump(io::hda_to_json(load_valid(file)))); });

  auto* deps_cmd = app.add_subcommand("canonical-deps", "Replace the dependence by the one read off the squares");
  deps_cmd->add_option("file", file)->required();
  deps_cmd->add_option("-o,--output", out);
  deps_cmd->callback([&] {
    Hda a = io::load_hda(file);
    auto sig = make_alphabet(canonical_dependence(a));
    a.alphabet = sig;
    auto r = validate_hda(a);
    if (!r.ok()) throw DataError(file, r.issues.front());
    emit(out, io::dump(io::hda_to_json(a)));
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_usage;
  } catch (const DataError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_data;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_data;
  }
  return result;
}
