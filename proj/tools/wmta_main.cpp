// Command-line front end: reads automata in the text format, runs one
// operation and writes the result to stdout or -o.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "wmta/autoint.hpp"
#include "wmta/build.hpp"
#include "wmta/cascade.hpp"
#include "wmta/crossprod.hpp"
#include "wmta/error.hpp"
#include "wmta/golden.hpp"
#include "wmta/intersect.hpp"
#include "wmta/relation.hpp"
#include "wmta/text_format.hpp"

namespace {

using namespace wmta;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitUnsuccessful = 3;
constexpr int kExitResource = 4;

std::string read_source(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Wmta load(const std::string& path) {
  try {
    return parse_wmta(read_source(path));
  } catch (const ParseError& e) {
    throw ParseError(0, (path == "-" ? std::string("<stdin>") : path) + ": " + e.what());
  }
}

struct Io {
  std::vector<std::string> inputs;
  std::vector<std::string> positional;
  std::string output;

  void attach(CLI::App* cmd) {
    cmd->add_option("-i,--input", inputs, "Input automaton file ('-' for stdin)");
    cmd->add_option("files", positional, "Input automaton files");
    cmd->add_option("-o,--output", output, "Output file (default stdout)");
  }

  // Operands in command-line order; a single missing operand is read from
  // stdin.
  std::vector<Wmta> operands(std::size_t count) const {
    std::vector<std::string> paths = inputs;
    paths.insert(paths.end(), positional.begin(), positional.end());
    if (paths.empty() && count == 1) paths.push_back("-");
    if (paths.size() != count) {
      throw UsageError("expected " + std::to_string(count) + " input automata, got " +
                       std::to_string(paths.size()));
    }
    std::vector<Wmta> out;
    for (const std::string& p : paths) out.push_back(load(p));
    return out;
  }

  void write(const std::string& text) const {
    if (output.empty() || output == "-") {
      std::cout << text;
      std::cout.flush();
      return;
    }
    std::ofstream out(output, std::ios::binary);
    if (!out) throw UsageError("cannot write '" + output + "'");
    out << text;
  }
};

std::string status_line(bool successful) {
  return std::string("# successful: ") + (successful ? "true" : "false") + "\n";
}

std::string limits_line(const DelayLimits& l) {
  std::ostringstream out;
  out << "# limits: hat_max=" << l.hat_max << " hat_min=" << l.hat_min << " hat_cyc=" << l.hat_cyc
      << " d_cyc=" << l.d_cyc << " d_max=" << l.d_max << " d_max2=" << l.d_max2 << "\n";
  return out.str();
}

std::string info_text(const Wmta& a) {
  std::ostringstream out;
  out << "arity\t" << a.arity() << "\n";
  out << "semiring\t" << a.semiring().name << "\n";
  out << "states\t" << a.num_states() << "\n";
  out << "transitions\t" << a.transitions().size() << "\n";
  out << "initial\t" << a.initial() << "\n";
  out << "finals\t" << a.final_states().size() << "\n";
  String sigma(a.alphabet().begin(), a.alphabet().end());
  out << "alphabet\t" << (sigma.empty() ? std::string("-") : to_utf8(sigma)) << "\n";
  out << "coreachable\t" << coreachable_states(a).size() << "\n";
  out << "cyclic\t" << (has_cycle(a) ? "true" : "false") << "\n";
  return out.str();
}

int run(int argc, char** argv) {
  CLI::App app{"Weighted multi-tape automata"};
  app.require_subcommand(1);

  Io io;

  auto* info = app.add_subcommand("info", "Print a summary of an automaton");
  io.attach(info);

  std::size_t max_len = 0;
  auto* enumerate = app.add_subcommand("enumerate", "List the relation up to a path length");
  io.attach(enumerate);
  enumerate->add_option("--max-len", max_len, "Longest path to follow")->required();

  std::string cross_method = "pa";
  auto* cross = app.add_subcommand("cross", "Cross product of two automata");
  io.attach(cross);
  cross->add_option("--method", cross_method, "pc (path concatenation) or pa (path alignment)")
      ->check(CLI::IsMember({"pc", "pa"}));

  std::string tapes;
  auto* proj = app.add_subcommand("project", "Keep the listed tapes, in the listed order");
  io.attach(proj);
  proj->add_option("--tapes", tapes, "Comma-separated 1-based tapes")->required();

  auto* cproj = app.add_subcommand("cproject", "Delete the listed tapes");
  io.attach(cproj);
  cproj->add_option("--tapes", tapes, "Comma-separated 1-based tapes")->required();

  std::size_t tape_j = 0;
  std::size_t tape_k = 0;
  auto* autoint = app.add_subcommand("autoint", "Auto-intersection of two tapes");
  io.attach(autoint);
  autoint->add_option("-j", tape_j, "First tape")->required();
  autoint->add_option("-k", tape_k, "Second tape")->required();
  std::size_t max_states = std::numeric_limits<std::size_t>::max();
  autoint->add_option("--max-states", max_states, "Abort when a construction exceeds this size");

  std::string pairs;
  int method = 2;
  auto* inter = app.add_subcommand("intersect", "Multi-tape intersection of two automata");
  io.attach(inter);
  inter->add_option("--pairs", pairs, "j1:k1[,j2:k2...]")->required();
  inter->add_option("--method", method, "1 (cross product) or 2 (single-tape first)")
      ->check(CLI::IsMember({1, 2}));
  inter->add_option("--max-states", max_states, "Abort when an auto-intersection exceeds this size");

  auto* comp = app.add_subcommand("compose", "Compose two 2-tape automata");
  io.attach(comp);

  std::string in_tapes;
  std::string out_tapes;
  std::string tuple;
  std::string weight_text;
  std::optional<std::size_t> apply_len;
  auto* app_cmd = app.add_subcommand("apply", "Use an automaton as a transducer on one tuple");
  io.attach(app_cmd);
  app_cmd->add_option("--in-tapes", in_tapes, "Input tapes")->required();
  app_cmd->add_option("--out-tapes", out_tapes, "Output tapes")->required();
  app_cmd->add_option("--tuple", tuple, "Input components separated by spaces, <eps> for ε")
      ->required();
  app_cmd->add_option("--weight", weight_text, "Input weight (default 1)");
  app_cmd->add_option("--max-len", apply_len, "Path-length bound for the output enumeration");

  std::string config;
  std::string cascade_input;
  bool merge = false;
  std::optional<std::size_t> cascade_len;
  std::string cascade_output;
  auto* casc = app.add_subcommand("cascade", "Run a transduction cascade");
  casc->add_option("--config", config, "Cascade configuration file")->required();
  casc->add_option("--input", cascade_input, "1-tape input automaton")->required();
  casc->add_flag("--merge", merge, "Merge all stages first, then apply the merged automaton");
  casc->add_option("--max-len", cascade_len, "Enumerate the output up to this path length");
  casc->add_option("-o,--output", cascade_output, "Output file (default stdout)");

  auto* selftest = app.add_subcommand("selftest", "Run the built-in reference examples");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (*info) {
    io.write(info_text(io.operands(1)[0]));
  } else if (*enumerate) {
    io.write(format_relation(relation_upto(io.operands(1)[0], max_len)));
  } else if (*cross) {
    const auto ops = io.operands(2);
    io.write(serialize_wmta(cross_method == "pc" ? cross_pc(ops[0], ops[1])
                                                 : cross_pa(ops[0], ops[1])));
  } else if (*proj) {
    io.write(serialize_wmta(project(io.operands(1)[0], parse_tape_list(tapes))));
  } else if (*cproj) {
    io.write(serialize_wmta(cproject(io.operands(1)[0], parse_tape_list(tapes))));
  } else if (*autoint) {
    const AutoIntOutcome r = auto_intersect(io.operands(1)[0], tape_j, tape_k, max_states);
    io.write(status_line(r.successful) + limits_line(r.limits) +
             serialize_wmta(trim(r.automaton)));
    return r.successful ? kExitOk : kExitUnsuccessful;
  } else if (*inter) {
    const auto ops = io.operands(2);
    const auto tp = parse_tape_pairs(pairs);
    const IntersectOutcome r =
        method == 1 ? multi_intersect1(ops[0], ops[1], tp, max_states)
                    : multi_intersect2(ops[0], ops[1], tp, max_states);
    io.write(status_line(r.successful) + serialize_wmta(r.automaton));
    return r.successful ? kExitOk : kExitUnsuccessful;
  } else if (*comp) {
    const auto ops = io.operands(2);
    if (ops[0].arity() != 2 || ops[1].arity() != 2) {
      throw UsageError("compose expects two 2-tape automata");
    }
    io.write(serialize_wmta(
        trim(compose(normalize_labels(ops[0], {2}), normalize_labels(ops[1], {1})))));
  } else if (*app_cmd) {
    const Wmta a = io.operands(1)[0];
    const Weight w =
        weight_text.empty() ? a.semiring().one : parse_weight(a.semiring(), weight_text);
    const ApplyOutcome r = apply(a, parse_tape_list(in_tapes), parse_tape_list(out_tapes),
                                 parse_tuple(tuple), w, apply_len);
    io.write(status_line(r.successful) + format_relation(r.relation));
    return r.successful ? kExitOk : kExitUnsuccessful;
  } else if (*casc) {
    const std::filesystem::path base = std::filesystem::path(config).parent_path();
    const CascadeSpec spec = parse_cascade_config(read_source(config), [&](const std::string& p) {
      const std::filesystem::path path(p);
      return load((path.is_absolute() ? path : base / path).string());
    });
    const Wmta input = load(cascade_input);
    CascadeOutcome r{input, true};
    if (merge) {
      const CascadeOutcome merged = merge_cascade(spec);
      r = apply_merged(merged.automaton, input);
      r.successful = r.successful && merged.successful;
    } else {
      r = run_wmta_cascade(spec, input);
    }
    Io out;
    out.output = cascade_output;
    out.write(status_line(r.successful) + (cascade_len
                                               ? format_relation(relation_upto(r.automaton, *cascade_len))
                                               : serialize_wmta(r.automaton)));
    return r.successful ? kExitOk : kExitUnsuccessful;
  } else if (*selftest) {
    bool all = true;
    for (const GoldenCheck& c : run_golden_checks()) {
      std::cout << (c.passed ? "PASS " : "FAIL ") << c.name << " (" << c.detail << ")\n";
      all = all && c.passed;
    }
    return all ? kExitOk : 1;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const wmta::ResourceLimit& e) {
    std::cerr << "wmta: " << e.what() << "\n";
    return kExitResource;
  } catch (const wmta::Error& e) {
    std::cerr << "wmta: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "wmta: " << e.what() << "\n";
    return kExitUsage;
  }
}
