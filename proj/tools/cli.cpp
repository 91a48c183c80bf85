#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iterator>
#include <sstream>

#include <clonedl/clonedl.hpp>

#include "json_io.hpp"
#include "selftest.hpp"

namespace clonedl::cli {

namespace {

constexpr int kInputError = 2;
constexpr int kCapExceeded = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorKind::Io, "cannot open '" + path + "'");
  }
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

// Prefixes errors raised while handling `path` with the file name.
template <typename F>
auto in_file(const std::string& path, F f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::Io) {
      throw;
    }
    const std::string what = e.what();
    throw Error(e.kind(), path + ": " + what.substr(to_string(e.kind()).size() + 2));
  }
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

void print_report(const CloneReport& r, const Signature& sig, std::ostream& out) {
  out << "signature:";
  for (const auto& name : sig.names()) {
    out << ' ' << name;
  }
  out << "\nsubset:";
  for (const auto& [c, v] : r.subset) {
    out << ' ' << to_string(c) << '=' << yes_no(v);
  }
  out << "\ncontains:";
  for (const auto& [c, v] : r.contains) {
    out << ' ' << to_string(c) << '=' << yes_no(v);
  }
  out << '\n';
  for (auto p : {Problem::Ext, Problem::Cred, Problem::Skep}) {
    out << to_string(p) << ": " << to_string(r.case_for(p)) << " (" << to_string(r.engine_for(p))
        << ")\n";
  }
}

void print_decision(const Decision& d, bool json, bool witness, std::ostream& out,
                    std::ostream& err) {
  for (const auto& w : d.warnings) {
    err << "warning: " << w << '\n';
  }
  if (json) {
    out << decision_to_json(d) << '\n';
    return;
  }
  out << "answer: " << yes_no(d.answer) << '\n';
  out << "engine: " << to_string(d.engine) << '\n';
  out << "case: " << (d.complexity ? std::string(to_string(*d.complexity)) : "unclassified")
      << '\n';
  if (witness) {
    out << "witness:";
    if (!d.witness) {
      out << " none";
    } else {
      for (auto i : d.witness->generating) {
        out << ' ' << i;
      }
      if (d.witness->inconsistent) {
        out << " (inconsistent extension)";
      }
    }
    out << '\n';
  }
}

Signature signature_from_list(const std::string& list) {
  Signature sig;
  std::stringstream in(list);
  std::string name;
  while (std::getline(in, name, ',')) {
    if (name.empty()) {
      continue;
    }
    auto f = builtin(name);
    if (!f) {
      throw Error(ErrorKind::UnknownConnective, "'" + name + "'");
    }
    sig.add(f);
  }
  return sig;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Decision procedures for default logic over Boolean connective fragments",
               "clonedl"};
  app.require_subcommand(1);

  std::string file;
  std::string sig_list;
  std::string engine_name = "auto";
  std::string goal_text;
  std::string mode;
  std::string output;
  std::string kind;
  bool json = false;
  bool witness = false;
  std::uint64_t seed = 1;
  unsigned count = 25;

  auto* classify = app.add_subcommand("classify", "Classify a signature");
  classify->add_option("file", file, "Theory file whose signature is classified");
  classify->add_option("--sig", sig_list, "Comma-separated builtin connectives");
  classify->add_flag("--json", json, "Emit JSON");

  std::map<Problem, CLI::App*> deciders;
  for (auto p : {Problem::Ext, Problem::Cred, Problem::Skep}) {
    const char* help = p == Problem::Ext    ? "Does the theory have a stable extension?"
                       : p == Problem::Cred ? "Is the goal in some stable extension?"
                                            : "Is the goal in every stable extension?";
    auto* sub = app.add_subcommand(std::string(to_string(p)), help);
    sub->add_option("file", file, "Theory file")->required();
    sub->add_option("--engine", engine_name, "auto|generic|monotone|r1|affine|reachability");
    if (p != Problem::Ext) {
      sub->add_option("--goal", goal_text, "Goal formula (overrides the file's goal:)");
    }
    sub->add_flag("--json", json, "Emit JSON");
    sub->add_flag("--witness", witness, "Print the generating defaults");
    deciders[p] = sub;
  }

  auto* imp = app.add_subcommand("imp", "Does W imply the goal?");
  imp->add_option("file", file, "Theory file; W are the premises")->required();
  imp->add_option("--engine", engine_name, "auto|oracle|affine|conjunctive|disjunctive");
  imp->add_option("--goal", goal_text, "Goal formula (overrides the file's goal:)");
  imp->add_flag("--json", json, "Emit JSON");

  auto* reduce = app.add_subcommand("reduce", "Translate a source instance into a theory");
  reduce->add_option("kind", kind, "3sat|gap|hgap|xor-hgap|snsat")
      ->required()
      ->check(CLI::IsMember({"3sat", "gap", "hgap", "xor-hgap", "snsat"}));
  reduce->add_option("input", file, "Instance file")->required();
  reduce->add_option("--mode", mode, "3sat: ext|cred|skep; gap: ext|cred; hgap: conjunctive|disjunctive");
  reduce->add_option("-o,--output", output, "Write the theory here instead of stdout");

  auto* self = app.add_subcommand("selftest", "Cross-check engines on random theories");
  self->add_option("--seed", seed, "Random seed");
  self->add_option("--count", count, "Theories per fragment family");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kInputError;
  }

  try {
    if (classify->parsed()) {
      if (file.empty() == sig_list.empty()) {
        throw Error(ErrorKind::SyntaxError, "classify needs exactly one of FILE or --sig");
      }
      Signature sig;
      if (!file.empty()) {
        const auto text = read_file(file);
        sig = in_file(file, [&] {
          auto inst = parse_theory(text);
          auto s = inst.theory.used_signature();
          if (inst.goal) {
            collect_connectives(*inst.goal, s);
          }
          return s;
        });
      } else {
        sig = signature_from_list(sig_list);
      }
      const auto report = dispatch_case(sig);
      if (json) {
        out << report_to_json(report) << '\n';
      } else {
        print_report(report, sig, out);
      }
      return 0;
    }

    for (const auto& [p, sub] : deciders) {
      if (!sub->parsed()) {
        continue;
      }
      const auto text = read_file(file);
      auto inst = in_file(file, [&] { return parse_theory(text); });
      DecisionOptions options;
      options.engine = engine_choice_from_string(engine_name);
      std::optional<Formula> goal = inst.goal;
      if (!goal_text.empty()) {
        Signature available = inst.theory.signature;
        for (const auto& f : builtin_connectives()) {
          if (!available.contains(f->name())) {
            available.add(f);
          }
        }
        goal = parse(goal_text, available, ParseOptions{true});
      }
      if (p != Problem::Ext && !goal) {
        throw Error(ErrorKind::SyntaxError, file + ": no goal (add 'goal:' or --goal)");
      }
      const Decision d = in_file(file, [&] {
        switch (p) {
          case Problem::Ext: return ext(inst.theory, options);
          case Problem::Cred: return cred(inst.theory, *goal, options);
          case Problem::Skep: return skep(inst.theory, *goal, options);
        }
        return ext(inst.theory, options);
      });
      print_decision(d, json, witness, out, err);
      return 0;
    }

    if (imp->parsed()) {
      const auto text = read_file(file);
      auto inst = in_file(file, [&] { return parse_theory(text); });
      if (!goal_text.empty()) {
        Signature available = inst.theory.signature;
        for (const auto& f : builtin_connectives()) {
          if (!available.contains(f->name())) {
            available.add(f);
          }
        }
        inst.goal = parse(goal_text, available, ParseOptions{true});
      }
      if (!inst.goal) {
        throw Error(ErrorKind::SyntaxError, file + ": no goal (add 'goal:' or --goal)");
      }
      ImplicationQuery q{inst.theory.W, *inst.goal, inst.theory.used_signature()};
      collect_connectives(*inst.goal, q.signature);
      auto engine = implication_engine_from_string(engine_name);
      if (engine == ImplicationEngine::Auto) {
        engine = select_implication_engine(q.signature);
      }
      const bool answer = in_file(file, [&] { return implies(q, engine); });
      if (json) {
        out << "{\n  \"problem\": \"imp\",\n  \"answer\": \"" << yes_no(answer)
            << "\",\n  \"engine\": \"" << to_string(engine) << "\"\n}\n";
      } else {
        out << "answer: " << yes_no(answer) << "\nengine: " << to_string(engine) << '\n';
      }
      return 0;
    }

    if (reduce->parsed()) {
      const auto text = read_file(file);
      auto bad_mode = [&] {
        return Error(ErrorKind::SyntaxError, "mode '" + mode + "' does not apply to " + kind);
      };
      TheoryInstance inst = in_file(file, [&]() -> TheoryInstance {
        if (kind == "3sat") {
          const auto m = mode.empty() || mode == "ext" ? ThreeSatMode::Ext
                         : mode == "cred"              ? ThreeSatMode::Cred
                         : mode == "skep"              ? ThreeSatMode::Skep
                                                       : throw bad_mode();
          return threesat_to_default(parse_dimacs(text), m);
        }
        if (kind == "gap") {
          const auto m = mode.empty() || mode == "ext" ? GapMode::Ext
                         : mode == "cred"              ? GapMode::Cred
                                                       : throw bad_mode();
          return gap_to_default(parse_digraph(text), m);
        }
        if (kind == "hgap") {
          const auto v = mode.empty() || mode == "conjunctive" ? HgapVariant::Conjunctive
                         : mode == "disjunctive"               ? HgapVariant::Disjunctive
                                                               : throw bad_mode();
          return {hgap_to_ext(parse_hypergraph(text), v), std::nullopt};
        }
        if (!mode.empty()) {
          throw bad_mode();
        }
        if (kind == "xor-hgap") {
          return xor_hgap_to_cred(parse_hypergraph(text));
        }
        return {snsat_to_ext(parse_snsat(text)), std::nullopt};
      });
      const auto theory_text = serialize_theory(inst);
      if (output.empty()) {
        out << theory_text;
      } else {
        std::ofstream o(output, std::ios::binary);
        if (!(o << theory_text)) {
          throw Error(ErrorKind::Io, "cannot write '" + output + "'");
        }
      }
      return 0;
    }

    if (self->parsed()) {
      return selftest(seed, count, out) == 0 ? 0 : 1;
    }
  } catch (const Error& e) {
    err << "clonedl: " << e.what() << '\n';
    return e.is_cap_exceeded() ? kCapExceeded : kInputError;
  }
  return kInputError;
}

}  // namespace clonedl::cli
