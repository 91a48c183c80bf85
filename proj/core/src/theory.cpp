#include "clonedl/theory.hpp"

#include <sstream>

#include "clonedl/error.hpp"

namespace clonedl {

namespace {

Formula replace_true(const Formula& f, const Formula& t) {
  if (f.is_var()) {
    return f;
  }
  if (f.conn()->arity() == 0) {
    return is_constant_true(*f.conn()) ? t : f;
  }
  std::vector<Formula> args;
  bool changed = false;
  for (const auto& a : f.args()) {
    args.push_back(replace_true(a, t));
    changed = changed || !(args.back() == a);
  }
  return changed ? Formula::app(f.conn(), std::move(args)) : f;
}

bool mentions_true(const Formula& f) {
  if (f.is_var()) {
    return false;
  }
  if (f.conn()->arity() == 0) {
    return is_constant_true(*f.conn());
  }
  for (const auto& a : f.args()) {
    if (mentions_true(a)) {
      return true;
    }
  }
  return false;
}

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) {
    return {};
  }
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

bool starts_with_word(std::string_view line, std::string_view word) {
  return line.substr(0, word.size()) == word &&
         (line.size() == word.size() || line[word.size()] == ' ' || line[word.size()] == '\t');
}

[[noreturn]] void fail_at(std::size_t line_no, const Error& e) {
  throw Error(e.kind(), "line " + std::to_string(line_no) + ": " +
                            std::string(std::string_view(e.what()).substr(
                                to_string(e.kind()).size() + 2)));
}

}  // namespace

VarSet DefaultTheory::variables() const {
  VarSet out;
  for (const auto& w : W) {
    collect_variables(w, out);
  }
  for (const auto& d : D) {
    collect_variables(d.prerequisite, out);
    collect_variables(d.justification, out);
    collect_variables(d.consequent, out);
  }
  return out;
}

Signature DefaultTheory::used_signature() const {
  Signature out = signature;
  for (const auto& w : W) {
    collect_connectives(w, out);
  }
  for (const auto& d : D) {
    collect_connectives(d.prerequisite, out);
    collect_connectives(d.justification, out);
    collect_connectives(d.consequent, out);
  }
  return out;
}

bool is_constant_true(const BoolFun& f) { return f.arity() == 0 && f(0); }

TheoryInstance eliminate_constant_true(const TheoryInstance& in, std::string* fresh_var) {
  const auto& T = in.theory;
  bool present = in.goal && mentions_true(*in.goal);
  for (const auto& w : T.W) {
    present = present || mentions_true(w);
  }
  for (const auto& d : T.D) {
    present = present || mentions_true(d.prerequisite) || mentions_true(d.justification) ||
              mentions_true(d.consequent);
  }
  if (!present) {
    return in;
  }
  VarSet taken = T.variables();
  if (in.goal) {
    collect_variables(*in.goal, taken);
  }
  const std::string name = fresh_name("_t", taken);
  if (fresh_var) {
    *fresh_var = name;
  }
  const Formula t = Formula::var(name);

  TheoryInstance out;
  auto push_unique = [&](Formula f) {
    for (const auto& w : out.theory.W) {
      if (w == f) {
        return;
      }
    }
    out.theory.W.push_back(std::move(f));
  };
  for (const auto& w : T.W) {
    push_unique(replace_true(w, t));
  }
  push_unique(t);
  for (const auto& d : T.D) {
    out.theory.D.push_back({replace_true(d.prerequisite, t), replace_true(d.justification, t),
                            replace_true(d.consequent, t)});
  }
  if (in.goal) {
    out.goal = replace_true(*in.goal, t);
  }
  for (const auto& f : T.signature.connectives()) {
    if (!is_constant_true(*f)) {
      out.theory.signature.add(f);
    }
  }
  return out;
}

DefaultTheory eliminate_constant_true(const DefaultTheory& T, std::string* fresh_var) {
  return eliminate_constant_true(TheoryInstance{T, std::nullopt}, fresh_var).theory;
}

TheoryInstance parse_theory(std::string_view text) {
  enum class Section { None, W, D };

  // First pass: connective declarations and directives, which may appear
  // anywhere but apply to the whole file.
  Signature available;
  for (const auto& f : builtin_connectives()) {
    available.add(f);
  }
  Signature declared;
  ParseOptions options;
  std::vector<std::pair<std::size_t, std::string_view>> lines;
  {
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      auto end = text.find('\n', pos);
      if (end == std::string_view::npos) {
        end = text.size();
      }
      ++line_no;
      auto line = text.substr(pos, end - pos);
      if (auto hash = line.find('#'); hash != std::string_view::npos) {
        line = line.substr(0, hash);
      }
      line = trim(line);
      pos = end + 1;
      if (line.empty()) {
        continue;
      }
      if (line == "%reserved") {
        options.allow_reserved = true;
        continue;
      }
      if (starts_with_word(line, "defconn")) {
        std::istringstream in{std::string(line.substr(7))};
        std::string name, bits, extra;
        unsigned arity = 0;
        if (!(in >> name >> arity >> bits) || (in >> extra)) {
          throw Error(ErrorKind::SyntaxError,
                      "line " + std::to_string(line_no) + ": expected 'defconn NAME ARITY BITS'");
        }
        if (!is_identifier(name)) {
          throw Error(ErrorKind::SyntaxError,
                      "line " + std::to_string(line_no) + ": invalid connective name '" + name + "'");
        }
        try {
          auto f = std::make_shared<const BoolFun>(name, arity, bits);
          auto existing = builtin(name);
          if (existing && !(*existing == *f)) {
            throw Error(ErrorKind::SyntaxError, "'" + name + "' redefines a builtin connective");
          }
          declared.add(f);
          available.erase(name);
          available.add(f);
        } catch (const Error& e) {
          fail_at(line_no, e);
        }
        continue;
      }
      lines.emplace_back(line_no, line);
    }
  }

  TheoryInstance out;
  out.theory.signature = declared;
  Section section = Section::None;
  for (const auto& [line_no, line] : lines) {
    try {
      if (line == "W:") {
        section = Section::W;
      } else if (line == "D:") {
        section = Section::D;
      } else if (starts_with_word(line, "signature:") || line == "signature:") {
        std::istringstream in{std::string(line.substr(10))};
        std::string name;
        while (in >> name) {
          auto f = available.find(name);
          if (!f) {
            throw Error(ErrorKind::UnknownConnective, "'" + name + "'");
          }
          out.theory.signature.add(f);
        }
      } else if (line.substr(0, 5) == "goal:") {
        if (out.goal) {
          throw Error(ErrorKind::SyntaxError, "duplicate goal");
        }
        out.goal = parse(trim(line.substr(5)), available, options);
        collect_connectives(*out.goal, out.theory.signature);
      } else if (section == Section::W) {
        auto f = parse(line, available, options);
        collect_connectives(f, out.theory.signature);
        out.theory.W.push_back(std::move(f));
      } else if (section == Section::D) {
        constexpr std::string_view kOpen = "(default";
        if (line.substr(0, kOpen.size()) != kOpen || line.back() != ')' ||
            (line.size() > kOpen.size() && line[kOpen.size()] != ' ' &&
             line[kOpen.size()] != '\t' && line[kOpen.size()] != '(')) {
          throw Error(ErrorKind::SyntaxError, "expected '(default PRE JUST CON)'");
        }
        auto parts = parse_sequence(line.substr(kOpen.size(), line.size() - kOpen.size() - 1),
                                    available, options);
        if (parts.size() != 3) {
          throw Error(ErrorKind::SyntaxError,
                      "a default needs 3 formulae, got " + std::to_string(parts.size()));
        }
        for (const auto& p : parts) {
          collect_connectives(p, out.theory.signature);
        }
        out.theory.D.push_back({parts[0], parts[1], parts[2]});
      } else {
        throw Error(ErrorKind::SyntaxError, "unexpected line outside W:/D: sections");
      }
    } catch (const Error& e) {
      fail_at(line_no, e);
    }
  }
  return out;
}

std::string serialize_theory(const TheoryInstance& inst) {
  const auto& T = inst.theory;
  Signature sig = T.used_signature();
  if (inst.goal) {
    collect_connectives(*inst.goal, sig);
  }
  std::ostringstream out;
  for (const auto& f : sig.connectives()) {
    if (!builtin(f->name())) {
      out << "defconn " << f->name() << ' ' << f->arity() << ' ' << f->table().to_bits() << '\n';
    }
  }
  if (!sig.empty()) {
    out << "signature:";
    for (const auto& name : sig.names()) {
      out << ' ' << name;
    }
    out << '\n';
  }
  VarSet vars = T.variables();
  if (inst.goal) {
    collect_variables(*inst.goal, vars);
  }
  for (const auto& v : vars) {
    if (is_reserved_name(v)) {
      out << "%reserved\n";
      break;
    }
  }
  out << "W:\n";
  for (const auto& w : T.W) {
    out << serialize(w) << '\n';
  }
  out << "D:\n";
  for (const auto& d : T.D) {
    out << "(default " << serialize(d.prerequisite) << ' ' << serialize(d.justification) << ' '
        << serialize(d.consequent) << ")\n";
  }
  if (inst.goal) {
    out << "goal: " << serialize(*inst.goal) << '\n';
  }
  return out.str();
}

}  // namespace clonedl
