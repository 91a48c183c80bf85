#include "clonedl/formula.hpp"

#include <cctype>
#include <functional>

#include "clonedl/error.hpp"

namespace clonedl {

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ull + (seed << 6) + (seed >> 2));
}

TruthTable apply_minterms(const BoolFun& f, std::span<const TruthTable> args, unsigned num_vars) {
  const auto k = f.arity();
  const auto rows = std::size_t{1} << k;
  const bool use_zeros = f.table().count_ones() * 2 > rows;
  TruthTable out(num_vars);
  std::vector<TruthTable> negated;
  negated.reserve(k);
  for (const auto& a : args) {
    negated.push_back(~a);
  }
  for (std::size_t m = 0; m < rows; ++m) {
    if (f(m) == use_zeros) {
      continue;
    }
    TruthTable term = TruthTable::constant(num_vars, true);
    for (unsigned j = 0; j < k; ++j) {
      term &= ((m >> j) & 1u) ? args[j] : negated[j];
    }
    out |= term;
  }
  return use_zeros ? ~out : out;
}

TruthTable apply_pointwise(const BoolFun& f, std::span<const TruthTable> args, unsigned num_vars) {
  TruthTable out(num_vars);
  for (std::size_t i = 0; i < out.num_bits(); ++i) {
    std::size_t row = 0;
    for (std::size_t j = 0; j < args.size(); ++j) {
      row |= static_cast<std::size_t>(args[j].get(i)) << j;
    }
    out.set(i, f(row));
  }
  return out;
}

TruthTable apply(const BoolFun& f, std::span<const TruthTable> args, unsigned num_vars) {
  if (f.arity() == 0) {
    return TruthTable::constant(num_vars, f(0));
  }
  return f.arity() <= 8 ? apply_minterms(f, args, num_vars) : apply_pointwise(f, args, num_vars);
}

class Parser {
public:
  Parser(std::string_view text, const Signature& sig, ParseOptions options)
      : text_(text), sig_(sig), options_(options) {}

  Formula parse_all() {
    skip_space();
    Formula f = parse_formula();
    skip_space();
    if (pos_ != text_.size()) {
      fail(ErrorKind::SyntaxError, "trailing input");
    }
    return f;
  }

  std::vector<Formula> parse_many() {
    std::vector<Formula> out;
    skip_space();
    while (pos_ < text_.size()) {
      out.push_back(parse_formula());
      skip_space();
    }
    return out;
  }

private:
  [[noreturn]] void fail(ErrorKind kind, const std::string& msg) const {
    throw Error(kind, msg + " at offset " + std::to_string(pos_));
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  std::string_view identifier() {
    const auto start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    if (start == pos_) {
      fail(ErrorKind::SyntaxError, "expected identifier");
    }
    return text_.substr(start, pos_ - start);
  }

  Formula parse_formula() {
    if (pos_ >= text_.size()) {
      fail(ErrorKind::SyntaxError, "unexpected end of input");
    }
    if (text_[pos_] == ')') {
      fail(ErrorKind::SyntaxError, "unexpected ')'");
    }
    if (text_[pos_] != '(') {
      const auto at = pos_;
      const auto name = identifier();
      if (!is_identifier(name) && !is_reserved_name(name)) {
        pos_ = at;
        fail(ErrorKind::SyntaxError, "invalid variable name '" + std::string(name) + "'");
      }
      if (is_reserved_name(name) && !options_.allow_reserved) {
        pos_ = at;
        fail(ErrorKind::SyntaxError, "reserved variable name '" + std::string(name) + "'");
      }
      if (sig_.contains(name)) {
        pos_ = at;
        fail(ErrorKind::SyntaxError,
             "connective '" + std::string(name) + "' used without parentheses");
      }
      return Formula::var(std::string(name));
    }
    ++pos_;
    skip_space();
    const auto conn_at = pos_;
    const auto name = identifier();
    auto conn = sig_.find(name);
    if (!conn) {
      pos_ = conn_at;
      fail(ErrorKind::UnknownConnective, "'" + std::string(name) + "'");
    }
    std::vector<Formula> args;
    for (;;) {
      skip_space();
      if (pos_ >= text_.size()) {
        fail(ErrorKind::SyntaxError, "missing ')'");
      }
      if (text_[pos_] == ')') {
        break;
      }
      args.push_back(parse_formula());
    }
    if (args.size() != conn->arity()) {
      pos_ = conn_at;
      fail(ErrorKind::ArityMismatch, "'" + conn->name() + "' takes " +
                                         std::to_string(conn->arity()) + " arguments, got " +
                                         std::to_string(args.size()));
    }
    ++pos_;
    return Formula::app(std::move(conn), std::move(args));
  }

  std::string_view text_;
  const Signature& sig_;
  ParseOptions options_;
  std::size_t pos_ = 0;
};

void serialize_into(const Formula& f, std::string& out) {
  if (f.is_var()) {
    out += f.var_name();
    return;
  }
  out += '(';
  out += f.conn()->name();
  for (const auto& a : f.args()) {
    out += ' ';
    serialize_into(a, out);
  }
  out += ')';
}

TruthTable table_rec(const Formula& f, const VariableOrder& order, unsigned n) {
  if (f.is_var()) {
    return TruthTable::projection(n, order.index(f.var_name()));
  }
  std::vector<TruthTable> args;
  args.reserve(f.args().size());
  for (const auto& a : f.args()) {
    args.push_back(table_rec(a, order, n));
  }
  return apply(*f.conn(), args, n);
}

}  // namespace

Formula Formula::var(std::string name) {
  auto node = std::make_shared<Node>();
  node->hash = mix(std::hash<std::string>{}(name), 0x51);
  node->name = std::move(name);
  return Formula(std::move(node));
}

Formula Formula::app(ConnPtr conn, std::vector<Formula> args) {
  if (args.size() != conn->arity()) {
    throw Error(ErrorKind::ArityMismatch, "'" + conn->name() + "' takes " +
                                              std::to_string(conn->arity()) + " arguments, got " +
                                              std::to_string(args.size()));
  }
  auto node = std::make_shared<Node>();
  std::size_t h = mix(std::hash<std::string>{}(conn->name()), 0xa7);
  for (const auto& a : args) {
    h = mix(h, a.hash());
    node->size += a.size();
    node->depth = std::max(node->depth, a.depth() + 1);
  }
  node->hash = h;
  node->conn = std::move(conn);
  node->args = std::move(args);
  return Formula(std::move(node));
}

bool operator==(const Formula& a, const Formula& b) noexcept {
  if (a.node_ == b.node_) {
    return true;
  }
  if (a.hash() != b.hash() || a.size() != b.size() || a.is_var() != b.is_var()) {
    return false;
  }
  if (a.is_var()) {
    return a.var_name() == b.var_name();
  }
  if (a.conn()->name() != b.conn()->name() || a.conn()->table() != b.conn()->table()) {
    return false;
  }
  for (std::size_t i = 0; i < a.args().size(); ++i) {
    if (!(a.args()[i] == b.args()[i])) {
      return false;
    }
  }
  return true;
}

bool is_reserved_name(std::string_view name) noexcept {
  if (name.size() < 2 || name[0] != '_') {
    return false;
  }
  for (char c : name.substr(1)) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') {
      return false;
    }
  }
  return true;
}

bool is_identifier(std::string_view name) noexcept {
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0]))) {
    return false;
  }
  for (char c : name) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') {
      return false;
    }
  }
  return true;
}

Formula parse(std::string_view text, const Signature& signature, ParseOptions options) {
  return Parser(text, signature, options).parse_all();
}

std::vector<Formula> parse_sequence(std::string_view text, const Signature& signature,
                                    ParseOptions options) {
  return Parser(text, signature, options).parse_many();
}

std::string serialize(const Formula& f) {
  std::string out;
  serialize_into(f, out);
  return out;
}

void collect_variables(const Formula& f, VarSet& out) {
  if (f.is_var()) {
    out.insert(f.var_name());
    return;
  }
  for (const auto& a : f.args()) {
    collect_variables(a, out);
  }
}

VarSet variables(const Formula& f) {
  VarSet out;
  collect_variables(f, out);
  return out;
}

void collect_connectives(const Formula& f, Signature& out) {
  if (f.is_var()) {
    return;
  }
  out.add(f.conn());
  for (const auto& a : f.args()) {
    collect_connectives(a, out);
  }
}

Signature connectives(const Formula& f) {
  Signature out;
  collect_connectives(f, out);
  return out;
}

bool uses_only(const Formula& f, const Signature& signature) {
  return signature.includes(connectives(f));
}

bool eval(const Formula& f, const Assignment& sigma) {
  if (f.is_var()) {
    auto it = sigma.find(f.var_name());
    if (it == sigma.end()) {
      throw Error(ErrorKind::UnboundVariable, "'" + f.var_name() + "'");
    }
    return it->second;
  }
  std::size_t row = 0;
  for (std::size_t j = 0; j < f.args().size(); ++j) {
    row |= static_cast<std::size_t>(eval(f.args()[j], sigma)) << j;
  }
  return (*f.conn())(row);
}

bool eval_constant_point(const Formula& f, bool value) {
  if (f.is_var()) {
    return value;
  }
  std::size_t row = 0;
  for (std::size_t j = 0; j < f.args().size(); ++j) {
    row |= static_cast<std::size_t>(eval_constant_point(f.args()[j], value)) << j;
  }
  return (*f.conn())(row);
}

VariableOrder::VariableOrder(std::vector<std::string> names) : names_(std::move(names)) {
  for (unsigned i = 0; i < names_.size(); ++i) {
    if (!index_.emplace(names_[i], i).second) {
      throw Error(ErrorKind::SyntaxError, "duplicate variable '" + names_[i] + "' in order");
    }
  }
}

unsigned VariableOrder::index(std::string_view name) const {
  auto it = index_.find(name);
  if (it == index_.end()) {
    throw Error(ErrorKind::UnboundVariable, "'" + std::string(name) + "'");
  }
  return it->second;
}

TruthTable table_of(const Formula& f, const VariableOrder& order) {
  if (order.size() > kMaxTableVars) {
    throw Error(ErrorKind::TooManyVariables, std::to_string(order.size()) +
                                                 " variables exceed the cap of " +
                                                 std::to_string(kMaxTableVars));
  }
  return table_rec(f, order, static_cast<unsigned>(order.size()));
}

BoolFun truth_table_of(const Formula& f, const std::vector<std::string>& var_order) {
  return BoolFun(serialize(f), table_of(f, VariableOrder(var_order)));
}

Formula substitute(const Formula& f, const Formula& pattern, const Formula& replacement) {
  if (f == pattern) {
    return replacement;
  }
  if (f.is_var()) {
    return f;
  }
  std::vector<Formula> args;
  args.reserve(f.args().size());
  bool changed = false;
  for (const auto& a : f.args()) {
    args.push_back(substitute(a, pattern, replacement));
    changed = changed || !(args.back() == a);
  }
  return changed ? Formula::app(f.conn(), std::move(args)) : f;
}

Formula balanced_composition(const ConnPtr& op, std::span<const Formula> args) {
  if (args.empty()) {
    throw Error(ErrorKind::EmptyArgs, "balanced composition of '" + op->name() + "'");
  }
  if (op->arity() != 2) {
    throw Error(ErrorKind::ArityMismatch, "balanced composition needs a binary connective");
  }
  if (args.size() == 1) {
    return args.front();
  }
  const auto mid = (args.size() + 1) / 2;
  return Formula::app(op, {balanced_composition(op, args.first(mid)),
                           balanced_composition(op, args.subspan(mid))});
}

std::string fresh_name(std::string_view base, const VarSet& taken) {
  std::string name(base);
  for (unsigned i = 1; taken.contains(name); ++i) {
    name = std::string(base) + std::to_string(i);
  }
  return name;
}

}  // namespace clonedl
