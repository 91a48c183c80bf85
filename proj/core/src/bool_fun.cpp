#include "clonedl/bool_fun.hpp"

#include <algorithm>

#include "clonedl/error.hpp"

namespace clonedl {

BoolFun::BoolFun(std::string name, unsigned arity, std::string_view bits)
    : name_(std::move(name)), table_(TruthTable::from_bits(bits)) {
  if (table_.num_vars() != arity) {
    throw Error(ErrorKind::SyntaxError, "connective '" + name_ + "' of arity " +
                                            std::to_string(arity) + " needs " +
                                            std::to_string(std::size_t{1} << arity) +
                                            " table bits, got " + std::to_string(bits.size()));
  }
}

const std::vector<ConnPtr>& builtin_connectives() {
  static const std::vector<ConnPtr> conns = [] {
    auto make = [](const char* name, unsigned arity, const char* bits) {
      return std::make_shared<const BoolFun>(name, arity, bits);
    };
    return std::vector<ConnPtr>{
        make("and", 2, "0001"),
        make("or", 2, "0111"),
        make("not", 1, "10"),
        make("xor", 2, "0110"),
        // imp(x, y) = x -> y; index bit 0 is x.
        make("imp", 2, "1011"),
        make("nimp", 2, "0100"),
        make("eq", 2, "1001"),
        make("id", 1, "01"),
        make("top", 0, "1"),
        make("bot", 0, "0"),
        make("xor3", 3, "01101001"),
        make("maj", 3, "00010111"),
        // x | (y & z)
        make("s00", 3, "01010111"),
        // x & (y | z)
        make("s10", 3, "00010101"),
        // (x & !y) | (x & !z) | (!y & !z)
        make("dbase", 3, "11010100"),
    };
  }();
  return conns;
}

ConnPtr builtin(std::string_view name) {
  for (const auto& f : builtin_connectives()) {
    if (f->name() == name) {
      return f;
    }
  }
  return nullptr;
}

Signature::Signature(std::initializer_list<ConnPtr> conns) {
  for (const auto& f : conns) {
    add(f);
  }
}

Signature Signature::of(std::initializer_list<std::string_view> names) {
  Signature sig;
  for (auto name : names) {
    auto f = builtin(name);
    if (!f) {
      throw Error(ErrorKind::UnknownConnective, std::string(name));
    }
    sig.add(std::move(f));
  }
  return sig;
}

void Signature::add(ConnPtr f) {
  auto it = conns_.find(f->name());
  if (it != conns_.end()) {
    if (*it->second != *f) {
      throw Error(ErrorKind::SyntaxError, "conflicting definitions of connective '" + f->name() + "'");
    }
    return;
  }
  conns_.emplace(f->name(), std::move(f));
}

ConnPtr Signature::find(std::string_view name) const {
  auto it = conns_.find(name);
  return it == conns_.end() ? nullptr : it->second;
}

std::vector<ConnPtr> Signature::connectives() const {
  std::vector<ConnPtr> out;
  out.reserve(conns_.size());
  for (const auto& [_, f] : conns_) {
    out.push_back(f);
  }
  return out;
}

std::vector<std::string> Signature::names() const {
  std::vector<std::string> out;
  for (const auto& [name, _] : conns_) {
    out.push_back(name);
  }
  return out;
}

unsigned Signature::max_arity() const noexcept {
  unsigned a = 0;
  for (const auto& [_, f] : conns_) {
    a = std::max(a, f->arity());
  }
  return a;
}

Signature Signature::merged(const Signature& other) const {
  Signature out = *this;
  for (const auto& [_, f] : other.conns_) {
    out.add(f);
  }
  return out;
}

bool Signature::includes(const Signature& other) const {
  return std::all_of(other.conns_.begin(), other.conns_.end(), [this](const auto& kv) {
    auto f = find(kv.first);
    return f && *f == *kv.second;
  });
}

bool operator==(const Signature& a, const Signature& b) {
  return a.includes(b) && b.includes(a);
}

}  // namespace clonedl
