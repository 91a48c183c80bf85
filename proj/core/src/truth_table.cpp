#include "clonedl/truth_table.hpp"

#include <bit>

#include "clonedl/error.hpp"

namespace clonedl {

namespace {

constexpr std::uint64_t kProjectionWords[6] = {
    0xAAAAAAAAAAAAAAAAull, 0xCCCCCCCCCCCCCCCCull, 0xF0F0F0F0F0F0F0F0ull,
    0xFF00FF00FF00FF00ull, 0xFFFF0000FFFF0000ull, 0xFFFFFFFF00000000ull,
};

std::size_t word_count(unsigned num_vars) {
  return num_vars <= 6 ? 1 : (std::size_t{1} << (num_vars - 6));
}

}  // namespace

TruthTable::TruthTable(unsigned num_vars) : num_vars_(num_vars) {
  if (num_vars > kMaxTableVars) {
    throw Error(ErrorKind::TooManyVariables,
                std::to_string(num_vars) + " variables exceed the cap of " +
                    std::to_string(kMaxTableVars));
  }
  words_.assign(word_count(num_vars), 0);
}

TruthTable TruthTable::constant(unsigned num_vars, bool value) {
  TruthTable t(num_vars);
  if (value) {
    for (auto& w : t.words_) {
      w = ~std::uint64_t{0};
    }
    t.mask_tail();
  }
  return t;
}

TruthTable TruthTable::projection(unsigned num_vars, unsigned var) {
  TruthTable t(num_vars);
  if (var < 6) {
    for (auto& w : t.words_) {
      w = kProjectionWords[var];
    }
  } else {
    for (std::size_t i = 0; i < t.words_.size(); ++i) {
      t.words_[i] = ((i >> (var - 6)) & 1u) ? ~std::uint64_t{0} : 0;
    }
  }
  t.mask_tail();
  return t;
}

TruthTable TruthTable::from_bits(std::string_view bits) {
  if (bits.empty() || !std::has_single_bit(bits.size())) {
    throw Error(ErrorKind::SyntaxError,
                "table length " + std::to_string(bits.size()) + " is not a power of two");
  }
  const auto n = static_cast<unsigned>(std::countr_zero(bits.size()));
  TruthTable t(n);
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] != '0' && bits[i] != '1') {
      throw Error(ErrorKind::SyntaxError, "table bit '" + std::string(1, bits[i]) + "'");
    }
    t.set(i, bits[i] == '1');
  }
  return t;
}

bool TruthTable::is_zero() const noexcept {
  for (auto w : words_) {
    if (w != 0) {
      return false;
    }
  }
  return true;
}

bool TruthTable::is_ones() const noexcept { return (~*this).is_zero(); }

std::size_t TruthTable::count_ones() const noexcept {
  std::size_t n = 0;
  for (auto w : words_) {
    n += static_cast<std::size_t>(std::popcount(w));
  }
  return n;
}

bool TruthTable::implies(const TruthTable& other) const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & ~other.words_[i]) {
      return false;
    }
  }
  return true;
}

bool TruthTable::intersects(const TruthTable& other) const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & other.words_[i]) {
      return true;
    }
  }
  return false;
}

TruthTable& TruthTable::operator&=(const TruthTable& other) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    words_[i] &= other.words_[i];
  }
  return *this;
}

TruthTable& TruthTable::operator|=(const TruthTable& other) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    words_[i] |= other.words_[i];
  }
  return *this;
}

TruthTable& TruthTable::operator^=(const TruthTable& other) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    words_[i] ^= other.words_[i];
  }
  return *this;
}

TruthTable TruthTable::operator~() const {
  TruthTable t = *this;
  for (auto& w : t.words_) {
    w = ~w;
  }
  t.mask_tail();
  return t;
}

std::string TruthTable::to_bits() const {
  std::string s(num_bits(), '0');
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (get(i)) {
      s[i] = '1';
    }
  }
  return s;
}

void TruthTable::mask_tail() noexcept {
  if (num_vars_ < 6) {
    words_[0] &= (std::uint64_t{1} << num_bits()) - 1;
  }
}

}  // namespace clonedl
