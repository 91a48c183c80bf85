#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace clonedl {

/// Hard cap on the number of variables a truth table may range over.
inline constexpr unsigned kMaxTableVars = 20;

/// Dense truth table over `num_vars` variables. Bit `i` holds the value of the
/// function at the assignment where variable `j` (0-based) is `(i >> j) & 1`,
/// so the first variable is the least significant index bit.
class TruthTable {
public:
  TruthTable() : TruthTable(0) {}
  explicit TruthTable(unsigned num_vars);

  static TruthTable constant(unsigned num_vars, bool value);
  static TruthTable projection(unsigned num_vars, unsigned var);
  /// Parses a bitstring whose k-th character is the value at index k.
  static TruthTable from_bits(std::string_view bits);

  unsigned num_vars() const noexcept { return num_vars_; }
  std::size_t num_bits() const noexcept { return std::size_t{1} << num_vars_; }

  bool get(std::size_t index) const noexcept {
    return (words_[index >> 6] >> (index & 63)) & 1u;
  }
  void set(std::size_t index, bool value) noexcept {
    const auto mask = std::uint64_t{1} << (index & 63);
    if (value) {
      words_[index >> 6] |= mask;
    } else {
      words_[index >> 6] &= ~mask;
    }
  }

  bool is_zero() const noexcept;
  bool is_ones() const noexcept;
  std::size_t count_ones() const noexcept;

  /// True iff every model of *this is a model of `other`.
  bool implies(const TruthTable& other) const noexcept;
  /// True iff *this and `other` share a model.
  bool intersects(const TruthTable& other) const noexcept;

  TruthTable& operator&=(const TruthTable& other) noexcept;
  TruthTable& operator|=(const TruthTable& other) noexcept;
  TruthTable& operator^=(const TruthTable& other) noexcept;
  TruthTable operator~() const;

  friend TruthTable operator&(TruthTable a, const TruthTable& b) noexcept { return a &= b; }
  friend TruthTable operator|(TruthTable a, const TruthTable& b) noexcept { return a |= b; }
  friend TruthTable operator^(TruthTable a, const TruthTable& b) noexcept { return a ^= b; }
  friend bool operator==(const TruthTable& a, const TruthTable& b) noexcept = default;

  std::string to_bits() const;

  const std::vector<std::uint64_t>& words() const noexcept { return words_; }

private:
  void mask_tail() noexcept;

  unsigned num_vars_;
  std::vector<std::uint64_t> words_;
};

}  // namespace clonedl
