#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace polytime {

enum class Bit : std::uint8_t { b0 = 0, b1 = 1 };

constexpr Bit bit_of(unsigned v) { return v ? Bit::b1 : Bit::b0; }
constexpr unsigned bit_value(Bit b) { return b == Bit::b1 ? 1u : 0u; }
constexpr Bit bit_flip(Bit b) { return b == Bit::b1 ? Bit::b0 : Bit::b1; }

// A finite sequence of bits; position 0 is the least significant bit.
// Storage is most-significant-first so appending/removing the least
// significant bit is O(1) (every recursion rule destructs the lsb).
// "0" and "00" are distinct values.
class Bitstring {
 public:
  Bitstring() = default;
  explicit Bitstring(std::vector<Bit> msb_first) : bits_(std::move(msb_first)) {}

  std::size_t length() const { return bits_.size(); }
  bool empty() const { return bits_.empty(); }

  // Bit at significance position i (0 = least significant).
  Bit bit(std::size_t i) const { return bits_[bits_.size() - 1 - i]; }

  const std::vector<Bit>& msb_first() const { return bits_; }

  bool operator==(const Bitstring&) const = default;

 private:
  std::vector<Bit> bits_;
};

using ArgVector = std::vector<Bitstring>;

Bitstring append_lsb(const Bitstring& x, Bit b);
std::optional<std::pair<Bitstring, Bit>> split_lsb(const Bitstring& x);
inline std::size_t length(const Bitstring& x) { return x.length(); }

// x with its k least significant bits removed (all of them if k >= |x|).
Bitstring drop_lsb(const Bitstring& x, std::size_t k);

std::vector<std::size_t> size_vector(const ArgVector& v);

// "eps" and "" denote the empty bitstring; otherwise only '0'/'1' characters,
// rightmost character least significant. Throws MalformedLiteral.
Bitstring parse_literal(const std::string& text);

// Left inverse of parse_literal; the empty bitstring renders as "eps".
std::string render_literal(const Bitstring& x);

}  // namespace polytime
