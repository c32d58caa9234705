#include "polytime/bitstring.hpp"

#include "polytime/errors.hpp"

namespace polytime {

Bitstring append_lsb(const Bitstring& x, Bit b) {
  std::vector<Bit> bits = x.msb_first();
  bits.push_back(b);
  return Bitstring(std::move(bits));
}

std::optional<std::pair<Bitstring, Bit>> split_lsb(const Bitstring& x) {
  if (x.empty()) return std::nullopt;
  std::vector<Bit> bits = x.msb_first();
  Bit b = bits.back();
  bits.pop_back();
  return std::make_pair(Bitstring(std::move(bits)), b);
}

Bitstring drop_lsb(const Bitstring& x, std::size_t k) {
  const auto& bits = x.msb_first();
  if (k >= bits.size()) return Bitstring();
  return Bitstring(std::vector<Bit>(bits.begin(), bits.end() - static_cast<std::ptrdiff_t>(k)));
}

std::vector<std::size_t> size_vector(const ArgVector& v) {
  std::vector<std::size_t> sizes;
  sizes.reserve(v.size());
  for (const auto& x : v) sizes.push_back(x.length());
  return sizes;
}

Bitstring parse_literal(const std::string& text) {
  if (text.empty() || text == "eps") return Bitstring();
  std::vector<Bit> bits;
  bits.reserve(text.size());
  for (char c : text) {
    if (c == '0') {
      bits.push_back(Bit::b0);
    } else if (c == '1') {
      bits.push_back(Bit::b1);
    } else {
      throw MalformedLiteral("malformed bitstring literal \"" + text +
                             "\": expected only '0'/'1' or \"eps\"");
    }
  }
  return Bitstring(std::move(bits));
}

std::string render_literal(const Bitstring& x) {
  if (x.empty()) return "eps";
  std::string out;
  out.reserve(x.length());
  for (Bit b : x.msb_first()) out.push_back(b == Bit::b1 ? '1' : '0');
  return out;
}

}  // namespace polytime
