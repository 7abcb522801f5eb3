#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cubesplit {

/// Fixed-length bit sequence holding one codeword: the cell-index header
/// first, then one field per companded coordinate. Fields are MSB-first.
class BitString {
 public:
  BitString() = default;

  std::size_t size() const { return bits_.size(); }
  int bit(std::size_t i) const { return bits_.at(i); }

  void reserve(std::size_t bit_count) { bits_.reserve(bit_count); }

  void append_bit(int b) { bits_.push_back(b ? 1 : 0); }

  /// Appends the `width` low bits of `value`, most significant first.
  void append_field(std::uint64_t value, int width);

  /// Reads the `width`-bit field starting at bit `offset`.
  std::uint64_t read_field(std::size_t offset, int width) const;

  /// ASCII form, '0'/'1' per bit, header first.
  std::string to_text() const;
  static BitString from_text(const std::string& text);

  /// Packed form: bits filled into bytes MSB-first, zero-padded at the tail.
  std::vector<std::uint8_t> to_bytes() const;
  static BitString from_bytes(const std::vector<std::uint8_t>& bytes, std::size_t bit_count);

  bool operator==(const BitString&) const = default;

 private:
  std::vector<std::uint8_t> bits_;
};

}  // namespace cubesplit
