#include "cubesplit/bitstring.hpp"

#include <stdexcept>

namespace cubesplit {

void BitString::append_field(std::uint64_t value, int width) {
  if (width < 0 || width > 63) {
    throw std::invalid_argument("BitString::append_field: width out of range");
  }
  if (width < 64 && (value >> width) != 0) {
    throw std::invalid_argument("BitString::append_field: value does not fit in width");
  }
  for (int i = width - 1; i >= 0; --i) {
    bits_.push_back(static_cast<std::uint8_t>((value >> i) & 1u));
  }
}

std::uint64_t BitString::read_field(std::size_t offset, int width) const {
  if (width < 0 || width > 63 || offset + static_cast<std::size_t>(width) > bits_.size()) {
    throw std::out_of_range("BitString::read_field: field exceeds bit string");
  }
  std::uint64_t value = 0;
  for (int i = 0; i < width; ++i) {
    value = (value << 1) | bits_[offset + static_cast<std::size_t>(i)];
  }
  return value;
}

std::string BitString::to_text() const {
  std::string s;
  s.reserve(bits_.size());
  for (std::uint8_t b : bits_) {
    s.push_back(b ? '1' : '0');
  }
  return s;
}

BitString BitString::from_text(const std::string& text) {
  BitString bs;
  bs.bits_.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1') {
      throw std::runtime_error("BitString::from_text: codeword contains a character other than 0/1");
    }
    bs.bits_.push_back(c == '1' ? 1 : 0);
  }
  return bs;
}

std::vector<std::uint8_t> BitString::to_bytes() const {
  std::vector<std::uint8_t> bytes((bits_.size() + 7) / 8, 0);
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i]) {
      bytes[i / 8] |= static_cast<std::uint8_t>(0x80u >> (i % 8));
    }
  }
  return bytes;
}

BitString BitString::from_bytes(const std::vector<std::uint8_t>& bytes, std::size_t bit_count) {
  if (bit_count > bytes.size() * 8) {
    throw std::runtime_error("BitString::from_bytes: not enough bytes for the requested length");
  }
  BitString bs;
  bs.bits_.reserve(bit_count);
  for (std::size_t i = 0; i < bit_count; ++i) {
    bs.bits_.push_back((bytes[i / 8] >> (7 - i % 8)) & 1u);
  }
  return bs;
}

}  // namespace cubesplit
