#include "binval/bit_string.hpp"

#include "binval/errors.hpp"

namespace binval {

BitString::BitString(std::size_t n) : bits_(n, 0) {
  if (n == 0) throw DomainError("bit string length must be positive");
}

BitString::BitString(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  if (bits_.empty()) throw DomainError("bit string length must be positive");
  for (auto& b : bits_) b = b ? 1 : 0;
}

BitString BitString::parse(std::string_view text) {
  std::vector<std::uint8_t> bits;
  bits.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1') throw DomainError("bit string may contain only 0 and 1");
    bits.push_back(c == '1' ? 1 : 0);
  }
  return BitString(std::move(bits));
}

BitString BitString::complement() const {
  BitString out = *this;
  for (auto& b : out.bits_) b ^= 1;
  return out;
}

std::string BitString::to_string() const {
  std::string s(bits_.size(), '0');
  for (std::size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i]) s[i] = '1';
  return s;
}

std::size_t hamming(const BitString& x, const BitString& y) {
  if (x.size() != y.size()) throw SizeError("hamming: length mismatch");
  std::size_t count = 0;
  for (std::size_t i = 0; i < x.size(); ++i) count += x[i] != y[i];
  return count;
}

}  // namespace binval
