#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace binval {

/// Fixed-length bit string. Individual bits may change; the length never does.
class BitString {
 public:
  explicit BitString(std::size_t n);
  explicit BitString(std::vector<std::uint8_t> bits);

  /// Parses a string of '0'/'1' characters, position 0 first.
  static BitString parse(std::string_view text);

  std::size_t size() const noexcept { return bits_.size(); }
  bool operator[](std::size_t i) const { return bits_[i] != 0; }

  void set(std::size_t i, bool value) { bits_[i] = value ? 1 : 0; }
  void flip(std::size_t i) { bits_[i] ^= 1; }

  BitString complement() const;
  std::string to_string() const;

  friend bool operator==(const BitString&, const BitString&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

/// Number of positions at which x and y differ. Throws SizeError on length mismatch.
std::size_t hamming(const BitString& x, const BitString& y);

}  // namespace binval
