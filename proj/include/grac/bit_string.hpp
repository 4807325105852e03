#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace grac {

/// Default materialization limit for expanded texts: 2^24 bits.
inline constexpr std::size_t kDefaultExpandCap = std::size_t{1} << 24;

/// Explicit binary string; the oracle-side form of a compressed text.
class BitString {
 public:
  BitString() = default;
  explicit BitString(std::vector<bool> bits) : bits_(std::move(bits)) {}

  /// Accepts only '0' and '1'.
  static BitString from_text(std::string_view text);
  static BitString zeros(std::size_t n) { return BitString(std::vector<bool>(n, false)); }

  std::size_t size() const noexcept { return bits_.size(); }
  bool empty() const noexcept { return bits_.empty(); }
  bool operator[](std::size_t i) const { return bits_[i]; }
  void push_back(bool b) { bits_.push_back(b); }
  void append(const BitString& other) { bits_.insert(bits_.end(), other.bits_.begin(), other.bits_.end()); }
  void reserve(std::size_t n) { bits_.reserve(n); }

  const std::vector<bool>& bits() const noexcept { return bits_; }
  std::string to_text() const;

  friend bool operator==(const BitString&, const BitString&) = default;

 private:
  std::vector<bool> bits_;
};

}  // namespace grac
