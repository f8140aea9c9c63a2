#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace macc {

// Fixed-length bit string over GF(2), packed into 64-bit words. Bits past
// size() in the last word are kept zero so word-wise equality is exact.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t bits);

  std::size_t size() const { return bits_; }
  bool empty() const { return bits_ == 0; }

  bool get(std::size_t i) const;
  void set(std::size_t i, bool value);
  void flip(std::size_t i);

  // Bits [offset, offset + length).
  BitVector slice(std::size_t offset, std::size_t length) const;
  void append(const BitVector& tail);

  BitVector& operator^=(const BitVector& other);
  friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
  friend bool operator==(const BitVector& a, const BitVector& b) = default;

  std::size_t popcount() const;
  std::string to_string() const;  // '0'/'1', bit 0 first

  static BitVector concat(const std::vector<BitVector>& parts);

 private:
  std::size_t bits_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace macc
