#include "macc/bitvector.hpp"

#include <bit>

#include "macc/errors.hpp"

namespace macc {

namespace {
constexpr std::size_t kWord = 64;
std::size_t words_for(std::size_t bits) { return (bits + kWord - 1) / kWord; }
}  // namespace

BitVector::BitVector(std::size_t bits) : bits_(bits), words_(words_for(bits), 0) {}

bool BitVector::get(std::size_t i) const {
  if (i >= bits_) throw DomainError("bit index out of range");
  return (words_[i / kWord] >> (i % kWord)) & 1u;
}

void BitVector::set(std::size_t i, bool value) {
  if (i >= bits_) throw DomainError("bit index out of range");
  const std::uint64_t mask = std::uint64_t(1) << (i % kWord);
  if (value) {
    words_[i / kWord] |= mask;
  } else {
    words_[i / kWord] &= ~mask;
  }
}

void BitVector::flip(std::size_t i) { set(i, !get(i)); }

BitVector BitVector::slice(std::size_t offset, std::size_t length) const {
  if (offset + length > bits_) throw DomainError("slice exceeds bit vector");
  BitVector out(length);
  for (std::size_t i = 0; i < length; ++i) {
    if (get(offset + i)) out.set(i, true);
  }
  return out;
}

void BitVector::append(const BitVector& tail) {
  const std::size_t start = bits_;
  bits_ += tail.bits_;
  words_.resize(words_for(bits_), 0);
  for (std::size_t i = 0; i < tail.bits_; ++i) {
    if (tail.get(i)) set(start + i, true);
  }
}

BitVector& BitVector::operator^=(const BitVector& other) {
  if (other.bits_ != bits_) throw DomainError("XOR of bit vectors with different lengths");
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
  return *this;
}

std::size_t BitVector::popcount() const {
  std::size_t n = 0;
  for (std::uint64_t w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

std::string BitVector::to_string() const {
  std::string out(bits_, '0');
  for (std::size_t i = 0; i < bits_; ++i) {
    if (get(i)) out[i] = '1';
  }
  return out;
}

BitVector BitVector::concat(const std::vector<BitVector>& parts) {
  BitVector out;
  for (const BitVector& p : parts) out.append(p);
  return out;
}

}  // namespace macc
