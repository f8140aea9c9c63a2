#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "macc/bitvector.hpp"
#include "macc/params.hpp"
#include "macc/rational.hpp"

// Bit-exact simulation of placement and delivery over GF(2).
// Users, caches and files are 1-based throughout, matching the network model.
namespace macc::sim {

// W_1..W_N, each exactly F bits.
class FileLibrary {
 public:
  FileLibrary(MaccParams params, std::size_t F, std::vector<BitVector> files);

  static FileLibrary random(const MaccParams& params, std::size_t F, std::uint64_t seed);
  static FileLibrary zeros(const MaccParams& params, std::size_t F);
  // All zero except bit `bit` of file `n`.
  static FileLibrary unit(const MaccParams& params, std::size_t F, int n, std::size_t bit);

  const MaccParams& params() const { return params_; }
  std::size_t file_bits() const { return F_; }
  const BitVector& file(int n) const;
  // Bits [part*F/parts, (part+1)*F/parts) of W_n, `part` 1-based.
  BitVector subfile(int n, int part, int parts) const;

 private:
  MaccParams params_;
  std::size_t F_;
  std::vector<BitVector> files_;
};

// Z_1..Z_K, each exactly M*F bits.
class CacheContents {
 public:
  CacheContents(MaccParams params, Rational M, std::size_t F, std::vector<BitVector> caches);

  const MaccParams& params() const { return params_; }
  const Rational& memory() const { return M_; }
  const BitVector& cache(int k) const;
  BitVector& mutable_cache(int k);

 private:
  MaccParams params_;
  Rational M_;
  std::vector<BitVector> caches_;
};

struct DemandVector {
  std::vector<int> files;  // files[k-1] = d_k

  int of(int user) const { return files.at(static_cast<std::size_t>(user - 1)); }
  std::string to_string() const;  // "(1,2,3)"
  friend auto operator<=>(const DemandVector&, const DemandVector&) = default;
};

// All N^K demand vectors in lexicographic order. Throws DomainError when
// there are more than 2^22 of them.
std::vector<DemandVector> enumerate_demands(const MaccParams& params);

struct Transmission {
  BitVector payload;
  Rational rate;  // payload.size() / F
};

// The caches in one user's window, and nothing else. Asking for any other
// cache throws, so a decoder cannot reach outside its window.
class AccessibleCaches {
 public:
  AccessibleCaches(const CacheContents& contents, int user);

  int user() const { return user_; }
  const std::vector<int>& indices() const { return indices_; }
  const BitVector& cache(int k) const;

 private:
  int user_;
  std::vector<int> indices_;
  std::vector<BitVector> contents_;
};

class Scheme {
 public:
  virtual ~Scheme() = default;

  virtual std::string id() const = 0;
  virtual MaccParams params() const = 0;
  virtual bool admits(const MaccParams& params) const { return params == this->params(); }
  virtual Rational memory() const = 0;
  // Number of equal parts each file (or cache) is cut into; F must be a multiple.
  virtual int subpacketization() const = 0;

  // Throws SubpacketizationError when F is not a positive multiple of the
  // subpacketization.
  void check_file_size(std::size_t F) const;

  virtual CacheContents place(const FileLibrary& library) const = 0;
  virtual Transmission deliver(const FileLibrary& library, const DemandVector& d) const = 0;
  virtual BitVector decode(int user, const Transmission& x, const AccessibleCaches& caches,
                           const DemandVector& d, std::size_t F) const = 0;
};

// (3,2,3) at M = 2/3: Z_i = {W_{1,i}+W_{2,i}, W_{2,i}+W_{3,i}}, delivery of
// W_{d_1,3}, W_{d_2,1}, W_{d_3,2}. Rate 1.
std::unique_ptr<Scheme> scheme_coded_placement_323();

// Empty caches; each distinct demanded file is broadcast once.
std::unique_ptr<Scheme> scheme_zero_memory(const MaccParams& params);

// (3,2,3) at M = 3/2: W_n = (A_n, B_n), Z_1 = A, Z_2 = B, Z_3 = A+B. Rate 0.
std::unique_ptr<Scheme> scheme_full_access_corner_323();

// "appendix-b", "zero-memory", "corner-323". Returns nullptr for unknown ids.
// `params` is only consulted by zero-memory.
std::unique_ptr<Scheme> make_scheme(const std::string& id, const MaccParams& params);

std::vector<std::string> registered_schemes();

}  // namespace macc::sim
