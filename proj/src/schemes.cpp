#include <algorithm>
#include <random>

#include "macc/errors.hpp"
#include "macc/scheme.hpp"

namespace macc::sim {

FileLibrary::FileLibrary(MaccParams params, std::size_t F, std::vector<BitVector> files)
    : params_(params), F_(F), files_(std::move(files)) {
  if (F_ == 0) throw DomainError("file size F must be positive");
  if (files_.size() != static_cast<std::size_t>(params_.N)) {
    throw DomainError("library needs exactly N files");
  }
  for (const BitVector& f : files_) {
    if (f.size() != F_) throw DomainError("every file must have exactly F bits");
  }
}

FileLibrary FileLibrary::random(const MaccParams& params, std::size_t F, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<BitVector> files;
  for (int n = 0; n < params.N; ++n) {
    BitVector f(F);
    for (std::size_t i = 0; i < F; ++i) f.set(i, (rng() & 1u) != 0);
    files.push_back(std::move(f));
  }
  return FileLibrary(params, F, std::move(files));
}

FileLibrary FileLibrary::zeros(const MaccParams& params, std::size_t F) {
  return FileLibrary(params, F, std::vector<BitVector>(params.N, BitVector(F)));
}

FileLibrary FileLibrary::unit(const MaccParams& params, std::size_t F, int n, std::size_t bit) {
  std::vector<BitVector> files(params.N, BitVector(F));
  files.at(static_cast<std::size_t>(n - 1)).set(bit, true);
  return FileLibrary(params, F, std::move(files));
}

const BitVector& FileLibrary::file(int n) const {
  if (n < 1 || n > params_.N) throw DomainError("file index out of range");
  return files_[static_cast<std::size_t>(n - 1)];
}

BitVector FileLibrary::subfile(int n, int part, int parts) const {
  const std::size_t size = F_ / static_cast<std::size_t>(parts);
  return file(n).slice(static_cast<std::size_t>(part - 1) * size, size);
}

CacheContents::CacheContents(MaccParams params, Rational M, std::size_t F,
                             std::vector<BitVector> caches)
    : params_(params), M_(M), caches_(std::move(caches)) {
  const Rational bits = M_ * Rational(static_cast<std::int64_t>(F));
  if (!bits.is_integer()) {
    throw SubpacketizationError("M*F = " + bits.to_string() + " is not an integer");
  }
  if (caches_.size() != static_cast<std::size_t>(params_.K)) {
    throw DomainError("placement needs exactly K caches");
  }
  for (const BitVector& z : caches_) {
    if (z.size() != static_cast<std::size_t>(bits.num())) {
      throw DomainError("cache size differs from M*F bits");
    }
  }
}

const BitVector& CacheContents::cache(int k) const {
  if (k < 1 || k > params_.K) throw DomainError("cache index out of range");
  return caches_[static_cast<std::size_t>(k - 1)];
}

BitVector& CacheContents::mutable_cache(int k) {
  if (k < 1 || k > params_.K) throw DomainError("cache index out of range");
  return caches_[static_cast<std::size_t>(k - 1)];
}

std::string DemandVector::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < files.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(files[i]);
  }
  return out + ")";
}

std::vector<DemandVector> enumerate_demands(const MaccParams& params) {
  std::uint64_t total = 1;
  for (int k = 0; k < params.K; ++k) {
    total *= static_cast<std::uint64_t>(params.N);
    if (total > (std::uint64_t(1) << 22)) throw DomainError("too many demand vectors to enumerate");
  }
  std::vector<DemandVector> all;
  all.reserve(total);
  DemandVector d{std::vector<int>(params.K, 1)};
  for (std::uint64_t i = 0; i < total; ++i) {
    all.push_back(d);
    for (int k = params.K - 1; k >= 0; --k) {
      if (++d.files[k] <= params.N) break;
      d.files[k] = 1;
    }
  }
  return all;
}

AccessibleCaches::AccessibleCaches(const CacheContents& contents, int user)
    : user_(user), indices_(access_window(user, contents.params())) {
  for (int k : indices_) contents_.push_back(contents.cache(k));
}

const BitVector& AccessibleCaches::cache(int k) const {
  auto it = std::find(indices_.begin(), indices_.end(), k);
  if (it == indices_.end()) {
    throw DomainError("user " + std::to_string(user_) + " cannot access cache " + std::to_string(k));
  }
  return contents_[static_cast<std::size_t>(it - indices_.begin())];
}

void Scheme::check_file_size(std::size_t F) const {
  const auto parts = static_cast<std::size_t>(subpacketization());
  if (F == 0 || F % parts != 0) {
    throw SubpacketizationError(id() + " needs F divisible by " + std::to_string(parts) +
                                ", got F=" + std::to_string(F));
  }
}

namespace {

const MaccParams kParams323{3, 2, 3};

void require_demand(const MaccParams& p, const DemandVector& d) {
  if (d.files.size() != static_cast<std::size_t>(p.K)) throw DomainError("demand vector length != K");
  for (int n : d.files) {
    if (n < 1 || n > p.N) throw DomainError("demanded file index out of range");
  }
}

class CodedPlacement323 final : public Scheme {
 public:
  std::string id() const override { return "appendix-b"; }
  MaccParams params() const override { return kParams323; }
  Rational memory() const override { return Rational(2, 3); }
  int subpacketization() const override { return 3; }

  CacheContents place(const FileLibrary& lib) const override {
    check_file_size(lib.file_bits());
    std::vector<BitVector> caches;
    for (int i = 1; i <= 3; ++i) {
      const BitVector w1 = lib.subfile(1, i, 3);
      const BitVector w2 = lib.subfile(2, i, 3);
      const BitVector w3 = lib.subfile(3, i, 3);
      caches.push_back(BitVector::concat({w1 ^ w2, w2 ^ w3}));
    }
    return CacheContents(kParams323, memory(), lib.file_bits(), std::move(caches));
  }

  // Segment k carries W_{d_k, <k+2>_3}.
  Transmission deliver(const FileLibrary& lib, const DemandVector& d) const override {
    check_file_size(lib.file_bits());
    require_demand(kParams323, d);
    std::vector<BitVector> segments;
    for (int k = 1; k <= 3; ++k) segments.push_back(lib.subfile(d.of(k), cyclic_index(k + 2, 3), 3));
    return {BitVector::concat(segments), Rational(1)};
  }

  BitVector decode(int user, const Transmission& x, const AccessibleCaches& caches,
                   const DemandVector& d, std::size_t F) const override {
    check_file_size(F);
    const std::size_t part = F / 3;
    auto segment = [&](int k) { return x.payload.slice(static_cast<std::size_t>(k - 1) * part, part); };
    const int wanted = d.of(user);

    std::vector<BitVector> pieces(3);
    pieces[cyclic_index(user + 2, 3) - 1] = segment(user);
    for (int j : caches.indices()) {
      // The segment holding subfile j was sent for user <j+1>.
      const int sender = cyclic_index(j + 1, 3);
      const int known_file = d.of(sender);
      const BitVector& z = caches.cache(j);
      const BitVector sum12 = z.slice(0, part);
      const BitVector sum23 = z.slice(part, part);
      BitVector w[3];
      w[known_file - 1] = segment(sender);
      switch (known_file) {
        case 1:
          w[1] = sum12 ^ w[0];
          w[2] = sum23 ^ w[1];
          break;
        case 2:
          w[0] = sum12 ^ w[1];
          w[2] = sum23 ^ w[1];
          break;
        default:
          w[1] = sum23 ^ w[2];
          w[0] = sum12 ^ w[1];
          break;
      }
      pieces[j - 1] = w[wanted - 1];
    }
    return BitVector::concat(pieces);
  }
};

class UncachedBroadcast final : public Scheme {
 public:
  explicit UncachedBroadcast(MaccParams params) : params_(params) {}

  std::string id() const override { return "zero-memory"; }
  MaccParams params() const override { return params_; }
  Rational memory() const override { return Rational(0); }
  int subpacketization() const override { return 1; }

  CacheContents place(const FileLibrary& lib) const override {
    return CacheContents(params_, Rational(0), lib.file_bits(), std::vector<BitVector>(params_.K));
  }

  Transmission deliver(const FileLibrary& lib, const DemandVector& d) const override {
    require_demand(params_, d);
    const std::vector<int> sent = distinct(d);
    std::vector<BitVector> parts;
    for (int n : sent) parts.push_back(lib.file(n));
    return {BitVector::concat(parts), Rational(static_cast<std::int64_t>(sent.size()))};
  }

  BitVector decode(int user, const Transmission& x, const AccessibleCaches&, const DemandVector& d,
                   std::size_t F) const override {
    const std::vector<int> sent = distinct(d);
    const auto pos = std::lower_bound(sent.begin(), sent.end(), d.of(user)) - sent.begin();
    return x.payload.slice(static_cast<std::size_t>(pos) * F, F);
  }

 private:
  static std::vector<int> distinct(const DemandVector& d) {
    std::vector<int> files = d.files;
    std::sort(files.begin(), files.end());
    files.erase(std::unique(files.begin(), files.end()), files.end());
    return files;
  }

  MaccParams params_;
};

class PairwiseCorner323 final : public Scheme {
 public:
  std::string id() const override { return "corner-323"; }
  MaccParams params() const override { return kParams323; }
  Rational memory() const override { return Rational(3, 2); }
  int subpacketization() const override { return 2; }

  // Z_1 = (A_1,A_2,A_3), Z_2 = (B_1,B_2,B_3), Z_3 = (A_n + B_n)_n.
  CacheContents place(const FileLibrary& lib) const override {
    check_file_size(lib.file_bits());
    std::vector<BitVector> a, b, ab;
    for (int n = 1; n <= 3; ++n) {
      a.push_back(lib.subfile(n, 1, 2));
      b.push_back(lib.subfile(n, 2, 2));
      ab.push_back(a.back() ^ b.back());
    }
    std::vector<BitVector> caches{BitVector::concat(a), BitVector::concat(b), BitVector::concat(ab)};
    return CacheContents(kParams323, memory(), lib.file_bits(), std::move(caches));
  }

  Transmission deliver(const FileLibrary& lib, const DemandVector& d) const override {
    check_file_size(lib.file_bits());
    require_demand(kParams323, d);
    return {BitVector(), Rational(0)};
  }

  BitVector decode(int user, const Transmission&, const AccessibleCaches& caches,
                   const DemandVector& d, std::size_t F) const override {
    check_file_size(F);
    const std::size_t half = F / 2;
    const std::size_t offset = static_cast<std::size_t>(d.of(user) - 1) * half;
    BitVector piece[3];
    bool have[3] = {false, false, false};
    for (int k : caches.indices()) {
      piece[k - 1] = caches.cache(k).slice(offset, half);
      have[k - 1] = true;
    }
    if (!have[0]) piece[0] = piece[1] ^ piece[2];
    if (!have[1]) piece[1] = piece[0] ^ piece[2];
    return BitVector::concat({piece[0], piece[1]});
  }
};

}  // namespace

std::unique_ptr<Scheme> scheme_coded_placement_323() { return std::make_unique<CodedPlacement323>(); }

std::unique_ptr<Scheme> scheme_zero_memory(const MaccParams& params) {
  return std::make_unique<UncachedBroadcast>(params);
}

std::unique_ptr<Scheme> scheme_full_access_corner_323() {
  return std::make_unique<PairwiseCorner323>();
}

std::unique_ptr<Scheme> make_scheme(const std::string& id, const MaccParams& params) {
  if (id == "appendix-b") return scheme_coded_placement_323();
  if (id == "zero-memory") return scheme_zero_memory(params);
  if (id == "corner-323") return scheme_full_access_corner_323();
  return nullptr;
}

std::vector<std::string> registered_schemes() { return {"appendix-b", "corner-323", "zero-memory"}; }

}  // namespace macc::sim
