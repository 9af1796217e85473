#pragma once

#include <array>
#include <cmath>
#include <cstdint>

namespace ricci_lab {

// Philox4x32-10 counter-based generator. Streams are addressed by
// (key = master seed, counter = path index | stream salt | block), so any
// path's noise can be regenerated independently of scheduling order.
struct Philox4x32 {
  static std::array<uint32_t, 4> block(std::array<uint32_t, 4> ctr,
                                       std::array<uint32_t, 2> key) {
    constexpr uint32_t kMul0 = 0xD2511F53u, kMul1 = 0xCD9E8D57u;
    constexpr uint32_t kWeyl0 = 0x9E3779B9u, kWeyl1 = 0xBB67AE85u;
    for (int round = 0; round < 10; ++round) {
      const uint64_t p0 = uint64_t(kMul0) * ctr[0];
      const uint64_t p1 = uint64_t(kMul1) * ctr[2];
      const uint32_t hi0 = uint32_t(p0 >> 32), lo0 = uint32_t(p0);
      const uint32_t hi1 = uint32_t(p1 >> 32), lo1 = uint32_t(p1);
      ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
      key[0] += kWeyl0;
      key[1] += kWeyl1;
    }
    return ctr;
  }
};

// Gaussian stream for one (seed, salt, path) triple. Box-Muller on Philox
// output; two normals per 128-bit block, no rejection, so consumption is
// reproducible draw-for-draw.
class NormalStream {
 public:
  NormalStream(uint64_t seed, uint32_t salt, uint64_t path_index)
      : key_{uint32_t(seed), uint32_t(seed >> 32)},
        base_{uint32_t(path_index), uint32_t(path_index >> 32), salt, 0u} {}

  double next() {
    if (have_cached_) {
      have_cached_ = false;
      return cached_;
    }
    auto out = Philox4x32::block(counter(), key_);
    ++block_;
    const double u1 = to_unit(out[0], out[1]);
    const double u2 = to_unit(out[2], out[3]);
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 6.283185307179586476925286766559 * u2;
    cached_ = r * std::sin(a);
    have_cached_ = true;
    return r * std::cos(a);
  }

  uint64_t blocks_consumed() const { return block_; }

 private:
  std::array<uint32_t, 4> counter() const {
    auto c = base_;
    c[3] = uint32_t(block_);
    // Fold the high block bits into the salt word; paths never get close to
    // 2^32 blocks so this is only a formality.
    c[2] ^= uint32_t(block_ >> 32);
    return c;
  }
  // (0,1) from 53 high bits; never returns 0, so log() is safe.
  static double to_unit(uint32_t hi, uint32_t lo) {
    const uint64_t u = (uint64_t(hi) << 32) | lo;
    return (double((u >> 11)) + 0.5) * 0x1.0p-53;
  }

  std::array<uint32_t, 2> key_;
  std::array<uint32_t, 4> base_;
  uint64_t block_ = 0;
  double cached_ = 0.0;
  bool have_cached_ = false;
};

// FNV-1a, used both for config hashing and the consumed-increment checksums.
inline uint64_t fnv1a64(const void* data, size_t n, uint64_t h = 0xcbf29ce484222325ull) {
  const auto* p = static_cast<const unsigned char*>(data);
  for (size_t i = 0; i < n; ++i) {
    h ^= p[i];
    h *= 0x100000001b3ull;
  }
  return h;
}

inline uint64_t fnv1a64_str(const std::string& s) {
  return fnv1a64(s.data(), s.size());
}

}  // namespace ricci_lab
