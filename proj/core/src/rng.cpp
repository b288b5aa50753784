#include "resroc/rng.hpp"

namespace resroc {

namespace {

// Philox4x32 round constants.
constexpr std::uint32_t kMul0 = 0xD2511F53u;
constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

inline void philox_round(std::array<std::uint32_t, 4>& ctr,
                         const std::array<std::uint32_t, 2>& key) {
  const std::uint64_t prod0 = static_cast<std::uint64_t>(kMul0) * ctr[0];
  const std::uint64_t prod1 = static_cast<std::uint64_t>(kMul1) * ctr[2];
  const std::uint32_t hi0 = static_cast<std::uint32_t>(prod0 >> 32);
  const std::uint32_t lo0 = static_cast<std::uint32_t>(prod0);
  const std::uint32_t hi1 = static_cast<std::uint32_t>(prod1 >> 32);
  const std::uint32_t lo1 = static_cast<std::uint32_t>(prod1);
  ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
}

std::array<std::uint32_t, 4> philox10(std::array<std::uint32_t, 4> ctr,
                                      std::array<std::uint32_t, 2> key) {
  philox_round(ctr, key);
  for (int r = 1; r < 10; ++r) {
    key[0] += kWeyl0;
    key[1] += kWeyl1;
    philox_round(ctr, key);
  }
  return ctr;
}

}  // namespace

RngStream::RngStream(std::uint64_t seed, std::uint32_t cell_index,
                     std::uint32_t replication)
    : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)},
      cell_(cell_index),
      replication_(replication) {}

void RngStream::refill() {
  // Counter words: 64-bit block index | replication | cell. Distinct
  // (cell, replication) pairs therefore never produce the same counter.
  const std::array<std::uint32_t, 4> ctr = {
      static_cast<std::uint32_t>(block_index_),
      static_cast<std::uint32_t>(block_index_ >> 32), replication_, cell_};
  block_ = philox10(ctr, key_);
  ++block_index_;
  cursor_ = 0;
}

std::uint64_t RngStream::next_u64() {
  if (cursor_ >= 4) refill();
  const std::uint64_t hi = block_[cursor_];
  const std::uint64_t lo = block_[cursor_ + 1];
  cursor_ += 2;
  return (hi << 32) | lo;
}

double RngStream::next_uniform() {
  return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

RngStream rng_stream(std::uint64_t seed, std::uint32_t cell_index,
                     std::uint32_t replication) {
  return RngStream(seed, cell_index, replication);
}

std::array<std::uint32_t, 4> philox4x32_10(std::array<std::uint32_t, 4> counter,
                                           std::array<std::uint32_t, 2> key) {
  return philox10(counter, key);
}

}  // namespace resroc
