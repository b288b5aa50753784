#pragma once

#include <array>
#include <cstdint>

namespace resroc {

// Counter-based stream (Philox4x32-10). Each (seed, cell, replication)
// triple owns a disjoint counter subspace, so streams never overlap and a
// replication's draws are identical no matter which worker runs it or in
// what order.
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint32_t cell_index, std::uint32_t replication);

  std::uint64_t next_u64();

  // Uniform draw strictly inside (0, 1): 53-bit mantissa centered in its
  // bucket, so 0 and 1 are unreachable.
  double next_uniform();

 private:
  void refill();

  std::array<std::uint32_t, 2> key_;
  std::uint32_t cell_ = 0;
  std::uint32_t replication_ = 0;
  std::uint64_t block_index_ = 0;
  std::array<std::uint32_t, 4> block_{};
  unsigned cursor_ = 4;  // consumed 32-bit words in block_
};

RngStream rng_stream(std::uint64_t seed, std::uint32_t cell_index,
                     std::uint32_t replication);

// Raw 10-round block function behind the stream, exposed so callers can
// check it against the published reference outputs.
std::array<std::uint32_t, 4> philox4x32_10(std::array<std::uint32_t, 4> counter,
                                           std::array<std::uint32_t, 2> key);

}  // namespace resroc
