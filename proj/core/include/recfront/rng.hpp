#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace recfront {

// splitmix64 finalizer; bijective on 64-bit words.
inline std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// Stream seed for replication rep_index: a keyed mix of (master_seed,
// rep_index), never sequential reseeding, so the stream assignment is
// independent of scheduling and worker count.
inline std::uint64_t replication_seed(std::uint64_t master_seed, std::uint64_t rep_index) {
  return mix64(master_seed ^ mix64(rep_index + 0x9E3779B97F4A7C15ull));
}

inline std::mt19937_64 replication_engine(std::uint64_t master_seed, std::uint64_t rep_index) {
  return std::mt19937_64(replication_seed(master_seed, rep_index));
}

// Exp(1) by inverse transform.  u = (r>>11 + 0.5) * 2^-53 lies strictly
// inside (0,1), so draws are finite and strictly positive (generator
// enumeration rejects exact-zero coordinates).
inline double sample_exponential(std::mt19937_64& g) {
  const double u = (static_cast<double>(g() >> 11) + 0.5) * 0x1.0p-53;
  return -std::log(u);
}

}  // namespace recfront
