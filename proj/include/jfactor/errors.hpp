#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace jfactor {

class PartitionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NonPositivePart final : public PartitionError {
 public:
  NonPositivePart(std::int64_t index, std::int64_t value)
      : PartitionError("part " + std::to_string(index) + " is " + std::to_string(value) +
                       ", parts must be positive"),
        index(index),
        value(value) {}

  std::int64_t index;  // 1-based
  std::int64_t value;
};

// n_k < m_k: the offending level k is recorded (1-based).
class DominanceViolation final : public PartitionError {
 public:
  DominanceViolation(std::int64_t level, std::int64_t part, std::int64_t suffix_sum)
      : PartitionError("dominance violated at level " + std::to_string(level) + ": n_k = " +
                       std::to_string(part) + " < m_k = " + std::to_string(suffix_sum)),
        level(level),
        part(part),
        suffix_sum(suffix_sum) {}

  std::int64_t level;
  std::int64_t part;
  std::int64_t suffix_sum;
};

class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotPowerOfTwo final : public std::invalid_argument {
 public:
  NotPowerOfTwo(std::int64_t cluster, std::int64_t size)
      : std::invalid_argument("cluster " + std::to_string(cluster) + " has size " +
                              std::to_string(size) + ", one-peer exponential rounds need powers of two"),
        cluster(cluster),
        size(size) {}

  std::int64_t cluster;  // 1-based
  std::int64_t size;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace jfactor
