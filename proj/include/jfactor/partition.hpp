#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace jfactor {

// Ordered decomposition n = n_1 + ... + n_tau with the dominance condition
// n_k >= m_k := n_{k+1} + ... + n_tau for every k < tau. Immutable after
// construction; validation happens in the named constructors.
class Partition {
 public:
  // Validates the parts in the given order (dominance is order-sensitive).
  static Partition from_parts(std::vector<std::int64_t> parts);

  // Parts read off the base-p digits of n, most significant first; zero
  // digits are dropped. Positional notation guarantees dominance.
  static Partition from_base(std::int64_t n, std::int64_t base);

  // Parses the canonical textual form "n=15;parts=8,4,2,1" (the n= prefix
  // is optional; when present the sum is cross-checked).
  static Partition from_text(const std::string& text);

  std::int64_t n() const { return n_; }
  std::int64_t tau() const { return static_cast<std::int64_t>(parts_.size()); }
  const std::vector<std::int64_t>& parts() const { return parts_; }
  const std::vector<std::int64_t>& suffix_sums() const { return suffix_; }

  // n_k, 1-based.
  std::int64_t part(std::int64_t k) const { return parts_.at(static_cast<std::size_t>(k - 1)); }

  // m_k for 0 <= k <= tau, with m_0 = n and m_tau = 0.
  std::int64_t m(std::int64_t k) const;

  std::string to_text() const;

  bool operator==(const Partition&) const = default;

 private:
  explicit Partition(std::vector<std::int64_t> parts);

  std::vector<std::int64_t> parts_;
  std::vector<std::int64_t> suffix_;  // m_1 .. m_{tau-1}
  std::int64_t n_ = 0;
};

}  // namespace jfactor
