#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

namespace horn {

// Weakly decreasing tuple of nonnegative integers.
class Partition {
public:
  Partition() = default;
  explicit Partition(std::vector<long> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] < 0)
        throw std::invalid_argument("partition part is negative");
      if (i > 0 && parts_[i] > parts_[i - 1])
        throw std::invalid_argument("partition not weakly decreasing");
    }
  }

  int length() const { return static_cast<int>(parts_.size()); }
  long part(int p) const { return parts_.at(static_cast<std::size_t>(p) - 1); }  // 1-based
  const std::vector<long>& parts() const { return parts_; }
  long sum() const;

  auto operator<=>(const Partition&) const = default;

  std::string str() const;

private:
  std::vector<long> parts_;
};

struct PartitionTriple {
  Partition lambda, mu, nu;

  // Common length; throws if the three lengths differ.
  int length() const {
    if (lambda.length() != mu.length() || mu.length() != nu.length())
      throw std::invalid_argument("partition triple with mixed lengths");
    return lambda.length();
  }

  auto operator<=>(const PartitionTriple&) const = default;
  std::string str() const;
};

}  // namespace horn
