#pragma once

#include <compare>
#include <string>
#include <vector>

#include "horn/partition.hpp"

namespace horn {

// Strictly increasing nonempty subset of {1,...,n}, indexed in increasing
// order: I = {i_1 < i_2 < ... < i_r}.
class IndexSet {
public:
  IndexSet() = default;
  IndexSet(std::vector<int> elements, int n);

  int n() const { return n_; }
  int size() const { return static_cast<int>(elements_.size()); }
  int entry(int l) const { return elements_.at(static_cast<std::size_t>(l) - 1); }  // i_l, 1-based
  int entry_or_zero(int l) const { return l == 0 ? 0 : entry(l); }                  // i_0 = 0 convention
  const std::vector<int>& elements() const { return elements_; }
  long sum() const;
  bool contains(int i) const;

  auto operator<=>(const IndexSet&) const = default;

  std::string str() const;

private:
  std::vector<int> elements_;
  int n_ = 0;
};

// sigma_n(I) = {n+1-i : i in I}, re-sorted increasing. Involutive.
IndexSet flip(const IndexSet& I);

// rho_r(I) = (i_r - r, i_{r-1} - (r-1), ..., i_1 - 1). Requires |I| = r.
Partition to_partition(const IndexSet& I, int r);

}  // namespace horn
