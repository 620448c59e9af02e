#pragma once

#include <compare>
#include <functional>
#include <string>
#include <vector>

#include "horn/partition.hpp"
#include "horn/triple.hpp"

namespace horn {

// Lower-triangular matrix of nonnegative integers f_l^k, 1 <= k <= l <= r:
// the number of times k appears in the l-th row of a skew-shape filling.
class FillingMatrix {
public:
  explicit FillingMatrix(int r);

  int r() const { return r_; }
  long at(int l, int k) const { return data_[offset(l, k)]; }
  long& at(int l, int k) { return data_[offset(l, k)]; }

  auto operator<=>(const FillingMatrix&) const = default;

  std::string str() const;

private:
  std::size_t offset(int l, int k) const;
  int r_ = 0;
  std::vector<long> data_;
};

// Direct check of the four filling conditions against (lambda, mu, nu):
//   (e1) row sums:      lambda_l + sum_k f_l^k = nu_l
//   (e2) column sums:   sum_{l>=k} f_l^k = mu_k
//   (e3) row prefixes:  lambda_{l+1} + prefix_{p+1}(row l+1) <= lambda_l + prefix_p(row l)
//   (e4) column slices: sum_{l=k+1}^{p+1} f_l^{k+1} <= sum_{l=k}^{p} f_l^k
bool is_valid_filling(const FillingMatrix& f, const PartitionTriple& pt);

// Visits every solution of (e1)-(e4) in row-major lexicographic order.
// Return false from the visitor to stop early.
void for_each_filling(const PartitionTriple& pt,
                      const std::function<bool(const FillingMatrix&)>& visit);

std::vector<FillingMatrix> enumerate_fillings(const PartitionTriple& pt);

// Number of fillings; throws std::overflow_error rather than wrapping.
long lr_coefficient(const PartitionTriple& pt);

bool lr_positive(const PartitionTriple& pt);

// c^{(n)}(I,J,K) = lr_coefficient(partition_triple(t)); tilde convention.
long lr_of_triple(const HornTriple& t);

// Membership in the partition-side image of the tilde sets:
// sum(lambda)+sum(mu) == sum(nu), nu_1 <= n-r, and positive LR coefficient.
bool lambda_membership(const PartitionTriple& pt, int n);

// Partition-level counterpart of one reduction step: subtracts 1 from the
// first a parts of lambda, the first b of mu and the first a+b of nu.
PartitionTriple reduced_partitions(const PartitionTriple& pt, int a, int b);

// Maps a filling of the reduced shape to one of the original shape:
// increments f_{k+a}^k for 1 <= k <= b. Bijective onto the original filling
// set whenever the reduction hypotheses hold.
FillingMatrix unreduce_filling(const FillingMatrix& ft, int a, int b);

}  // namespace horn
