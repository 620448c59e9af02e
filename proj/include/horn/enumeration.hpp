#pragma once

#include <map>
#include <memory>
#include <shared_mutex>
#include <tuple>
#include <vector>

#include "horn/triple.hpp"

namespace horn {

// All r-element subsets of {1,...,n} in lexicographic order.
std::vector<std::vector<int>> index_subsets(int n, int r);

// The candidate sets cut out by the sum condition alone:
//   classic: sum(I) + sum(J) = sum(K) + r(r+1)/2
//   tilde:   sum(I) + sum(J) + sum(K) = r(4n-r+3)/2
// Sorted lexicographically by (I,J,K).
std::vector<HornTriple> enumerate_u(int n, int r, Variant v);

// Memo cache for computed triple sets, keyed by (n,r,variant). Reads are
// shared, writes exclusive.
class TripleCache {
public:
  using Set = std::vector<HornTriple>;  // always sorted

  std::shared_ptr<const Set> find(int n, int r, Variant v) const;
  std::shared_ptr<const Set> store(int n, int r, Variant v, Set s);

private:
  mutable std::shared_mutex mu_;
  std::map<std::tuple<int, int, int>, std::shared_ptr<const Set>> sets_;
};

// Horn's set T^n_r (classic) or its symmetric reformulation (tilde),
// computed by the recursive filter over all p < r and (F,G,H) in T^r_p of
// the same variant. Results are memoized in the cache.
std::shared_ptr<const TripleCache::Set> enumerate_t(int n, int r, Variant v, TripleCache& cache);

bool contains_triple(const TripleCache::Set& sorted_set, const HornTriple& t);

// Direct membership test for the tilde sets at r = 3: the thirteen explicit
// conditions (one sum equality, six length-two and six length-one
// inequalities). Throws unless t.r() == 3.
bool in_t3_tilde(const HornTriple& t);

}  // namespace horn
