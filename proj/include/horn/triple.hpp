#pragma once

#include <array>
#include <compare>
#include <string>
#include <string_view>

#include "horn/index_set.hpp"
#include "horn/partition.hpp"

namespace horn {

// Selects between Horn's original recursion and its symmetric reformulation.
enum class Variant { classic, tilde };

std::string_view to_string(Variant v);
Variant variant_from_string(std::string_view s);

// A triple (I,J,K) of r-element subsets of {1,...,n}.
struct HornTriple {
  int n = 0;
  IndexSet I, J, K;

  HornTriple() = default;
  HornTriple(int n, IndexSet I, IndexSet J, IndexSet K);

  int r() const { return I.size(); }

  auto operator<=>(const HornTriple&) const = default;

  std::string str() const;
};

// (rho_r(sigma_n(I)), rho_r(sigma_n(J)), rho_r(K)); injective on triples of
// fixed (n,r). The triple is interpreted in the tilde convention.
PartitionTriple partition_triple(const HornTriple& t);

// All six permutations of (I,J,K), possibly with repeats.
std::array<HornTriple, 6> permutations(const HornTriple& t);

// Canonical representative of the S3 orbit of t: the three index sets sorted
// lexicographically by their element lists.
HornTriple sorted_orbit_rep(const HornTriple& t);

}  // namespace horn
