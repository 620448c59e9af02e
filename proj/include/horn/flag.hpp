#pragma once

#include <memory>
#include <optional>
#include <random>
#include <vector>

#include "horn/subspace.hpp"

namespace horn {

// A complete flag of a subspace w: an ordered basis of w whose prefixes give
// the chain 0 = V_0 < V_1 < ... < V_dim(w) = w. Level d has relative trace
// d / dim(w).
class Flag {
public:
  Flag() = default;
  Flag(Subspace space, RatMatrix ordered_basis);

  // The flag whose ordered basis is the canonical basis of w.
  static Flag standard(const Subspace& w);

  // Random flag of w: rational change of basis of w with small integer
  // coefficients. Deterministic per rng state.
  static Flag random(const Subspace& w, std::mt19937_64& rng);

  const Subspace& space() const { return space_; }
  int levels() const { return space_.dim(); }
  int ambient() const { return space_.ambient(); }
  const RatMatrix& ordered_basis() const { return basis_; }

  // V_d: the span of the first d basis rows (d = 0 gives the zero subspace).
  // Levels are canonicalized once and memoized.
  Subspace level(int d) const;

private:
  Subspace space_;
  RatMatrix basis_;  // rows: ordered basis of space_
  std::shared_ptr<std::vector<std::optional<Subspace>>> levels_;
};

// Given a nested chain s_0 <= s_1 <= ... <= s_M inside w with dim(s_c) >= c,
// produces a flag e of w with e.level(c) <= s_c for all c, by greedy
// completion along canonical basis rows. Throws on non-nested input or a
// dimension deficit. Requires M = dim(w) and s_M = w.
Flag refine_superflag(const std::vector<Subspace>& chain, const Subspace& w);

}  // namespace horn
