#pragma once

#include <compare>
#include <string>
#include <vector>

#include "horn/enumeration.hpp"
#include "horn/triple.hpp"

namespace horn {

// A position triple (u,v,w) selecting where the index sets are cut.
// Reduction restricts to u+v+w = r; inflation accepts any u,v,w in {0..r}.
struct ReductionWitness {
  int u = 0, v = 0, w = 0;
  auto operator<=>(const ReductionWitness&) const = default;
  std::string str() const;
};

// The four reduction conditions with i_0 = j_0 = k_0 = 0:
//   u = r or i_{u+1} - i_u >= 2   (same for v,w)
//   i_u + j_v + k_w <= n-1
// plus u+v+w = r.
bool is_valid_reduction(const HornTriple& t, const ReductionWitness& wit);

// All valid witnesses, sorted lexicographically by (u,v,w).
std::vector<ReductionWitness> reduction_witnesses(const HornTriple& t);

// Witness search keeping only u+v+w = r and the sum condition, dropping the
// three gap conditions. On triples with i_r = j_r = k_r = n the gaps are
// automatic, so this agrees with reduction_witnesses there.
std::vector<ReductionWitness> reduction_witnesses_sum_only(const HornTriple& t);

// Subtracts 1 from i_p for p > u (and similarly for j, k); ambient n-1.
HornTriple reduce(const HornTriple& t, const ReductionWitness& wit);

// Adds 1 to i_y for y > u (and similarly for j, k); ambient n+1. Requires
// i_u + j_v + k_w <= n; inverse of reduce when the gap conditions hold.
HornTriple inflate(const HornTriple& t, const ReductionWitness& wit);

bool is_irreducible(const HornTriple& t);

// The direct criterion: i_u + j_v + k_w >= n for every u+v+w = r.
// Agrees with is_irreducible on members of the tilde sets.
bool irreducible_criterion(const HornTriple& t);

struct ReductionChain {
  HornTriple start;
  struct Step {
    ReductionWitness witness;
    HornTriple result;
  };
  std::vector<Step> steps;

  const HornTriple& end() const { return steps.empty() ? start : steps.back().result; }
};

// Deterministic chain taking the lexicographically smallest witness at each
// step until an irreducible triple is reached. Every intermediate triple is
// verified to stay in the tilde set; a failure there aborts loudly.
ReductionChain reduce_to_irreducible(const HornTriple& t, TripleCache& cache);

// The irreducible triples of the tilde sets at r = 3 in closed form:
// ({m,m+l,n},{m,m+l,n},{m,m+l,n}) over 1 <= l <= m with 2m+l = n.
std::vector<HornTriple> irreducible_r3_family(int n);

// Orbit representatives (sorted index sets) of the irreducible triples with
// LR coefficient 1 in the tilde set for (n,r), sorted.
std::vector<HornTriple> lr_minimal_irreducible(int n, int r, TripleCache& cache);

}  // namespace horn
