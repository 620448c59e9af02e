#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "horn/flag.hpp"
#include "horn/operator_lattice.hpp"
#include "horn/reduction.hpp"
#include "horn/subspace.hpp"

namespace horn {

// One verified trace inequality, kept exact.
struct CheckRow {
  std::string label;
  Rat value;
  Rat bound;
  bool at_least = true;  // value >= bound when true, value <= bound otherwise
  bool ok() const { return at_least ? value >= bound : value <= bound; }
};

struct VerifyReport {
  std::vector<CheckRow> rows;
  bool ok() const {
    for (const auto& row : rows)
      if (!row.ok()) return false;
    return true;
  }
};

// Result of the three-projection construction, with the branch taken:
//   1 - the common meet is already large enough
//   2 - pairwise meets cover the target
//   3 - transport through the complementary idempotents
struct ConstructThree {
  Subspace p;
  int branch = 0;
};

// Given projections e1,e2,e3 <= w with relative trace >= 1/2 + beta/4 and
// 0 < beta <= 2/5 where beta*dim(w) is a positive even integer, builds
// p <= w with trace(p) <= (3/2) beta and trace(p meet e_i) >= beta, all
// relative to w. Postconditions are re-verified exactly.
ConstructThree construct_three(const Subspace& w, const std::array<Subspace, 3>& e, const Rat& beta);

struct AlmostInvariant {
  Subspace p, q;
};

// p, q <= domain(X) with dim p = t_dim, dim q <= eps_dim and
// sharp(X, p) <= p join q. Requires 0 <= t_dim <= dim domain(X) and
// eps_dim >= 1.
AlmostInvariant almost_invariant(const RatMatrix& X, int t_dim, int eps_dim);

// Exact check of the flag conditions for t: relative trace of p at most
// r/n + eps and trace(e.level(i_l d) meet p) >= l/n for the three flags.
// eps = 0 checks the exact form.
VerifyReport verify_pn(const Subspace& p, const HornTriple& t, const Flag& e, const Flag& f,
                       const Flag& g, const Rat& eps);

// For a diagonal triple (n = r) the conditions hold trivially for the whole
// space, whatever the flags.
Subspace base_witness(const HornTriple& t, const Flag& e, const Flag& f, const Flag& g);

// Solves the flag problem one level down, given the reduced triple and the
// three flags of the cut-down space.
using WitnessSolver =
    std::function<Subspace(const HornTriple&, const Flag&, const Flag&, const Flag&)>;

// One lift step: t reduces via wit to a triple at level n-1. Builds the
// trace-(n-1)/n cut-down q above the three flag levels at the witness
// positions, refines the induced superflags to flags of q, and returns the
// solver's projection for the reduced problem, which already satisfies the
// level-n conditions for t. The witness must be valid for t and the reduced
// triple is checked against the tilde set.
Subspace lift_witness(const HornTriple& t, const ReductionWitness& wit, const Flag& e,
                      const Flag& f, const Flag& g, TripleCache& cache,
                      const WitnessSolver& solve_below);

// Witness projection for t against the given flags (all of the same space,
// of dimension divisible by t.n): reduces t to an irreducible triple,
// builds the base witness there, and carries it back up through the
// cut-down construction. Supports diagonal triples, r <= 2 and LR-minimal
// r = 3.
Subspace witness_pn(const HornTriple& t, const Flag& e, const Flag& f, const Flag& g,
                    TripleCache& cache);

// Smallest ambient dimension N = n*d at which every dimension met by the
// witness_pn pipeline for t is integral. Validates that t is supported.
int min_dimension(const HornTriple& t, TripleCache& cache);

struct WheelResult {
  Subspace p;
  VerifyReport report;
};

// The six-spoke construction: given e_i <= f_i with traces 1/3 and 2/3 in
// general position (e_i meet f_j = 0 for i != j, e_k meet (e_i join e_j) = 0),
// builds p with trace(p) <= 1/2 + eps, trace(p meet e_i) >= 1/6 and
// trace(p meet f_i) >= 1/3. eps must be a multiple of 1/N, at least 1/N.
// Violated hypotheses are reported by name.
WheelResult wheel_construction(const std::array<Subspace, 3>& e, const std::array<Subspace, 3>& f,
                               const Rat& eps);

// Deterministic general-position configuration for the wheel at dimension N
// (multiple of 6); retries seeds until the hypotheses hold.
std::pair<std::array<Subspace, 3>, std::array<Subspace, 3>> wheel_configuration(
    int ambient, std::uint64_t seed);

}  // namespace horn
