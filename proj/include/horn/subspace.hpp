#pragma once

#include <random>
#include <string>

#include "horn/rat_matrix.hpp"

namespace horn {

// A linear subspace of Q^N in canonical form: the basis is the reduced row
// echelon form of any generating set, so equal subspaces compare equal. The
// associated orthogonal projection has normalized trace dim/N with respect
// to the standard inner product.
class Subspace {
public:
  Subspace() = default;

  static Subspace zero(int ambient);
  static Subspace full(int ambient);
  // Row space of the given generators.
  static Subspace span(RatMatrix generators);

  int ambient() const { return ambient_; }
  int dim() const { return basis_.rows(); }
  Rat trace() const { return rat(dim(), ambient()); }
  const RatMatrix& basis() const { return basis_; }

  bool contains(const RatMatrix& row_vector) const;
  bool contains(const Subspace& other) const;
  bool operator==(const Subspace& o) const = default;

  // Span of the first d canonical basis rows: the deterministic
  // "sub-projection of dimension d" choice used throughout.
  Subspace prefix(int d) const;

  // Global orthocomplement for the standard inner product.
  Subspace complement() const;

  std::string str() const;

private:
  Subspace(int ambient, RatMatrix canonical_basis)
      : ambient_(ambient), basis_(std::move(canonical_basis)) {}
  int ambient_ = 0;
  RatMatrix basis_;  // RREF, rows = dim, cols = ambient
};

Subspace meet(const Subspace& a, const Subspace& b);
Subspace join(const Subspace& a, const Subspace& b);

// a "minus" b: the orthocomplement of b inside a. Requires b <= a.
Subspace ominus(const Subspace& a, const Subspace& b);

// Grows s inside w to dimension d using canonical rows of w; deterministic.
// Requires s <= w and dim(s) <= d <= dim(w).
Subspace extend_within(const Subspace& s, const Subspace& w, int d);

// Incremental independent-row collector: keeps the originals alongside a
// working echelon copy so each membership test and insertion costs one row
// reduction instead of a fresh elimination.
class RowAccumulator {
public:
  explicit RowAccumulator(int ambient);
  explicit RowAccumulator(const Subspace& start);

  int ambient() const { return ambient_; }
  int dim() const { return rows_.rows(); }
  const RatMatrix& rows() const { return rows_; }

  bool spans(const RatMatrix& row_vector) const;
  // Adds the row if independent; returns whether it was added.
  bool add(const RatMatrix& row_vector);

  // Canonical subspace of the rows collected so far, assembled from the
  // maintained echelon copy (no fresh elimination).
  Subspace span() const;

private:
  int ambient_;
  RatMatrix rows_;     // originals, in insertion order
  RatMatrix echelon_;  // row echelon copy, pivots tracked
  std::vector<int> pivots_;
};

// Orthogonal projection matrix onto s.
RatMatrix projection_matrix(const Subspace& s);

// Random dim-dimensional subspace with small integer generators.
Subspace random_subspace(int ambient, int dim, std::mt19937_64& rng);

}  // namespace horn
