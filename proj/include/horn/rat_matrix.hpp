#pragma once

#include <random>
#include <vector>

#include "horn/rational.hpp"

namespace horn {

// Dense rational matrix. Vectors are columns: a map acts as v -> M v.
class RatMatrix {
public:
  RatMatrix() = default;
  RatMatrix(int rows, int cols);

  static RatMatrix identity(int n);
  static RatMatrix zero(int n) { return RatMatrix(n, n); }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Rat& at(int i, int j) const { return a_[idx(i, j)]; }
  Rat& at(int i, int j) { return a_[idx(i, j)]; }

  RatMatrix transpose() const;
  RatMatrix operator*(const RatMatrix& o) const;
  RatMatrix operator+(const RatMatrix& o) const;
  RatMatrix operator-(const RatMatrix& o) const;
  bool operator==(const RatMatrix& o) const = default;

  bool is_zero() const;

  // In-place reduced row echelon form; returns the pivot column per rank row.
  std::vector<int> rref();

  // Scales each row to a primitive integer vector (first nonzero positive).
  void primitivize_rows();

  int rank() const;

  // Basis of {v : M v = 0}, rows of the returned matrix.
  RatMatrix null_space() const;

  // Gauss-Jordan inverse; throws std::domain_error when singular.
  RatMatrix inverse() const;

  RatMatrix row(int i) const;
  void append_rows(const RatMatrix& o);

  std::string str() const;

private:
  std::size_t idx(int i, int j) const { return static_cast<std::size_t>(i) * cols_ + j; }
  int rows_ = 0, cols_ = 0;
  std::vector<Rat> a_;
};

// Uniform small-integer entries in [-9, 9].
RatMatrix random_int_matrix(int rows, int cols, std::mt19937_64& rng);

RatMatrix random_invertible(int n, std::mt19937_64& rng);

}  // namespace horn
