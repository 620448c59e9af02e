#include "horn/rat_matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace horn {

RatMatrix::RatMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("RatMatrix: negative shape");
  a_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), Rat(0));
}

RatMatrix RatMatrix::identity(int n) {
  RatMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

RatMatrix RatMatrix::operator*(const RatMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("RatMatrix multiply: shape mismatch");
  RatMatrix out(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int k = 0; k < cols_; ++k) {
      const Rat& v = at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < o.cols_; ++j) out.at(i, j) += v * o.at(k, j);
    }
  }
  return out;
}

RatMatrix RatMatrix::operator+(const RatMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("RatMatrix add: shape mismatch");
  RatMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] + o.a_[i];
  return out;
}

RatMatrix RatMatrix::operator-(const RatMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("RatMatrix subtract: shape mismatch");
  RatMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] - o.a_[i];
  return out;
}

bool RatMatrix::is_zero() const {
  for (const Rat& v : a_)
    if (v != 0) return false;
  return true;
}

std::vector<int> RatMatrix::rref() {
  // fraction-free elimination on integer rows; normalization to leading 1
  // happens only at the end. Rows are reduced to primitive form lazily, once
  // their entries outgrow a couple of limbs, so small inputs skip the gcd
  // churn while fat rational inputs stay polynomial.
  const auto primitivize = [&](int i) {
    mpz_class den_lcm = 1;
    for (int j = 0; j < cols_; ++j) den_lcm = lcm(den_lcm, at(i, j).get_den());
    if (den_lcm != 1) {
      const Rat scale(den_lcm);
      for (int j = 0; j < cols_; ++j) at(i, j) *= scale;
    }
    mpz_class g = 0;
    for (int j = 0; j < cols_; ++j) g = gcd(g, at(i, j).get_num());
    if (g > 1) {
      const Rat scale(g);
      for (int j = 0; j < cols_; ++j) at(i, j) /= scale;
    }
  };
  const auto oversized = [&](int i) {
    for (int j = 0; j < cols_; ++j) {
      if (mpz_size(at(i, j).get_num().get_mpz_t()) > 2 ||
          at(i, j).get_den() != 1)
        return true;
    }
    return false;
  };
  for (int i = 0; i < rows_; ++i)
    if (oversized(i)) primitivize(i);

  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < cols_ && row < rows_; ++col) {
    int pivot = -1;
    for (int i = row; i < rows_; ++i) {
      if (at(i, col) != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != row)
      for (int j = 0; j < cols_; ++j) std::swap(at(pivot, j), at(row, j));
    const Rat lead = at(row, col);
    for (int i = 0; i < rows_; ++i) {
      if (i == row || at(i, col) == 0) continue;
      const Rat factor = at(i, col);
      for (int j = 0; j < cols_; ++j) at(i, j) = at(i, j) * lead - at(row, j) * factor;
      if (oversized(i)) primitivize(i);
    }
    pivots.push_back(col);
    ++row;
  }
  for (std::size_t p = 0; p < pivots.size(); ++p) {
    const int i = static_cast<int>(p);
    const Rat inv = Rat(1) / at(i, pivots[p]);
    for (int j = 0; j < cols_; ++j) at(i, j) *= inv;
  }
  return pivots;
}

void RatMatrix::primitivize_rows() {
  for (int i = 0; i < rows_; ++i) {
    mpz_class den_lcm = 1;
    for (int j = 0; j < cols_; ++j) den_lcm = lcm(den_lcm, at(i, j).get_den());
    mpz_class num_gcd = 0;
    for (int j = 0; j < cols_; ++j) num_gcd = gcd(num_gcd, at(i, j).get_num());
    if (num_gcd == 0) continue;
    Rat scale = Rat(den_lcm) / Rat(num_gcd);
    for (int j = 0; j < cols_; ++j) {
      if (at(i, j) != 0) {
        if (at(i, j) < 0) scale = -scale;
        break;
      }
    }
    for (int j = 0; j < cols_; ++j) at(i, j) *= scale;
  }
}

int RatMatrix::rank() const {
  RatMatrix copy = *this;
  return static_cast<int>(copy.rref().size());
}

RatMatrix RatMatrix::null_space() const {
  RatMatrix reduced = *this;
  const std::vector<int> pivots = reduced.rref();
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols_), false);
  for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;
  const int nullity = cols_ - static_cast<int>(pivots.size());
  RatMatrix basis(nullity, cols_);
  int out = 0;
  for (int free_col = 0; free_col < cols_; ++free_col) {
    if (is_pivot[static_cast<std::size_t>(free_col)]) continue;
    basis.at(out, free_col) = 1;
    for (std::size_t p = 0; p < pivots.size(); ++p)
      basis.at(out, pivots[p]) = -reduced.at(static_cast<int>(p), free_col);
    ++out;
  }
  return basis;
}

RatMatrix RatMatrix::inverse() const {
  if (rows_ != cols_) throw std::invalid_argument("inverse of non-square matrix");
  const int n = rows_;
  RatMatrix aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, n + i) = 1;
  }
  const auto pivots = aug.rref();
  if (static_cast<int>(pivots.size()) != n || pivots.back() >= n)
    throw std::domain_error("inverse of singular matrix");
  RatMatrix inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
  return inv;
}

RatMatrix RatMatrix::row(int i) const {
  RatMatrix r(1, cols_);
  for (int j = 0; j < cols_; ++j) r.at(0, j) = at(i, j);
  return r;
}

void RatMatrix::append_rows(const RatMatrix& o) {
  if (o.rows_ == 0) return;
  if (cols_ == 0 && rows_ == 0) cols_ = o.cols_;
  if (o.cols_ != cols_) throw std::invalid_argument("append_rows: column mismatch");
  a_.insert(a_.end(), o.a_.begin(), o.a_.end());
  rows_ += o.rows_;
}

std::string RatMatrix::str() const {
  std::ostringstream os;
  for (int i = 0; i < rows_; ++i) {
    os << (i ? "; " : "[");
    for (int j = 0; j < cols_; ++j) os << (j ? " " : "") << rat_str(at(i, j));
  }
  os << "]";
  return os.str();
}

RatMatrix random_int_matrix(int rows, int cols, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(-9, 9);
  RatMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = d(rng);
  return m;
}

RatMatrix random_invertible(int n, std::mt19937_64& rng) {
  for (;;) {
    RatMatrix m = random_int_matrix(n, n, rng);
    if (m.rank() == n) return m;
  }
}

}  // namespace horn
