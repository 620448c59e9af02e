#include "horn/subspace.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace horn {

Subspace Subspace::zero(int ambient) {
  if (ambient < 1) throw std::invalid_argument("Subspace: ambient < 1");
  return Subspace(ambient, RatMatrix(0, ambient));
}

Subspace Subspace::full(int ambient) {
  if (ambient < 1) throw std::invalid_argument("Subspace: ambient < 1");
  return Subspace(ambient, RatMatrix::identity(ambient));
}

Subspace Subspace::span(RatMatrix generators) {
  const int ambient = generators.cols();
  if (ambient < 1) throw std::invalid_argument("Subspace::span: ambient < 1");
  const auto pivots = generators.rref();
  RatMatrix basis(static_cast<int>(pivots.size()), ambient);
  for (int i = 0; i < static_cast<int>(pivots.size()); ++i) {
    // canonical form: echelon rows scaled to primitive integer vectors with
    // positive pivots, so stored bases never carry fractions
    mpz_class den_lcm = 1;
    for (int j = 0; j < ambient; ++j) den_lcm = lcm(den_lcm, generators.at(i, j).get_den());
    mpz_class num_gcd = 0;
    for (int j = 0; j < ambient; ++j) num_gcd = gcd(num_gcd, generators.at(i, j).get_num());
    const Rat scale = num_gcd == 0 ? Rat(1) : Rat(den_lcm) / Rat(num_gcd);
    for (int j = 0; j < ambient; ++j) basis.at(i, j) = generators.at(i, j) * scale;
  }
  return Subspace(ambient, std::move(basis));
}

bool Subspace::contains(const RatMatrix& row_vector) const {
  if (row_vector.rows() != 1 || row_vector.cols() != ambient_)
    throw std::invalid_argument("contains: bad vector shape");
  // reduce against the echelon basis; membership iff the remainder vanishes
  RatMatrix v = row_vector;
  for (int i = 0; i < basis_.rows(); ++i) {
    int lead = -1;
    for (int j = 0; j < ambient_; ++j) {
      if (basis_.at(i, j) != 0) {
        lead = j;
        break;
      }
    }
    if (v.at(0, lead) == 0) continue;
    const Rat factor = v.at(0, lead) / basis_.at(i, lead);
    for (int j = lead; j < ambient_; ++j) v.at(0, j) -= factor * basis_.at(i, j);
  }
  return v.is_zero();
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw std::invalid_argument("contains: ambient mismatch");
  if (other.dim() > dim()) return false;
  for (int i = 0; i < other.basis_.rows(); ++i)
    if (!contains(other.basis_.row(i))) return false;
  return true;
}

Subspace Subspace::prefix(int d) const {
  if (d < 0 || d > dim()) throw std::invalid_argument("prefix: dimension out of range");
  RatMatrix rows(d, ambient_);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < ambient_; ++j) rows.at(i, j) = basis_.at(i, j);
  // a row subset of an RREF matrix is already the RREF of its span
  return Subspace(ambient_, std::move(rows));
}

Subspace Subspace::complement() const {
  return Subspace::span(basis_.null_space());
}

std::string Subspace::str() const {
  std::ostringstream os;
  os << "subspace dim " << dim() << " of Q^" << ambient_;
  return os.str();
}

Subspace meet(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient()) throw std::invalid_argument("meet: ambient mismatch");
  const int n = a.ambient();
  const int da = a.dim(), db = b.dim();
  if (da == 0 || db == 0) return Subspace::zero(n);
  // solve y*A = z*B: the left factor of each kernel element of [A^T | -B^T]
  // yields an intersection vector
  RatMatrix stacked(n, da + db);
  for (int i = 0; i < da; ++i)
    for (int j = 0; j < n; ++j) stacked.at(j, i) = a.basis().at(i, j);
  for (int i = 0; i < db; ++i)
    for (int j = 0; j < n; ++j) stacked.at(j, da + i) = -b.basis().at(i, j);
  const RatMatrix ker = stacked.null_space();
  RatMatrix left(ker.rows(), da);
  for (int i = 0; i < ker.rows(); ++i)
    for (int j = 0; j < da; ++j) left.at(i, j) = ker.at(i, j);
  return Subspace::span(left * a.basis());
}

Subspace join(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient()) throw std::invalid_argument("join: ambient mismatch");
  RatMatrix stacked = a.basis();
  if (stacked.rows() == 0) stacked = RatMatrix(0, a.ambient());
  stacked.append_rows(b.basis());
  return Subspace::span(std::move(stacked));
}

Subspace ominus(const Subspace& a, const Subspace& b) {
  if (!a.contains(b)) throw std::invalid_argument("ominus: b not contained in a");
  return meet(a, b.complement());
}

Subspace extend_within(const Subspace& s, const Subspace& w, int d) {
  if (!w.contains(s)) throw std::invalid_argument("extend_within: s not inside w");
  if (d < s.dim() || d > w.dim()) throw std::invalid_argument("extend_within: bad dimension");
  RowAccumulator acc(s);
  for (int i = 0; i < w.dim() && acc.dim() < d; ++i) acc.add(w.basis().row(i));
  if (acc.dim() != d) throw std::logic_error("extend_within: could not reach dimension");
  return acc.span();
}

RowAccumulator::RowAccumulator(int ambient)
    : ambient_(ambient), rows_(0, ambient), echelon_(0, ambient) {}

RowAccumulator::RowAccumulator(const Subspace& start) : RowAccumulator(start.ambient()) {
  for (int i = 0; i < start.dim(); ++i)
    if (!add(start.basis().row(i))) throw std::logic_error("RowAccumulator: dependent start");
}

namespace {

// Reduces v against the echelon rows; returns the first nonzero column of
// the remainder, or -1 when v lies in the span.
int reduce_row(RatMatrix& v, const RatMatrix& echelon, const std::vector<int>& pivots) {
  for (std::size_t p = 0; p < pivots.size(); ++p) {
    const int col = pivots[p];
    if (v.at(0, col) == 0) continue;
    const Rat factor = v.at(0, col) / echelon.at(static_cast<int>(p), col);
    for (int j = 0; j < v.cols(); ++j)
      v.at(0, j) -= factor * echelon.at(static_cast<int>(p), j);
  }
  for (int j = 0; j < v.cols(); ++j)
    if (v.at(0, j) != 0) return j;
  return -1;
}

}  // namespace

bool RowAccumulator::spans(const RatMatrix& row_vector) const {
  RatMatrix v = row_vector;
  return reduce_row(v, echelon_, pivots_) < 0;
}

bool RowAccumulator::add(const RatMatrix& row_vector) {
  if (row_vector.rows() != 1 || row_vector.cols() != ambient_)
    throw std::invalid_argument("RowAccumulator: bad row shape");
  RatMatrix v = row_vector;
  const int lead = reduce_row(v, echelon_, pivots_);
  if (lead < 0) return false;
  // primitive integer scaling with a positive lead keeps the copy small
  mpz_class den_lcm = 1;
  for (int j = 0; j < ambient_; ++j) den_lcm = lcm(den_lcm, v.at(0, j).get_den());
  mpz_class num_gcd = 0;
  for (int j = 0; j < ambient_; ++j) num_gcd = gcd(num_gcd, v.at(0, j).get_num());
  Rat scale = Rat(den_lcm) / Rat(num_gcd);
  if (v.at(0, lead) < 0) scale = -scale;
  for (int j = 0; j < ambient_; ++j) v.at(0, j) *= scale;
  // clear the new pivot column in the resident rows to keep reductions short
  for (int i = 0; i < echelon_.rows(); ++i) {
    if (echelon_.at(i, lead) == 0) continue;
    const Rat factor = echelon_.at(i, lead) / v.at(0, lead);
    for (int j = 0; j < ambient_; ++j) echelon_.at(i, j) -= factor * v.at(0, j);
  }
  echelon_.append_rows(v);
  pivots_.push_back(lead);
  rows_.append_rows(row_vector);
  return true;
}

Subspace RowAccumulator::span() const {
  std::vector<int> order(pivots_.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return pivots_[static_cast<std::size_t>(a)] <
                                       pivots_[static_cast<std::size_t>(b)]; });
  RatMatrix m(static_cast<int>(order.size()), ambient_);
  for (std::size_t i = 0; i < order.size(); ++i)
    for (int j = 0; j < ambient_; ++j) m.at(static_cast<int>(i), j) = echelon_.at(order[i], j);
  return Subspace::span(std::move(m));
}

RatMatrix projection_matrix(const Subspace& s) {
  if (s.dim() == 0) return RatMatrix::zero(s.ambient());
  const RatMatrix b = s.basis();
  const RatMatrix bt = b.transpose();
  const RatMatrix gram = b * bt;           // invertible: rows independent
  return bt * gram.inverse() * b;
}

Subspace random_subspace(int ambient, int dim, std::mt19937_64& rng) {
  if (dim < 0 || dim > ambient) throw std::invalid_argument("random_subspace: bad dim");
  for (;;) {
    RatMatrix gen = random_int_matrix(dim, ambient, rng);
    Subspace s = Subspace::span(std::move(gen));
    if (s.dim() == dim) return s;
  }
}

}  // namespace horn
