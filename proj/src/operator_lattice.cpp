#include "horn/operator_lattice.hpp"

#include <stdexcept>

namespace horn {

Subspace kernel(const RatMatrix& X) {
  return Subspace::span(X.null_space());
}

Subspace range(const RatMatrix& X) {
  return Subspace::span(X.transpose());
}

Subspace domain(const RatMatrix& X) {
  return kernel(X).complement();
}

Subspace sharp(const RatMatrix& X, const Subspace& p) {
  if (X.cols() != p.ambient()) throw std::invalid_argument("sharp: shape mismatch");
  return Subspace::span(p.basis() * X.transpose());
}

Subspace product_range(const Subspace& p, const Subspace& q) {
  return sharp(projection_matrix(p), q);
}

RatMatrix partial_inverse(const RatMatrix& X) {
  if (X.rows() != X.cols()) throw std::invalid_argument("partial_inverse: non-square");
  const int n = X.rows();
  const Subspace dom = domain(X);
  const int d = dom.dim();
  // Columns of [X d_1^T ... X d_d^T | basis of range(X)^perp] are a basis of
  // Q^n; Y is determined by Y(X d_i) = d_i and Y = 0 on the complement.
  const RatMatrix images = X * dom.basis().transpose();              // n x d
  const RatMatrix co = range(X).complement().basis().transpose();    // n x (n-d)
  RatMatrix m(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < d; ++j) m.at(i, j) = images.at(i, j);
    for (int j = 0; j < n - d; ++j) m.at(i, d + j) = co.at(i, j);
  }
  RatMatrix targets(n, n);  // [dom basis^T | 0]
  const RatMatrix domt = dom.basis().transpose();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < d; ++j) targets.at(i, j) = domt.at(i, j);
  return targets * m.inverse();
}

std::pair<RatMatrix, RatMatrix> complementary_idempotents(const Subspace& e1, const Subspace& e2,
                                                          const Subspace& w) {
  if (e1.ambient() != e2.ambient() || e1.ambient() != w.ambient())
    throw std::invalid_argument("complementary_idempotents: ambient mismatch");
  if (!w.contains(e1) || !w.contains(e2))
    throw std::invalid_argument("complementary_idempotents: projections not inside ambient");
  const int n = w.ambient();
  const Subspace z = meet(e1, e2);
  const Subspace top = join(e1, e2);
  const Subspace eta = ominus(w, top);
  const Subspace x1 = ominus(e1, z);
  const Subspace x2 = ominus(e2, z);
  const Subspace outside = w.complement();

  RatMatrix cols(0, n);
  cols.append_rows(eta.basis());
  cols.append_rows(x1.basis());
  cols.append_rows(x2.basis());
  cols.append_rows(z.basis());
  cols.append_rows(outside.basis());
  if (cols.rows() != n)
    throw std::logic_error("complementary_idempotents: decomposition is not a basis");
  const RatMatrix s = cols.transpose();  // column basis
  const RatMatrix sinv = s.inverse();

  auto build = [&](int keep_lo, int keep_hi, int z_lo, int z_hi) {
    RatMatrix m(n, n);
    for (int j = keep_lo; j < keep_hi; ++j)
      for (int i = 0; i < n; ++i) m.at(i, j) = s.at(i, j);
    for (int j = z_lo; j < z_hi; ++j)
      for (int i = 0; i < n; ++i) m.at(i, j) = s.at(i, j);
    return m * sinv;
  };
  const int o1 = eta.dim();
  const int o2 = o1 + x1.dim();
  const int o3 = o2 + x2.dim();
  const int o4 = o3 + z.dim();
  return {build(o1, o2, o3, o4), build(o2, o3, o3, o4)};
}

std::pair<RatMatrix, RatMatrix> complementary_idempotents(const Subspace& e1,
                                                          const Subspace& e2) {
  return complementary_idempotents(e1, e2, Subspace::full(e1.ambient()));
}

}  // namespace horn
