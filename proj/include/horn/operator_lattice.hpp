#pragma once

#include <utility>

#include "horn/subspace.hpp"

namespace horn {

// {v : X v = 0}.
Subspace kernel(const RatMatrix& X);

// Column space of X.
Subspace range(const RatMatrix& X);

// Orthocomplement of the kernel; the domain projection of X.
Subspace domain(const RatMatrix& X);

// X^sharp(p): the range of X restricted to p, i.e. X applied to p's basis.
Subspace sharp(const RatMatrix& X, const Subspace& p);

// Column space of P_p * P_q; equals p ominus (p meet q') by the
// two-projection analysis.
Subspace product_range(const Subspace& p, const Subspace& q);

// Y with X*Y = projection onto range(X) and Y*X = projection onto
// domain(X), both orthogonal for the standard inner product.
RatMatrix partial_inverse(const RatMatrix& X);

// The idempotents (E1, E2) of the pair (e1, e2) relative to the ambient
// subspace w: writing h = eta + xi1 + xi2 + zeta with eta in w minus
// (e1 join e2), xi_j in e_j minus (e1 meet e2) and zeta in e1 meet e2,
// E_i(h) = xi_i + zeta. Both operators vanish on the orthocomplement of w.
std::pair<RatMatrix, RatMatrix> complementary_idempotents(const Subspace& e1, const Subspace& e2,
                                                          const Subspace& w);

std::pair<RatMatrix, RatMatrix> complementary_idempotents(const Subspace& e1,
                                                          const Subspace& e2);

}  // namespace horn
