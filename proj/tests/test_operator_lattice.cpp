#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "horn/operator_lattice.hpp"

using namespace horn;

namespace {

// Random matrix of the given rank: product of random n x r and r x n.
RatMatrix random_of_rank(int n, int r, std::mt19937_64& rng) {
  for (;;) {
    const RatMatrix a = random_int_matrix(n, r, rng);
    const RatMatrix b = random_int_matrix(r, n, rng);
    RatMatrix m = a * b;
    if (m.rank() == r) return m;
  }
}

// Random subspace of w via random integer combinations of its basis.
Subspace random_inside(const Subspace& w, int dim, std::mt19937_64& rng) {
  for (;;) {
    const Subspace s = Subspace::span(random_int_matrix(dim, w.dim(), rng) * w.basis());
    if (s.dim() == dim) return s;
  }
}

}  // namespace

TEST_CASE("kernel, range and sharp basics") {
  std::mt19937_64 rng(11);
  for (int rep = 0; rep < 25; ++rep) {
    const int n = 3 + static_cast<int>(rng() % 5);
    const int r = static_cast<int>(rng() % (static_cast<unsigned>(n) + 1));
    const RatMatrix x = random_of_rank(n, r, rng);
    CHECK(kernel(x).dim() == n - r);
    CHECK(range(x).dim() == r);
    CHECK(domain(x).dim() == r);
    CHECK(sharp(x, Subspace::full(n)) == range(x));
    CHECK(sharp(RatMatrix::zero(n), random_subspace(n, 2, rng)).dim() == 0);
  }
}

TEST_CASE("sharp preserves dimension below the domain and is a lattice map there") {
  std::mt19937_64 rng(12);
  for (int rep = 0; rep < 20; ++rep) {
    const int n = 4 + static_cast<int>(rng() % 5);
    const int r = 2 + static_cast<int>(rng() % (static_cast<unsigned>(n) - 1));
    const RatMatrix x = random_of_rank(n, r, rng);
    const Subspace dom = domain(x);
    const Subspace p = random_inside(dom, std::min(3, dom.dim()), rng);
    const Subspace q = random_inside(dom, std::min(3, dom.dim()), rng);
    CHECK(sharp(x, p).dim() == p.dim());
    CHECK(sharp(x, join(p, q)) == join(sharp(x, p), sharp(x, q)));
    CHECK(sharp(x, meet(p, q)) == meet(sharp(x, p), sharp(x, q)));
  }
}

TEST_CASE("sharp trace law") {
  std::mt19937_64 rng(13);
  for (int rep = 0; rep < 40; ++rep) {
    const int n = 3 + static_cast<int>(rng() % 6);
    const int r = static_cast<int>(rng() % (static_cast<unsigned>(n) + 1));
    const RatMatrix x = random_of_rank(n, r, rng);
    const Subspace p = random_subspace(n, static_cast<int>(rng() % (static_cast<unsigned>(n) + 1)), rng);
    CHECK(sharp(x, p).dim() == p.dim() - meet(p, kernel(x)).dim());
  }
}

TEST_CASE("sharp factors through the domain") {
  // X#(p) = X#(dom - (1-p)^dom)
  std::mt19937_64 rng(19);
  for (int rep = 0; rep < 25; ++rep) {
    const int n = 3 + static_cast<int>(rng() % 6);
    const int r = static_cast<int>(rng() % (static_cast<unsigned>(n) + 1));
    const RatMatrix x = random_of_rank(n, r, rng);
    const Subspace dom = domain(x);
    const Subspace p = random_subspace(n, static_cast<int>(rng() % (static_cast<unsigned>(n) + 1)), rng);
    CHECK(sharp(x, p) == sharp(x, ominus(dom, meet(p.complement(), dom))));
    CHECK(domain(x).dim() == range(x).dim());
  }
}

TEST_CASE("composition law for sharp") {
  std::mt19937_64 rng(14);
  for (int rep = 0; rep < 15; ++rep) {
    const int n = 4 + static_cast<int>(rng() % 4);
    const RatMatrix x = random_of_rank(n, n - 1, rng);
    const RatMatrix z = random_of_rank(n, n - 2, rng);
    const Subspace p = random_subspace(n, 2, rng);
    CHECK(sharp(x * z, p) == sharp(x, sharp(z, p)));
  }
}

TEST_CASE("product range identity") {
  std::mt19937_64 rng(15);
  const Subspace full5 = Subspace::full(5);
  const Subspace p = random_subspace(5, 3, rng);
  CHECK(product_range(p, full5) == p);
  CHECK(product_range(p, p.complement()).dim() == 0);
  for (int rep = 0; rep < 40; ++rep) {
    const int n = 3 + static_cast<int>(rng() % 7);
    const Subspace a = random_subspace(n, static_cast<int>(rng() % (static_cast<unsigned>(n) + 1)), rng);
    const Subspace b = random_subspace(n, static_cast<int>(rng() % (static_cast<unsigned>(n) + 1)), rng);
    CHECK(product_range(a, b) == ominus(a, meet(a, b.complement())));
  }
}

TEST_CASE("partial inverse composition identities") {
  std::mt19937_64 rng(16);
  for (int rep = 0; rep < 30; ++rep) {
    const int n = 3 + static_cast<int>(rng() % 5);
    const int r = static_cast<int>(rng() % (static_cast<unsigned>(n) + 1));
    const RatMatrix x = random_of_rank(n, r, rng);
    const RatMatrix y = partial_inverse(x);
    CHECK(x * y == projection_matrix(range(x)));
    CHECK(y * x == projection_matrix(domain(x)));
  }
  // invertible matrix: plain inverse
  const RatMatrix m = random_invertible(4, rng);
  CHECK(partial_inverse(m) == m.inverse());
  // orthogonal projection: its own partial inverse
  const Subspace p = random_subspace(5, 2, rng);
  const RatMatrix pm = projection_matrix(p);
  CHECK(partial_inverse(pm) == pm);
}

TEST_CASE("complementary idempotents") {
  std::mt19937_64 rng(17);
  for (int rep = 0; rep < 25; ++rep) {
    const int n = 4 + static_cast<int>(rng() % 5);
    const Subspace e1 = random_subspace(n, 1 + static_cast<int>(rng() % 3), rng);
    const Subspace e2 = random_subspace(n, 1 + static_cast<int>(rng() % 3), rng);
    const auto [o1, o2] = complementary_idempotents(e1, e2);
    CHECK(o1 * o1 == o1);
    CHECK(o2 * o2 == o2);
    CHECK(range(o1) == e1);
    CHECK(range(o2) == e2);
    const Subspace z = meet(e1, e2);
    const Subspace top = join(e1, e2);
    CHECK(kernel(o1) == join(top.complement(), ominus(e2, z)));
    CHECK(kernel(o2) == join(top.complement(), ominus(e1, z)));
    CHECK(o1 + o2 == projection_matrix(top) + projection_matrix(z));
    // f below e1 v e2 is covered by its idempotent images and the core part
    const int fd = static_cast<int>(rng() % (static_cast<unsigned>(top.dim()) + 1));
    const Subspace f = random_inside(top, fd, rng);
    const Subspace core = ominus(z, meet(f.complement(), z));
    CHECK(join(join(sharp(o1, f), sharp(o2, f)), core).contains(f));
  }
}

TEST_CASE("idempotents of equal and orthogonal pairs") {
  std::mt19937_64 rng(18);
  const Subspace p = random_subspace(6, 2, rng);
  {
    const auto [o1, o2] = complementary_idempotents(p, p);
    CHECK(o1 == projection_matrix(p));
    CHECK(o1 + o2 == projection_matrix(p) + projection_matrix(p));
  }
  {
    const Subspace q = extend_within(Subspace::zero(6), p.complement(), 2);
    const auto [o1, o2] = complementary_idempotents(p, q);
    CHECK(o1 == projection_matrix(p));  // orthogonal pair: plain projections
    CHECK(o2 == projection_matrix(q));
  }
}
