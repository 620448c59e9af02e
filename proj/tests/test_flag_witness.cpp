#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>

#include "horn/fillings.hpp"
#include "horn/witness.hpp"

using namespace horn;

namespace {

HornTriple diag(std::vector<int> v, int n) {
  IndexSet s(std::move(v), n);
  return HornTriple(n, s, s, s);
}

Subspace random_inside(const Subspace& w, int dim, std::mt19937_64& rng) {
  for (;;) {
    const Subspace s = Subspace::span(random_int_matrix(dim, w.dim(), rng) * w.basis());
    if (s.dim() == dim) return s;
  }
}

}  // namespace

TEST_CASE("flag levels and random flags") {
  std::mt19937_64 rng(21);
  const Subspace w = Subspace::full(6);
  const Flag fl = Flag::random(w, rng);
  CHECK(fl.level(0).dim() == 0);
  CHECK(fl.level(6) == w);
  for (int d = 1; d <= 6; ++d) {
    CHECK(fl.level(d).dim() == d);
    CHECK(fl.level(d).contains(fl.level(d - 1)));
  }
}

TEST_CASE("refine_superflag") {
  std::mt19937_64 rng(22);
  const Subspace w = Subspace::full(6);
  const Flag fl = Flag::random(w, rng);

  // a flag refines to itself level by level
  std::vector<Subspace> chain;
  for (int c = 0; c <= 6; ++c) chain.push_back(fl.level(c));
  const Flag again = refine_superflag(chain, w);
  for (int c = 0; c <= 6; ++c) CHECK(again.level(c) == fl.level(c));

  // constant full chain admits any completion
  std::vector<Subspace> full_chain(7, w);
  full_chain[0] = Subspace::zero(6);  // still a superflag: dims 0,6,6,...
  const Flag completed = refine_superflag(full_chain, w);
  for (int c = 0; c <= 6; ++c) CHECK(completed.level(c).dim() == c);

  // random superflag: pad a random flag's levels upward
  for (int rep = 0; rep < 10; ++rep) {
    const Flag base = Flag::random(w, rng);
    std::vector<Subspace> super;
    for (int c = 0; c <= 6; ++c) {
      const int extra = static_cast<int>(rng() % 2);
      super.push_back(extend_within(base.level(c), w, std::min(6, c + extra)));
    }
    super[6] = w;
    bool nested = true;
    for (int c = 1; c <= 6; ++c)
      if (!super[static_cast<std::size_t>(c)].contains(super[static_cast<std::size_t>(c) - 1]))
        nested = false;
    if (!nested) continue;  // padding can break nesting; skip those draws
    const Flag refined = refine_superflag(super, w);
    for (int c = 0; c <= 6; ++c) {
      CHECK(refined.level(c).dim() == c);
      CHECK(super[static_cast<std::size_t>(c)].contains(refined.level(c)));
    }
  }

  // dimension deficit and non-nesting are rejected
  std::vector<Subspace> bad(7, w);
  bad[0] = Subspace::zero(6);
  bad[3] = w.prefix(2);
  CHECK_THROWS_AS(refine_superflag(bad, w), std::invalid_argument);
}

TEST_CASE("construct_three base example and branch coverage") {
  std::mt19937_64 rng(23);
  std::map<int, int> branch_hits;

  // all e_i equal to the whole space: the common-core branch
  {
    const Subspace w = Subspace::full(10);
    const auto res = construct_three(w, {w, w, w}, rat(2, 10));
    CHECK(res.branch == 1);
    CHECK(res.p.dim() == 2);
  }

  // the Horn-style instance: beta = 2/n, trace(e_i) = (m+1)/n, n = 2m+1
  for (int m = 2; m <= 4; ++m) {
    const int n = 2 * m + 1;
    for (int rep = 0; rep < 12; ++rep) {
      const Subspace w = Subspace::full(n);
      std::array<Subspace, 3> e;
      for (auto& s : e) s = random_inside(w, m + 1, rng);
      const auto res = construct_three(w, e, rat(2, n));
      ++branch_hits[res.branch];
      CHECK(res.p.dim() <= 3);  // dim bound 3*bn/2 with bn = 2
      for (const auto& s : e) CHECK(meet(res.p, s).dim() >= 2);
    }
  }

  // a shared core starves the pairwise meets: below beta*nw it forces the
  // idempotent-transport branch, at or above it the common-meet branch
  for (int rep = 0; rep < 30; ++rep) {
    const int nw = 20;
    const Subspace w = Subspace::full(nw);
    const Rat beta = rat(2, 5);
    const int top = 13;  // trace 13/20 >= 1/2 + beta/4 = 0.6
    const Subspace shared = random_subspace(nw, 5 + static_cast<int>(rng() % 6), rng);
    std::array<Subspace, 3> e;
    for (auto& s : e) {
      do {
        s = join(shared, random_subspace(nw, top - shared.dim(), rng));
      } while (s.dim() != top);
    }
    const auto res = construct_three(w, e, beta);
    ++branch_hits[res.branch];
    CHECK(2 * res.p.dim() <= 3 * 8);  // beta * nw = 8
    for (const auto& s : e) CHECK(meet(res.p, s).dim() >= 8);
  }

  INFO("branch hits: 1->", branch_hits[1], " 2->", branch_hits[2], " 3->", branch_hits[3]);
  CHECK(branch_hits[1] > 0);
  CHECK(branch_hits[2] > 0);
  CHECK(branch_hits[3] > 0);
}

TEST_CASE("construct_three rejects bad input") {
  const Subspace w = Subspace::full(10);
  CHECK_THROWS_AS(construct_three(w, {w, w, w}, rat(1, 2)), std::invalid_argument);
  CHECK_THROWS_AS(construct_three(w, {w, w, w}, rat(1, 10)), std::invalid_argument);  // odd
  CHECK_THROWS_AS(construct_three(w, {w, w, w}, rat(1, 3)), std::invalid_argument);   // not integral
  std::mt19937_64 rng(24);
  const Subspace small = random_inside(w, 3, rng);
  CHECK_THROWS_AS(construct_three(w, {small, w, w}, rat(2, 10)), std::invalid_argument);
}

TEST_CASE("almost invariant subspaces") {
  std::mt19937_64 rng(25);
  for (int rep = 0; rep < 15; ++rep) {
    const int n = 6 + static_cast<int>(rng() % 4);
    const RatMatrix x = random_int_matrix(n, n, rng);
    const Subspace dom = domain(x);
    if (dom.dim() < 3) continue;
    const int t_dim = dom.dim() / 2;
    const int eps_dim = 1 + static_cast<int>(rng() % 2);
    const auto [p, q] = almost_invariant(x, t_dim, eps_dim);
    CHECK(p.dim() == t_dim);
    CHECK(q.dim() <= eps_dim);
    CHECK(dom.contains(p));
    CHECK(dom.contains(q));
    CHECK(join(p, q).contains(sharp(x, p)));
  }

  // identity map: the image is p itself
  const RatMatrix id = RatMatrix::identity(6);
  const auto [p, q] = almost_invariant(id, 3, 1);
  CHECK(sharp(id, p) == p);
  CHECK(join(p, q).contains(p));

  // projection matrix input
  std::mt19937_64 rng2(26);
  const Subspace s = random_subspace(8, 5, rng2);
  const RatMatrix pm = projection_matrix(s);
  const auto [pp, qq] = almost_invariant(pm, 2, 1);
  CHECK(pp.dim() == 2);
  CHECK(join(pp, qq).contains(sharp(pm, pp)));

  CHECK_THROWS_AS(almost_invariant(id, 7, 1), std::invalid_argument);
  CHECK_THROWS_AS(almost_invariant(id, 3, 0), std::invalid_argument);
}

TEST_CASE("verify_pn basics") {
  TripleCache cache;
  std::mt19937_64 rng(27);
  const HornTriple t = diag({1, 2}, 2);
  const Subspace w = Subspace::full(4);
  const Flag e = Flag::random(w, rng), f = Flag::random(w, rng), g = Flag::random(w, rng);
  // the full space always works for the diagonal triple
  CHECK(verify_pn(w, t, e, f, g, rat(0)).ok());
  // the zero space never does for r >= 1
  CHECK_FALSE(verify_pn(Subspace::zero(4), t, e, f, g, rat(0)).ok());
}

TEST_CASE("witness for the diagonal base cases") {
  TripleCache cache;
  std::mt19937_64 rng(28);
  for (int n = 1; n <= 4; ++n) {
    std::vector<int> all(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = i + 1;
    const HornTriple t = diag(all, n);
    CHECK(min_dimension(t, cache) == n);
    const Subspace w = Subspace::full(2 * n);
    const Flag e = Flag::random(w, rng), f = Flag::random(w, rng), g = Flag::random(w, rng);
    const Subspace p = witness_pn(t, e, f, g, cache);
    CHECK(p == w);
    CHECK(verify_pn(p, t, e, f, g, rat(0)).ok());
  }
}

TEST_CASE("witness for irreducible LR-minimal r=3 triples") {
  TripleCache cache;
  std::mt19937_64 rng(29);
  for (int m : {1, 2, 3}) {
    const int n = 2 * m + 1;
    const HornTriple t = diag({m, m + 1, n}, n);
    const int dim = min_dimension(t, cache);
    CHECK(dim == n);
    const Subspace w = Subspace::full(dim);
    const Flag e = Flag::random(w, rng), f = Flag::random(w, rng), g = Flag::random(w, rng);
    const Subspace p = witness_pn(t, e, f, g, cache);
    const auto report = verify_pn(p, t, e, f, g, rat(0));
    for (const auto& row : report.rows) {
      INFO(row.label, ": ", rat_str(row.value), " vs ", rat_str(row.bound));
      CHECK(row.ok());
    }
    CHECK(p.trace() == rat(3, n));
  }
}

TEST_CASE("witness for r=1 and r=2 chains") {
  TripleCache cache;
  std::mt19937_64 rng(30);
  for (int n = 2; n <= 5; ++n) {
    const HornTriple t(n, IndexSet({1}, n), IndexSet({n}, n), IndexSet({n}, n));
    const Subspace w = Subspace::full(n);
    const Flag e = Flag::random(w, rng), f = Flag::random(w, rng), g = Flag::random(w, rng);
    const Subspace p = witness_pn(t, e, f, g, cache);
    CHECK(verify_pn(p, t, e, f, g, rat(0)).ok());
  }
  for (const auto& t : *enumerate_t(4, 2, Variant::tilde, cache)) {
    const Subspace w = Subspace::full(4);
    const Flag e = Flag::random(w, rng), f = Flag::random(w, rng), g = Flag::random(w, rng);
    const Subspace p = witness_pn(t, e, f, g, cache);
    CHECK(verify_pn(p, t, e, f, g, rat(0)).ok());
  }
}

TEST_CASE("witness for a reducible LR-minimal r=3 triple reached by inflate") {
  TripleCache cache;
  std::mt19937_64 rng(31);
  const HornTriple base = diag({2, 3, 5}, 5);
  const HornTriple lifted = inflate(base, {3, 0, 0});
  CHECK(lifted.n == 6);
  CHECK(contains_triple(*enumerate_t(6, 3, Variant::tilde, cache), lifted));
  CHECK(lr_of_triple(lifted) == 1);
  const int dim = min_dimension(lifted, cache);
  const Subspace w = Subspace::full(dim);
  const Flag e = Flag::random(w, rng), f = Flag::random(w, rng), g = Flag::random(w, rng);
  const Subspace p = witness_pn(lifted, e, f, g, cache);
  CHECK(verify_pn(p, lifted, e, f, g, rat(0)).ok());
  CHECK(p.trace() == rat(3, 6));
}

TEST_CASE("lift_witness composes with an explicit base solver") {
  TripleCache cache;
  std::mt19937_64 rng(33);
  // one lift above the diagonal: ({1,2},{2,3},{2,3}) reduces to ({1,2},{1,2},{1,2})
  const HornTriple t(3, IndexSet({1, 2}, 3), IndexSet({2, 3}, 3), IndexSet({2, 3}, 3));
  const auto wits = reduction_witnesses(t);
  REQUIRE_FALSE(wits.empty());
  const Subspace w = Subspace::full(6);
  const Flag e = Flag::random(w, rng), f = Flag::random(w, rng), g = Flag::random(w, rng);
  const Subspace p = lift_witness(
      t, wits.front(), e, f, g, cache,
      [](const HornTriple& below, const Flag& eb, const Flag& fb, const Flag& gb) {
        return base_witness(below, eb, fb, gb);
      });
  CHECK(verify_pn(p, t, e, f, g, rat(0)).ok());
  CHECK(p.trace() == rat(2, 3));
  CHECK_THROWS_AS(lift_witness(t, ReductionWitness{0, 0, 2}, e, f, g, cache,
                               [](const HornTriple&, const Flag&, const Flag&, const Flag&) {
                                 return Subspace::zero(6);
                               }),
                  std::invalid_argument);
}

TEST_CASE("witness rejects unsupported input") {
  TripleCache cache;
  std::mt19937_64 rng(32);
  const Subspace w = Subspace::full(6);
  const Flag e = Flag::random(w, rng), f = Flag::random(w, rng), g = Flag::random(w, rng);
  CHECK_THROWS_AS(witness_pn(diag({2, 4, 6}, 6), e, f, g, cache),
                  std::invalid_argument);  // LR coefficient 2
  CHECK_THROWS_AS(witness_pn(diag({1, 2, 3}, 6), e, f, g, cache),
                  std::invalid_argument);  // not in the tilde set
  CHECK_THROWS_AS(min_dimension(diag({2, 4, 6}, 6), cache), std::invalid_argument);
}

TEST_CASE("wheel construction") {
  const int n = 12;
  const auto [e, f] = wheel_configuration(n, 2024);
  const auto res = wheel_construction(e, f, rat(1, n));
  CHECK(res.report.ok());
  CHECK(res.p.trace() <= rat(1, 2) + rat(1, n));
  for (int i = 0; i < 3; ++i) {
    CHECK(meet(res.p, e[static_cast<std::size_t>(i)]).trace() >= rat(1, 6));
    CHECK(meet(res.p, f[static_cast<std::size_t>(i)]).trace() >= rat(1, 3));
  }
  // derived fact on valid inputs
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      CHECK(meet(f[static_cast<std::size_t>(i)], f[static_cast<std::size_t>(j)]).trace() ==
            rat(1, 3));
}

TEST_CASE("wheel rejects degenerate configurations") {
  const int n = 12;
  auto [e, f] = wheel_configuration(n, 99);
  auto bad_e = e;
  bad_e[1] = bad_e[0];  // e_2 = e_1 violates e_k ^ (e_i v e_j) = 0
  try {
    wheel_construction(bad_e, f, rat(1, n));
    FAIL("expected a hypothesis failure");
  } catch (const std::invalid_argument& err) {
    CHECK(std::string(err.what()).find("hypothesis failed") != std::string::npos);
  }
  CHECK_THROWS_AS(wheel_construction(e, f, rat(1, 2 * n)), std::invalid_argument);  // eps < 1/N
}
