#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "horn/fillings.hpp"
#include "horn/reduction.hpp"

using namespace horn;

namespace {

IndexSet iset(std::vector<int> v, int n) { return IndexSet(std::move(v), n); }

HornTriple diag(std::vector<int> v, int n) {
  IndexSet s(std::move(v), n);
  return HornTriple(n, s, s, s);
}

}  // namespace

TEST_CASE("witnesses for ({1},{n},{n})") {
  for (int n = 2; n <= 6; ++n) {
    const HornTriple t(n, iset({1}, n), iset({n}, n), iset({n}, n));
    const auto wits = reduction_witnesses(t);
    REQUIRE(wits.size() == 1);
    CHECK(wits[0] == ReductionWitness{1, 0, 0});
  }
}

TEST_CASE("irreducible families have no witnesses") {
  CHECK(reduction_witnesses(diag({2, 4, 6}, 6)).empty());
  for (int r = 1; r <= 5; ++r) {
    std::vector<int> all(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) all[static_cast<std::size_t>(i)] = i + 1;
    CHECK(reduction_witnesses(diag(all, r)).empty());
  }
  for (int m = 1; m <= 5; ++m)
    for (int l = 1; l <= m; ++l) CHECK(is_irreducible(diag({m, m + l, 2 * m + l}, 2 * m + l)));
}

TEST_CASE("reduce examples") {
  const HornTriple t(3, iset({2}, 3), iset({2}, 3), iset({3}, 3));
  const HornTriple down = reduce(t, {1, 0, 0});
  CHECK(down == HornTriple(2, iset({2}, 2), iset({1}, 2), iset({2}, 2)));
  CHECK(down.I.sum() + down.J.sum() + down.K.sum() == 5);  // stays in the tilde sum set

  for (int n = 3; n <= 6; ++n) {
    const HornTriple s(n, iset({1}, n), iset({n}, n), iset({n}, n));
    CHECK(reduce(s, {1, 0, 0}) ==
          HornTriple(n - 1, iset({1}, n - 1), iset({n - 1}, n - 1), iset({n - 1}, n - 1)));
  }

  CHECK_THROWS_AS(reduce(diag({2, 4, 6}, 6), ReductionWitness{1, 1, 1}), std::invalid_argument);
}

TEST_CASE("reduce with witness (r,0,0) shifts J and K only") {
  TripleCache cache;
  for (const auto& t : *enumerate_t(5, 2, Variant::tilde, cache)) {
    const ReductionWitness wit{2, 0, 0};
    if (!is_valid_reduction(t, wit)) continue;
    const auto down = reduce(t, wit);
    CHECK(down.I == iset(t.I.elements(), 4));
    for (int l = 1; l <= 2; ++l) {
      CHECK(down.J.entry(l) == t.J.entry(l) - 1);
      CHECK(down.K.entry(l) == t.K.entry(l) - 1);
    }
  }
}

TEST_CASE("inflate examples and inverse property") {
  CHECK(inflate(HornTriple(2, iset({2}, 2), iset({1}, 2), iset({2}, 2)), {1, 0, 0}) ==
        HornTriple(3, iset({2}, 3), iset({2}, 3), iset({3}, 3)));
  CHECK(inflate(diag({1}, 1), {1, 0, 0}) ==
        HornTriple(2, iset({1}, 2), iset({2}, 2), iset({2}, 2)));
  CHECK_THROWS_AS(inflate(diag({1, 2}, 2), {2, 2, 0}), std::invalid_argument);

  TripleCache cache;
  for (int n = 2; n <= 7; ++n)
    for (int r = 1; r <= std::min(n, 4); ++r)
      for (const auto& t : *enumerate_t(n, r, Variant::tilde, cache))
        for (const auto& wit : reduction_witnesses(t))
          CHECK(inflate(reduce(t, wit), wit) == t);
}

TEST_CASE("reduction preserves membership and the LR coefficient") {
  TripleCache cache;
  for (int n = 2; n <= 6; ++n)
    for (int r = 1; r <= std::min(n, 4); ++r) {
      const auto set = enumerate_t(n, r, Variant::tilde, cache);
      const auto below = enumerate_t(n - 1 >= r ? n - 1 : r, r, Variant::tilde, cache);
      for (const auto& t : *set)
        for (const auto& wit : reduction_witnesses(t)) {
          const auto down = reduce(t, wit);
          REQUIRE(down.n >= r);
          CHECK(contains_triple(*enumerate_t(down.n, r, Variant::tilde, cache), down));
          CHECK(lr_of_triple(down) == lr_of_triple(t));
        }
      (void)below;
    }
}

TEST_CASE("irreducible triples with r >= 2 end at n") {
  TripleCache cache;
  for (int n = 2; n <= 7; ++n)
    for (int r = 2; r <= std::min(n, 4); ++r)
      for (const auto& t : *enumerate_t(n, r, Variant::tilde, cache))
        if (is_irreducible(t)) {
          CHECK(t.I.entry(r) == n);
          CHECK(t.J.entry(r) == n);
          CHECK(t.K.entry(r) == n);
        }
}

TEST_CASE("gap conditions are automatic once the top entries equal n") {
  TripleCache cache;
  for (int n = 2; n <= 7; ++n)
    for (int r = 2; r <= std::min(n, 4); ++r)
      for (const auto& t : *enumerate_t(n, r, Variant::tilde, cache)) {
        if (t.I.entry(r) != n || t.J.entry(r) != n || t.K.entry(r) != n) continue;
        CHECK(reduction_witnesses(t) == reduction_witnesses_sum_only(t));
      }
}

TEST_CASE("irreducibility criterion agrees on members") {
  TripleCache cache;
  for (int n = 2; n <= 7; ++n)
    for (int r = 1; r <= std::min(n, 4); ++r)
      for (const auto& t : *enumerate_t(n, r, Variant::tilde, cache))
        CHECK(is_irreducible(t) == irreducible_criterion(t));
}

TEST_CASE("only diagonal triples are irreducible for r=1,2") {
  TripleCache cache;
  for (int n = 1; n <= 10; ++n)
    for (int r = 1; r <= std::min(n, 2); ++r)
      for (const auto& t : *enumerate_t(n, r, Variant::tilde, cache)) {
        if (n == r) {
          CHECK(is_irreducible(t));
        } else {
          CHECK_FALSE(is_irreducible(t));
        }
      }
}

TEST_CASE("irreducible r=3 triples are exactly the closed-form family") {
  TripleCache cache;
  for (int n = 3; n <= 9; ++n) {
    std::set<HornTriple> found;
    for (const auto& t : *enumerate_t(n, 3, Variant::tilde, cache))
      if (is_irreducible(t)) found.insert(t);
    const auto family = irreducible_r3_family(n);
    CHECK(found == std::set<HornTriple>(family.begin(), family.end()));
  }
  CHECK(irreducible_r3_family(3) == std::vector<HornTriple>{diag({1, 2, 3}, 3)});
  CHECK(irreducible_r3_family(4).empty());
  CHECK(irreducible_r3_family(6) == std::vector<HornTriple>{diag({2, 4, 6}, 6)});
}

TEST_CASE("LR values on the irreducible r=3 family") {
  for (int n = 3; n <= 25; ++n)
    for (const auto& t : irreducible_r3_family(n)) {
      const int m = t.I.entry(1);
      const int l = t.I.entry(2) - m;
      CHECK(lr_of_triple(t) == l);
    }
}

TEST_CASE("reduction chains") {
  TripleCache cache;
  CHECK(reduce_to_irreducible(diag({2, 4, 6}, 6), cache).steps.empty());

  for (int n = 2; n <= 7; ++n) {
    const HornTriple t(n, iset({1}, n), iset({n}, n), iset({n}, n));
    const auto chain = reduce_to_irreducible(t, cache);
    CHECK(chain.steps.size() == static_cast<std::size_t>(n - 1));
    CHECK(chain.end() == diag({1}, 1));
  }

  // every chain step drops n by one and lands back in the tilde set
  for (int n = 3; n <= 6; ++n)
    for (int r = 1; r <= std::min(n, 3); ++r)
      for (const auto& t : *enumerate_t(n, r, Variant::tilde, cache)) {
        const auto chain = reduce_to_irreducible(t, cache);
        int cur = n;
        for (const auto& step : chain.steps) {
          CHECK(step.result.n == cur - 1);
          cur = step.result.n;
        }
        CHECK(is_irreducible(chain.end()));
        CHECK(lr_of_triple(chain.end()) == lr_of_triple(t));
      }
}

TEST_CASE("LR-minimal r=3 chains end in the odd closed-form family") {
  TripleCache cache;
  for (int n = 3; n <= 7; ++n)
    for (const auto& t : *enumerate_t(n, 3, Variant::tilde, cache)) {
      if (lr_of_triple(t) != 1) continue;
      const auto end = reduce_to_irreducible(t, cache).end();
      const int m = end.I.entry(1);
      CHECK(end == diag({m, m + 1, 2 * m + 1}, 2 * m + 1));
    }
}

TEST_CASE("lr_minimal_irreducible closed forms for small r") {
  TripleCache cache;
  CHECK(lr_minimal_irreducible(5, 4, cache).empty());
  CHECK(lr_minimal_irreducible(4, 4, cache) == std::vector<HornTriple>{diag({1, 2, 3, 4}, 4)});
  for (int m = 1; m <= 4; ++m) {
    const int n = 2 * m + 1;
    CHECK(lr_minimal_irreducible(n, 3, cache) ==
          std::vector<HornTriple>{diag({m, m + 1, n}, n)});
    if (n + 1 <= 10) CHECK(lr_minimal_irreducible(n + 1, 3, cache).empty());
  }
}
