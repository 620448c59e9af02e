#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "horn/enumeration.hpp"
#include "horn/triple.hpp"

using namespace horn;

namespace {

IndexSet iset(std::vector<int> v, int n) { return IndexSet(std::move(v), n); }

HornTriple diag(std::vector<int> v, int n) {
  IndexSet s(std::move(v), n);
  return HornTriple(n, s, s, s);
}

}  // namespace

TEST_CASE("index set invariants") {
  CHECK_THROWS_AS(iset({}, 3), std::invalid_argument);
  CHECK_THROWS_AS(iset({1, 1}, 3), std::invalid_argument);
  CHECK_THROWS_AS(iset({2, 1}, 3), std::invalid_argument);
  CHECK_THROWS_AS(iset({1, 4}, 3), std::invalid_argument);
  CHECK(iset({1, 3}, 3).sum() == 4);
}

TEST_CASE("flip") {
  CHECK(flip(iset({1, 3, 4, 6}, 6)) == iset({1, 3, 4, 6}, 6));
  CHECK(flip(iset({2}, 3)) == iset({2}, 3));
  // {m, m+l, n} with n = 2m+l maps to {1, m+1, m+l+1}
  for (int m = 1; m <= 6; ++m) {
    for (int l = 1; l <= m; ++l) {
      const int n = 2 * m + l;
      CHECK(flip(iset({m, m + l, n}, n)) == iset({1, m + 1, m + l + 1}, n));
    }
  }
}

TEST_CASE("flip is an involution") {
  for (int n = 1; n <= 7; ++n)
    for (int r = 1; r <= n; ++r)
      for (const auto& s : index_subsets(n, r)) {
        const IndexSet I(s, n);
        CHECK(flip(flip(I)) == I);
      }
}

TEST_CASE("to_partition") {
  CHECK(to_partition(iset({1, 2, 3}, 5), 3) == Partition({0, 0, 0}));
  for (int m = 1; m <= 5; ++m) {
    for (int l = 1; l <= m; ++l) {
      const int n = 2 * m + l;
      CHECK(to_partition(iset({m, m + l, n}, n), 3) ==
            Partition({2 * m + l - 3, m + l - 2, m - 1}));
      CHECK(to_partition(iset({1, m + 1, m + l + 1}, n), 3) ==
            Partition({m + l - 2, m - 1, 0}));
    }
  }
  CHECK_THROWS_AS(to_partition(iset({1, 2}, 3), 3), std::invalid_argument);
}

TEST_CASE("to_partition is injective") {
  for (int n = 1; n <= 7; ++n)
    for (int r = 1; r <= n; ++r) {
      std::set<Partition> seen;
      for (const auto& s : index_subsets(n, r)) seen.insert(to_partition(IndexSet(s, n), r));
      CHECK(seen.size() == index_subsets(n, r).size());
    }
}

TEST_CASE("partition_triple on the r=3 closed-form family") {
  for (int m = 1; m <= 5; ++m)
    for (int l = 1; l <= m; ++l) {
      const int n = 2 * m + l;
      const auto pt = partition_triple(diag({m, m + l, n}, n));
      CHECK(pt.lambda == Partition({m + l - 2, m - 1, 0}));
      CHECK(pt.mu == pt.lambda);
      CHECK(pt.nu == Partition({2 * m + l - 3, m + l - 2, m - 1}));
    }
}

TEST_CASE("partition_triple computed by composing the two maps") {
  const HornTriple t = diag({2, 4, 6}, 6);
  const auto pt = partition_triple(t);
  CHECK(pt.lambda == to_partition(flip(t.I), 3));
  CHECK(pt.lambda == Partition({2, 1, 0}));
  CHECK(pt.mu == Partition({2, 1, 0}));
  CHECK(pt.nu == Partition({3, 2, 1}));
  // zero partitions when n = r
  const auto pt0 = partition_triple(diag({1, 2, 3}, 3));
  CHECK(pt0.lambda == Partition({0, 0, 0}));
  CHECK(pt0.nu == Partition({0, 0, 0}));
}

TEST_CASE("partition_triple is injective per (n,r)") {
  TripleCache cache;
  for (int n = 2; n <= 6; ++n)
    for (int r = 1; r <= n; ++r) {
      std::set<PartitionTriple> seen;
      std::size_t count = 0;
      for (const auto& a : index_subsets(n, r))
        for (const auto& b : index_subsets(n, r))
          for (const auto& c : index_subsets(n, r)) {
            seen.insert(partition_triple(
                HornTriple(n, IndexSet(a, n), IndexSet(b, n), IndexSet(c, n))));
            ++count;
          }
      CHECK(seen.size() == count);
    }
}

TEST_CASE("enumerate_u small cases") {
  const auto u11 = enumerate_u(1, 1, Variant::classic);
  REQUIRE(u11.size() == 1);
  CHECK(u11[0] == diag({1}, 1));

  const auto u31 = enumerate_u(3, 1, Variant::tilde);
  CHECK(u31.size() == 6);
  for (const auto& t : u31) CHECK(t.I.sum() + t.J.sum() + t.K.sum() == 7);

  const auto unn = enumerate_u(5, 5, Variant::tilde);
  REQUIRE(unn.size() == 1);
  CHECK(unn[0] == diag({1, 2, 3, 4, 5}, 5));
}

TEST_CASE("explicit tilde sets at n=3 match the known lists") {
  TripleCache cache;
  const auto t31 = enumerate_t(3, 1, Variant::tilde, cache);
  std::set<HornTriple> expect31;
  for (const auto& t : permutations(HornTriple(3, iset({1}, 3), iset({3}, 3), iset({3}, 3))))
    expect31.insert(t);
  for (const auto& t : permutations(HornTriple(3, iset({2}, 3), iset({2}, 3), iset({3}, 3))))
    expect31.insert(t);
  CHECK(std::set<HornTriple>(t31->begin(), t31->end()) == expect31);
  CHECK(t31->size() == 6);

  const auto t32 = enumerate_t(3, 2, Variant::tilde, cache);
  std::set<HornTriple> expect32;
  for (const auto& t :
       permutations(HornTriple(3, iset({1, 2}, 3), iset({2, 3}, 3), iset({2, 3}, 3))))
    expect32.insert(t);
  for (const auto& t :
       permutations(HornTriple(3, iset({1, 3}, 3), iset({1, 3}, 3), iset({2, 3}, 3))))
    expect32.insert(t);
  CHECK(std::set<HornTriple>(t32->begin(), t32->end()) == expect32);
  CHECK(t32->size() == 6);
}

TEST_CASE("diagonal triple is the whole set at r=n") {
  TripleCache cache;
  for (int n = 1; n <= 6; ++n) {
    for (Variant v : {Variant::classic, Variant::tilde}) {
      const auto set = enumerate_t(n, n, v, cache);
      REQUIRE(set->size() == 1);
      std::vector<int> all(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = i + 1;
      CHECK(set->front() == diag(all, n));
    }
  }
}

TEST_CASE("tilde sets are S3 invariant") {
  TripleCache cache;
  for (int n = 1; n <= 6; ++n)
    for (int r = 1; r <= n; ++r) {
      const auto set = enumerate_t(n, r, Variant::tilde, cache);
      for (const auto& t : *set)
        for (const auto& perm : permutations(t)) CHECK(contains_triple(*set, perm));
    }
}

TEST_CASE("convention bridge between classic and tilde") {
  TripleCache cache;
  for (int n = 1; n <= 6; ++n)
    for (int r = 1; r <= n; ++r) {
      const auto classic = enumerate_t(n, r, Variant::classic, cache);
      const auto tilde = enumerate_t(n, r, Variant::tilde, cache);
      REQUIRE(classic->size() == tilde->size());
      for (const auto& t : *classic)
        CHECK(contains_triple(*tilde, HornTriple(n, flip(t.I), flip(t.J), t.K)));
    }
}

TEST_CASE("direct r=3 membership test agrees with enumeration") {
  TripleCache cache;
  CHECK(in_t3_tilde(diag({1, 2, 3}, 3)));
  for (int m = 1; m <= 4; ++m)
    for (int l = 1; l <= m; ++l) CHECK(in_t3_tilde(diag({m, m + l, 2 * m + l}, 2 * m + l)));
  CHECK_FALSE(in_t3_tilde(HornTriple(4, iset({1, 2, 3}, 4), iset({1, 2, 3}, 4),
                                     iset({1, 2, 3}, 4))));  // sum condition fails
  CHECK_THROWS_AS(in_t3_tilde(diag({1}, 1)), std::invalid_argument);

  for (int n = 3; n <= 10; ++n) {
    const auto set = enumerate_t(n, 3, Variant::tilde, cache);
    long mismatches = 0;
    for (const auto& a : index_subsets(n, 3))
      for (const auto& b : index_subsets(n, 3))
        for (const auto& c : index_subsets(n, 3)) {
          const HornTriple t(n, IndexSet(a, n), IndexSet(b, n), IndexSet(c, n));
          if (in_t3_tilde(t) != contains_triple(*set, t)) ++mismatches;
        }
    CHECK(mismatches == 0);
  }
}

TEST_CASE("cache reuses computed sets") {
  TripleCache cache;
  const auto first = enumerate_t(5, 2, Variant::tilde, cache);
  const auto second = enumerate_t(5, 2, Variant::tilde, cache);
  CHECK(first.get() == second.get());
}
