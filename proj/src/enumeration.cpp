#include "horn/enumeration.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace horn {

std::vector<std::vector<int>> index_subsets(int n, int r) {
  if (r < 1 || r > n) throw std::invalid_argument("index_subsets: bad (n,r)");
  std::vector<std::vector<int>> out;
  std::vector<int> cur(static_cast<std::size_t>(r));
  std::iota(cur.begin(), cur.end(), 1);
  for (;;) {
    out.push_back(cur);
    // advance to the next combination in lexicographic order
    int pos = r - 1;
    while (pos >= 0 && cur[static_cast<std::size_t>(pos)] == n - (r - 1 - pos)) --pos;
    if (pos < 0) break;
    ++cur[static_cast<std::size_t>(pos)];
    for (int q = pos + 1; q < r; ++q)
      cur[static_cast<std::size_t>(q)] = cur[static_cast<std::size_t>(q) - 1] + 1;
  }
  return out;
}

namespace {

long subset_sum(const std::vector<int>& s) {
  return std::accumulate(s.begin(), s.end(), 0L);
}

// One recursive-filter condition derived from a triple (F,G,H) in T^r_p.
struct Filter {
  std::vector<int> F, G, H;  // positions into I, J, K (1-based)
  long bound = 0;            // p(p+1)/2 (classic) or p(4n-p+3)/2 (tilde)
};

bool passes(const Filter& ft, const HornTriple& t, Variant v) {
  long si = 0, sj = 0, sk = 0;
  for (int f : ft.F) si += t.I.entry(f);
  for (int g : ft.G) sj += t.J.entry(g);
  for (int h : ft.H) sk += t.K.entry(h);
  if (v == Variant::classic) return si + sj <= sk + ft.bound;
  return si + sj + sk >= ft.bound;
}

std::vector<Filter> build_filters(int n, int r, Variant v, TripleCache& cache) {
  std::vector<Filter> filters;
  for (int p = 1; p < r; ++p) {
    auto inner = enumerate_t(r, p, v, cache);
    const long bound =
        v == Variant::classic ? static_cast<long>(p) * (p + 1) / 2
                              : static_cast<long>(p) * (4L * n - p + 3) / 2;
    for (const HornTriple& fgh : *inner)
      filters.push_back(Filter{fgh.I.elements(), fgh.J.elements(), fgh.K.elements(), bound});
  }
  return filters;
}

// Enumerates candidates satisfying the sum condition, bucketing K-subsets by
// their element sum so that each (I,J) pair only scans matching K.
template <typename Visit>
void for_each_u(int n, int r, Variant v, Visit&& visit) {
  const auto subsets = index_subsets(n, r);
  std::unordered_map<long, std::vector<std::size_t>> by_sum;
  std::vector<long> sums(subsets.size());
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    sums[i] = subset_sum(subsets[i]);
    by_sum[sums[i]].push_back(i);
  }
  const long total = v == Variant::tilde ? static_cast<long>(r) * (4L * n - r + 3) / 2 : 0;
  const long offset = static_cast<long>(r) * (r + 1) / 2;
  for (std::size_t a = 0; a < subsets.size(); ++a) {
    for (std::size_t b = 0; b < subsets.size(); ++b) {
      const long want =
          v == Variant::tilde ? total - sums[a] - sums[b] : sums[a] + sums[b] - offset;
      auto it = by_sum.find(want);
      if (it == by_sum.end()) continue;
      for (std::size_t c : it->second) {
        visit(HornTriple(n, IndexSet(subsets[a], n), IndexSet(subsets[b], n),
                         IndexSet(subsets[c], n)));
      }
    }
  }
}

}  // namespace

std::vector<HornTriple> enumerate_u(int n, int r, Variant v) {
  std::vector<HornTriple> out;
  for_each_u(n, r, v, [&](HornTriple t) { out.push_back(std::move(t)); });
  return out;
}

std::shared_ptr<const TripleCache::Set> TripleCache::find(int n, int r, Variant v) const {
  std::shared_lock lock(mu_);
  auto it = sets_.find({n, r, static_cast<int>(v)});
  return it == sets_.end() ? nullptr : it->second;
}

std::shared_ptr<const TripleCache::Set> TripleCache::store(int n, int r, Variant v, Set s) {
  std::unique_lock lock(mu_);
  auto& slot = sets_[{n, r, static_cast<int>(v)}];
  if (!slot) slot = std::make_shared<const Set>(std::move(s));
  return slot;
}

std::shared_ptr<const TripleCache::Set> enumerate_t(int n, int r, Variant v, TripleCache& cache) {
  if (r < 1 || r > n) throw std::invalid_argument("enumerate_t: bad (n,r)");
  if (auto hit = cache.find(n, r, v)) return hit;

  TripleCache::Set out;
  if (r == 1) {
    out = enumerate_u(n, 1, v);
  } else {
    const auto filters = build_filters(n, r, v, cache);
    for_each_u(n, r, v, [&](HornTriple t) {
      for (const Filter& ft : filters)
        if (!passes(ft, t, v)) return;
      out.push_back(std::move(t));
    });
  }
  std::sort(out.begin(), out.end());
  return cache.store(n, r, v, std::move(out));
}

bool contains_triple(const TripleCache::Set& sorted_set, const HornTriple& t) {
  return std::binary_search(sorted_set.begin(), sorted_set.end(), t);
}

bool in_t3_tilde(const HornTriple& t) {
  if (t.r() != 3) throw std::invalid_argument("in_t3_tilde requires r = 3");
  const long n = t.n;
  const auto i = [&](int l) { return static_cast<long>(t.I.entry(l)); };
  const auto j = [&](int l) { return static_cast<long>(t.J.entry(l)); };
  const auto k = [&](int l) { return static_cast<long>(t.K.entry(l)); };
  if (i(1) + i(2) + i(3) + j(1) + j(2) + j(3) + k(1) + k(2) + k(3) != 6 * n) return false;
  const long two = 4 * n + 1;
  if (i(1) + i(2) + j(2) + j(3) + k(2) + k(3) < two) return false;
  if (i(2) + i(3) + j(1) + j(2) + k(2) + k(3) < two) return false;
  if (i(2) + i(3) + j(2) + j(3) + k(1) + k(2) < two) return false;
  if (i(1) + i(3) + j(1) + j(3) + k(2) + k(3) < two) return false;
  if (i(1) + i(3) + j(2) + j(3) + k(1) + k(3) < two) return false;
  if (i(2) + i(3) + j(1) + j(3) + k(1) + k(3) < two) return false;
  const long one = 2 * n + 1;
  if (i(1) + j(3) + k(3) < one) return false;
  if (i(3) + j(1) + k(3) < one) return false;
  if (i(3) + j(3) + k(1) < one) return false;
  if (i(2) + j(2) + k(3) < one) return false;
  if (i(2) + j(3) + k(2) < one) return false;
  if (i(3) + j(2) + k(2) < one) return false;
  return true;
}

}  // namespace horn
