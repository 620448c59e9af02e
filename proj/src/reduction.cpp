#include "horn/reduction.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "horn/fillings.hpp"

namespace horn {

std::string ReductionWitness::str() const {
  return "(" + std::to_string(u) + "," + std::to_string(v) + "," + std::to_string(w) + ")";
}

namespace {

bool gap_ok(const IndexSet& s, int pos) {
  const int r = s.size();
  if (pos == r) return true;
  return s.entry(pos + 1) - s.entry_or_zero(pos) >= 2;
}

bool in_range(const HornTriple& t, const ReductionWitness& wit) {
  const int r = t.r();
  return wit.u >= 0 && wit.u <= r && wit.v >= 0 && wit.v <= r && wit.w >= 0 && wit.w <= r;
}

long cut_sum(const HornTriple& t, const ReductionWitness& wit) {
  return static_cast<long>(t.I.entry_or_zero(wit.u)) + t.J.entry_or_zero(wit.v) +
         t.K.entry_or_zero(wit.w);
}

IndexSet shift_tail(const IndexSet& s, int pos, int delta, int new_n) {
  std::vector<int> out = s.elements();
  for (int p = pos; p < s.size(); ++p) out[static_cast<std::size_t>(p)] += delta;
  return IndexSet(std::move(out), new_n);
}

}  // namespace

bool is_valid_reduction(const HornTriple& t, const ReductionWitness& wit) {
  if (!in_range(t, wit)) return false;
  if (wit.u + wit.v + wit.w != t.r()) return false;
  if (!gap_ok(t.I, wit.u) || !gap_ok(t.J, wit.v) || !gap_ok(t.K, wit.w)) return false;
  return cut_sum(t, wit) <= t.n - 1;
}

std::vector<ReductionWitness> reduction_witnesses(const HornTriple& t) {
  std::vector<ReductionWitness> out;
  const int r = t.r();
  for (int u = 0; u <= r; ++u)
    for (int v = 0; u + v <= r; ++v) {
      const ReductionWitness wit{u, v, r - u - v};
      if (is_valid_reduction(t, wit)) out.push_back(wit);
    }
  return out;
}

std::vector<ReductionWitness> reduction_witnesses_sum_only(const HornTriple& t) {
  std::vector<ReductionWitness> out;
  const int r = t.r();
  for (int u = 0; u <= r; ++u)
    for (int v = 0; u + v <= r; ++v) {
      const ReductionWitness wit{u, v, r - u - v};
      if (cut_sum(t, wit) <= t.n - 1) out.push_back(wit);
    }
  return out;
}

HornTriple reduce(const HornTriple& t, const ReductionWitness& wit) {
  if (!is_valid_reduction(t, wit))
    throw std::invalid_argument("reduce: invalid witness " + wit.str() + " for " + t.str());
  return HornTriple(t.n - 1, shift_tail(t.I, wit.u, -1, t.n - 1),
                    shift_tail(t.J, wit.v, -1, t.n - 1), shift_tail(t.K, wit.w, -1, t.n - 1));
}

HornTriple inflate(const HornTriple& t, const ReductionWitness& wit) {
  if (!in_range(t, wit)) throw std::invalid_argument("inflate: witness out of range");
  if (cut_sum(t, wit) > t.n)
    throw std::invalid_argument("inflate: i_u + j_v + k_w exceeds n for " + t.str());
  return HornTriple(t.n + 1, shift_tail(t.I, wit.u, +1, t.n + 1),
                    shift_tail(t.J, wit.v, +1, t.n + 1), shift_tail(t.K, wit.w, +1, t.n + 1));
}

bool is_irreducible(const HornTriple& t) {
  return reduction_witnesses(t).empty();
}

bool irreducible_criterion(const HornTriple& t) {
  const int r = t.r();
  for (int u = 0; u <= r; ++u)
    for (int v = 0; u + v <= r; ++v)
      if (cut_sum(t, ReductionWitness{u, v, r - u - v}) < t.n) return false;
  return true;
}

ReductionChain reduce_to_irreducible(const HornTriple& t, TripleCache& cache) {
  ReductionChain chain{t, {}};
  HornTriple cur = t;
  for (;;) {
    auto wits = reduction_witnesses(cur);
    if (wits.empty()) break;
    const ReductionWitness wit = wits.front();  // lexicographically smallest
    HornTriple next = reduce(cur, wit);
    auto set = enumerate_t(next.n, next.r(), Variant::tilde, cache);
    if (!contains_triple(*set, next))
      throw std::runtime_error("reduction left the tilde set: " + cur.str() + " -> " +
                               next.str() + " via " + wit.str());
    chain.steps.push_back({wit, next});
    cur = std::move(next);
  }
  return chain;
}

std::vector<HornTriple> irreducible_r3_family(int n) {
  if (n < 3) throw std::invalid_argument("irreducible_r3_family: n < 3");
  std::vector<HornTriple> out;
  for (int l = 1; l <= n; ++l) {
    if ((n - l) % 2 != 0) continue;
    const int m = (n - l) / 2;
    if (l > m) continue;
    IndexSet s({m, m + l, n}, n);
    out.emplace_back(n, s, s, s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<HornTriple> lr_minimal_irreducible(int n, int r, TripleCache& cache) {
  auto set = enumerate_t(n, r, Variant::tilde, cache);
  std::set<HornTriple> reps;
  for (const HornTriple& t : *set) {
    if (!is_irreducible(t)) continue;
    if (lr_of_triple(t) != 1) continue;
    reps.insert(sorted_orbit_rep(t));
  }
  return std::vector<HornTriple>(reps.begin(), reps.end());
}

}  // namespace horn
