#include "horn/triple.hpp"

#include <algorithm>
#include <stdexcept>

namespace horn {

std::string_view to_string(Variant v) {
  return v == Variant::classic ? "classic" : "tilde";
}

Variant variant_from_string(std::string_view s) {
  if (s == "classic") return Variant::classic;
  if (s == "tilde") return Variant::tilde;
  throw std::invalid_argument("unknown variant: " + std::string(s));
}

HornTriple::HornTriple(int n_, IndexSet I_, IndexSet J_, IndexSet K_)
    : n(n_), I(std::move(I_)), J(std::move(J_)), K(std::move(K_)) {
  if (I.size() != J.size() || J.size() != K.size())
    throw std::invalid_argument("triple with mixed cardinalities");
  if (I.n() != n || J.n() != n || K.n() != n)
    throw std::invalid_argument("triple with mixed ambient sizes");
  if (I.size() < 1 || I.size() > n)
    throw std::invalid_argument("triple cardinality out of range");
}

std::string HornTriple::str() const {
  return "(" + I.str() + "," + J.str() + "," + K.str() + ") n=" + std::to_string(n);
}

PartitionTriple partition_triple(const HornTriple& t) {
  const int r = t.r();
  return PartitionTriple{to_partition(flip(t.I), r), to_partition(flip(t.J), r),
                         to_partition(t.K, r)};
}

std::array<HornTriple, 6> permutations(const HornTriple& t) {
  return {HornTriple(t.n, t.I, t.J, t.K), HornTriple(t.n, t.I, t.K, t.J),
          HornTriple(t.n, t.J, t.I, t.K), HornTriple(t.n, t.J, t.K, t.I),
          HornTriple(t.n, t.K, t.I, t.J), HornTriple(t.n, t.K, t.J, t.I)};
}

HornTriple sorted_orbit_rep(const HornTriple& t) {
  std::array<IndexSet, 3> sets = {t.I, t.J, t.K};
  std::sort(sets.begin(), sets.end(),
            [](const IndexSet& a, const IndexSet& b) { return a.elements() < b.elements(); });
  return HornTriple(t.n, sets[0], sets[1], sets[2]);
}

}  // namespace horn
