#include "horn/index_set.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace horn {

IndexSet::IndexSet(std::vector<int> elements, int n) : elements_(std::move(elements)), n_(n) {
  if (elements_.empty()) throw std::invalid_argument("index set is empty");
  if (n_ < 1) throw std::invalid_argument("ambient size < 1");
  int prev = 0;
  for (int e : elements_) {
    if (e <= prev) throw std::invalid_argument("index set not strictly increasing");
    prev = e;
  }
  if (elements_.back() > n_) throw std::invalid_argument("index set exceeds ambient size");
}

long IndexSet::sum() const {
  return std::accumulate(elements_.begin(), elements_.end(), 0L);
}

bool IndexSet::contains(int i) const {
  return std::binary_search(elements_.begin(), elements_.end(), i);
}

std::string IndexSet::str() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (i) os << ',';
    os << elements_[i];
  }
  os << '}';
  return os.str();
}

IndexSet flip(const IndexSet& I) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(I.size()));
  for (int i : I.elements()) out.push_back(I.n() + 1 - i);
  std::sort(out.begin(), out.end());
  return IndexSet(std::move(out), I.n());
}

Partition to_partition(const IndexSet& I, int r) {
  if (I.size() != r) throw std::invalid_argument("to_partition: size mismatch");
  std::vector<long> parts(static_cast<std::size_t>(r));
  for (int p = 1; p <= r; ++p)
    parts[static_cast<std::size_t>(p) - 1] = I.entry(r + 1 - p) - (r + 1 - p);
  return Partition(std::move(parts));
}

}  // namespace horn
