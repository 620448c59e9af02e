#include "horn/partition.hpp"

#include <numeric>
#include <sstream>

namespace horn {

long Partition::sum() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0L);
}

std::string Partition::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << ',';
    os << parts_[i];
  }
  os << ')';
  return os.str();
}

std::string PartitionTriple::str() const {
  return lambda.str() + " " + mu.str() + " " + nu.str();
}

}  // namespace horn
