#include "horn/flag.hpp"

#include <stdexcept>

namespace horn {

Flag::Flag(Subspace space, RatMatrix ordered_basis)
    : space_(std::move(space)),
      basis_(std::move(ordered_basis)),
      levels_(std::make_shared<std::vector<std::optional<Subspace>>>(
          static_cast<std::size_t>(basis_.rows()) + 1)) {
  if (basis_.rows() != space_.dim() || basis_.cols() != space_.ambient())
    throw std::invalid_argument("Flag: basis shape mismatch");
  if (Subspace::span(basis_) != space_)
    throw std::invalid_argument("Flag: rows do not span the flag space");
}

Flag Flag::standard(const Subspace& w) {
  return Flag(w, w.basis());
}

Flag Flag::random(const Subspace& w, std::mt19937_64& rng) {
  const int d = w.dim();
  if (d == 0) return Flag(w, RatMatrix(0, w.ambient()));
  const RatMatrix change = random_invertible(d, rng);
  return Flag(w, change * w.basis());
}

Subspace Flag::level(int d) const {
  if (d < 0 || d > levels()) throw std::out_of_range("Flag::level");
  if (d == 0) return Subspace::zero(ambient());
  auto& slot = (*levels_)[static_cast<std::size_t>(d)];
  if (!slot) {
    RatMatrix rows(d, ambient());
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < ambient(); ++j) rows.at(i, j) = basis_.at(i, j);
    slot = Subspace::span(std::move(rows));
  }
  return *slot;
}

Flag refine_superflag(const std::vector<Subspace>& chain, const Subspace& w) {
  const int m = static_cast<int>(chain.size()) - 1;
  if (m != w.dim()) throw std::invalid_argument("refine_superflag: chain length != dim(w) + 1");
  if (chain.back() != w) throw std::invalid_argument("refine_superflag: chain does not end at w");
  for (int c = 0; c <= m; ++c) {
    if (chain[static_cast<std::size_t>(c)].dim() < c)
      throw std::invalid_argument("refine_superflag: dimension deficit at level " +
                                  std::to_string(c));
    if (c > 0 && !chain[static_cast<std::size_t>(c)].contains(chain[static_cast<std::size_t>(c) - 1]))
      throw std::invalid_argument("refine_superflag: chain not nested at level " +
                                  std::to_string(c));
  }

  RowAccumulator acc(w.ambient());
  for (int c = 1; c <= m; ++c) {
    const Subspace& target = chain[static_cast<std::size_t>(c)];
    bool advanced = false;
    for (int i = 0; i < target.dim() && !advanced; ++i)
      advanced = acc.add(target.basis().row(i));
    if (!advanced) throw std::logic_error("refine_superflag: no independent vector at level " +
                                          std::to_string(c));
  }
  return Flag(w, acc.rows());
}

}  // namespace horn
