#include "qtrefftz/right_inverse.hpp"

namespace qt {

std::vector<MultiIndex> v_space_monomials(const MultiIndex& pivot, unsigned n) {
  const unsigned order = pivot.total_degree();
  if (n < order) throw std::invalid_argument("v_space_monomials: n must be >= the pivot order");
  std::vector<MultiIndex> out = enumerate_degree(pivot.dimension(), n - order);
  for (auto& j : out) j = j + pivot;
  return out;
}

}  // namespace qt
