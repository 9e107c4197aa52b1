#include "qtrefftz/basis.hpp"

namespace qt {

std::vector<MultiIndex> u_seed_monomials(unsigned p, const PivotData& pivot) {
  std::vector<MultiIndex> out;
  for (auto& s : enumerate_graded(pivot.pivot.dimension(), p)) {
    if (!pivot.pivot.componentwise_leq(s)) out.push_back(std::move(s));
  }
  return out;
}

}  // namespace qt
