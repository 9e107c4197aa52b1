#pragma once

#include "qtrefftz/errors.hpp"
#include "qtrefftz/multiindex.hpp"
#include "qtrefftz/polynomial.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace qt {

/// Linear differential operator L = sum_{|j| <= order} c_j(x) d^j, known
/// through the Taylor data of its coefficients at the center up to degree
/// p - order. Component k of coefficient j holds c_{j,k} = d^k c_j(x0) / k!.
template <class S>
class OperatorSpec {
 public:
  using Coefficients = std::map<MultiIndex, GradedPoly<S>>;

  OperatorSpec(std::size_t dimension, unsigned order, unsigned degree, std::vector<double> center,
               Coefficients coefficients)
      : dim_(dimension), order_(order), degree_(degree), center_(std::move(center)) {
    if (dim_ == 0) throw std::invalid_argument("operator dimension must be >= 1");
    if (order_ == 0) throw std::invalid_argument("operator order must be >= 1");
    if (degree_ < order_) throw std::invalid_argument("truncation degree must be >= order");
    if (center_.empty()) center_.assign(dim_, 0.0);
    if (center_.size() != dim_) throw std::invalid_argument("center has the wrong dimension");
    for (auto& [j, c] : coefficients) {
      if (j.dimension() != dim_) throw std::invalid_argument("coefficient index dimension mismatch");
      if (j.total_degree() > order_) {
        throw std::invalid_argument("coefficient index has total degree above the order");
      }
      if (c.dimension() != dim_ || c.center() != center_) {
        throw std::invalid_argument("coefficient polynomial does not share dimension and center");
      }
      if (c.degree() > truncation_order()) {
        throw std::invalid_argument("coefficient Taylor data exceeds degree p - order");
      }
      if (!c.is_zero()) coefficients_.emplace(j, std::move(c));
    }
  }

  std::size_t dimension() const { return dim_; }
  unsigned order() const { return order_; }
  unsigned degree() const { return degree_; }
  /// p - order: the Taylor order of the quasi-Trefftz property.
  unsigned truncation_order() const { return degree_ - order_; }
  const std::vector<double>& center() const { return center_; }
  const Coefficients& coefficients() const { return coefficients_; }

  const GradedPoly<S>* coefficient(const MultiIndex& j) const {
    auto it = coefficients_.find(j);
    return it == coefficients_.end() ? nullptr : &it->second;
  }

 private:
  std::size_t dim_;
  unsigned order_;
  unsigned degree_;
  std::vector<double> center_;
  Coefficients coefficients_;
};

/// Constant-coefficient operator sum_{i in I} alpha_i d^i with every |i| equal
/// to the order and every alpha_i nonzero.
template <class S>
class PrincipalPart {
 public:
  PrincipalPart(std::size_t dimension, unsigned order, std::map<MultiIndex, S> alpha)
      : dim_(dimension), order_(order) {
    for (auto& [i, a] : alpha) {
      if (i.dimension() != dim_ || i.total_degree() != order_) {
        throw std::invalid_argument("principal part index must have total degree == order");
      }
      if (!ScalarTraits<S>::is_zero(a)) alpha_.emplace(i, std::move(a));
    }
    if (alpha_.empty()) throw std::invalid_argument("principal part must have a nonzero term");
  }

  std::size_t dimension() const { return dim_; }
  unsigned order() const { return order_; }
  const std::map<MultiIndex, S>& alpha() const { return alpha_; }
  S coefficient(const MultiIndex& i) const {
    auto it = alpha_.find(i);
    return it == alpha_.end() ? ScalarTraits<S>::zero() : it->second;
  }

 private:
  std::size_t dim_;
  unsigned order_;
  std::map<MultiIndex, S> alpha_;
};

/// Order-gamma coefficients frozen at the center. Throws DegenerateOrder when
/// they all vanish there.
template <class S>
PrincipalPart<S> principal_part(const OperatorSpec<S>& op) {
  std::map<MultiIndex, S> alpha;
  std::optional<unsigned> reduced;
  const MultiIndex zero(op.dimension());
  for (const auto& [j, c] : op.coefficients()) {
    const S c0 = c.coefficient(zero);
    if (ScalarTraits<S>::is_zero(c0)) continue;
    const unsigned m = j.total_degree();
    if (m == op.order()) {
      alpha.emplace(j, c0);
    } else if (!reduced || m > *reduced) {
      reduced = m;
    }
  }
  if (alpha.empty()) throw DegenerateOrder(op.order(), reduced);
  return PrincipalPart<S>(op.dimension(), op.order(), std::move(alpha));
}

/// L_* P for homogeneous P of degree >= order; the result has degree
/// deg P - order.
template <class S>
HomogeneousPoly<S> apply_principal(const PrincipalPart<S>& lstar, const HomogeneousPoly<S>& p) {
  if (p.dimension() != lstar.dimension()) {
    throw std::invalid_argument("apply_principal: dimension mismatch");
  }
  if (p.degree() < lstar.order()) {
    if (p.is_zero()) return HomogeneousPoly<S>(p.dimension(), 0);
    throw std::invalid_argument("apply_principal: degree below the operator order");
  }
  HomogeneousPoly<S> out(p.dimension(), p.degree() - lstar.order());
  for (const auto& [i, a] : lstar.alpha()) {
    for (const auto& [k, c] : p.terms()) {
      if (!i.componentwise_leq(k)) continue;
      out.add_term_unchecked(k - i, a * detail::falling_ratio_as<S>(k, i) * c);
    }
  }
  return out;
}

namespace detail {

// Quasi-Trefftz operator on one homogeneous component Pi_N, term by term:
// c_{j,l-(N-m)} d^j Pi_N lands in degree l for l in [N-m, p-order]. With
// include_principal == false the (m == order, k == 0) terms, i.e. L_*, are
// skipped, which leaves the remainder D_p - L_*.
template <class S>
GradedPoly<S> apply_component(const OperatorSpec<S>& op, const HomogeneousPoly<S>& pi,
                              bool include_principal) {
  GradedPoly<S> out(op.dimension(), op.center());
  if (pi.is_zero()) return out;
  const unsigned n = pi.degree();
  const unsigned s = op.truncation_order();
  if (n > op.degree()) throw DegreeTooHigh(n, op.degree());

  std::vector<HomogeneousPoly<S>> acc;
  acc.reserve(s + 1);
  for (unsigned l = 0; l <= s; ++l) acc.emplace_back(op.dimension(), l);

  for (const auto& [j, c] : op.coefficients()) {
    const unsigned m = j.total_degree();
    if (m > n || n - m > s) continue;
    const HomogeneousPoly<S> dj = derivative(pi, j);
    if (dj.is_zero()) continue;
    for (const auto& ck : c.components()) {
      const unsigned k = ck.degree();
      const unsigned l = n - m + k;
      if (l > s) break;
      if (!include_principal && m == op.order() && k == 0) continue;
      accumulate_product(acc[l], ck, dj);
    }
  }
  for (unsigned l = 0; l <= s; ++l) out.set_component(l, std::move(acc[l]));
  return out;
}

}  // namespace detail

/// D_p(P) = T_{p-order}[L P], computed component by component from the
/// explicit expansion rather than by multiplying out and truncating.
template <class S>
GradedPoly<S> apply_quasi_trefftz(const OperatorSpec<S>& op, const GradedPoly<S>& p) {
  if (p.dimension() != op.dimension()) throw std::invalid_argument("dimension mismatch");
  if (p.degree() > op.degree()) throw DegreeTooHigh(p.degree(), op.degree());
  GradedPoly<S> out(op.dimension(), op.center());
  for (const auto& pi : p.components()) {
    out += detail::apply_component(op, pi, true);
  }
  return out;
}

template <class S>
GradedPoly<S> apply_quasi_trefftz(const OperatorSpec<S>& op, const HomogeneousPoly<S>& pi) {
  if (pi.dimension() != op.dimension()) throw std::invalid_argument("dimension mismatch");
  return detail::apply_component(op, pi, true);
}

/// All blocks of (D_p - L_*)(Pi_N) at once.
template <class S>
GradedPoly<S> remainder(const OperatorSpec<S>& op, const HomogeneousPoly<S>& pi) {
  if (pi.dimension() != op.dimension()) throw std::invalid_argument("dimension mismatch");
  return detail::apply_component(op, pi, false);
}

/// Degree-l component of (D_p - L_*)(Pi_N).
template <class S>
HomogeneousPoly<S> remainder_block(const OperatorSpec<S>& op, const HomogeneousPoly<S>& pi,
                                   unsigned l) {
  if (l > op.truncation_order()) {
    throw std::invalid_argument("remainder_block: target degree exceeds p - order");
  }
  return remainder(op, pi).component(l);
}

template <class To, class From>
OperatorSpec<To> convert(const OperatorSpec<From>& op) {
  typename OperatorSpec<To>::Coefficients coeffs;
  for (const auto& [j, c] : op.coefficients()) coeffs.emplace(j, convert<To>(c));
  return OperatorSpec<To>(op.dimension(), op.order(), op.degree(), op.center(), std::move(coeffs));
}

}  // namespace qt
