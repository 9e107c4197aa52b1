#pragma once

#include "qtrefftz/differential_operator.hpp"
#include "qtrefftz/errors.hpp"
#include "qtrefftz/multiindex.hpp"
#include "qtrefftz/polynomial.hpp"
#include "qtrefftz/right_inverse.hpp"

#include <sstream>
#include <vector>

namespace qt {

template <class S>
struct QTBasis {
  OperatorSpec<S> op;
  PivotData pivot;
  std::vector<GradedPoly<S>> elements;
  /// seeds[i] is the U-space input that produced elements[i].
  std::vector<GradedPoly<S>> seeds;
};

/// Multi-indices s with |s| <= p that do not dominate the pivot, graded then
/// lex. There are dim P_p - dim P_{p-order} of them.
std::vector<MultiIndex> u_seed_monomials(unsigned p, const PivotData& pivot);

template <class S>
std::vector<MultiIndex> u_seed_monomials(const OperatorSpec<S>& op, const PivotData& pivot) {
  return u_seed_monomials(op.degree(), pivot);
}

namespace detail {

// Forward substitution over degrees 0..p: x_k = u_k below the order, and
// x_k = u_k + S_k(b_{k-order} - [R(x_0 + ... + x_{k-1})]_{k-order} - L_* u_k)
// from there on. The remainder blocks are accumulated as each x_k appears.
template <class S>
GradedPoly<S> forward_substitution(const OperatorSpec<S>& op, const PrincipalPart<S>& lstar,
                                   const PivotData& pivot, const GradedPoly<S>& seed,
                                   const GradedPoly<S>& rhs) {
  const std::size_t d = op.dimension();
  const unsigned gamma = op.order();
  const unsigned s = op.truncation_order();

  std::vector<HomogeneousPoly<S>> r;
  r.reserve(s + 1);
  for (unsigned l = 0; l <= s; ++l) r.emplace_back(d, l);

  GradedPoly<S> out(d, op.center());
  for (unsigned k = 0; k <= op.degree(); ++k) {
    HomogeneousPoly<S> xk = seed.component(k);
    if (k >= gamma) {
      const unsigned l = k - gamma;
      HomogeneousPoly<S> lambda = rhs.component(l);
      lambda -= r[l];
      if (!xk.is_zero()) lambda -= apply_principal(lstar, xk);
      xk += solve_principal(lstar, pivot, lambda);
    }
    if (xk.is_zero()) continue;
    const GradedPoly<S> rx = remainder(op, xk);
    for (const auto& h : rx.components()) {
      if (!h.is_zero()) r[h.degree()] += h;
    }
    out.add(xk);
  }
  return out;
}

template <class S>
void check_seed(const OperatorSpec<S>& op, const PivotData& pivot, const GradedPoly<S>& seed) {
  if (seed.dimension() != op.dimension()) throw std::invalid_argument("seed dimension mismatch");
  if (seed.degree() > op.degree()) throw DegreeTooHigh(seed.degree(), op.degree());
  for (const auto& c : seed.components()) {
    if (c.degree() < op.order()) continue;
    for (const auto& [i, a] : c.terms()) {
      if (pivot.pivot.componentwise_leq(i)) {
        std::ostringstream msg;
        msg << "seed monomial " << i << " lies in the V-space of pivot " << pivot.pivot;
        throw SeedNotInU(msg.str());
      }
    }
  }
}

}  // namespace detail

/// Kernel element of D_p whose U-part is the given seed. The correction
/// X - seed is supported on monomials dominating the pivot.
template <class S>
GradedPoly<S> kernel_element(const OperatorSpec<S>& op, const PrincipalPart<S>& lstar,
                             const PivotData& pivot, const GradedPoly<S>& seed) {
  detail::check_seed(op, pivot, seed);
  return detail::forward_substitution(op, lstar, pivot, seed,
                                      GradedPoly<S>(op.dimension(), op.center()));
}

template <class S>
GradedPoly<S> kernel_element(const OperatorSpec<S>& op, const PivotData& pivot,
                             const GradedPoly<S>& seed) {
  return kernel_element(op, principal_part(op), pivot, seed);
}

/// X supported on the V-spaces with D_p X == f, for deg f <= p - order.
template <class S>
GradedPoly<S> particular_solution(const OperatorSpec<S>& op, const PrincipalPart<S>& lstar,
                                  const PivotData& pivot, const GradedPoly<S>& f) {
  if (f.dimension() != op.dimension()) throw std::invalid_argument("rhs dimension mismatch");
  if (f.degree() > op.truncation_order()) throw DegreeTooHigh(f.degree(), op.truncation_order());
  return detail::forward_substitution(op, lstar, pivot, GradedPoly<S>(op.dimension(), op.center()),
                                      f);
}

template <class S>
GradedPoly<S> particular_solution(const OperatorSpec<S>& op, const PivotData& pivot,
                                  const GradedPoly<S>& f) {
  return particular_solution(op, principal_part(op), pivot, f);
}

/// S_*: the principal right inverse applied block by block, P_{p-order} -> P_p.
template <class S>
GradedPoly<S> principal_section(const OperatorSpec<S>& op, const PrincipalPart<S>& lstar,
                                const PivotData& pivot, const GradedPoly<S>& f) {
  if (f.degree() > op.truncation_order()) throw DegreeTooHigh(f.degree(), op.truncation_order());
  GradedPoly<S> out(op.dimension(), op.center());
  for (const auto& c : f.components()) {
    if (!c.is_zero()) out.add(solve_principal(lstar, pivot, c));
  }
  return out;
}

/// f -> (D_p - L_*)(S_* f). Strictly raises the lowest nonzero degree of f, so
/// p - order + 1 applications annihilate any f.
template <class S>
GradedPoly<S> section_remainder(const OperatorSpec<S>& op, const PrincipalPart<S>& lstar,
                                const PivotData& pivot, const GradedPoly<S>& f) {
  GradedPoly<S> out(op.dimension(), op.center());
  const GradedPoly<S> section = principal_section(op, lstar, pivot, f);
  for (const auto& c : section.components()) {
    if (c.is_zero()) continue;
    out += remainder(op, c);
  }
  return out;
}

/// S = S_* (sum_{l=0}^{p-order} [-R S_*]^l), evaluated as a truncated series.
template <class S>
GradedPoly<S> right_inverse_S(const OperatorSpec<S>& op, const PrincipalPart<S>& lstar,
                              const PivotData& pivot, const GradedPoly<S>& f) {
  if (f.dimension() != op.dimension()) throw std::invalid_argument("rhs dimension mismatch");
  GradedPoly<S> term = f;
  GradedPoly<S> sum = f;
  for (unsigned l = 1; l <= op.truncation_order() && !term.is_zero(); ++l) {
    term = -section_remainder(op, lstar, pivot, term);
    sum += term;
  }
  return principal_section(op, lstar, pivot, sum);
}

template <class S>
GradedPoly<S> right_inverse_S(const OperatorSpec<S>& op, const PivotData& pivot,
                              const GradedPoly<S>& f) {
  return right_inverse_S(op, principal_part(op), pivot, f);
}

/// Basis of ker D_p from caller-supplied seeds, which must be a basis of the
/// U-space (membership is checked, linear independence is not).
template <class S>
QTBasis<S> quasi_trefftz_basis(const OperatorSpec<S>& op, std::vector<GradedPoly<S>> seeds) {
  const PrincipalPart<S> lstar = principal_part(op);
  const PivotData pivot = select_pivot(lstar);
  const std::size_t expected = dim_polynomials(op.dimension(), op.degree()) -
                               dim_polynomials(op.dimension(), op.truncation_order());
  if (seeds.size() != expected) {
    throw std::invalid_argument("expected " + std::to_string(expected) + " seeds, got " +
                                std::to_string(seeds.size()));
  }
  QTBasis<S> out{op, pivot, {}, {}};
  out.elements.reserve(seeds.size());
  for (const auto& seed : seeds) out.elements.push_back(kernel_element(op, lstar, pivot, seed));
  out.seeds = std::move(seeds);
  return out;
}

/// Basis of ker D_p seeded by the U-space monomials. Throws DegenerateOrder
/// when the order-gamma coefficients vanish at the center.
template <class S>
QTBasis<S> quasi_trefftz_basis(const OperatorSpec<S>& op) {
  const PivotData pivot = select_pivot(principal_part(op));
  std::vector<GradedPoly<S>> seeds;
  for (const auto& s : u_seed_monomials(op, pivot)) {
    seeds.push_back(GradedPoly<S>::monomial(s, ScalarTraits<S>::one(), op.center()));
  }
  return quasi_trefftz_basis(op, std::move(seeds));
}

}  // namespace qt
