#pragma once

#include "qtrefftz/differential_operator.hpp"
#include "qtrefftz/errors.hpp"
#include "qtrefftz/multiindex.hpp"
#include "qtrefftz/polynomial.hpp"

#include <map>
#include <optional>
#include <vector>

namespace qt {

/// Pivot i* of the principal support I and, when available, an axis k on
/// which i* strictly dominates every other support index.
struct PivotData {
  MultiIndex pivot;
  /// 0-based axis.
  std::optional<std::size_t> simple_axis;

  friend bool operator==(const PivotData&, const PivotData&) = default;
};

/// Successive componentwise maxima over I, i.e. the lex-maximum of I, so that
/// every other support index precedes the pivot. The simple axis is the
/// smallest k where the pivot's k-th component strictly exceeds that of every
/// other support index. An axis where the pivot's component is 0 never
/// qualifies, so a singleton support {i*} picks the first nonzero component.
template <class S>
PivotData select_pivot(const PrincipalPart<S>& lstar) {
  const auto& alpha = lstar.alpha();
  PivotData out{alpha.rbegin()->first, std::nullopt};
  for (std::size_t k = 0; k < lstar.dimension() && !out.simple_axis; ++k) {
    bool strict = out.pivot[k] > 0;
    for (auto it = alpha.begin(); strict && it != alpha.end(); ++it) {
      if (it->first != out.pivot && it->first[k] >= out.pivot[k]) strict = false;
    }
    if (strict) out.simple_axis = k;
  }
  return out;
}

/// Monomial basis {j + i* : |j| = n - order} of the section V_n, ordered by j.
std::vector<MultiIndex> v_space_monomials(const MultiIndex& pivot, unsigned n);

namespace detail {

// One unknown of the triangular system: pi_s from lambda_s and the already
// computed pi_{s - i* + i}, i in I \ {i*}.
template <class S>
S solve_unknown(const PrincipalPart<S>& lstar, const MultiIndex& pivot, const S& alpha_pivot,
                const MultiIndex& s, const S& lambda, const std::map<MultiIndex, S>& pi) {
  S rhs = lambda;
  for (const auto& [i, a] : lstar.alpha()) {
    if (i == pivot) continue;
    const MultiIndex si = s + i;
    if (!pivot.componentwise_leq(si)) continue;  // s - i* + i has a negative entry
    auto it = pi.find(si - pivot);
    if (it == pi.end()) continue;
    rhs -= a * it->second * falling_ratio_as<S>(si, i);
  }
  if (ScalarTraits<S>::is_zero(rhs)) return rhs;
  return rhs / (alpha_pivot * falling_ratio_as<S>(s + pivot, pivot));
}

template <class S>
HomogeneousPoly<S> assemble_section(std::size_t d, unsigned degree, const MultiIndex& pivot,
                                    const std::map<MultiIndex, S>& pi) {
  HomogeneousPoly<S> out(d, degree);
  for (const auto& [s, c] : pi) out.add_term_unchecked(s + pivot, c);
  return out;
}

template <class S>
void check_solve_args(const PrincipalPart<S>& lstar, const PivotData& pivot,
                      const HomogeneousPoly<S>& lambda) {
  if (lambda.dimension() != lstar.dimension() || pivot.pivot.dimension() != lstar.dimension()) {
    throw std::invalid_argument("right inverse: dimension mismatch");
  }
  if (ScalarTraits<S>::is_zero(lstar.coefficient(pivot.pivot))) {
    throw std::invalid_argument("right inverse: pivot is not in the principal support");
  }
}

}  // namespace detail

/// Right inverse of L_* on V_{n+order}: unknowns pi_s, |s| = n, are solved in
/// lex-increasing order of s. Returns Pi = sum pi_s X^{s+i*} with
/// L_* Pi == Lambda.
template <class S>
HomogeneousPoly<S> solve_principal_general(const PrincipalPart<S>& lstar, const PivotData& pivot,
                                           const HomogeneousPoly<S>& lambda) {
  detail::check_solve_args(lstar, pivot, lambda);
  const std::size_t d = lstar.dimension();
  const unsigned n = lambda.degree();
  const S alpha_pivot = lstar.coefficient(pivot.pivot);
  std::map<MultiIndex, S> pi;
  if (lambda.is_zero()) return HomogeneousPoly<S>(d, n + lstar.order());
  for (const MultiIndex& s : enumerate_degree(d, n)) {
    S v = detail::solve_unknown(lstar, pivot.pivot, alpha_pivot, s, lambda.coefficient(s), pi);
    if (!ScalarTraits<S>::is_zero(v)) pi.emplace(s, std::move(v));
  }
  return detail::assemble_section(d, n + lstar.order(), pivot.pivot, pi);
}

/// Same contract as solve_principal_general, for pivots with a simple axis k:
/// unknowns are swept by increasing k-th component, each slice being
/// diagonal. Throws SimpleCaseUnavailable otherwise.
template <class S>
HomogeneousPoly<S> solve_principal_simple(const PrincipalPart<S>& lstar, const PivotData& pivot,
                                          const HomogeneousPoly<S>& lambda) {
  if (!pivot.simple_axis) throw SimpleCaseUnavailable();
  detail::check_solve_args(lstar, pivot, lambda);
  const std::size_t d = lstar.dimension();
  const std::size_t k = *pivot.simple_axis;
  const unsigned n = lambda.degree();
  const S alpha_pivot = lstar.coefficient(pivot.pivot);
  if (lambda.is_zero()) return HomogeneousPoly<S>(d, n + lstar.order());

  std::vector<std::vector<MultiIndex>> slices(n + 1);
  for (MultiIndex& s : enumerate_degree(d, n)) slices[s[k]].push_back(std::move(s));

  std::map<MultiIndex, S> pi;
  for (const auto& slice : slices) {
    // Every s - i* + i referenced here has a strictly smaller k-th component.
    for (const MultiIndex& s : slice) {
      S v = detail::solve_unknown(lstar, pivot.pivot, alpha_pivot, s, lambda.coefficient(s), pi);
      if (!ScalarTraits<S>::is_zero(v)) pi.emplace(s, std::move(v));
    }
  }
  return detail::assemble_section(d, n + lstar.order(), pivot.pivot, pi);
}

/// S_{n+order}: the simple sweep when the pivot allows it, else the general one.
template <class S>
HomogeneousPoly<S> solve_principal(const PrincipalPart<S>& lstar, const PivotData& pivot,
                                   const HomogeneousPoly<S>& lambda) {
  return pivot.simple_axis ? solve_principal_simple(lstar, pivot, lambda)
                           : solve_principal_general(lstar, pivot, lambda);
}

}  // namespace qt
