#pragma once

#include "qtrefftz/basis.hpp"
#include "qtrefftz/differential_operator.hpp"
#include "qtrefftz/polynomial.hpp"

#include <initializer_list>
#include <random>
#include <utility>
#include <vector>

namespace qt::testing {

using Q = Rational;
using Term = std::pair<MultiIndex, Q>;

inline GradedPoly<Q> poly(std::size_t d, std::initializer_list<Term> terms) {
  GradedPoly<Q> p(d);
  for (const auto& [i, c] : terms) p.add_term(i, c);
  return p;
}

inline HomogeneousPoly<Q> hpoly(std::size_t d, unsigned n, std::initializer_list<Term> terms) {
  HomogeneousPoly<Q> p(d, n);
  for (const auto& [i, c] : terms) p.add_term(i, c);
  return p;
}

inline MultiIndex unit(std::size_t d, std::size_t g, unsigned v = 1) {
  MultiIndex m(d);
  m[g] = v;
  return m;
}

/// Constant-coefficient operator sum_j a_j d^j.
inline OperatorSpec<Q> constant_operator(std::size_t d, unsigned order, unsigned p,
                                         std::initializer_list<Term> coeffs) {
  OperatorSpec<Q>::Coefficients c;
  for (const auto& [j, a] : coeffs) c.emplace(j, GradedPoly<Q>::monomial(MultiIndex(d), a));
  return OperatorSpec<Q>(d, order, p, {}, std::move(c));
}

inline OperatorSpec<Q> laplace(std::size_t d, unsigned p) {
  OperatorSpec<Q>::Coefficients c;
  for (std::size_t g = 0; g < d; ++g) c.emplace(unit(d, g, 2), GradedPoly<Q>::monomial(MultiIndex(d)));
  return OperatorSpec<Q>(d, 2, p, {}, std::move(c));
}

/// Laplacian plus a constant zeroth-order term k2.
inline OperatorSpec<Q> helmholtz(std::size_t d, unsigned p, Q k2 = 1) {
  OperatorSpec<Q>::Coefficients c;
  for (std::size_t g = 0; g < d; ++g) c.emplace(unit(d, g, 2), GradedPoly<Q>::monomial(MultiIndex(d)));
  c.emplace(MultiIndex(d), GradedPoly<Q>::monomial(MultiIndex(d), k2));
  return OperatorSpec<Q>(d, 2, p, {}, std::move(c));
}

/// d_t - d_x^2 in variables (t, x).
inline OperatorSpec<Q> heat(unsigned p) {
  return constant_operator(2, 2, p, {{{1, 0}, Q(1)}, {{0, 2}, Q(-1)}});
}

/// d_x^2 + x d_y^2 at the origin.
inline OperatorSpec<Q> tricomi(unsigned p) {
  OperatorSpec<Q>::Coefficients c;
  c.emplace(MultiIndex{2, 0}, GradedPoly<Q>::monomial(MultiIndex{0, 0}));
  if (p >= 3) c.emplace(MultiIndex{0, 2}, GradedPoly<Q>::monomial(MultiIndex{1, 0}));
  return OperatorSpec<Q>(2, 2, p, {}, std::move(c));
}

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin(double prob) { return std::bernoulli_distribution(prob)(rng_); }

  /// Small nonzero rational num/den with |num| <= 4, den <= 3.
  Q nonzero_rational() {
    int num = 0;
    while (num == 0) num = integer(-4, 4);
    Q q(num, integer(1, 3));
    q.canonicalize();
    return q;
  }

  Q rational(double zero_prob = 0.0) { return coin(zero_prob) ? Q(0) : nonzero_rational(); }

  MultiIndex multiindex(std::size_t d, unsigned n) {
    const auto all = enumerate_degree(d, n);
    return all[integer(0, static_cast<int>(all.size()) - 1)];
  }

  HomogeneousPoly<Q> homogeneous(std::size_t d, unsigned n, double density = 0.6) {
    HomogeneousPoly<Q> p(d, n);
    for (const auto& i : enumerate_degree(d, n)) {
      if (coin(density)) p.add_term(i, nonzero_rational());
    }
    return p;
  }

  GradedPoly<Q> graded(std::size_t d, unsigned p, double density = 0.5) {
    GradedPoly<Q> out(d);
    for (unsigned n = 0; n <= p; ++n) out.add(homogeneous(d, n, density));
    return out;
  }

  /// Random variable-coefficient operator. With dense set, every |j| <= order
  /// gets a coefficient with full Taylor data; otherwise coefficients and
  /// Taylor terms appear with the given density. If principal is nonempty it
  /// fixes the support of the principal part exactly.
  OperatorSpec<Q> op(std::size_t d, unsigned order, unsigned p, bool dense, double density = 0.4,
                     const std::vector<MultiIndex>& principal = {}) {
    const unsigned s = p - order;
    OperatorSpec<Q>::Coefficients coeffs;
    for (const auto& j : enumerate_graded(d, order)) {
      if (!dense && !coin(density) && j.total_degree() < order) continue;
      GradedPoly<Q> c(d);
      for (const auto& k : enumerate_graded(d, s)) {
        if (dense || coin(density)) c.add_term(k, nonzero_rational());
      }
      coeffs.emplace(j, std::move(c));
    }
    auto set_constant = [&](const MultiIndex& j, const Q& v) {
      auto [it, inserted] = coeffs.try_emplace(j, GradedPoly<Q>(d));
      it->second.add_term(MultiIndex(d), v - it->second.coefficient(MultiIndex(d)));
    };
    if (!principal.empty()) {
      for (const auto& j : enumerate_degree(d, order)) set_constant(j, Q(0));
      for (const auto& j : principal) set_constant(j, nonzero_rational());
    } else {
      bool any = false;
      for (const auto& j : enumerate_degree(d, order)) {
        auto it = coeffs.find(j);
        if (it != coeffs.end() && !ScalarTraits<Q>::is_zero(it->second.coefficient(MultiIndex(d)))) {
          any = true;
        }
      }
      if (!any) set_constant(multiindex(d, order), nonzero_rational());
    }
    return OperatorSpec<Q>(d, order, p, {}, std::move(coeffs));
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

/// Principal supports in d = 3 whose pivot has no simple axis.
inline std::vector<MultiIndex> no_simple_axis_support(unsigned order) {
  if (order == 2) return {{1, 1, 0}, {1, 0, 1}, {0, 1, 1}};
  return {{2, 1, 0}, {2, 0, 1}, {1, 1, 1}, {0, 2, 1}, {0, 1, 2}};
}

}  // namespace qt::testing
