#pragma once

#include "qtrefftz/multiindex.hpp"
#include "qtrefftz/scalar.hpp"

#include <algorithm>
#include <map>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace qt {

namespace detail {

// j!/(j-i)! as a field element, assuming i <= j. Stays in machine integers
// while the product provably fits (|j| <= 20 implies j! < 2^63).
template <class S>
S falling_ratio_as(const MultiIndex& j, const MultiIndex& i) {
  if (j.total_degree() <= 20) {
    std::uint64_t r = 1;
    for (std::size_t g = 0; g < j.dimension(); ++g) {
      for (auto t = j[g] - i[g] + 1; t <= j[g]; ++t) r *= t;
    }
    return ScalarTraits<S>::from_u64(r);
  }
  return ScalarTraits<S>::from_integer(falling_ratio(j, i));
}

}  // namespace detail

/// Homogeneous polynomial of fixed degree in d shifted variables (X - x0).
/// Coefficients are stored sparsely; zero entries are never kept.
template <class S>
class HomogeneousPoly {
 public:
  using Terms = std::map<MultiIndex, S>;

  HomogeneousPoly(std::size_t dimension, unsigned degree) : dim_(dimension), degree_(degree) {
    if (dimension == 0) throw std::invalid_argument("polynomial dimension must be >= 1");
  }

  static HomogeneousPoly monomial(const MultiIndex& i, const S& c = ScalarTraits<S>::one()) {
    HomogeneousPoly p(i.dimension(), i.total_degree());
    p.add_term(i, c);
    return p;
  }

  std::size_t dimension() const { return dim_; }
  unsigned degree() const { return degree_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  S coefficient(const MultiIndex& i) const {
    auto it = terms_.find(i);
    return it == terms_.end() ? ScalarTraits<S>::zero() : it->second;
  }

  void add_term(const MultiIndex& i, const S& c) {
    if (i.dimension() != dim_ || i.total_degree() != degree_) {
      throw std::invalid_argument("monomial does not belong to this homogeneous space");
    }
    add_term_unchecked(i, c);
  }

  // Hot path for callers that already guarantee the degree.
  void add_term_unchecked(const MultiIndex& i, const S& c) {
    if (ScalarTraits<S>::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(i, c);
    if (!inserted) {
      it->second += c;
      if (ScalarTraits<S>::is_zero(it->second)) terms_.erase(it);
    }
  }

  HomogeneousPoly& operator+=(const HomogeneousPoly& o) {
    check_compatible(o);
    for (const auto& [i, c] : o.terms_) add_term_unchecked(i, c);
    return *this;
  }

  HomogeneousPoly& operator-=(const HomogeneousPoly& o) {
    check_compatible(o);
    for (const auto& [i, c] : o.terms_) add_term_unchecked(i, -c);
    return *this;
  }

  HomogeneousPoly& operator*=(const S& a) {
    if (ScalarTraits<S>::is_zero(a)) {
      terms_.clear();
      return *this;
    }
    for (auto& [i, c] : terms_) c *= a;
    return *this;
  }

  friend HomogeneousPoly operator+(HomogeneousPoly a, const HomogeneousPoly& b) { return a += b; }
  friend HomogeneousPoly operator-(HomogeneousPoly a, const HomogeneousPoly& b) { return a -= b; }
  friend HomogeneousPoly operator*(const S& s, HomogeneousPoly a) { return a *= s; }
  friend HomogeneousPoly operator-(HomogeneousPoly a) { return a *= -ScalarTraits<S>::one(); }

  friend bool operator==(const HomogeneousPoly& a, const HomogeneousPoly& b) {
    if (a.dim_ != b.dim_) return false;
    if (a.is_zero() && b.is_zero()) return true;
    return a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }

  double max_magnitude() const {
    double m = 0.0;
    for (const auto& [i, c] : terms_) m = std::max(m, ScalarTraits<S>::magnitude(c));
    return m;
  }

  /// Drops every coefficient with magnitude <= abs_tol.
  void prune(double abs_tol) {
    std::erase_if(terms_, [&](const auto& kv) {
      return ScalarTraits<S>::is_zero(kv.second) ||
             ScalarTraits<S>::magnitude(kv.second) <= abs_tol;
    });
  }

 private:
  void check_compatible(const HomogeneousPoly& o) const {
    if (o.dim_ != dim_) throw std::invalid_argument("polynomial dimension mismatch");
    if (o.degree_ != degree_ && !o.is_zero()) {
      throw std::invalid_argument("homogeneous degree mismatch");
    }
  }

  std::size_t dim_;
  unsigned degree_;
  Terms terms_;
};

/// Polynomial of degree <= p in the shifted monomials (X - x0)^i, stored as
/// its homogeneous components. The center is metadata: no arithmetic uses it.
template <class S>
class GradedPoly {
 public:
  explicit GradedPoly(std::size_t dimension, std::vector<double> center = {})
      : dim_(dimension), center_(std::move(center)) {
    if (center_.empty()) center_.assign(dim_, 0.0);
    if (center_.size() != dim_) throw std::invalid_argument("center has the wrong dimension");
    components_.emplace_back(dim_, 0);
  }

  GradedPoly(std::size_t dimension, std::vector<double> center,
             std::span<const HomogeneousPoly<S>> components)
      : GradedPoly(dimension, std::move(center)) {
    for (const auto& c : components) add(c);
  }

  static GradedPoly monomial(const MultiIndex& i, const S& c = ScalarTraits<S>::one(),
                             std::vector<double> center = {}) {
    GradedPoly p(i.dimension(), std::move(center));
    p.add_term(i, c);
    return p;
  }

  std::size_t dimension() const { return dim_; }
  const std::vector<double>& center() const { return center_; }

  /// Highest degree with a nonzero component (0 for the zero polynomial).
  unsigned degree() const { return static_cast<unsigned>(components_.size() - 1); }
  bool is_zero() const { return components_.size() == 1 && components_[0].is_zero(); }

  std::span<const HomogeneousPoly<S>> components() const { return components_; }

  HomogeneousPoly<S> component(unsigned l) const {
    return l < components_.size() ? components_[l] : HomogeneousPoly<S>(dim_, l);
  }

  S coefficient(const MultiIndex& i) const {
    const unsigned n = i.total_degree();
    return n < components_.size() ? components_[n].coefficient(i) : ScalarTraits<S>::zero();
  }

  std::size_t term_count() const {
    std::size_t n = 0;
    for (const auto& c : components_) n += c.size();
    return n;
  }

  void add_term(const MultiIndex& i, const S& c) {
    if (i.dimension() != dim_) throw std::invalid_argument("polynomial dimension mismatch");
    slot(i.total_degree()).add_term_unchecked(i, c);
    trim();
  }

  void add(const HomogeneousPoly<S>& h) {
    if (h.dimension() != dim_) throw std::invalid_argument("polynomial dimension mismatch");
    if (h.is_zero()) return;
    slot(h.degree()) += h;
    trim();
  }

  /// Replaces component l (h must have degree l or be zero).
  void set_component(unsigned l, HomogeneousPoly<S> h) {
    if (!h.is_zero() && h.degree() != l) throw std::invalid_argument("component degree mismatch");
    if (h.dimension() != dim_) throw std::invalid_argument("polynomial dimension mismatch");
    if (h.is_zero()) {
      if (l < components_.size()) components_[l] = HomogeneousPoly<S>(dim_, l);
    } else {
      slot(l) = std::move(h);
    }
    trim();
  }

  GradedPoly& operator+=(const GradedPoly& o) {
    check_compatible(o);
    for (const auto& c : o.components_) {
      if (!c.is_zero()) slot(c.degree()) += c;
    }
    trim();
    return *this;
  }

  GradedPoly& operator-=(const GradedPoly& o) {
    check_compatible(o);
    for (const auto& c : o.components_) {
      if (!c.is_zero()) slot(c.degree()) -= c;
    }
    trim();
    return *this;
  }

  GradedPoly& operator*=(const S& a) {
    for (auto& c : components_) c *= a;
    trim();
    return *this;
  }

  friend GradedPoly operator+(GradedPoly a, const GradedPoly& b) { return a += b; }
  friend GradedPoly operator-(GradedPoly a, const GradedPoly& b) { return a -= b; }
  friend GradedPoly operator*(const S& s, GradedPoly a) { return a *= s; }
  friend GradedPoly operator-(GradedPoly a) { return a *= -ScalarTraits<S>::one(); }

  friend bool operator==(const GradedPoly& a, const GradedPoly& b) {
    return a.dim_ == b.dim_ && a.center_ == b.center_ && a.components_ == b.components_;
  }

  double max_magnitude() const {
    double m = 0.0;
    for (const auto& c : components_) m = std::max(m, c.max_magnitude());
    return m;
  }

  /// Float zero-detection pass: drops coefficients whose magnitude is at most
  /// rel_tol times the largest coefficient magnitude. No-op in exact
  /// arithmetic.
  void normalize(double rel_tol = kDefaultZeroTolerance) {
    if constexpr (ScalarTraits<S>::exact) return;
    const double threshold = rel_tol * max_magnitude();
    for (auto& c : components_) c.prune(threshold);
    trim();
  }

  /// Dense coefficient vector over enumerate_graded(d, p). Terms above p are
  /// rejected.
  std::vector<S> flatten(unsigned p) const {
    if (degree() > p) throw std::invalid_argument("flatten: polynomial degree exceeds p");
    std::vector<S> v(dim_polynomials(dim_, p), ScalarTraits<S>::zero());
    for (const auto& c : components_) {
      for (const auto& [i, a] : c.terms()) v[graded_numbering(i)] = a;
    }
    return v;
  }

 private:
  HomogeneousPoly<S>& slot(unsigned l) {
    while (components_.size() <= l) {
      components_.emplace_back(dim_, static_cast<unsigned>(components_.size()));
    }
    return components_[l];
  }

  void trim() {
    while (components_.size() > 1 && components_.back().is_zero()) components_.pop_back();
  }

  void check_compatible(const GradedPoly& o) const {
    if (o.dim_ != dim_) throw std::invalid_argument("polynomial dimension mismatch");
    if (o.center_ != center_) throw std::invalid_argument("polynomials have different centers");
  }

  std::size_t dim_;
  std::vector<double> center_;
  std::vector<HomogeneousPoly<S>> components_;
};

/// d^j P. The result has degree n - |j|, or is the zero polynomial when
/// |j| > n.
template <class S>
HomogeneousPoly<S> derivative(const HomogeneousPoly<S>& p, const MultiIndex& j) {
  if (j.dimension() != p.dimension()) throw std::invalid_argument("derivative: dimension mismatch");
  const unsigned order = j.total_degree();
  if (order > p.degree()) return HomogeneousPoly<S>(p.dimension(), 0);
  HomogeneousPoly<S> out(p.dimension(), p.degree() - order);
  for (const auto& [i, c] : p.terms()) {
    if (!j.componentwise_leq(i)) continue;
    out.add_term_unchecked(i - j, detail::falling_ratio_as<S>(i, j) * c);
  }
  return out;
}

template <class S>
GradedPoly<S> graded_derivative(const GradedPoly<S>& p, const MultiIndex& j) {
  GradedPoly<S> out(p.dimension(), p.center());
  for (const auto& c : p.components()) out.add(derivative(c, j));
  return out;
}

/// Taylor polynomial of order k of a polynomial given in shifted monomials:
/// keeps the components of degree <= k.
template <class S>
GradedPoly<S> taylor_truncate(const GradedPoly<S>& p, unsigned k) {
  GradedPoly<S> out(p.dimension(), p.center());
  for (const auto& c : p.components()) {
    if (c.degree() <= k) out.add(c);
  }
  return out;
}

/// target += a * b, where target has degree deg a + deg b.
template <class S>
void accumulate_product(HomogeneousPoly<S>& target, const HomogeneousPoly<S>& a,
                        const HomogeneousPoly<S>& b) {
  for (const auto& [i, ca] : a.terms()) {
    for (const auto& [j, cb] : b.terms()) target.add_term_unchecked(i + j, ca * cb);
  }
}

template <class S>
HomogeneousPoly<S> homogeneous_product(const HomogeneousPoly<S>& a, const HomogeneousPoly<S>& b) {
  if (a.dimension() != b.dimension()) throw std::invalid_argument("product: dimension mismatch");
  HomogeneousPoly<S> out(a.dimension(), a.degree() + b.degree());
  accumulate_product(out, a, b);
  return out;
}

/// <P, Q> = P(d) conj(Q) evaluated at 0. Canonical monomials are orthogonal
/// with <X^i, X^i> = i!; polynomials of different degrees pair to zero.
template <class S>
S apolar_pairing(const HomogeneousPoly<S>& p, const HomogeneousPoly<S>& q) {
  if (p.dimension() != q.dimension()) throw std::invalid_argument("pairing: dimension mismatch");
  S sum = ScalarTraits<S>::zero();
  if (p.is_zero() || q.is_zero() || p.degree() != q.degree()) return sum;
  for (const auto& [i, c] : p.terms()) {
    auto it = q.terms().find(i);
    if (it == q.terms().end()) continue;
    sum += detail::falling_ratio_as<S>(i, i) * c * ScalarTraits<S>::conj(it->second);
  }
  return sum;
}

template <class To, class From>
HomogeneousPoly<To> convert(const HomogeneousPoly<From>& p) {
  HomogeneousPoly<To> out(p.dimension(), p.degree());
  for (const auto& [i, c] : p.terms()) out.add_term_unchecked(i, scalar_cast<To>(c));
  return out;
}

template <class To, class From>
GradedPoly<To> convert(const GradedPoly<From>& p) {
  GradedPoly<To> out(p.dimension(), p.center());
  for (const auto& c : p.components()) out.add(convert<To>(c));
  return out;
}

}  // namespace qt
