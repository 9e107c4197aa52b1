#pragma once

#include <boost/container/small_vector.hpp>
#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <vector>

namespace qt {

/// Exponent tuple of a monomial (X - x0)^i, or the order of a partial
/// derivative. The dimension is fixed at construction.
///
/// The built-in ordering (operator<=>) is plain lexicographic on the
/// components, which is the order used throughout to sequence unknowns.
class MultiIndex {
 public:
  using value_type = std::uint32_t;

  MultiIndex() = default;
  explicit MultiIndex(std::size_t dimension) : c_(dimension, 0) {}
  MultiIndex(std::initializer_list<value_type> components) : c_(components) {}
  explicit MultiIndex(std::span<const value_type> components)
      : c_(components.begin(), components.end()) {}

  std::size_t dimension() const { return c_.size(); }

  value_type operator[](std::size_t g) const { return c_[g]; }
  value_type& operator[](std::size_t g) { return c_[g]; }

  auto begin() const { return c_.begin(); }
  auto end() const { return c_.end(); }

  unsigned total_degree() const;

  /// Componentwise i <= j.
  bool componentwise_leq(const MultiIndex& other) const;

  MultiIndex operator+(const MultiIndex& other) const;
  /// Requires other <= *this componentwise.
  MultiIndex operator-(const MultiIndex& other) const;

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
  friend std::strong_ordering operator<=>(const MultiIndex& a, const MultiIndex& b);

 private:
  boost::container::small_vector<value_type, 4> c_;
};

std::ostream& operator<<(std::ostream& os, const MultiIndex& i);

inline unsigned total_degree(const MultiIndex& i) { return i.total_degree(); }

/// Product of the factorials of the components.
mpz_class multi_factorial(const MultiIndex& i);

/// j!/(j-i)! when i <= j componentwise, 0 otherwise.
mpz_class falling_ratio(const MultiIndex& j, const MultiIndex& i);

/// Strict lexicographic order: first differing component decides.
bool lex_less(const MultiIndex& mu, const MultiIndex& nu);

/// Number of d-tuples of non-negative integers summing to n.
std::size_t dim_homogeneous(std::size_t d, unsigned n);
/// Number of monomials of total degree <= p in d variables.
std::size_t dim_polynomials(std::size_t d, unsigned p);

/// All multi-indices of dimension d and total degree n, lex-increasing.
std::vector<MultiIndex> enumerate_degree(std::size_t d, unsigned n);

/// Degrees 0..p concatenated, each slice lex-increasing.
std::vector<MultiIndex> enumerate_graded(std::size_t d, unsigned p);

/// 0-based position of s inside enumerate_degree(s.dimension(), |s|).
std::size_t slice_numbering(const MultiIndex& s);

/// Position of s inside enumerate_graded(s.dimension(), p) for any p >= |s|.
std::size_t graded_numbering(const MultiIndex& s);

}  // namespace qt
