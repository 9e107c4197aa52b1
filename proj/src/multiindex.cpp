#include "qtrefftz/multiindex.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace qt {

unsigned MultiIndex::total_degree() const {
  return std::accumulate(c_.begin(), c_.end(), 0u);
}

bool MultiIndex::componentwise_leq(const MultiIndex& other) const {
  assert(dimension() == other.dimension());
  for (std::size_t g = 0; g < c_.size(); ++g) {
    if (c_[g] > other.c_[g]) return false;
  }
  return true;
}

MultiIndex MultiIndex::operator+(const MultiIndex& other) const {
  assert(dimension() == other.dimension());
  MultiIndex r(*this);
  for (std::size_t g = 0; g < c_.size(); ++g) r.c_[g] += other.c_[g];
  return r;
}

MultiIndex MultiIndex::operator-(const MultiIndex& other) const {
  assert(other.componentwise_leq(*this));
  MultiIndex r(*this);
  for (std::size_t g = 0; g < c_.size(); ++g) r.c_[g] -= other.c_[g];
  return r;
}

std::strong_ordering operator<=>(const MultiIndex& a, const MultiIndex& b) {
  return std::lexicographical_compare_three_way(a.c_.begin(), a.c_.end(), b.c_.begin(),
                                                b.c_.end());
}

std::ostream& operator<<(std::ostream& os, const MultiIndex& i) {
  os << '(';
  for (std::size_t g = 0; g < i.dimension(); ++g) {
    if (g) os << ',';
    os << i[g];
  }
  return os << ')';
}

mpz_class multi_factorial(const MultiIndex& i) {
  mpz_class result = 1;
  mpz_class f;
  for (auto v : i) {
    mpz_fac_ui(f.get_mpz_t(), v);
    result *= f;
  }
  return result;
}

mpz_class falling_ratio(const MultiIndex& j, const MultiIndex& i) {
  if (j.dimension() != i.dimension()) {
    throw std::invalid_argument("falling_ratio: dimension mismatch");
  }
  if (!i.componentwise_leq(j)) return 0;
  mpz_class result = 1;
  for (std::size_t g = 0; g < j.dimension(); ++g) {
    for (auto t = j[g] - i[g] + 1; t <= j[g]; ++t) result *= t;
  }
  return result;
}

bool lex_less(const MultiIndex& mu, const MultiIndex& nu) {
  if (mu.dimension() != nu.dimension()) {
    throw std::invalid_argument("lex_less: dimension mismatch");
  }
  return mu < nu;
}

namespace {

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::size_t r = 1;
  for (std::size_t t = 1; t <= k; ++t) r = r * (n - k + t) / t;
  return r;
}

void enumerate_into(std::vector<MultiIndex>& out, MultiIndex& cur, std::size_t g, unsigned rem) {
  const std::size_t d = cur.dimension();
  if (g + 1 == d) {
    cur[g] = rem;
    out.push_back(cur);
    return;
  }
  for (unsigned v = 0; v <= rem; ++v) {
    cur[g] = v;
    enumerate_into(out, cur, g + 1, rem - v);
  }
  cur[g] = 0;
}

}  // namespace

std::size_t dim_homogeneous(std::size_t d, unsigned n) {
  if (d == 0) return n == 0 ? 1 : 0;
  return binomial(n + d - 1, d - 1);
}

std::size_t dim_polynomials(std::size_t d, unsigned p) { return binomial(p + d, d); }

std::vector<MultiIndex> enumerate_degree(std::size_t d, unsigned n) {
  if (d == 0) throw std::invalid_argument("enumerate_degree: dimension must be >= 1");
  std::vector<MultiIndex> out;
  out.reserve(dim_homogeneous(d, n));
  MultiIndex cur(d);
  enumerate_into(out, cur, 0, n);
  return out;
}

std::vector<MultiIndex> enumerate_graded(std::size_t d, unsigned p) {
  std::vector<MultiIndex> out;
  out.reserve(dim_polynomials(d, p));
  for (unsigned n = 0; n <= p; ++n) {
    auto slice = enumerate_degree(d, n);
    out.insert(out.end(), slice.begin(), slice.end());
  }
  return out;
}

std::size_t slice_numbering(const MultiIndex& s) {
  const std::size_t d = s.dimension();
  unsigned rem = s.total_degree();
  std::size_t count = 0;
  // Every index agreeing with s on components < g and smaller at g precedes s.
  for (std::size_t g = 0; g + 1 < d; ++g) {
    for (unsigned v = 0; v < s[g]; ++v) count += dim_homogeneous(d - g - 1, rem - v);
    rem -= s[g];
  }
  return count;
}

std::size_t graded_numbering(const MultiIndex& s) {
  const unsigned n = s.total_degree();
  return (n == 0 ? 0 : dim_polynomials(s.dimension(), n - 1)) + slice_numbering(s);
}

}  // namespace qt
