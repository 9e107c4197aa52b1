#include "qtrefftz/oracle.hpp"

#include <numeric>
#include <stdexcept>
#include <utility>

namespace qt {

namespace {

struct Echelon {
  std::vector<std::vector<mpz_class>> a;  // integer row echelon form
  std::vector<std::size_t> pivot_cols;
};

// Bareiss elimination with column skipping. After processing pivot r every
// entry below row r is a minor of the (row-scaled) input, so the division by
// the previous pivot is exact.
Echelon echelon(const DenseMatrix<Rational>& m) {
  Echelon e;
  e.a.assign(m.rows(), std::vector<mpz_class>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    mpz_class den = 1;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), m(r, c).get_den_mpz_t());
    }
    for (std::size_t c = 0; c < m.cols(); ++c) {
      e.a[r][c] = m(r, c).get_num() * (den / m(r, c).get_den());
    }
  }

  auto& a = e.a;
  mpz_class prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && sgn(a[piv][c]) == 0) ++piv;
    if (piv == m.rows()) continue;
    std::swap(a[piv], a[r]);
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      for (std::size_t k = c + 1; k < m.cols(); ++k) {
        a[i][k] = a[r][c] * a[i][k] - a[i][c] * a[r][k];
        mpz_divexact(a[i][k].get_mpz_t(), a[i][k].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    e.pivot_cols.push_back(c);
    ++r;
  }
  return e;
}

}  // namespace

std::size_t rank(const DenseMatrix<Rational>& m) { return echelon(m).pivot_cols.size(); }

std::vector<std::vector<Rational>> nullspace(const DenseMatrix<Rational>& m) {
  const Echelon e = echelon(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto c : e.pivot_cols) is_pivot[c] = true;

  std::vector<std::vector<Rational>> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> x(n, Rational(0));
    x[f] = 1;
    for (std::size_t r = e.pivot_cols.size(); r-- > 0;) {
      const std::size_t pc = e.pivot_cols[r];
      Rational sum = 0;
      for (std::size_t k = pc + 1; k < n; ++k) {
        if (sgn(x[k]) != 0 && sgn(e.a[r][k]) != 0) sum += Rational(e.a[r][k]) * x[k];
      }
      x[pc] = -sum / Rational(e.a[r][pc]);
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

DenseMatrix<Rational> rows_matrix(const std::vector<std::vector<Rational>>& vectors,
                                  std::size_t cols) {
  DenseMatrix<Rational> m(vectors.size(), cols);
  for (std::size_t r = 0; r < vectors.size(); ++r) {
    if (vectors[r].size() != cols) throw std::invalid_argument("vector length mismatch");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = vectors[r][c];
  }
  return m;
}

bool spans_equal(const std::vector<GradedPoly<Rational>>& a,
                 const std::vector<std::vector<Rational>>& b, std::size_t dimension, unsigned p) {
  const std::size_t n = dim_polynomials(dimension, p);
  std::vector<std::vector<Rational>> va;
  va.reserve(a.size());
  for (const auto& poly : a) {
    if (poly.dimension() != dimension) throw std::invalid_argument("polynomial dimension mismatch");
    va.push_back(poly.flatten(p));
  }
  const std::size_t ra = rank(rows_matrix(va, n));
  const std::size_t rb = rank(rows_matrix(b, n));
  if (ra != rb) return false;
  std::vector<std::vector<Rational>> both = va;
  both.insert(both.end(), b.begin(), b.end());
  return rank(rows_matrix(both, n)) == ra;
}

}  // namespace qt
