#pragma once

#include "qtrefftz/differential_operator.hpp"
#include "qtrefftz/multiindex.hpp"
#include "qtrefftz/polynomial.hpp"
#include "qtrefftz/scalar.hpp"

#include <vector>

namespace qt {

/// Row-major dense matrix.
template <class S>
class DenseMatrix {
 public:
  DenseMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, ScalarTraits<S>::zero()) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  S& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const S& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<S> data_;
};

/// D_p(P) by multiplying out every c_j * d^j P in full and truncating
/// afterwards. Independent of the component-wise expansion used by
/// apply_quasi_trefftz.
template <class S>
GradedPoly<S> apply_by_full_product(const OperatorSpec<S>& op, const GradedPoly<S>& p) {
  if (p.degree() > op.degree()) throw DegreeTooHigh(p.degree(), op.degree());
  GradedPoly<S> full(op.dimension(), op.center());
  for (const auto& [j, c] : op.coefficients()) {
    const GradedPoly<S> dp = graded_derivative(p, j);
    for (const auto& a : c.components()) {
      for (const auto& b : dp.components()) full.add(homogeneous_product(a, b));
    }
  }
  return taylor_truncate(full, op.truncation_order());
}

enum class AssemblyRoute { Explicit, FullProduct };

/// Matrix of D_p : P_p -> P_{p-order} in the graded-lex monomial bases.
template <class S>
DenseMatrix<S> assemble_matrix(const OperatorSpec<S>& op,
                               AssemblyRoute route = AssemblyRoute::Explicit) {
  const std::size_t d = op.dimension();
  const auto cols = enumerate_graded(d, op.degree());
  DenseMatrix<S> m(dim_polynomials(d, op.truncation_order()), cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    const auto mono = GradedPoly<S>::monomial(cols[c], ScalarTraits<S>::one(), op.center());
    const GradedPoly<S> image = route == AssemblyRoute::Explicit
                                    ? apply_quasi_trefftz(op, mono)
                                    : apply_by_full_product(op, mono);
    for (const auto& comp : image.components()) {
      for (const auto& [i, a] : comp.terms()) m(graded_numbering(i), c) = a;
    }
  }
  return m;
}

/// Kernel basis by fraction-free elimination: one vector per free column,
/// with a 1 in that column and 0 in the other free columns.
std::vector<std::vector<Rational>> nullspace(const DenseMatrix<Rational>& m);

std::size_t rank(const DenseMatrix<Rational>& m);

/// Matrix whose rows are the given vectors (all of length cols).
DenseMatrix<Rational> rows_matrix(const std::vector<std::vector<Rational>>& vectors,
                                  std::size_t cols);

/// Whether span(A) == span(B) inside P_p, B given as coefficient vectors over
/// enumerate_graded(d, p).
bool spans_equal(const std::vector<GradedPoly<Rational>>& a,
                 const std::vector<std::vector<Rational>>& b, std::size_t dimension, unsigned p);

struct VerificationReport {
  double residual = 0.0;
  bool pass = false;
  unsigned p = 0;
  unsigned gamma = 0;
};

/// residual = max |D_p P| / max |P| (just max |D_p P| when P == 0). In exact
/// arithmetic pass means D_p P is identically zero and tol is ignored.
template <class S>
VerificationReport verify_quasi_trefftz(const OperatorSpec<S>& op, const GradedPoly<S>& p,
                                        double tol = 1e-10) {
  const GradedPoly<S> image = apply_quasi_trefftz(op, p);
  const double scale = p.max_magnitude();
  VerificationReport report;
  report.residual = image.max_magnitude() / (scale > 0.0 ? scale : 1.0);
  report.pass = ScalarTraits<S>::exact ? image.is_zero() : report.residual <= tol;
  report.p = op.degree();
  report.gamma = op.order();
  return report;
}

}  // namespace qt
