#ifndef WBLOWUP_LINALG_HPP
#define WBLOWUP_LINALG_HPP

#include "wblowup/polynomial.hpp"
#include "wblowup/rational.hpp"

#include <optional>
#include <vector>

namespace wblowup {

using RationalMatrix = std::vector<std::vector<Rational>>;

struct RowEchelon {
  RationalMatrix rows;               // nonzero rows only, pivots normalized to 1
  std::vector<std::size_t> pivots;   // pivot column of each row
};

/// Reduced row echelon form by exact Gauss-Jordan elimination.
RowEchelon reduced_row_echelon(RationalMatrix m);

/// One solution of A x = b with free variables set to zero, if any exists.
std::optional<std::vector<Rational>> solve_linear(const RationalMatrix& a, const std::vector<Rational>& b);

std::optional<RationalMatrix> invert(const RationalMatrix& m);

RationalMatrix identity_matrix(std::size_t n);
RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b);

/// Invertible linear coordinate change x = A z on a fixed variable list. The
/// z-coordinates reuse the slot positions (and names) of the x-coordinates.
class LinearChange {
public:
  LinearChange() = default;
  static LinearChange identity(std::size_t n);
  /// Throws ArithmeticError if the matrix is singular.
  explicit LinearChange(RationalMatrix matrix);

  std::size_t size() const { return matrix_.size(); }
  bool is_identity() const { return identity_; }
  const RationalMatrix& matrix() const { return matrix_; }
  const RationalMatrix& inverse() const { return inverse_; }

  /// f(x) rewritten in z-coordinates: f(A z).
  Polynomial to_inner(const Polynomial& f) const;
  /// g(z) rewritten in x-coordinates: g(A^{-1} x).
  Polynomial to_outer(const Polynomial& g) const;

  /// (this then inner): x = A z, z = B w  gives  x = (A B) w.
  LinearChange then(const LinearChange& inner) const;

private:
  RationalMatrix matrix_;
  RationalMatrix inverse_;
  bool identity_ = true;
};

/// Applies the linear map rows: image of variable j is sum_k m[j][k] * var_k.
Polynomial apply_linear(const Polynomial& f, const RationalMatrix& m);

}  // namespace wblowup

#endif  // WBLOWUP_LINALG_HPP
