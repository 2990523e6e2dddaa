#include "wblowup/linalg.hpp"

#include "wblowup/errors.hpp"

namespace wblowup {

RowEchelon reduced_row_echelon(RationalMatrix m) {
  RowEchelon out;
  if (m.empty()) return out;
  const std::size_t cols = m.front().size();
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.size() && m[pivot][col].is_zero()) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[row], m[pivot]);
    const Rational inv = Rational(1) / m[row][col];
    for (std::size_t c = col; c < cols; ++c) {
      if (!m[row][c].is_zero()) m[row][c] *= inv;
    }
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col].is_zero()) continue;
      const Rational factor = m[r][col];
      for (std::size_t c = col; c < cols; ++c) {
        if (!m[row][c].is_zero()) m[r][c] -= factor * m[row][c];
      }
    }
    out.pivots.push_back(col);
    ++row;
  }
  m.resize(row);
  out.rows = std::move(m);
  return out;
}

std::optional<std::vector<Rational>> solve_linear(const RationalMatrix& a, const std::vector<Rational>& b) {
  if (a.size() != b.size()) throw ArithmeticError("solve_linear: dimension mismatch");
  if (a.empty()) return std::vector<Rational>{};
  const std::size_t n = a.front().size();
  RationalMatrix aug = a;
  for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
  const RowEchelon e = reduced_row_echelon(std::move(aug));
  std::vector<Rational> x(n, Rational(0));
  for (std::size_t i = 0; i < e.rows.size(); ++i) {
    if (e.pivots[i] == n) return std::nullopt;  // 0 = 1
    x[e.pivots[i]] = e.rows[i][n];
  }
  return x;
}

std::optional<RationalMatrix> invert(const RationalMatrix& m) {
  const std::size_t n = m.size();
  RationalMatrix aug(n);
  for (std::size_t i = 0; i < n; ++i) {
    aug[i] = m[i];
    for (std::size_t j = 0; j < n; ++j) aug[i].push_back(i == j ? Rational(1) : Rational(0));
  }
  const RowEchelon e = reduced_row_echelon(std::move(aug));
  if (e.rows.size() < n || (n > 0 && e.pivots[n - 1] != n - 1)) return std::nullopt;
  RationalMatrix inv(n);
  for (std::size_t i = 0; i < n; ++i) inv[i].assign(e.rows[i].begin() + static_cast<long>(n), e.rows[i].end());
  return inv;
}

RationalMatrix identity_matrix(std::size_t n) {
  RationalMatrix m(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = Rational(1);
  return m;
}

RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b) {
  const std::size_t n = a.size();
  const std::size_t k = b.size();
  const std::size_t m = k == 0 ? 0 : b.front().size();
  RationalMatrix r(n, std::vector<Rational>(m, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t l = 0; l < k; ++l) {
      if (a[i][l].is_zero()) continue;
      for (std::size_t j = 0; j < m; ++j) r[i][j] += a[i][l] * b[l][j];
    }
  }
  return r;
}

LinearChange LinearChange::identity(std::size_t n) {
  LinearChange c;
  c.matrix_ = identity_matrix(n);
  c.inverse_ = c.matrix_;
  c.identity_ = true;
  return c;
}

LinearChange::LinearChange(RationalMatrix matrix) : matrix_(std::move(matrix)) {
  auto inv = invert(matrix_);
  if (!inv) throw ArithmeticError("singular linear coordinate change");
  inverse_ = std::move(*inv);
  identity_ = matrix_ == identity_matrix(matrix_.size());
}

Polynomial apply_linear(const Polynomial& f, const RationalMatrix& m) {
  const auto& vars = f.variables();
  std::vector<Polynomial> images;
  images.reserve(m.size());
  for (std::size_t j = 0; j < m.size(); ++j) {
    Polynomial img(vars);
    for (std::size_t k = 0; k < m[j].size(); ++k) {
      if (!m[j][k].is_zero()) img += Polynomial::variable(vars, k) * m[j][k];
    }
    images.push_back(std::move(img));
  }
  return f.substitute(images);
}

Polynomial LinearChange::to_inner(const Polynomial& f) const {
  if (identity_) return f;
  return apply_linear(f, matrix_);
}

Polynomial LinearChange::to_outer(const Polynomial& g) const {
  if (identity_) return g;
  return apply_linear(g, inverse_);
}

LinearChange LinearChange::then(const LinearChange& inner) const {
  if (inner.identity_) return *this;
  if (identity_) return inner;
  return LinearChange(multiply(matrix_, inner.matrix_));
}

}  // namespace wblowup
