#include "fubinilab/linalg.hpp"

namespace fubinilab {

std::optional<std::size_t> point_count(std::size_t dim, const Field& f, std::size_t cap) {
  std::size_t n = 1;
  for (std::size_t i = 0; i < dim; ++i) {
    n *= static_cast<std::size_t>(f.characteristic());
    if (n > cap) return std::nullopt;
  }
  return n;
}

PointId encode(const Vector& v, const Field& f) {
  PointId idx = 0;
  for (Eigen::Index i = v.size(); i-- > 0;) idx = idx * static_cast<PointId>(f.characteristic()) + static_cast<PointId>(v(i));
  return idx;
}

Vector decode(PointId index, std::size_t dim, const Field& f) {
  Vector v(static_cast<Eigen::Index>(dim));
  const auto p = static_cast<PointId>(f.characteristic());
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    v(i) = static_cast<int>(index % p);
    index /= p;
  }
  return v;
}

std::vector<std::size_t> rref_in_place(Matrix& m, const Field& f) {
  std::vector<std::size_t> pivots;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Eigen::Index pivot = -1;
    for (Eigen::Index r = row; r < m.rows(); ++r) {
      if (m(r, col) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    m.row(row).swap(m.row(pivot));
    const int inv = f.inv(m(row, col));
    m.row(row) = mod_p(m.row(row) * inv, f);
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == 0) continue;
      const int factor = m(r, col);
      m.row(r) = mod_p(m.row(r) - factor * m.row(row), f);
    }
    pivots.push_back(static_cast<std::size_t>(col));
    ++row;
  }
  return pivots;
}

std::size_t rank(Matrix m, const Field& f) { return rref_in_place(m, f).size(); }

Matrix kernel(const Matrix& m, const Field& f) {
  Matrix r = m;
  auto pivots = rref_in_place(r, f);
  std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (Eigen::Index free = 0; free < m.cols(); ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    Vector v = Vector::Zero(m.cols());
    v(free) = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) v(static_cast<Eigen::Index>(pivots[k])) = f.neg(r(static_cast<Eigen::Index>(k), free));
    basis.push_back(v);
  }
  Matrix out(m.cols(), static_cast<Eigen::Index>(basis.size()));
  for (std::size_t k = 0; k < basis.size(); ++k) out.col(static_cast<Eigen::Index>(k)) = basis[k];
  return out;
}

std::optional<Vector> solve(const Matrix& a, const Vector& b, const Field& f) {
  Matrix aug(a.rows(), a.cols() + 1);
  aug << a, b;
  auto pivots = rref_in_place(aug, f);
  Vector x = Vector::Zero(a.cols());
  for (std::size_t k = 0; k < pivots.size(); ++k) {
    if (pivots[k] == static_cast<std::size_t>(a.cols())) return std::nullopt;
    x(static_cast<Eigen::Index>(pivots[k])) = aug(static_cast<Eigen::Index>(k), a.cols());
  }
  return x;
}

std::optional<Matrix> inverse(const Matrix& m, const Field& f) {
  if (m.rows() != m.cols()) return std::nullopt;
  const Eigen::Index n = m.rows();
  Matrix aug(n, 2 * n);
  aug << m, Matrix::Identity(n, n);
  auto pivots = rref_in_place(aug, f);
  if (static_cast<Eigen::Index>(pivots.size()) < n || (n > 0 && pivots[static_cast<std::size_t>(n - 1)] >= static_cast<std::size_t>(n)))
    return std::nullopt;
  return Matrix(aug.rightCols(n));
}

Matrix canonical_basis(const Matrix& columns, const Field& f) {
  Matrix rows = columns.transpose();
  auto pivots = rref_in_place(rows, f);
  return rows.topRows(static_cast<Eigen::Index>(pivots.size())).transpose();
}

Matrix intersect_spans(const Matrix& a, const Matrix& b, const Field& f) {
  // a x = b y  <=>  [a | -b] (x; y) = 0
  Matrix joint(a.rows(), a.cols() + b.cols());
  joint << a, mod_p(-b, f);
  Matrix k = kernel(joint, f);
  Matrix span = mod_p(a * k.topRows(a.cols()), f);
  return canonical_basis(span, f);
}

Vector flatten(const Matrix& m) {
  Vector v(m.size());
  for (Eigen::Index c = 0; c < m.cols(); ++c) v.segment(c * m.rows(), m.rows()) = m.col(c);
  return v;
}

Matrix unflatten(const Vector& v, Eigen::Index rows, Eigen::Index cols) {
  Matrix m(rows, cols);
  for (Eigen::Index c = 0; c < cols; ++c) m.col(c) = v.segment(c * rows, rows);
  return m;
}

}  // namespace fubinilab
