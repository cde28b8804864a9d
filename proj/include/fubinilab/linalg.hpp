#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include <Eigen/Core>

#include "fubinilab/scalars.hpp"
#include "fubinilab/subset.hpp"

namespace fubinilab {

/// Dense matrices over F_p. Entries are kept reduced into 0..p-1; products
/// are formed in `int` and reduced afterwards, which is exact for the
/// dimensions this library materializes.
using Matrix = Eigen::Matrix<int, Eigen::Dynamic, Eigen::Dynamic>;
using Vector = Eigen::Matrix<int, Eigen::Dynamic, 1>;

template <typename Derived>
auto mod_p(const Eigen::MatrixBase<Derived>& m, const Field& f) {
  const int p = f.characteristic();
  return m.unaryExpr([p](int v) { return ((v % p) + p) % p; }).eval();
}

inline Matrix mat_mul(const Matrix& a, const Matrix& b, const Field& f) { return mod_p(a * b, f); }
inline Vector mat_vec(const Matrix& a, const Vector& v, const Field& f) { return mod_p(a * v, f); }

/// p^dim, or nullopt when it exceeds `cap`.
std::optional<std::size_t> point_count(std::size_t dim, const Field& f, std::size_t cap);

/// Point index of a coordinate vector: sum of c_i p^i.
PointId encode(const Vector& v, const Field& f);
Vector decode(PointId index, std::size_t dim, const Field& f);

/// Reduced row echelon form; returns the pivot columns.
std::vector<std::size_t> rref_in_place(Matrix& m, const Field& f);

std::size_t rank(Matrix m, const Field& f);

/// Columns spanning the null space of m.
Matrix kernel(const Matrix& m, const Field& f);

/// Some x with a x = b, if one exists.
std::optional<Vector> solve(const Matrix& a, const Vector& b, const Field& f);

std::optional<Matrix> inverse(const Matrix& m, const Field& f);

/// Canonical basis (columns) of the span of the given columns: the
/// transposed nonzero rows of the reduced row echelon form.
Matrix canonical_basis(const Matrix& columns, const Field& f);

/// Columns of `a` that are also in the column span of `b`: basis of the intersection.
Matrix intersect_spans(const Matrix& a, const Matrix& b, const Field& f);

/// Column-major flattening of a matrix into a vector and back.
Vector flatten(const Matrix& m);
Matrix unflatten(const Vector& v, Eigen::Index rows, Eigen::Index cols);

}  // namespace fubinilab
