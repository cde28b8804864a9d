#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "fubinilab/convspace.hpp"
#include "fubinilab/linalg.hpp"
#include "fubinilab/scalars.hpp"

namespace fubinilab {

/// Limits on what the vector-space layer materializes.
struct Bounds {
  /// Largest carrier a free object, tensor, hom or cotensor may have
  /// when its convergence must be computed by enumeration.
  std::size_t carrier = 64;
  /// Largest carrier of any discrete coordinate space or candidate set.
  std::size_t enumeration = kMaxMaterializedPoints;
};

/// Finite-dimensional vector space over F_p with a convergence structure
/// for which addition and every scalar multiplication are continuous.
///
/// Points are coordinate vectors in F_p^dim, indexed by sum c_i p^i. Such a
/// structure is translation invariant, so it is determined by the family
/// converging to zero; that family is stored through its generators.
class ConvVect {
 public:
  /// Validates that the family generated by `zero_gens` contains {0} and is
  /// closed under sums and scalar multiples, and under unions in limit mode.
  /// Throws InvalidArgument otherwise.
  ConvVect(Field field, std::size_t dim, std::vector<Subset> zero_gens, Axioms axioms);

  /// Least vector convergence whose zero family contains the seeds.
  static ConvVect closure(Field field, std::size_t dim, std::vector<Subset> seeds, Axioms axioms);

  const Field& field() const noexcept { return field_; }
  std::size_t dim() const noexcept { return dim_; }
  Axioms axioms() const noexcept { return axioms_; }
  const std::vector<Subset>& zero_generators() const noexcept { return zero_gens_; }

  /// Number of points; throws BoundExceeded beyond the materialization cap.
  std::size_t size() const;

  PointId add(PointId u, PointId v) const;
  PointId neg(PointId u) const;
  PointId sub(PointId u, PointId v) const { return add(u, neg(v)); }
  PointId smul(int c, PointId u) const;
  Vector coords(PointId u) const { return decode(u, dim_, field_); }
  PointId point(const Vector& v) const { return encode(mod_p(v, field_), field_); }

  /// v + A.
  Subset translate(const Subset& a, PointId v) const;

  bool converges(const Subset& a, PointId v) const;
  bool converges_to_zero(const Subset& a) const { return !a.empty() && covered(a, zero_gens_); }

  /// Points v with {v} converging to 0; always a subspace.
  Subset support() const;
  bool is_discrete() const;

  /// The underlying convergence space G(E). Throws BoundExceeded past `bound` points.
  ConvSpace underlying(std::size_t bound = kMaxMaterializedPoints) const;

  bool operator==(const ConvVect& other) const {
    return field_ == other.field_ && dim_ == other.dim_ && zero_gens_ == other.zero_gens_;
  }

 private:
  Field field_;
  std::size_t dim_;
  std::vector<Subset> zero_gens_;
  Axioms axioms_;
};

/// Continuous linear map, given by its matrix in coordinates.
class LinMap {
 public:
  /// Throws NotContinuous when some generator of the zero family is not sent
  /// into a set converging to zero, DimensionMismatch on a shape mismatch.
  LinMap(ConvVect dom, ConvVect cod, Matrix m);

  /// Reads a point function as a linear map. Throws NotLinearizable unless it
  /// is additive and homogeneous on all pairs, NotContinuous unless continuous.
  static LinMap from_points(const ConvVect& dom, const ConvVect& cod, const std::vector<PointId>& table);

  static LinMap identity(const ConvVect& e);
  static LinMap zero(const ConvVect& dom, const ConvVect& cod);

  const ConvVect& dom() const noexcept { return dom_; }
  const ConvVect& cod() const noexcept { return cod_; }
  const Matrix& matrix() const noexcept { return m_; }

  PointId operator()(PointId u) const;
  Subset image(const Subset& a) const;
  std::vector<PointId> table() const;
  /// The underlying continuous map G(f).
  ContMap underlying(std::size_t bound = kMaxMaterializedPoints) const;

  bool operator==(const LinMap& other) const { return dom_ == other.dom_ && cod_ == other.cod_ && m_ == other.m_; }

 private:
  ConvVect dom_;
  ConvVect cod_;
  Matrix m_;
};

/// g after f.
LinMap compose(const LinMap& g, const LinMap& f);

/// Whether a matrix defines a continuous linear map dom -> cod.
bool is_continuous_linear(const ConvVect& dom, const ConvVect& cod, const Matrix& m);

/// Inverse when f is bijective with continuous inverse.
std::optional<LinMap> is_isomorphism(const LinMap& f);

ConvVect scalar_object(const Field& f, Axioms axioms = Axioms::limit);
ConvVect zero_space(const Field& f, Axioms axioms = Axioms::limit);

/// Every vector convergence on F_p^d with p^d <= max_points, by dimension
/// then by generator list.
std::vector<ConvVect> enumerate_convvects(const Field& f, std::size_t max_points, Axioms axioms);

/// Free vector space on X: basis vector e_x for each point x.
struct FreeObject {
  ConvVect space;
  ConvSpace base;
  /// x -> e_x, continuous into G(FX).
  std::vector<PointId> insertion;

  ContMap insertion_map() const { return ContMap(base, space.underlying(), insertion); }
};

FreeObject free(const ConvSpace& x, const Field& f, Axioms axioms, std::size_t bound = 64);

/// Unique linear extension of a continuous f : X -> G(E) along insertion.
/// `images[x]` is f(x). Throws NotLinearizable when the extension is not continuous.
LinMap free_transpose(const FreeObject& fx, const ConvVect& e, const std::vector<PointId>& images);
/// Restriction along insertion: the inverse bijection.
ContMap restriction(const FreeObject& fx, const LinMap& g);
/// F on maps: the transpose of insertion after f.
LinMap free_map(const FreeObject& fx, const FreeObject& fy, const ContMap& f);
/// Counit of free -| forgetful at E: the transpose of the identity on G(E).
LinMap counit(const FreeObject& fge, const ConvVect& e);

/// Tensor product with the canonical bilinear map u1, u2 -> u1 (x) u2.
/// Basis vector e_i (x) e_j has index i * dim2 + j.
struct TensorProduct {
  ConvVect space;
  ConvVect left;
  ConvVect right;

  PointId pure(PointId u1, PointId u2) const;
};

TensorProduct tensor(const ConvVect& e1, const ConvVect& e2, std::size_t bound = 64);

/// Whether a point function E1 x E2 -> E3, indexed by the product pairing,
/// is bilinear and continuous on the product of underlying spaces.
bool is_continuous_bilinear(const ConvVect& e1, const ConvVect& e2, const ConvVect& e3,
                            const std::vector<PointId>& table);
/// The linear map out of the tensor product induced by a bilinear table.
LinMap bilinear_transpose(const TensorProduct& t, const ConvVect& e3, const std::vector<PointId>& table);

/// e1 (x) e2 -> e2 (x) e1.
LinMap tensor_symmetry(const TensorProduct& t12, const TensorProduct& t21);
/// f (x) g.
LinMap tensor_map(const TensorProduct& from, const TensorProduct& to, const LinMap& f, const LinMap& g);

/// FX (x) FY -> F(X x Y) together with its inverse.
struct MonoidalIso {
  LinMap forward;
  LinMap backward;
};

MonoidalIso strong_monoidal_iso(const FreeObject& fx, const FreeObject& fy, const TensorProduct& t,
                                const FreeObject& fxy, const Product& xy);

/// Continuous linear maps E1 -> E2 with continuous convergence. Points are
/// coefficient vectors over `basis`, a canonical basis of the hom subspace
/// whose members are flattened (column-major) dim2 x dim1 matrices.
struct InternalHom {
  ConvVect space;
  ConvVect dom;
  ConvVect cod;
  Matrix basis;

  Matrix element(PointId h) const;
  /// Point of a continuous linear map; nullopt when the matrix is not in the hom.
  std::optional<PointId> index_of(const Matrix& m) const;
  /// ev(h, u) = h(u).
  PointId eval(PointId h, PointId u) const;
};

InternalHom internal_hom(const ConvVect& e1, const ConvVect& e2, const Bounds& bounds = {});

/// Dual space E* = [E, R]. Basis members are functionals (rows).
InternalHom dual(const ConvVect& e, const Bounds& bounds = {});
/// f* : E2* -> E1*, precomposition with f : E1 -> E2.
LinMap dual_map(const InternalHom& d1, const InternalHom& d2, const LinMap& f);
/// Precomposition [h, E] : [B, E] -> [A, E] for h : A -> B.
LinMap precompose(const InternalHom& from, const InternalHom& to, const LinMap& h);
/// Postcomposition [A, h] : [A, E] -> [A, E'] for h : E -> E'.
LinMap postcompose(const InternalHom& from, const InternalHom& to, const LinMap& h);

/// Space of continuous maps X -> G(E) with pointwise operations and
/// continuous convergence. Basis members are functions, stored as
/// stacked coordinates (block x holds the value at x).
struct Cotensor {
  ConvVect space;
  ConvSpace base;
  ConvVect values;
  Matrix basis;

  /// The function at h, as a table of points of E.
  std::vector<PointId> function(PointId h) const;
  std::optional<PointId> index_of(const std::vector<PointId>& function) const;
};

Cotensor cotensor(const ConvSpace& x, const ConvVect& e, const Bounds& bounds = {});

/// [X, E] -> [FX, E], f -> (e_x -> f(x)); checked to be an isomorphism.
LinMap cotensor_to_hom(const Cotensor& c, const FreeObject& fx, const InternalHom& h);

/// Connected components of the convergence relation, numbered by least point.
std::vector<std::size_t> components(const ConvSpace& x);

}  // namespace fubinilab
