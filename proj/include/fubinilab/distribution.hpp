#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "fubinilab/convspace.hpp"
#include "fubinilab/convvect.hpp"
#include "fubinilab/linalg.hpp"

namespace fubinilab {

/// The part of a finite space that D sees: its connected components.
class Components {
 public:
  static Components of(const ConvSpace& z);
  /// n isolated points.
  static Components discrete(std::size_t n);

  std::size_t points() const noexcept { return comp_.size(); }
  std::size_t rank() const noexcept { return reps_.size(); }
  std::size_t operator[](PointId z) const { return comp_[z]; }
  /// Least point of component c.
  PointId representative(std::size_t c) const { return reps_[c]; }

  bool operator==(const Components& o) const { return comp_ == o.comp_; }

 private:
  std::vector<std::size_t> comp_;
  std::vector<PointId> reps_;
};

/// Finitely supported coefficients indexed by points of a discrete space.
using SparseMeasure = std::vector<std::pair<PointId, int>>;

SparseMeasure sparse(const Vector& v);
Vector dense(const SparseMeasure& s, std::size_t n, const Field& f);

/// Monad data on finite spaces whose value at Z is a vector space
/// F_p^{rank Z} carried by a discrete space. Elements of T Z are coordinate
/// vectors; elements of T T Z are measures over the points of T Z, indexed
/// by the point encoding of the coordinates.
class MonadOps {
 public:
  virtual ~MonadOps() = default;

  virtual const Field& field() const = 0;
  /// unit at Z, applied to z.
  virtual Vector unit(const Components& z, PointId x) const = 0;
  /// T f applied to a measure on Z, f given on points.
  virtual SparseMeasure map(const Components& z, const Components& w, const std::vector<PointId>& f,
                            const SparseMeasure& mu) const = 0;
  /// mult at Z applied to an element of T T Z.
  virtual Vector mult(const Components& z, const SparseMeasure& phi) const = 0;

  /// Points of T Z; throws BoundExceeded past `cap`.
  std::size_t points(const Components& z, std::size_t cap = kMaxMaterializedPoints) const;
  /// T Z as a discrete space.
  Components level(const Components& z) const { return Components::discrete(points(z)); }
  PointId encode(const Vector& mu) const { return fubinilab::encode(mu, field()); }
  Vector decode(const Components& z, PointId u) const { return fubinilab::decode(u, z.rank(), field()); }

  Vector map_dense(const Components& z, const Components& w, const std::vector<PointId>& f, const Vector& mu) const {
    return dense(map(z, w, f, sparse(mu)), w.rank(), field());
  }
  Vector mult_dense(const Components& z, const Vector& phi) const { return mult(z, sparse(phi)); }
};

/// The natural distribution monad D Z = [[Z, R], R].
///
/// Continuous functions Z -> F_p are constant on components, so [Z, R] has
/// the component indicators e_c as a basis and carries the discrete
/// structure; so does its dual. A distribution is recorded by its values on
/// the e_c. The unit is the Dirac functional and the multiplication is
/// precomposition with sigma(g) = (phi -> phi(g)).
class DistributionMonad final : public MonadOps {
 public:
  explicit DistributionMonad(Field f) : field_(std::move(f)) {}

  const Field& field() const override { return field_; }
  Vector unit(const Components& z, PointId x) const override;
  SparseMeasure map(const Components& z, const Components& w, const std::vector<PointId>& f,
                    const SparseMeasure& mu) const override;
  Vector mult(const Components& z, const SparseMeasure& phi) const override;

  /// mu(g) for a continuous g : Z -> F_p given on points.
  int apply(const Components& z, const Vector& mu, const std::vector<int>& g) const;
  /// T f computed as the functional g -> mu(g o f), one component at a time.
  Vector map_by_precomposition(const Components& z, const Components& w, const std::vector<PointId>& f,
                               const Vector& mu) const;

 private:
  Field field_;
};

/// The monad obtained from `base` by transporting along the invertible
/// maps theta_Z = S_{rank Z}, where S_k e_c = e_c + e_{c+1} (e_{k-1} fixed).
/// theta is then an isomorphism of monads base -> transported.
class TransportedMonad final : public MonadOps {
 public:
  explicit TransportedMonad(const MonadOps& base) : base_(base) {}

  const Field& field() const override { return base_.field(); }
  Vector unit(const Components& z, PointId x) const override;
  SparseMeasure map(const Components& z, const Components& w, const std::vector<PointId>& f,
                    const SparseMeasure& mu) const override;
  Vector mult(const Components& z, const SparseMeasure& phi) const override;

  Vector theta(std::size_t rank, const Vector& mu) const;
  Vector theta_inverse(std::size_t rank, const Vector& mu) const;

 private:
  const MonadOps& base_;
};

/// Carrier of D X computed from the vector-space layer: the dual of the
/// cotensor [X, R].
struct DistributionCarrier {
  Cotensor functions;
  InternalHom distributions;
};

DistributionCarrier distribution_carrier(const ConvSpace& x, const Field& f, Axioms axioms, const Bounds& bounds = {});

/// Result of the exact monad-law checks at one object.
struct MonadLawReport {
  bool left_unit = true;   // mult . T(unit) = id
  bool right_unit = true;  // mult . unit_T = id
  bool associative = true; // mult . T(mult) = mult . mult_T, on the basis of T T T Z
  bool unit_natural = true;
  bool mult_natural = true;
  std::size_t checked = 0;

  bool ok() const { return left_unit && right_unit && associative && unit_natural && mult_natural; }
};

/// Unit and associativity laws at z. Associativity is compared on the basis
/// of T T T Z; both sides are linear.
MonadLawReport check_monad_laws(const MonadOps& t, const Components& z, std::size_t cap = kMaxMaterializedPoints);
/// Naturality of unit and mult along f : Z -> W.
MonadLawReport check_naturality(const MonadOps& t, const Components& z, const Components& w, const std::vector<PointId>& f,
                                std::size_t cap = kMaxMaterializedPoints);

/// D over a finite universe of spaces: carriers cross-checked against the
/// vector-space layer, laws at every object, naturality along every
/// continuous map between universe objects.
struct DistributionInstance {
  std::vector<ConvSpace> universe;
  std::vector<DistributionCarrier> carriers;
  MonadLawReport laws;
  std::size_t objects_checked = 0;
  std::size_t maps_checked = 0;
};

/// Throws MismatchedConstructions when a carrier disagrees with the component description.
DistributionInstance distribution_monad(const std::vector<ConvSpace>& universe, const DistributionMonad& d, Axioms axioms,
                                        const Bounds& bounds = {});

}  // namespace fubinilab
