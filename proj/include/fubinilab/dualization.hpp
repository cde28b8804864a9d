#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "fubinilab/convvect.hpp"

namespace fubinilab {

/// E, E*, E**, ... up to a fixed depth. Level 0 is E and level i is the
/// dual of level i - 1.
class DualTower {
 public:
  DualTower(ConvVect e, std::size_t depth, const Bounds& bounds = {});

  std::size_t depth() const noexcept { return duals_.size(); }
  const ConvVect& space(std::size_t i) const { return i == 0 ? base_ : at(i).space; }
  /// Level i as the dual of level i - 1 (i >= 1).
  const InternalHom& at(std::size_t i) const;

  /// The evaluation map at level i: space(i) -> space(i + 2), e -> (phi -> phi(e)).
  LinMap unit(std::size_t i) const;
  /// The dual of the evaluation map at level i + 1: space(i + 4) -> space(i + 2).
  LinMap mult(std::size_t i) const;

 private:
  ConvVect base_;
  std::vector<InternalHom> duals_;
};

/// g* : b.space(j + 1) -> a.space(i + 1) for g : a.space(i) -> b.space(j).
LinMap dual_of(const DualTower& a, std::size_t i, const DualTower& b, std::size_t j, const LinMap& g);
/// g** : a.space(i + 2) -> b.space(j + 2) for g : a.space(i) -> b.space(j).
LinMap double_dual_of(const DualTower& a, std::size_t i, const DualTower& b, std::size_t j, const LinMap& g);

struct ReflexivityVerdict {
  bool reflexive = false;
  /// empty, "not injective", "not surjective" or "inverse not continuous"
  std::string failure;
  /// A nonzero kernel point of E, a point of E** outside the image, or a
  /// set converging to zero in E** whose preimage does not converge.
  std::vector<PointId> witness;
  std::optional<LinMap> inverse;
};

ReflexivityVerdict is_reflexive(const ConvVect& e, const Bounds& bounds = {});
ReflexivityVerdict is_reflexive(const DualTower& tower);

struct DoubleDualLawReport {
  bool left_unit = false;   // mult . H(unit) = id
  bool right_unit = false;  // mult . unit_H = id
  bool associative = false; // mult . H(mult) = mult . mult_H

  bool ok() const { return left_unit && right_unit && associative; }
};

/// Needs a tower of depth 6.
DoubleDualLawReport check_double_dual_laws(const DualTower& tower);

/// H f . unit = unit . f and H(g . f) = H g . H f data for f : a.space(0) -> b.space(0).
bool unit_natural(const DualTower& a, const DualTower& b, const LinMap& f);

/// H over a finite universe of vector convergence spaces.
struct DoubleDualInstance {
  std::vector<DualTower> towers;
  bool laws = true;
  bool unit_natural = true;
  std::size_t maps_checked = 0;
};

/// Laws at every object and naturality of the unit along every continuous
/// linear map between universe objects.
DoubleDualInstance double_dualization_monad(const std::vector<ConvVect>& universe, const Bounds& bounds = {});

/// Every continuous linear map a -> b, by matrix enumeration.
std::vector<LinMap> linear_maps(const ConvVect& a, const ConvVect& b, std::size_t cap = kMaxMaterializedPoints);

}  // namespace fubinilab
