#pragma once

#include <cstddef>
#include <vector>

#include "fubinilab/convspace.hpp"
#include "fubinilab/convvect.hpp"
#include "fubinilab/dualization.hpp"

namespace fubinilab {

/// H f is an isomorphism.
bool inverted_by_double_dual(const LinMap& f, const Bounds& bounds = {});

/// Every continuous linear map between universe objects inverted by H.
std::vector<LinMap> sigma_inverted(const std::vector<ConvVect>& universe, const Bounds& bounds = {});

/// Every h : A -> B in sigma makes [h, E] : [B, E] -> [A, E] an isomorphism.
bool is_complete(const ConvVect& e, const std::vector<LinMap>& sigma, const Bounds& bounds = {});

/// The reflection of E into the objects complete for sigma. Each round
/// replaces the current object by the image of its evaluation map.
struct Completion {
  ConvVect space;
  LinMap unit;
  std::size_t rounds = 0;
  /// Objects visited, starting from E.
  std::vector<ConvVect> chain;
};

/// Throws IterationBudgetExhausted when no complete object is reached
/// within `budget` rounds.
Completion completion(const ConvVect& e, const std::vector<LinMap>& sigma, std::size_t budget = 8,
                      const Bounds& bounds = {});

/// The unique linear m with m * samples = images, as a map dom -> cod.
/// Throws MismatchedConstructions when the samples do not determine one.
LinMap linear_from_samples(const ConvVect& dom, const ConvVect& cod, const Matrix& samples, const Matrix& images);

/// K f : K A -> K B, the unique map with K f . unit_A = unit_B . f.
LinMap completion_map(const Completion& a, const Completion& b, const LinMap& f);

/// The comparison i_E : K E -> H E, computed as the map through which the
/// evaluation map factors and again as (H unit)^-1 . evaluation at K E.
/// Throws MismatchedConstructions when the two differ.
LinMap completion_comparison(const Completion& k, const Bounds& bounds = {});

/// Laws of i : K -> H as a morphism of monads, checked over a universe.
struct CompletionMorphismReport {
  std::vector<Completion> completions;
  std::vector<LinMap> components;
  bool strong_monos = true;     // every component is a strong mono
  bool unit_triangle = true;    // i . unit = evaluation
  bool multiplicative = true;   // i . mult_K = mult_H . H(i) . i_K
  bool natural = true;          // along every map between universe objects
  std::size_t maps_checked = 0;

  bool ok() const { return strong_monos && unit_triangle && multiplicative && natural; }
};

CompletionMorphismReport completion_monad_morphism(const std::vector<ConvVect>& universe, const std::vector<LinMap>& sigma,
                                                   const Bounds& bounds = {});

/// The evaluation map of the dual of the free object, followed by the dual
/// of the evaluation map of the free object, is the identity.
bool reflexivity_retraction_check(const ConvSpace& x, const Field& f, Axioms axioms, const Bounds& bounds = {});

/// K(C1 (x) C2).
struct DayTensor {
  TensorProduct raw;
  Completion completed;
};

DayTensor day_reflection_tensor(const ConvVect& c1, const ConvVect& c2, const std::vector<LinMap>& sigma,
                                const Bounds& bounds = {});
/// C -> K(K R (x) C), c -> unit(unit_R(1) (x) c).
LinMap day_left_unitor(const DayTensor& rc, const Completion& kr);
/// K(C1 (x) C2) -> K(C2 (x) C1).
LinMap day_symmetry(const DayTensor& c12, const DayTensor& c21);
/// K(K(C1 (x) C2) (x) C3) -> K(C1 (x) K(C2 (x) C3)) on pure tensors of basis vectors.
LinMap day_associator(const DayTensor& c12, const DayTensor& c12_3, const DayTensor& c23, const DayTensor& c1_23);

}  // namespace fubinilab
