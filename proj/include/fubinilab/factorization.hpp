#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "fubinilab/convvect.hpp"

namespace fubinilab {

bool is_injective(const LinMap& f);
bool is_surjective(const LinMap& f);
/// Injective, and a set converges to zero in the domain exactly when its image does.
bool is_strong_mono(const LinMap& f);

/// [A, m] : [A, B] -> [A, C] is injective for every A in the universe.
bool is_v_mono(const LinMap& m, const std::vector<ConvVect>& universe, const Bounds& bounds = {});
/// [e, A] : [B, A] -> [A', A] is injective for every A in the universe.
bool is_v_epi(const LinMap& e, const std::vector<ConvVect>& universe, const Bounds& bounds = {});

/// A subspace spanned by the columns of `basis`, with the structure initial
/// along the inclusion.
struct Subspace {
  ConvVect space;
  LinMap inclusion;
};

Subspace initial_subspace(const ConvVect& e, const Matrix& basis);

/// f = mono . epi, the epi part onto the image and the mono part the initial
/// embedding of the image.
struct Factorization {
  LinMap epi;
  LinMap mono;
};

Factorization epi_strongmono_factorize(const LinMap& f);

/// The square
///
///   [B, C] --[B, m]--> [B, D]
///     |                  |
///   [e, C]             [e, D]
///     v                  v
///   [A, C] --[A, m]--> [A, D]
///
/// for e : A -> B and m : C -> D, and whether it is a pullback.
struct OrthogonalityCertificate {
  InternalHom bc, ac, bd, ad;
  LinMap left, top, right, bottom;
  /// The pullback of bottom and right, as a convergence space.
  Pullback corner;
  /// h -> (h . e, m . h) into the corner.
  std::vector<PointId> comparison;
  bool pullback = false;
  /// empty, "not injective", "not surjective" or "inverse not continuous"
  std::string failure;
  /// Two points of [B, C] with one image, an unreached corner point, or a
  /// corner point followed by a set converging to it whose preimage does not
  /// converge.
  std::vector<PointId> witness;
};

OrthogonalityCertificate is_orthogonal(const LinMap& e, const LinMap& m, const Bounds& bounds = {});

/// Ordinary orthogonality by enumeration of commutative squares: every
/// u : A -> C and v : B -> D with m u = v e have exactly one diagonal.
bool is_orthogonal_ordinary(const LinMap& e, const LinMap& m);

}  // namespace fubinilab
