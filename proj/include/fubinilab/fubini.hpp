#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "fubinilab/convspace.hpp"
#include "fubinilab/distribution.hpp"
#include "fubinilab/dualization.hpp"

namespace fubinilab {

/// A strength tabulated on points. For t' the domain is
/// discrete(|T X|) x Y, for t'' it is X x discrete(|T Y|); values are
/// points of T(X x Y).
struct Strength {
  Product domain;
  std::vector<PointId> table;
  std::size_t target_points = 0;
  /// Continuity certificate into the discrete space T(X x Y).
  ContMap as_map() const;
};

/// t'(mu, y) = T(x -> (x, y))(mu): the transpose of the enrichment applied
/// to the section y -> (x -> (x, y)).
Strength tprime(const MonadOps& t, const ConvSpace& x, const ConvSpace& y, const Product& xy);
/// t''(x, nu) = T(y -> (x, y))(nu).
Strength tdoubleprime(const MonadOps& t, const ConvSpace& x, const ConvSpace& y, const Product& xy);

/// t'(mu, y) = (f -> mu(x -> f(x, y))), straight from the functional formula.
std::vector<PointId> tprime_formula(const DistributionMonad& d, const ConvSpace& x, const ConvSpace& y, const Product& xy);
/// t''(x, nu) = (f -> nu(y -> f(x, y))).
std::vector<PointId> tdoubleprime_formula(const DistributionMonad& d, const ConvSpace& x, const ConvSpace& y,
                                          const Product& xy);

/// Both routes, compared; throws MismatchedConstructions when they differ.
Strength tprime_checked(const DistributionMonad& d, const ConvSpace& x, const ConvSpace& y, const Product& xy);
Strength tdoubleprime_checked(const DistributionMonad& d, const ConvSpace& x, const ConvSpace& y, const Product& xy);

/// The two composites T X x T Y -> T(X x Y), tabulated at mu * |T Y| + nu:
/// otimes = mult . T(t') . t''_{TX,Y} and otimes_tilde = mult . T(t'') . t'_{X,TY}.
struct FubiniPair {
  Product xy;
  Components cx, cy, cxy;
  std::size_t nx = 0, ny = 0;
  std::vector<PointId> otimes;
  std::vector<PointId> otimes_tilde;

  PointId index(PointId mu, PointId nu) const { return mu * static_cast<PointId>(ny) + nu; }
};

FubiniPair fubini_pair(const MonadOps& t, const ConvSpace& x, const ConvSpace& y);

/// Exact comparison of the composites with the iterated expressions
/// nu(y -> mu(x -> f(x, y))) and mu(x -> nu(y -> f(x, y))) over every
/// (mu, nu, f) with f continuous on X x Y.
struct IteratedReport {
  std::size_t triples = 0;
  std::size_t otimes_mismatches = 0;
  std::size_t otimes_tilde_mismatches = 0;

  bool ok() const { return otimes_mismatches == 0 && otimes_tilde_mismatches == 0; }
};

IteratedReport check_iterated_integrals(const DistributionMonad& d, const FubiniPair& fp);

/// Continuous functions Z -> F_p, as point tables, in the order of their
/// per-component values.
std::vector<std::vector<int>> continuous_functions(const Components& z, const Field& f, std::size_t cap = kMaxMaterializedPoints);

struct FubiniWitness {
  Vector mu;
  Vector nu;
  std::vector<int> f;  // on points of X x Y
  int otimes_value = 0;
  int otimes_tilde_value = 0;
};

struct FubiniVerdict {
  bool reflexive_x = false;
  bool reflexive_y = false;
  bool reflexive_xy = false;
  bool equal = false;
  std::optional<FubiniWitness> witness;

  bool hypotheses() const { return reflexive_x && reflexive_y && reflexive_xy; }
  /// Reflexive cotensors of X, Y and X x Y imply equal composites.
  bool implication_holds() const { return !hypotheses() || equal; }
};

FubiniVerdict check_commutative(const DistributionMonad& d, const ConvSpace& x, const ConvSpace& y, Axioms axioms,
                                const Bounds& bounds = {});
FubiniVerdict verdict_from_pair(const DistributionMonad& d, const FubiniPair& fp);

/// The enrichment [X, Y] -> [T X, T Y] recovered from the monoidal data:
/// f, mu -> T(ev)(otimes(mu, unit(f))). Tabulated at f * |T X| + mu.
std::vector<PointId> derived_enrichment(const MonadOps& t, const ConvSpace& x, const ConvSpace& y);
/// The enrichment applied directly: f, mu -> T f (mu).
std::vector<PointId> direct_enrichment(const MonadOps& t, const ConvSpace& x, const ConvSpace& y);
/// Throws EnrichmentMismatch unless the two agree.
void check_enrichment(const MonadOps& t, const ConvSpace& x, const ConvSpace& y);

}  // namespace fubinilab
