#pragma once

#include <vector>

#include "fubinilab/scalars.hpp"

namespace fubinilab {

/// The three sums of the discrete Fubini identity for weights mu on X, nu on
/// Y and f given as f[x][y]: iterated over x inside, over y inside, and
/// against the product weights.
template <class Scalar>
struct FubiniSums {
  Scalar y_outer;
  Scalar x_outer;
  Scalar product;

  bool agree() const { return y_outer == x_outer && x_outer == product; }
};

/// Throws DimensionMismatch unless f is |mu| x |nu|.
FubiniSums<Rational> oracle_discrete_fubini(const std::vector<Rational>& mu, const std::vector<Rational>& nu,
                                            const std::vector<std::vector<Rational>>& f);
/// The same sums with field arithmetic.
FubiniSums<int> oracle_discrete_fubini(const Field& field, const std::vector<int>& mu, const std::vector<int>& nu,
                                       const std::vector<std::vector<int>>& f);

}  // namespace fubinilab
