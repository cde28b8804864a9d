#include "fubinilab/oracle.hpp"

#include "fubinilab/error.hpp"

namespace fubinilab {

namespace {

template <class Mu, class F>
void check_shape(const Mu& mu, const Mu& nu, const F& f) {
  if (f.size() != mu.size()) fail(ErrorKind::DimensionMismatch, "oracle: f has the wrong number of rows");
  for (const auto& row : f)
    if (row.size() != nu.size()) fail(ErrorKind::DimensionMismatch, "oracle: f has the wrong number of columns");
}

}  // namespace

FubiniSums<Rational> oracle_discrete_fubini(const std::vector<Rational>& mu, const std::vector<Rational>& nu,
                                            const std::vector<std::vector<Rational>>& f) {
  check_shape(mu, nu, f);
  FubiniSums<Rational> s{0, 0, 0};
  for (std::size_t y = 0; y < nu.size(); ++y) {
    Rational inner = 0;
    for (std::size_t x = 0; x < mu.size(); ++x) inner += mu[x] * f[x][y];
    s.y_outer += nu[y] * inner;
  }
  for (std::size_t x = 0; x < mu.size(); ++x) {
    Rational inner = 0;
    for (std::size_t y = 0; y < nu.size(); ++y) inner += nu[y] * f[x][y];
    s.x_outer += mu[x] * inner;
  }
  for (std::size_t x = 0; x < mu.size(); ++x)
    for (std::size_t y = 0; y < nu.size(); ++y) s.product += mu[x] * nu[y] * f[x][y];
  return s;
}

FubiniSums<int> oracle_discrete_fubini(const Field& field, const std::vector<int>& mu, const std::vector<int>& nu,
                                       const std::vector<std::vector<int>>& f) {
  check_shape(mu, nu, f);
  FubiniSums<int> s{0, 0, 0};
  for (std::size_t y = 0; y < nu.size(); ++y) {
    int inner = 0;
    for (std::size_t x = 0; x < mu.size(); ++x) inner = field.add(inner, field.mul(mu[x], f[x][y]));
    s.y_outer = field.add(s.y_outer, field.mul(nu[y], inner));
  }
  for (std::size_t x = 0; x < mu.size(); ++x) {
    int inner = 0;
    for (std::size_t y = 0; y < nu.size(); ++y) inner = field.add(inner, field.mul(nu[y], f[x][y]));
    s.x_outer = field.add(s.x_outer, field.mul(mu[x], inner));
  }
  for (std::size_t x = 0; x < mu.size(); ++x)
    for (std::size_t y = 0; y < nu.size(); ++y) s.product = field.add(s.product, field.mul(field.mul(mu[x], nu[y]), f[x][y]));
  return s;
}

}  // namespace fubinilab
