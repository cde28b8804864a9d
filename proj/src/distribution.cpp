#include "fubinilab/distribution.hpp"

#include <map>

namespace fubinilab {

Components Components::of(const ConvSpace& z) {
  Components c;
  c.comp_ = components(z);
  for (PointId x = 0; x < c.comp_.size(); ++x)
    if (c.comp_[x] == c.reps_.size()) c.reps_.push_back(x);
  return c;
}

Components Components::discrete(std::size_t n) {
  Components c;
  c.comp_.resize(n);
  c.reps_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    c.comp_[i] = i;
    c.reps_[i] = static_cast<PointId>(i);
  }
  return c;
}

SparseMeasure sparse(const Vector& v) {
  SparseMeasure out;
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (v(i) != 0) out.emplace_back(static_cast<PointId>(i), v(i));
  return out;
}

Vector dense(const SparseMeasure& s, std::size_t n, const Field& f) {
  Vector v = Vector::Zero(static_cast<Eigen::Index>(n));
  for (const auto& [i, c] : s) v(i) = f.add(v(i), f.reduce(c));
  return v;
}

std::size_t MonadOps::points(const Components& z, std::size_t cap) const {
  auto n = point_count(z.rank(), field(), cap);
  if (!n) fail(ErrorKind::BoundExceeded, "monad level has more than " + std::to_string(cap) + " points");
  return *n;
}

// D

Vector DistributionMonad::unit(const Components& z, PointId x) const {
  // the Dirac functional, evaluated on each component indicator
  Vector v(static_cast<Eigen::Index>(z.rank()));
  for (std::size_t c = 0; c < z.rank(); ++c) v(static_cast<Eigen::Index>(c)) = z[x] == c ? 1 : 0;
  return v;
}

SparseMeasure DistributionMonad::map(const Components& z, const Components& w, const std::vector<PointId>& f,
                                     const SparseMeasure& mu) const {
  std::map<PointId, int> acc;
  for (const auto& [c, coef] : mu) {
    const auto target = static_cast<PointId>(w[f[z.representative(c)]]);
    acc[target] = field_.add(acc[target], field_.reduce(coef));
  }
  SparseMeasure out;
  for (const auto& [i, c] : acc)
    if (c != 0) out.emplace_back(i, c);
  return out;
}

int DistributionMonad::apply(const Components& z, const Vector& mu, const std::vector<int>& g) const {
  int s = 0;
  for (std::size_t c = 0; c < z.rank(); ++c)
    s = field_.add(s, field_.mul(mu(static_cast<Eigen::Index>(c)), field_.reduce(g[z.representative(c)])));
  return s;
}

Vector DistributionMonad::map_by_precomposition(const Components& z, const Components& w, const std::vector<PointId>& f,
                                                const Vector& mu) const {
  Vector out(static_cast<Eigen::Index>(w.rank()));
  std::vector<int> g(z.points());
  for (std::size_t c = 0; c < w.rank(); ++c) {
    for (PointId x = 0; x < z.points(); ++x) g[x] = w[f[x]] == c ? 1 : 0;
    out(static_cast<Eigen::Index>(c)) = apply(z, mu, g);
  }
  return out;
}

Vector DistributionMonad::mult(const Components& z, const SparseMeasure& phi) const {
  // kappa(Phi)(g) = Phi(sigma(g)) with sigma(g)(mu) = mu(g), on each indicator g = e_c
  Vector out = Vector::Zero(static_cast<Eigen::Index>(z.rank()));
  std::vector<int> indicator(z.points());
  for (std::size_t c = 0; c < z.rank(); ++c) {
    for (PointId x = 0; x < z.points(); ++x) indicator[x] = z[x] == c ? 1 : 0;
    int s = 0;
    for (const auto& [u, coef] : phi) s = field_.add(s, field_.mul(field_.reduce(coef), apply(z, decode(z, u), indicator)));
    out(static_cast<Eigen::Index>(c)) = s;
  }
  return out;
}

// Transport

Vector TransportedMonad::theta(std::size_t rank, const Vector& mu) const {
  Vector out = mu;
  for (std::size_t c = 1; c < rank; ++c)
    out(static_cast<Eigen::Index>(c)) = field().add(mu(static_cast<Eigen::Index>(c)), mu(static_cast<Eigen::Index>(c - 1)));
  return out;
}

Vector TransportedMonad::theta_inverse(std::size_t rank, const Vector& mu) const {
  Vector out = mu;
  for (std::size_t c = 1; c < rank; ++c)
    out(static_cast<Eigen::Index>(c)) = field().sub(mu(static_cast<Eigen::Index>(c)), out(static_cast<Eigen::Index>(c - 1)));
  return out;
}

Vector TransportedMonad::unit(const Components& z, PointId x) const { return theta(z.rank(), base_.unit(z, x)); }

SparseMeasure TransportedMonad::map(const Components& z, const Components& w, const std::vector<PointId>& f,
                                    const SparseMeasure& mu) const {
  const Vector back = theta_inverse(z.rank(), dense(mu, z.rank(), field()));
  return sparse(theta(w.rank(), base_.map_dense(z, w, f, back)));
}

Vector TransportedMonad::mult(const Components& z, const SparseMeasure& phi) const {
  // theta_Z . mult_Z . T(theta_Z^-1) . theta_{T'Z}^-1
  const std::size_t n = points(z);
  const Vector step1 = theta_inverse(n, dense(phi, n, field()));
  std::vector<PointId> relabel(n);
  for (std::size_t u = 0; u < n; ++u) relabel[u] = encode(theta_inverse(z.rank(), decode(z, static_cast<PointId>(u))));
  const Components lz = Components::discrete(n);
  const SparseMeasure step2 = base_.map(lz, lz, relabel, sparse(step1));
  return theta(z.rank(), base_.mult(z, step2));
}

DistributionCarrier distribution_carrier(const ConvSpace& x, const Field& f, Axioms axioms, const Bounds& bounds) {
  auto functions = cotensor(x, scalar_object(f, axioms), bounds);
  auto distributions = dual(functions.space, bounds);
  return DistributionCarrier{std::move(functions), std::move(distributions)};
}

// Laws

MonadLawReport check_monad_laws(const MonadOps& t, const Components& z, std::size_t cap) {
  MonadLawReport r;
  const std::size_t n1 = t.points(z, cap);
  const Components lz = Components::discrete(n1);
  std::vector<PointId> unit_table(z.points());
  for (PointId x = 0; x < z.points(); ++x) unit_table[x] = t.encode(t.unit(z, x));
  for (PointId u = 0; u < n1; ++u) {
    const Vector mu = t.decode(z, u);
    r.left_unit = r.left_unit && t.mult(z, t.map(z, lz, unit_table, sparse(mu))) == mu;
    r.right_unit = r.right_unit && t.mult(z, sparse(t.unit(lz, u))) == mu;
    ++r.checked;
  }
  const std::size_t n2 = t.points(lz, cap);
  const Components llz = Components::discrete(n2);
  std::vector<PointId> mult_table(n2);
  for (std::size_t xi = 0; xi < n2; ++xi) mult_table[xi] = t.encode(t.mult(z, sparse(t.decode(lz, static_cast<PointId>(xi)))));
  for (std::size_t xi = 0; xi < n2 && r.associative; ++xi) {
    const SparseMeasure basis{{static_cast<PointId>(xi), 1}};
    const Vector lhs = t.mult(z, t.map(llz, lz, mult_table, basis));
    const Vector rhs = t.mult(z, sparse(t.mult(lz, basis)));
    r.associative = lhs == rhs;
    ++r.checked;
  }
  return r;
}

MonadLawReport check_naturality(const MonadOps& t, const Components& z, const Components& w, const std::vector<PointId>& f,
                                std::size_t cap) {
  MonadLawReport r;
  for (PointId x = 0; x < z.points(); ++x) {
    r.unit_natural = r.unit_natural && t.map_dense(z, w, f, t.unit(z, x)) == t.unit(w, f[x]);
    ++r.checked;
  }
  const std::size_t n1 = t.points(z, cap);
  const Components lz = Components::discrete(n1), lw = Components::discrete(t.points(w, cap));
  std::vector<PointId> tf(n1);
  for (PointId u = 0; u < n1; ++u) tf[u] = t.encode(t.map_dense(z, w, f, t.decode(z, u)));
  const std::size_t n2 = t.points(lz, cap);
  for (std::size_t xi = 0; xi < n2 && r.mult_natural; ++xi) {
    const Vector phi = t.decode(lz, static_cast<PointId>(xi));
    const Vector lhs = t.map_dense(z, w, f, t.mult_dense(z, phi));
    const Vector rhs = t.mult(w, t.map(lz, lw, tf, sparse(phi)));
    r.mult_natural = lhs == rhs;
    ++r.checked;
  }
  return r;
}

namespace {

void merge(MonadLawReport& into, const MonadLawReport& r) {
  into.left_unit = into.left_unit && r.left_unit;
  into.right_unit = into.right_unit && r.right_unit;
  into.associative = into.associative && r.associative;
  into.unit_natural = into.unit_natural && r.unit_natural;
  into.mult_natural = into.mult_natural && r.mult_natural;
  into.checked += r.checked;
}

}  // namespace

DistributionInstance distribution_monad(const std::vector<ConvSpace>& universe, const DistributionMonad& d, Axioms axioms,
                                        const Bounds& bounds) {
  DistributionInstance inst;
  inst.universe = universe;
  std::vector<Components> comps;
  for (const auto& x : universe) {
    auto carrier = distribution_carrier(x, d.field(), axioms, bounds);
    const Components c = Components::of(x);
    if (carrier.distributions.space.dim() != c.rank() || !carrier.distributions.space.is_discrete())
      fail(ErrorKind::MismatchedConstructions, "distribution carrier differs from the component description");
    // the Dirac functional of each point, read in the carrier's own coordinates
    for (PointId p = 0; p < x.size(); ++p) {
      Matrix row(1, static_cast<Eigen::Index>(carrier.functions.space.dim()));
      for (Eigen::Index j = 0; j < row.cols(); ++j) row(0, j) = carrier.functions.basis(static_cast<Eigen::Index>(p), j);
      auto idx = carrier.distributions.index_of(row);
      if (!idx || *idx != d.encode(d.unit(c, p)))
        fail(ErrorKind::MismatchedConstructions, "Dirac functional differs from the unit");
    }
    inst.carriers.push_back(std::move(carrier));
    merge(inst.laws, check_monad_laws(d, c, bounds.enumeration));
    comps.push_back(c);
    ++inst.objects_checked;
  }
  for (std::size_t i = 0; i < universe.size(); ++i)
    for (std::size_t j = 0; j < universe.size(); ++j)
      for (const auto& f : continuous_maps(universe[i], universe[j], bounds.enumeration)) {
        merge(inst.laws, check_naturality(d, comps[i], comps[j], f, bounds.enumeration));
        ++inst.maps_checked;
      }
  return inst;
}

}  // namespace fubinilab
