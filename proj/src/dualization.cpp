#include "fubinilab/dualization.hpp"

namespace fubinilab {

DualTower::DualTower(ConvVect e, std::size_t depth, const Bounds& bounds) : base_(std::move(e)) {
  for (std::size_t i = 0; i < depth; ++i) duals_.push_back(dual(i == 0 ? base_ : duals_.back().space, bounds));
}

const InternalHom& DualTower::at(std::size_t i) const {
  if (i == 0 || i > duals_.size()) fail(ErrorKind::InvalidArgument, "dual tower level out of range");
  return duals_[i - 1];
}

LinMap DualTower::unit(std::size_t i) const {
  // Level i+1 has basis functionals phi_j (rows). The image of e is the
  // functional t -> sum t_j phi_j(e), whose row is (phi_j(e))_j.
  const InternalHom& first = at(i + 1);
  const InternalHom& second = at(i + 2);
  const Field& f = first.space.field();
  const Matrix rows = first.basis.transpose();
  Matrix m(static_cast<Eigen::Index>(second.space.dim()), static_cast<Eigen::Index>(space(i).dim()));
  for (Eigen::Index c = 0; c < m.cols(); ++c) {
    auto coeff = solve(second.basis, mod_p(rows.col(c), f), f);
    if (!coeff) fail(ErrorKind::MismatchedConstructions, "evaluation functional is not continuous");
    m.col(c) = *coeff;
  }
  return LinMap(space(i), space(i + 2), m);
}

LinMap DualTower::mult(std::size_t i) const { return dual_of(*this, i + 1, *this, i + 3, unit(i + 1)); }

LinMap dual_of(const DualTower& a, std::size_t i, const DualTower& b, std::size_t j, const LinMap& g) {
  return dual_map(a.at(i + 1), b.at(j + 1), g);
}

LinMap double_dual_of(const DualTower& a, std::size_t i, const DualTower& b, std::size_t j, const LinMap& g) {
  return dual_of(b, j + 1, a, i + 1, dual_of(a, i, b, j, g));
}

ReflexivityVerdict is_reflexive(const ConvVect& e, const Bounds& bounds) { return is_reflexive(DualTower(e, 2, bounds)); }

ReflexivityVerdict is_reflexive(const DualTower& tower) {
  ReflexivityVerdict v;
  const LinMap d = tower.unit(0);
  const Field& f = d.dom().field();
  const Matrix k = kernel(d.matrix(), f);
  if (k.cols() > 0) {
    v.failure = "not injective";
    v.witness = {d.dom().point(k.col(0))};
    return v;
  }
  if (d.dom().dim() != d.cod().dim()) {
    // injective, so some basis vector of the target is missed
    for (Eigen::Index c = 0; c < static_cast<Eigen::Index>(d.cod().dim()); ++c) {
      Vector e = Vector::Zero(static_cast<Eigen::Index>(d.cod().dim()));
      e(c) = 1;
      if (!solve(d.matrix(), e, f)) {
        v.failure = "not surjective";
        v.witness = {d.cod().point(e)};
        return v;
      }
    }
  }
  auto inv = inverse(d.matrix(), f);
  for (const auto& g : d.cod().zero_generators()) {
    Subset back;
    for (PointId u : g) back.push_back(d.dom().point(*inv * d.cod().coords(u)));
    if (!d.dom().converges_to_zero(normalized(back))) {
      v.failure = "inverse not continuous";
      v.witness = g;
      return v;
    }
  }
  v.reflexive = true;
  v.inverse = LinMap(d.cod(), d.dom(), *inv);
  return v;
}

DoubleDualLawReport check_double_dual_laws(const DualTower& t) {
  DoubleDualLawReport r;
  const LinMap id2 = LinMap::identity(t.space(2));
  const LinMap gamma = t.mult(0);
  r.left_unit = compose(gamma, double_dual_of(t, 0, t, 2, t.unit(0))) == id2;
  r.right_unit = compose(gamma, t.unit(2)) == id2;
  r.associative = compose(gamma, double_dual_of(t, 4, t, 2, gamma)) == compose(gamma, t.mult(2));
  return r;
}

bool unit_natural(const DualTower& a, const DualTower& b, const LinMap& f) {
  return compose(double_dual_of(a, 0, b, 0, f), a.unit(0)) == compose(b.unit(0), f);
}

std::vector<LinMap> linear_maps(const ConvVect& a, const ConvVect& b, std::size_t cap) {
  const auto rows = static_cast<Eigen::Index>(b.dim()), cols = static_cast<Eigen::Index>(a.dim());
  auto n = point_count(static_cast<std::size_t>(rows * cols), a.field(), cap);
  if (!n) fail(ErrorKind::BoundExceeded, "linear_maps: too many matrices");
  std::vector<LinMap> out;
  for (std::size_t i = 0; i < *n; ++i) {
    Matrix m = unflatten(decode(static_cast<PointId>(i), static_cast<std::size_t>(rows * cols), a.field()), rows, cols);
    if (is_continuous_linear(a, b, m)) out.emplace_back(a, b, std::move(m));
  }
  return out;
}

DoubleDualInstance double_dualization_monad(const std::vector<ConvVect>& universe, const Bounds& bounds) {
  DoubleDualInstance inst;
  for (const auto& e : universe) {
    inst.towers.emplace_back(e, 6, bounds);
    inst.laws = inst.laws && check_double_dual_laws(inst.towers.back()).ok();
  }
  for (const auto& a : inst.towers)
    for (const auto& b : inst.towers)
      for (const auto& f : linear_maps(a.space(0), b.space(0), bounds.enumeration)) {
        inst.unit_natural = inst.unit_natural && unit_natural(a, b, f);
        ++inst.maps_checked;
      }
  return inst;
}

}  // namespace fubinilab
